// Copyright 2026 The hybridqc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HQC_BASES_H
#define HQC_BASES_H

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "hqc/qcore.h"

namespace hqc {

/// Index of one of the four Bell states:
///   0: (|00>+|11>)/sqrt2   1: (|00>-|11>)/sqrt2
///   2: (|01>+|10>)/sqrt2   3: (|01>-|10>)/sqrt2
class BellIndex {
   public:
    constexpr BellIndex() = default;
    explicit BellIndex(int value);
    constexpr int value() const { return value_; }
    friend constexpr bool operator==(BellIndex, BellIndex) = default;

   private:
    int value_ = 0;
};

/// Real measurement basis {a|0>+b|1>, b|0>-a|1>} with a, b >= 0.
class XiBasis {
   public:
    /// Throws std::invalid_argument unless a, b are in [0,1] with a^2+b^2 == 1 within 1e-12.
    XiBasis(double a, double b);
    double a() const { return a_; }
    double b() const { return b_; }

   private:
    double a_;
    double b_;
};

StateVector bell_state(BellIndex i);
std::array<StateVector, 4> bell_basis();
/// (a|0>+b|1>, b|0>-a|1>)
std::pair<StateVector, StateVector> xi_states(const XiBasis &basis);
/// (|+>, |->)
std::pair<StateVector, StateVector> x_states();

// Named gate library.
const UnitaryGate &hadamard();
const UnitaryGate &pauli_x();
const UnitaryGate &pauli_y();
const UnitaryGate &pauli_z();
/// Control on the first target.
const UnitaryGate &cnot();
const UnitaryGate &cz();
/// Controls on the first two targets.
const UnitaryGate &toffoli();
/// (1/sqrt2)[[1,1],[1,-1]]; the rotation that maps both the X basis and the
/// symmetric xi basis onto the computational basis.
const UnitaryGate &bt_gate();

/// Unitary whose first column is (x, y): it prepares x|0>+y|1> from |0>.
/// The second column is (-conj(y), conj(x)).
UnitaryGate state_prep_gate(Complex x, Complex y);

/// Rotation sending |xi_l> to |l>: [[a,b],[b,-a]].
UnitaryGate xi_measurement_gate(const XiBasis &basis);

/// Two-qubit rotation sending Bell state i to the computational state |i>
/// (first qubit carries i>>1, second i&1).
const UnitaryGate &bell_measurement_gate();

enum class PauliFactor : char { I = 'I', X = 'X', Z = 'Z' };

/// Signed product of I/X/Z factors, written left to right as in sigma_z sigma_x
/// ("apply X, then Z"). Equality of strings is textual; use `matrix()` or
/// `same_up_to_phase` to compare operators.
class PauliString {
   public:
    PauliString() = default;
    PauliString(std::vector<PauliFactor> factors, int sign = 1);
    /// Parses forms such as "I", "X", "ZXZ", "-XZ". Throws on other characters.
    static PauliString parse(const std::string &text);

    const std::vector<PauliFactor> &factors() const { return factors_; }
    int sign() const { return sign_; }
    /// sign * F_0 F_1 ... F_{k-1}; the rightmost factor acts first.
    Matrix2 matrix() const;
    /// Textual form, "I" for the empty product.
    std::string str() const;
    UnitaryGate gate() const;
    /// Reduces to the canonical form X^x_power Z^z_power times a sign.
    struct Canonical {
        bool x_power;
        bool z_power;
        int sign;
    };
    Canonical canonical() const;

    friend bool operator==(const PauliString &, const PauliString &) = default;

   private:
    std::vector<PauliFactor> factors_;
    int sign_ = 1;
};

bool same_up_to_phase(const Matrix2 &a, const Matrix2 &b, double tol = 1e-12);

/// The eight strings used by the correction tables:
/// I, X, Z, XZ, ZX, ZXZ, XZX, XZXZ.
const std::vector<PauliString> &correction_closure();

}  // namespace hqc

#endif
