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

#include "hqc/bases.h"

#include <cmath>
#include <numbers>

namespace hqc {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

}  // namespace

BellIndex::BellIndex(int value) : value_(value) {
    if (value < 0 || value > 3) {
        throw std::invalid_argument("Bell index must be in 0..3, got " + std::to_string(value));
    }
}

XiBasis::XiBasis(double a, double b) : a_(a), b_(b) {
    if (!(a >= 0 && a <= 1 && b >= 0 && b <= 1) || std::abs(a * a + b * b - 1) > 1e-12) {
        throw std::invalid_argument("xi basis needs real a, b >= 0 with a^2 + b^2 = 1");
    }
}

StateVector bell_state(BellIndex i) {
    switch (i.value()) {
        case 0:
            return StateVector{kInvSqrt2, 0, 0, kInvSqrt2};
        case 1:
            return StateVector{kInvSqrt2, 0, 0, -kInvSqrt2};
        case 2:
            return StateVector{0, kInvSqrt2, kInvSqrt2, 0};
        default:
            return StateVector{0, kInvSqrt2, -kInvSqrt2, 0};
    }
}

std::array<StateVector, 4> bell_basis() {
    return {bell_state(BellIndex(0)), bell_state(BellIndex(1)), bell_state(BellIndex(2)), bell_state(BellIndex(3))};
}

std::pair<StateVector, StateVector> xi_states(const XiBasis &basis) {
    return {StateVector{basis.a(), basis.b()}, StateVector{basis.b(), -basis.a()}};
}

std::pair<StateVector, StateVector> x_states() {
    return {StateVector{kInvSqrt2, kInvSqrt2}, StateVector{kInvSqrt2, -kInvSqrt2}};
}

const UnitaryGate &hadamard() {
    static const UnitaryGate g("h", 1, {kInvSqrt2, kInvSqrt2, kInvSqrt2, -kInvSqrt2});
    return g;
}

const UnitaryGate &pauli_x() {
    static const UnitaryGate g("x", 1, {0, 1, 1, 0});
    return g;
}

const UnitaryGate &pauli_y() {
    static const UnitaryGate g("y", 1, {0, Complex(0, -1), Complex(0, 1), 0});
    return g;
}

const UnitaryGate &pauli_z() {
    static const UnitaryGate g("z", 1, {1, 0, 0, -1});
    return g;
}

const UnitaryGate &cnot() {
    static const UnitaryGate g("cx", 2, {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0});
    return g;
}

const UnitaryGate &cz() {
    static const UnitaryGate g("cz", 2, {1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, -1});
    return g;
}

const UnitaryGate &toffoli() {
    static const UnitaryGate g = [] {
        std::vector<Complex> m(64, 0.0);
        for (size_t i = 0; i < 6; i++) {
            m[i * 8 + i] = 1;
        }
        m[6 * 8 + 7] = 1;
        m[7 * 8 + 6] = 1;
        return UnitaryGate("ccx", 3, std::move(m));
    }();
    return g;
}

const UnitaryGate &bt_gate() {
    static const UnitaryGate g("bt", 1, {kInvSqrt2, kInvSqrt2, kInvSqrt2, -kInvSqrt2});
    return g;
}

UnitaryGate state_prep_gate(Complex x, Complex y) {
    if (std::abs(std::norm(x) + std::norm(y) - 1) > 1e-12) {
        throw std::invalid_argument("state preparation amplitudes are not normalized");
    }
    return UnitaryGate("prep", 1, {x, -std::conj(y), y, std::conj(x)});
}

UnitaryGate xi_measurement_gate(const XiBasis &basis) {
    double a = basis.a();
    double b = basis.b();
    return UnitaryGate("xi", 1, {a, b, b, -a});
}

const UnitaryGate &bell_measurement_gate() {
    static const UnitaryGate g = [] {
        std::vector<Complex> m;
        // Row i is <Phi_i|.
        for (const auto &s : bell_basis()) {
            for (const auto &amp : s.amps()) {
                m.push_back(std::conj(amp));
            }
        }
        return UnitaryGate("bell", 2, std::move(m));
    }();
    return g;
}

PauliString::PauliString(std::vector<PauliFactor> factors, int sign) : factors_(std::move(factors)), sign_(sign) {
    if (sign != 1 && sign != -1) {
        throw std::invalid_argument("Pauli string sign must be +1 or -1");
    }
    std::erase(factors_, PauliFactor::I);
}

PauliString PauliString::parse(const std::string &text) {
    std::vector<PauliFactor> factors;
    int sign = 1;
    size_t start = 0;
    if (!text.empty() && (text[0] == '-' || text[0] == '+')) {
        sign = text[0] == '-' ? -1 : 1;
        start = 1;
    }
    for (size_t i = start; i < text.size(); i++) {
        switch (text[i]) {
            case 'I':
                break;
            case 'X':
                factors.push_back(PauliFactor::X);
                break;
            case 'Z':
                factors.push_back(PauliFactor::Z);
                break;
            default:
                throw std::invalid_argument("bad Pauli string '" + text + "'");
        }
    }
    return PauliString(std::move(factors), sign);
}

Matrix2 PauliString::matrix() const {
    Matrix2 acc = Matrix2::identity() * static_cast<double>(sign_);
    for (PauliFactor f : factors_) {
        Matrix2 m = f == PauliFactor::X ? Matrix2{0, 1, 1, 0} : Matrix2{1, 0, 0, -1};
        acc = acc * m;
    }
    return acc;
}

std::string PauliString::str() const {
    std::string out = sign_ < 0 ? "-" : "";
    if (factors_.empty()) {
        return out + "I";
    }
    for (PauliFactor f : factors_) {
        out.push_back(static_cast<char>(f));
    }
    return out;
}

UnitaryGate PauliString::gate() const {
    Matrix2 m = matrix();
    return UnitaryGate(str(), 1, {m.m00, m.m01, m.m10, m.m11});
}

PauliString::Canonical PauliString::canonical() const {
    // Move every X to the left of every Z; each swap past a Z flips the sign.
    bool x = false;
    bool z = false;
    int sign = sign_;
    for (PauliFactor f : factors_) {
        if (f == PauliFactor::X) {
            if (z) {
                sign = -sign;
            }
            x = !x;
        } else {
            z = !z;
        }
    }
    return {x, z, sign};
}

bool same_up_to_phase(const Matrix2 &a, const Matrix2 &b, double tol) {
    // |Tr(A^dagger B)| == 2 iff B = e^{i phi} A for unitaries.
    Matrix2 p = a.adjoint() * b;
    return std::abs(std::abs(p.m00 + p.m11) - 2.0) < tol;
}

const std::vector<PauliString> &correction_closure() {
    static const std::vector<PauliString> closure = [] {
        std::vector<PauliString> out;
        for (const char *s : {"I", "X", "Z", "XZ", "ZX", "ZXZ", "XZX", "XZXZ"}) {
            out.push_back(PauliString::parse(s));
        }
        return out;
    }();
    return closure;
}

}  // namespace hqc
