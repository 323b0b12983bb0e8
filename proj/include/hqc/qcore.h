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

#ifndef HQC_QCORE_H
#define HQC_QCORE_H

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

/// Dense pure/mixed state simulation for small qubit registers.
///
/// Qubit convention used everywhere in this library: qubit position 0 is the
/// leftmost factor of a ket, and amplitude indices are packed big-endian, so
/// position q of an n-qubit register corresponds to bit (n - 1 - q) of the
/// index. |011> on three qubits is index 3.
namespace hqc {

using Complex = std::complex<double>;

/// Largest register the dense engine accepts.
constexpr size_t kMaxQubits = 14;

/// Branches whose probability falls below this are treated as structurally
/// impossible.
constexpr double kZeroProbability = 1e-14;

/// Raised when a projection lands on a branch of (numerically) zero weight.
struct ZeroProbabilityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Pure state of n qubits.
class StateVector {
   public:
    StateVector() = default;
    /// Takes ownership of 2^n amplitudes. Throws if the length is not a power of two.
    explicit StateVector(std::vector<Complex> amps);
    StateVector(std::initializer_list<Complex> amps) : StateVector(std::vector<Complex>(amps)) {}

    /// Computational basis state |index> on n qubits.
    static StateVector basis(size_t n_qubits, size_t index);
    /// Parses a bit string such as "0110" into the matching basis state.
    static StateVector from_bits(const std::string &bits);

    size_t num_qubits() const { return n_qubits_; }
    size_t dim() const { return amps_.size(); }
    std::span<const Complex> amps() const { return amps_; }
    const Complex &operator[](size_t i) const { return amps_[i]; }

    double norm_squared() const;
    /// Returns a copy scaled to unit norm. Throws ZeroProbabilityError on a zero vector.
    StateVector normalized() const;

    StateVector operator+(const StateVector &other) const;
    StateVector operator-(const StateVector &other) const;
    StateVector operator*(Complex scale) const;

   private:
    size_t n_qubits_ = 0;
    std::vector<Complex> amps_;
};

/// Mixed state of n qubits stored as a dense row-major 2^n x 2^n matrix.
///
/// The container itself does not enforce unit trace, so intermediate
/// unnormalized blocks can be represented; the state-producing operations
/// below document when their output is normalized.
class DensityMatrix {
   public:
    DensityMatrix() = default;
    DensityMatrix(size_t n_qubits, std::vector<Complex> elems);

    static DensityMatrix zeros(size_t n_qubits);
    /// |s><s|
    static DensityMatrix from_pure(const StateVector &s);
    static DensityMatrix maximally_mixed(size_t n_qubits);

    size_t num_qubits() const { return n_qubits_; }
    size_t dim() const { return size_t{1} << n_qubits_; }
    std::span<const Complex> elems() const { return elems_; }
    const Complex &operator()(size_t row, size_t col) const { return elems_[row * dim() + col]; }
    Complex &operator()(size_t row, size_t col) { return elems_[row * dim() + col]; }

    Complex trace() const;
    /// Largest |rho - rho^dagger| entry.
    double hermiticity_error() const;
    DensityMatrix scaled(double factor) const;
    /// Largest entrywise absolute difference; dimensions must match.
    double max_abs_diff(const DensityMatrix &other) const;

    std::span<Complex> mutable_elems() { return elems_; }

   private:
    size_t n_qubits_ = 0;
    std::vector<Complex> elems_;
};

/// Unitary acting on 1 to 3 qubits, row-major 2^arity x 2^arity.
struct UnitaryGate {
    std::string name;
    size_t arity = 1;
    std::vector<Complex> matrix;

    /// Validates shape and U^dagger U == I within `tol`.
    UnitaryGate(std::string name, size_t arity, std::vector<Complex> matrix, double tol = 1e-12);

    const Complex &at(size_t row, size_t col) const { return matrix[row * (size_t{1} << arity) + col]; }
    /// Largest entry of |U^dagger U - I|.
    double unitarity_error() const;
    UnitaryGate adjoint() const;
};

/// 2x2 row-major complex matrix.
struct Matrix2 {
    Complex m00, m01, m10, m11;

    Matrix2 operator*(const Matrix2 &o) const;
    Matrix2 operator*(Complex s) const;
    Matrix2 adjoint() const;
    double max_abs_diff(const Matrix2 &o) const;
    static Matrix2 identity() { return {1, 0, 0, 1}; }
};

/// Single-qubit CPTP map given by its Kraus operators.
class KrausChannel {
   public:
    /// Throws std::invalid_argument unless sum K^dagger K == I within `tol`.
    explicit KrausChannel(std::vector<Matrix2> ops, double tol = 1e-12);

    const std::vector<Matrix2> &ops() const { return ops_; }
    /// Largest entry of |sum K^dagger K - I|.
    double completeness_error() const;

   private:
    std::vector<Matrix2> ops_;
};

/// Names for tensor positions. Position 0 is the leftmost ket factor.
class QubitOrdering {
   public:
    explicit QubitOrdering(std::vector<std::string> labels);

    size_t size() const { return labels_.size(); }
    const std::vector<std::string> &labels() const { return labels_; }
    /// Throws std::out_of_range for an unknown label.
    size_t position(const std::string &label) const;
    std::vector<size_t> positions(const std::vector<std::string> &labels) const;
    /// For each position of `target`, the position in *this holding the same
    /// label. Both orderings must hold the same label set.
    std::vector<size_t> permutation_to(const QubitOrdering &target) const;
    /// Concatenation of labels, e.g. "m1m2A1A2".
    std::string joined() const;

   private:
    std::vector<std::string> labels_;
};

/// a (x) b, with a occupying the leading positions.
StateVector tensor(const StateVector &a, const StateVector &b);
DensityMatrix tensor(const DensityMatrix &a, const DensityMatrix &b);

/// <a|b>
Complex inner(const StateVector &a, const StateVector &b);

/// Reorders qubits: position p of the result holds qubit `source_of[p]` of `s`.
StateVector permute_qubits(const StateVector &s, std::span<const size_t> source_of);

/// Applies `g` to `targets` (targets[0] is the gate's most significant qubit).
StateVector apply_unitary(const StateVector &s, const UnitaryGate &g, std::span<const size_t> targets);
StateVector apply_unitary(const StateVector &s, const UnitaryGate &g, std::initializer_list<size_t> targets);
/// rho -> U rho U^dagger
DensityMatrix apply_unitary(const DensityMatrix &r, const UnitaryGate &g, std::span<const size_t> targets);
DensityMatrix apply_unitary(const DensityMatrix &r, const UnitaryGate &g, std::initializer_list<size_t> targets);

/// rho -> sum_i K_i rho K_i^dagger with each K_i acting on `target`.
DensityMatrix apply_kraus(const DensityMatrix &r, const KrausChannel &ch, size_t target);

/// Outcome of a projective measurement: the probability of the selected
/// outcome and the renormalized post-measurement state over all qubits.
template <typename State>
struct Projection {
    double probability;
    State post_state;
};

/// Projects `targets` onto basis_states[which]. The basis must be orthonormal
/// on |targets| qubits. Throws ZeroProbabilityError when the outcome has
/// probability below kZeroProbability.
Projection<StateVector> project(
    const StateVector &s, std::span<const StateVector> basis_states, size_t which, std::span<const size_t> targets);
Projection<DensityMatrix> project(
    const DensityMatrix &r, std::span<const StateVector> basis_states, size_t which, std::span<const size_t> targets);

/// (<b| (x) I) |s>: the unnormalized state left on the non-target qubits
/// (in their original relative order) after finding `targets` in |b>.
StateVector conditional_state(const StateVector &s, const StateVector &b, std::span<const size_t> targets);
/// (<b| (x) I) rho (|b> (x) I), unnormalized.
DensityMatrix conditional_state(const DensityMatrix &r, const StateVector &b, std::span<const size_t> targets);

/// Traces out everything except `keep`; the result's qubits follow the order of `keep`.
DensityMatrix partial_trace(const DensityMatrix &r, std::span<const size_t> keep);
DensityMatrix partial_trace(const DensityMatrix &r, std::initializer_list<size_t> keep);

/// <psi|rho|psi>, clamped to [0, 1].
double fidelity(const StateVector &pure, const DensityMatrix &mixed);
/// |<a|b>|^2 for normalized inputs; insensitive to global phase.
double fidelity(const StateVector &a, const StateVector &b);

/// Largest |<e_i|e_j> - delta_ij| over the family.
double orthonormality_error(std::span<const StateVector> family);

}  // namespace hqc

#endif
