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

#include "hqc/qcore.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <set>

namespace hqc {

namespace {

size_t bit_of(size_t n, size_t q) {
    return size_t{1} << (n - 1 - q);
}

size_t qubits_for_dim(size_t dim) {
    if (dim == 0 || !std::has_single_bit(dim)) {
        throw std::invalid_argument("amplitude count " + std::to_string(dim) + " is not a power of two");
    }
    size_t n = static_cast<size_t>(std::countr_zero(dim));
    if (n > kMaxQubits) {
        throw std::invalid_argument("register of " + std::to_string(n) + " qubits exceeds the dense limit");
    }
    return n;
}

void check_targets(size_t n, std::span<const size_t> targets) {
    std::set<size_t> seen;
    for (size_t t : targets) {
        if (t >= n) {
            throw std::out_of_range("qubit " + std::to_string(t) + " out of range for " + std::to_string(n) + " qubits");
        }
        if (!seen.insert(t).second) {
            throw std::invalid_argument("duplicate target qubit " + std::to_string(t));
        }
    }
}

// Full-index contribution of each sub-index over `positions` (big-endian in
// the order given).
std::vector<size_t> offsets(size_t n, std::span<const size_t> positions) {
    size_t m = positions.size();
    std::vector<size_t> out(size_t{1} << m, 0);
    for (size_t j = 0; j < out.size(); j++) {
        for (size_t i = 0; i < m; i++) {
            if (j & (size_t{1} << (m - 1 - i))) {
                out[j] |= bit_of(n, positions[i]);
            }
        }
    }
    return out;
}

std::vector<size_t> complement(size_t n, std::span<const size_t> positions) {
    std::vector<size_t> rest;
    for (size_t q = 0; q < n; q++) {
        if (std::find(positions.begin(), positions.end(), q) == positions.end()) {
            rest.push_back(q);
        }
    }
    return rest;
}

// Multiplies a 2^k square row-major matrix into an n-qubit register whose
// element i occupies data[i*block .. i*block + block).
void apply_matrix(Complex *data, size_t n, std::span<const Complex> mat, std::span<const size_t> targets, size_t block) {
    size_t k = targets.size();
    size_t K = size_t{1} << k;
    std::vector<size_t> offs = offsets(n, targets);
    size_t mask = 0;
    for (size_t t : targets) {
        mask |= bit_of(n, t);
    }
    std::vector<Complex> in(K);
    size_t dim = size_t{1} << n;
    for (size_t base = 0; base < dim; base++) {
        if (base & mask) {
            continue;
        }
        for (size_t e = 0; e < block; e++) {
            for (size_t j = 0; j < K; j++) {
                in[j] = data[(base | offs[j]) * block + e];
            }
            for (size_t r = 0; r < K; r++) {
                Complex acc = 0;
                for (size_t c = 0; c < K; c++) {
                    acc += mat[r * K + c] * in[c];
                }
                data[(base | offs[r]) * block + e] = acc;
            }
        }
    }
}

// rho <- A rho B^dagger in place, with A and B acting on `targets`.
void sandwich(DensityMatrix &r, std::span<const Complex> a, std::span<const Complex> b, std::span<const size_t> targets) {
    size_t n = r.num_qubits();
    size_t dim = r.dim();
    auto data = r.mutable_elems();
    // Left factor acts on the row index; each row is one contiguous block.
    apply_matrix(data.data(), n, a, targets, dim);
    // Right factor: (rho B^dagger)[row, :] = conj(B) applied to that row.
    std::vector<Complex> b_conj(b.begin(), b.end());
    for (auto &v : b_conj) {
        v = std::conj(v);
    }
    for (size_t row = 0; row < dim; row++) {
        apply_matrix(data.data() + row * dim, n, b_conj, targets, 1);
    }
}

std::vector<Complex> to_vec(const Matrix2 &m) {
    return {m.m00, m.m01, m.m10, m.m11};
}

void check_basis(std::span<const StateVector> basis_states, size_t which, size_t width) {
    if (which >= basis_states.size()) {
        throw std::out_of_range("basis outcome index out of range");
    }
    for (const auto &b : basis_states) {
        if (b.num_qubits() != width) {
            throw std::invalid_argument("basis state width does not match the number of targets");
        }
    }
    if (orthonormality_error(basis_states) > 1e-10) {
        throw std::invalid_argument("measurement basis is not orthonormal");
    }
}

}  // namespace

// ---------------------------------------------------------------------------
// StateVector

StateVector::StateVector(std::vector<Complex> amps) : n_qubits_(qubits_for_dim(amps.size())), amps_(std::move(amps)) {
}

StateVector StateVector::basis(size_t n_qubits, size_t index) {
    std::vector<Complex> amps(size_t{1} << n_qubits, 0.0);
    if (index >= amps.size()) {
        throw std::out_of_range("basis index out of range");
    }
    amps[index] = 1.0;
    return StateVector(std::move(amps));
}

StateVector StateVector::from_bits(const std::string &bits) {
    size_t index = 0;
    for (char c : bits) {
        if (c != '0' && c != '1') {
            throw std::invalid_argument("not a bit string: " + bits);
        }
        index = (index << 1) | static_cast<size_t>(c - '0');
    }
    return basis(bits.size(), index);
}

double StateVector::norm_squared() const {
    double t = 0;
    for (const auto &a : amps_) {
        t += std::norm(a);
    }
    return t;
}

StateVector StateVector::normalized() const {
    double n2 = norm_squared();
    if (n2 < kZeroProbability) {
        throw ZeroProbabilityError("cannot normalize a zero vector");
    }
    return *this * (1.0 / std::sqrt(n2));
}

StateVector StateVector::operator+(const StateVector &other) const {
    if (other.dim() != dim()) {
        throw std::invalid_argument("dimension mismatch");
    }
    std::vector<Complex> out(amps_);
    for (size_t i = 0; i < out.size(); i++) {
        out[i] += other.amps_[i];
    }
    return StateVector(std::move(out));
}

StateVector StateVector::operator-(const StateVector &other) const {
    return *this + other * -1.0;
}

StateVector StateVector::operator*(Complex scale) const {
    std::vector<Complex> out(amps_);
    for (auto &a : out) {
        a *= scale;
    }
    return StateVector(std::move(out));
}

// ---------------------------------------------------------------------------
// DensityMatrix

DensityMatrix::DensityMatrix(size_t n_qubits, std::vector<Complex> elems) : n_qubits_(n_qubits), elems_(std::move(elems)) {
    if (n_qubits > kMaxQubits) {
        throw std::invalid_argument("density matrix exceeds the dense limit");
    }
    if (elems_.size() != dim() * dim()) {
        throw std::invalid_argument("density matrix element count does not match 4^n");
    }
}

DensityMatrix DensityMatrix::zeros(size_t n_qubits) {
    size_t d = size_t{1} << n_qubits;
    return DensityMatrix(n_qubits, std::vector<Complex>(d * d, 0.0));
}

DensityMatrix DensityMatrix::from_pure(const StateVector &s) {
    size_t d = s.dim();
    std::vector<Complex> e(d * d);
    for (size_t r = 0; r < d; r++) {
        for (size_t c = 0; c < d; c++) {
            e[r * d + c] = s[r] * std::conj(s[c]);
        }
    }
    return DensityMatrix(s.num_qubits(), std::move(e));
}

DensityMatrix DensityMatrix::maximally_mixed(size_t n_qubits) {
    DensityMatrix out = zeros(n_qubits);
    double w = 1.0 / static_cast<double>(out.dim());
    for (size_t i = 0; i < out.dim(); i++) {
        out(i, i) = w;
    }
    return out;
}

Complex DensityMatrix::trace() const {
    Complex t = 0;
    for (size_t i = 0; i < dim(); i++) {
        t += (*this)(i, i);
    }
    return t;
}

double DensityMatrix::hermiticity_error() const {
    double worst = 0;
    for (size_t r = 0; r < dim(); r++) {
        for (size_t c = r; c < dim(); c++) {
            worst = std::max(worst, std::abs((*this)(r, c) - std::conj((*this)(c, r))));
        }
    }
    return worst;
}

DensityMatrix DensityMatrix::scaled(double factor) const {
    std::vector<Complex> e(elems_);
    for (auto &v : e) {
        v *= factor;
    }
    return DensityMatrix(n_qubits_, std::move(e));
}

double DensityMatrix::max_abs_diff(const DensityMatrix &other) const {
    if (other.elems_.size() != elems_.size()) {
        throw std::invalid_argument("dimension mismatch");
    }
    double worst = 0;
    for (size_t i = 0; i < elems_.size(); i++) {
        worst = std::max(worst, std::abs(elems_[i] - other.elems_[i]));
    }
    return worst;
}

// ---------------------------------------------------------------------------
// Gates and channels

UnitaryGate::UnitaryGate(std::string name_, size_t arity_, std::vector<Complex> matrix_, double tol)
    : name(std::move(name_)), arity(arity_), matrix(std::move(matrix_)) {
    if (arity < 1 || arity > 3) {
        throw std::invalid_argument("gate arity must be 1, 2 or 3");
    }
    size_t d = size_t{1} << arity;
    if (matrix.size() != d * d) {
        throw std::invalid_argument("gate " + name + " has the wrong matrix size for its arity");
    }
    if (unitarity_error() > tol) {
        throw std::invalid_argument("gate " + name + " is not unitary");
    }
}

double UnitaryGate::unitarity_error() const {
    size_t d = size_t{1} << arity;
    double worst = 0;
    for (size_t i = 0; i < d; i++) {
        for (size_t j = 0; j < d; j++) {
            Complex acc = 0;
            for (size_t k = 0; k < d; k++) {
                acc += std::conj(at(k, i)) * at(k, j);
            }
            worst = std::max(worst, std::abs(acc - (i == j ? 1.0 : 0.0)));
        }
    }
    return worst;
}

UnitaryGate UnitaryGate::adjoint() const {
    size_t d = size_t{1} << arity;
    std::vector<Complex> m(d * d);
    for (size_t r = 0; r < d; r++) {
        for (size_t c = 0; c < d; c++) {
            m[r * d + c] = std::conj(at(c, r));
        }
    }
    return UnitaryGate(name + "_dag", arity, std::move(m), 1e-9);
}

Matrix2 Matrix2::operator*(const Matrix2 &o) const {
    return {
        m00 * o.m00 + m01 * o.m10,
        m00 * o.m01 + m01 * o.m11,
        m10 * o.m00 + m11 * o.m10,
        m10 * o.m01 + m11 * o.m11,
    };
}

Matrix2 Matrix2::operator*(Complex s) const {
    return {m00 * s, m01 * s, m10 * s, m11 * s};
}

Matrix2 Matrix2::adjoint() const {
    return {std::conj(m00), std::conj(m10), std::conj(m01), std::conj(m11)};
}

double Matrix2::max_abs_diff(const Matrix2 &o) const {
    return std::max({std::abs(m00 - o.m00), std::abs(m01 - o.m01), std::abs(m10 - o.m10), std::abs(m11 - o.m11)});
}

KrausChannel::KrausChannel(std::vector<Matrix2> ops, double tol) : ops_(std::move(ops)) {
    if (ops_.empty()) {
        throw std::invalid_argument("Kraus channel needs at least one operator");
    }
    if (completeness_error() > tol) {
        throw std::invalid_argument("Kraus operators are not trace preserving (sum K^dagger K != I)");
    }
}

double KrausChannel::completeness_error() const {
    Matrix2 acc{0, 0, 0, 0};
    for (const auto &k : ops_) {
        Matrix2 p = k.adjoint() * k;
        acc = {acc.m00 + p.m00, acc.m01 + p.m01, acc.m10 + p.m10, acc.m11 + p.m11};
    }
    return acc.max_abs_diff(Matrix2::identity());
}

// ---------------------------------------------------------------------------
// QubitOrdering

QubitOrdering::QubitOrdering(std::vector<std::string> labels) : labels_(std::move(labels)) {
    std::set<std::string> seen(labels_.begin(), labels_.end());
    if (seen.size() != labels_.size()) {
        throw std::invalid_argument("qubit labels must be unique");
    }
}

size_t QubitOrdering::position(const std::string &label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) {
        throw std::out_of_range("unknown qubit label " + label);
    }
    return static_cast<size_t>(it - labels_.begin());
}

std::vector<size_t> QubitOrdering::positions(const std::vector<std::string> &labels) const {
    std::vector<size_t> out;
    out.reserve(labels.size());
    for (const auto &l : labels) {
        out.push_back(position(l));
    }
    return out;
}

std::vector<size_t> QubitOrdering::permutation_to(const QubitOrdering &target) const {
    if (target.size() != size()) {
        throw std::invalid_argument("orderings hold different numbers of qubits");
    }
    return positions(target.labels());
}

std::string QubitOrdering::joined() const {
    std::string out;
    for (const auto &l : labels_) {
        out += l;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Operations

StateVector tensor(const StateVector &a, const StateVector &b) {
    std::vector<Complex> out(a.dim() * b.dim());
    for (size_t i = 0; i < a.dim(); i++) {
        for (size_t j = 0; j < b.dim(); j++) {
            out[i * b.dim() + j] = a[i] * b[j];
        }
    }
    return StateVector(std::move(out));
}

DensityMatrix tensor(const DensityMatrix &a, const DensityMatrix &b) {
    size_t da = a.dim();
    size_t db = b.dim();
    DensityMatrix out = DensityMatrix::zeros(a.num_qubits() + b.num_qubits());
    for (size_t r1 = 0; r1 < da; r1++) {
        for (size_t c1 = 0; c1 < da; c1++) {
            Complex v = a(r1, c1);
            if (v == Complex{0}) {
                continue;
            }
            for (size_t r2 = 0; r2 < db; r2++) {
                for (size_t c2 = 0; c2 < db; c2++) {
                    out(r1 * db + r2, c1 * db + c2) = v * b(r2, c2);
                }
            }
        }
    }
    return out;
}

Complex inner(const StateVector &a, const StateVector &b) {
    if (a.dim() != b.dim()) {
        throw std::invalid_argument("dimension mismatch in inner product");
    }
    Complex acc = 0;
    for (size_t i = 0; i < a.dim(); i++) {
        acc += std::conj(a[i]) * b[i];
    }
    return acc;
}

StateVector permute_qubits(const StateVector &s, std::span<const size_t> source_of) {
    size_t n = s.num_qubits();
    if (source_of.size() != n) {
        throw std::invalid_argument("permutation length does not match qubit count");
    }
    check_targets(n, source_of);
    std::vector<size_t> offs = offsets(n, source_of);
    std::vector<Complex> out(s.dim());
    for (size_t j = 0; j < out.size(); j++) {
        out[j] = s[offs[j]];
    }
    return StateVector(std::move(out));
}

StateVector apply_unitary(const StateVector &s, const UnitaryGate &g, std::span<const size_t> targets) {
    if (targets.size() != g.arity) {
        throw std::invalid_argument("gate " + g.name + " expects " + std::to_string(g.arity) + " targets");
    }
    check_targets(s.num_qubits(), targets);
    std::vector<Complex> amps(s.amps().begin(), s.amps().end());
    apply_matrix(amps.data(), s.num_qubits(), g.matrix, targets, 1);
    return StateVector(std::move(amps));
}

StateVector apply_unitary(const StateVector &s, const UnitaryGate &g, std::initializer_list<size_t> targets) {
    return apply_unitary(s, g, std::span<const size_t>(targets.begin(), targets.size()));
}

DensityMatrix apply_unitary(const DensityMatrix &r, const UnitaryGate &g, std::span<const size_t> targets) {
    if (targets.size() != g.arity) {
        throw std::invalid_argument("gate " + g.name + " expects " + std::to_string(g.arity) + " targets");
    }
    check_targets(r.num_qubits(), targets);
    DensityMatrix out = r;
    sandwich(out, g.matrix, g.matrix, targets);
    return out;
}

DensityMatrix apply_unitary(const DensityMatrix &r, const UnitaryGate &g, std::initializer_list<size_t> targets) {
    return apply_unitary(r, g, std::span<const size_t>(targets.begin(), targets.size()));
}

DensityMatrix apply_kraus(const DensityMatrix &r, const KrausChannel &ch, size_t target) {
    size_t targets[] = {target};
    check_targets(r.num_qubits(), targets);
    DensityMatrix out = DensityMatrix::zeros(r.num_qubits());
    auto acc = out.mutable_elems();
    for (const auto &k : ch.ops()) {
        DensityMatrix term = r;
        std::vector<Complex> m = to_vec(k);
        sandwich(term, m, m, targets);
        auto t = term.elems();
        for (size_t i = 0; i < acc.size(); i++) {
            acc[i] += t[i];
        }
    }
    return out;
}

StateVector conditional_state(const StateVector &s, const StateVector &b, std::span<const size_t> targets) {
    size_t n = s.num_qubits();
    check_targets(n, targets);
    if (b.num_qubits() != targets.size()) {
        throw std::invalid_argument("conditioning state width does not match the number of targets");
    }
    std::vector<size_t> rest = complement(n, targets);
    std::vector<size_t> t_offs = offsets(n, targets);
    std::vector<size_t> r_offs = offsets(n, rest);
    std::vector<Complex> out(r_offs.size(), 0.0);
    for (size_t ti = 0; ti < t_offs.size(); ti++) {
        Complex w = std::conj(b[ti]);
        if (w == Complex{0}) {
            continue;
        }
        for (size_t ri = 0; ri < r_offs.size(); ri++) {
            out[ri] += w * s[t_offs[ti] | r_offs[ri]];
        }
    }
    return StateVector(std::move(out));
}

DensityMatrix conditional_state(const DensityMatrix &r, const StateVector &b, std::span<const size_t> targets) {
    size_t n = r.num_qubits();
    check_targets(n, targets);
    if (b.num_qubits() != targets.size()) {
        throw std::invalid_argument("conditioning state width does not match the number of targets");
    }
    std::vector<size_t> rest = complement(n, targets);
    std::vector<size_t> t_offs = offsets(n, targets);
    std::vector<size_t> r_offs = offsets(n, rest);
    std::vector<std::pair<size_t, Complex>> support;
    for (size_t ti = 0; ti < t_offs.size(); ti++) {
        if (b[ti] != Complex{0}) {
            support.emplace_back(t_offs[ti], b[ti]);
        }
    }
    DensityMatrix out = DensityMatrix::zeros(rest.size());
    for (size_t r1 = 0; r1 < r_offs.size(); r1++) {
        for (size_t r2 = 0; r2 < r_offs.size(); r2++) {
            Complex acc = 0;
            for (const auto &[o1, b1] : support) {
                Complex row = 0;
                for (const auto &[o2, b2] : support) {
                    row += r(o1 | r_offs[r1], o2 | r_offs[r2]) * b2;
                }
                acc += std::conj(b1) * row;
            }
            out(r1, r2) = acc;
        }
    }
    return out;
}

Projection<StateVector> project(
    const StateVector &s, std::span<const StateVector> basis_states, size_t which, std::span<const size_t> targets) {
    check_basis(basis_states, which, targets.size());
    const StateVector &b = basis_states[which];
    StateVector rest = conditional_state(s, b, targets);
    double p = rest.norm_squared();
    if (p < kZeroProbability) {
        throw ZeroProbabilityError("projection outcome " + std::to_string(which) + " has zero probability");
    }
    size_t n = s.num_qubits();
    std::vector<size_t> t_offs = offsets(n, targets);
    std::vector<size_t> r_offs = offsets(n, complement(n, targets));
    double scale = 1.0 / std::sqrt(p);
    std::vector<Complex> post(s.dim(), 0.0);
    for (size_t ti = 0; ti < t_offs.size(); ti++) {
        for (size_t ri = 0; ri < r_offs.size(); ri++) {
            post[t_offs[ti] | r_offs[ri]] = b[ti] * rest[ri] * scale;
        }
    }
    return {p, StateVector(std::move(post))};
}

Projection<DensityMatrix> project(
    const DensityMatrix &r, std::span<const StateVector> basis_states, size_t which, std::span<const size_t> targets) {
    check_basis(basis_states, which, targets.size());
    const StateVector &b = basis_states[which];
    DensityMatrix rest = conditional_state(r, b, targets);
    double p = rest.trace().real();
    if (p < kZeroProbability) {
        throw ZeroProbabilityError("projection outcome " + std::to_string(which) + " has zero probability");
    }
    size_t n = r.num_qubits();
    std::vector<size_t> t_offs = offsets(n, targets);
    std::vector<size_t> r_offs = offsets(n, complement(n, targets));
    DensityMatrix post = DensityMatrix::zeros(n);
    for (size_t t1 = 0; t1 < t_offs.size(); t1++) {
        for (size_t t2 = 0; t2 < t_offs.size(); t2++) {
            Complex w = b[t1] * std::conj(b[t2]) / p;
            if (w == Complex{0}) {
                continue;
            }
            for (size_t r1 = 0; r1 < r_offs.size(); r1++) {
                for (size_t r2 = 0; r2 < r_offs.size(); r2++) {
                    post(t_offs[t1] | r_offs[r1], t_offs[t2] | r_offs[r2]) = w * rest(r1, r2);
                }
            }
        }
    }
    return {p, std::move(post)};
}

DensityMatrix partial_trace(const DensityMatrix &r, std::span<const size_t> keep) {
    if (keep.empty()) {
        throw std::invalid_argument("partial trace needs at least one kept qubit");
    }
    size_t n = r.num_qubits();
    check_targets(n, keep);
    std::vector<size_t> k_offs = offsets(n, keep);
    std::vector<size_t> t_offs = offsets(n, complement(n, keep));
    DensityMatrix out = DensityMatrix::zeros(keep.size());
    for (size_t k1 = 0; k1 < k_offs.size(); k1++) {
        for (size_t k2 = 0; k2 < k_offs.size(); k2++) {
            Complex acc = 0;
            for (size_t t : t_offs) {
                acc += r(k_offs[k1] | t, k_offs[k2] | t);
            }
            out(k1, k2) = acc;
        }
    }
    return out;
}

DensityMatrix partial_trace(const DensityMatrix &r, std::initializer_list<size_t> keep) {
    return partial_trace(r, std::span<const size_t>(keep.begin(), keep.size()));
}

double fidelity(const StateVector &pure, const DensityMatrix &mixed) {
    if (pure.dim() != mixed.dim()) {
        throw std::invalid_argument("fidelity: dimension mismatch");
    }
    Complex acc = 0;
    for (size_t r = 0; r < mixed.dim(); r++) {
        Complex row = 0;
        for (size_t c = 0; c < mixed.dim(); c++) {
            row += mixed(r, c) * pure[c];
        }
        acc += std::conj(pure[r]) * row;
    }
    return std::clamp(acc.real(), 0.0, 1.0);
}

double fidelity(const StateVector &a, const StateVector &b) {
    return std::clamp(std::norm(inner(a, b)), 0.0, 1.0);
}

double orthonormality_error(std::span<const StateVector> family) {
    double worst = 0;
    for (size_t i = 0; i < family.size(); i++) {
        for (size_t j = 0; j < family.size(); j++) {
            worst = std::max(worst, std::abs(inner(family[i], family[j]) - (i == j ? 1.0 : 0.0)));
        }
    }
    return worst;
}

}  // namespace hqc
