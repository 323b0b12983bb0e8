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

#include <Eigen/Dense>
#include <gtest/gtest.h>

#include "hqc/bases.h"
#include "hqc/noise.h"
#include "test_util.h"

using namespace hqc;
using hqc::testing::random_density;
using hqc::testing::random_state;

namespace {

const double kS = 1 / std::sqrt(2.0);

double min_eigenvalue(const DensityMatrix &r) {
    size_t dim = r.dim();
    Eigen::MatrixXcd m(dim, dim);
    for (size_t i = 0; i < dim; i++) {
        for (size_t j = 0; j < dim; j++) {
            m(i, j) = r(i, j);
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
}

std::vector<size_t> random_targets(std::mt19937_64 &rng, size_t n, size_t k) {
    std::vector<size_t> all(n);
    for (size_t i = 0; i < n; i++) {
        all[i] = i;
    }
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(k);
    return all;
}

}  // namespace

TEST(state_vector, rejects_bad_lengths) {
    ASSERT_THROW(StateVector(std::vector<Complex>{1, 0, 0}), std::invalid_argument);
    ASSERT_THROW(StateVector(std::vector<Complex>{}), std::invalid_argument);
    ASSERT_EQ(StateVector({1}).num_qubits(), 0u);
}

TEST(state_vector, from_bits_is_big_endian) {
    StateVector s = StateVector::from_bits("01");
    ASSERT_EQ(s.num_qubits(), 2u);
    ASSERT_EQ(s[1], Complex(1));
    ASSERT_THROW(StateVector::from_bits("012"), std::invalid_argument);
}

TEST(state_vector, normalized) {
    StateVector s = StateVector({3, Complex(0, 4)}).normalized();
    ASSERT_NEAR(s.norm_squared(), 1, 1e-12);
    ASSERT_NEAR(s[0].real(), 0.6, 1e-15);
    ASSERT_THROW(StateVector({0, 0}).normalized(), ZeroProbabilityError);
}

TEST(tensor, basis_case) {
    StateVector s = tensor(StateVector::basis(1, 0), StateVector::basis(1, 0));
    ASSERT_EQ(s.num_qubits(), 2u);
    ASSERT_EQ(s[0], Complex(1));
    ASSERT_EQ(s.norm_squared(), 1);
}

TEST(tensor, x_basis_product) {
    auto [plus, minus] = x_states();
    StateVector s = tensor(plus, minus);
    Complex expected[] = {0.5, -0.5, 0.5, -0.5};
    for (size_t i = 0; i < 4; i++) {
        ASSERT_NEAR(std::abs(s[i] - expected[i]), 0, 1e-15);
    }
}

TEST(tensor, index_rule) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 20; trial++) {
        StateVector a = random_state(rng, 1 + trial % 3);
        StateVector b = random_state(rng, 1 + trial % 2);
        StateVector s = tensor(a, b);
        ASSERT_EQ(s.num_qubits(), a.num_qubits() + b.num_qubits());
        for (size_t i = 0; i < a.dim(); i++) {
            for (size_t j = 0; j < b.dim(); j++) {
                ASSERT_EQ(s[i * b.dim() + j], a[i] * b[j]);
            }
        }
    }
}

TEST(tensor, density_matches_pure) {
    std::mt19937_64 rng(3);
    StateVector a = random_state(rng, 2);
    StateVector b = random_state(rng, 1);
    DensityMatrix d = tensor(DensityMatrix::from_pure(a), DensityMatrix::from_pure(b));
    ASSERT_LT(d.max_abs_diff(DensityMatrix::from_pure(tensor(a, b))), 1e-15);
}

TEST(apply_unitary, hadamard_on_zero) {
    StateVector s = apply_unitary(StateVector::basis(1, 0), hadamard(), {0});
    ASSERT_NEAR(s[0].real(), kS, 1e-15);
    ASSERT_NEAR(s[1].real(), kS, 1e-15);
}

TEST(apply_unitary, cnot_makes_bell_pair) {
    StateVector in({kS, 0, kS, 0});
    StateVector out = apply_unitary(in, cnot(), {0, 1});
    ASSERT_LT(hqc::testing::max_abs_diff(out, bell_state(BellIndex(0))), 1e-15);
    // Control and target swapped.
    StateVector swapped = apply_unitary(StateVector({kS, kS, 0, 0}), cnot(), {1, 0});
    ASSERT_LT(hqc::testing::max_abs_diff(swapped, bell_state(BellIndex(0))), 1e-15);
}

TEST(apply_unitary, errors) {
    StateVector s = StateVector::basis(2, 0);
    ASSERT_THROW(apply_unitary(s, hadamard(), {2}), std::out_of_range);
    ASSERT_THROW(apply_unitary(s, cnot(), {1, 1}), std::invalid_argument);
    ASSERT_THROW(apply_unitary(s, cnot(), {0}), std::invalid_argument);
    DensityMatrix r = DensityMatrix::from_pure(s);
    ASSERT_THROW(apply_unitary(r, cnot(), {0, 0}), std::invalid_argument);
    ASSERT_THROW(apply_unitary(r, hadamard(), {5}), std::out_of_range);
}

TEST(apply_unitary, agrees_with_embedded_matrix) {
    std::mt19937_64 rng(5);
    const UnitaryGate *gates[] = {&hadamard(), &pauli_y(), &cnot(), &cz(), &toffoli(), &bell_measurement_gate()};
    for (int trial = 0; trial < 60; trial++) {
        const UnitaryGate &g = *gates[trial % 6];
        size_t n = g.arity + trial % 3;
        std::vector<size_t> targets = random_targets(rng, n, g.arity);
        StateVector s = random_state(rng, n);
        StateVector fast = apply_unitary(s, g, targets);
        StateVector slow = hqc::testing::matvec(hqc::testing::embed(g, targets, n), s);
        ASSERT_LT(hqc::testing::max_abs_diff(fast, slow), 1e-13) << g.name << " trial " << trial;
    }
}

TEST(apply_unitary, preserves_norm) {
    std::mt19937_64 rng(6);
    const UnitaryGate *gates[] = {&hadamard(), &pauli_x(), &pauli_z(), &cnot(), &cz(), &toffoli(), &bt_gate()};
    for (int trial = 0; trial < 200; trial++) {
        const UnitaryGate &g = *gates[trial % 7];
        size_t n = 3 + trial % 4;
        StateVector s = random_state(rng, n);
        for (int step = 0; step < 5; step++) {
            s = apply_unitary(s, g, random_targets(rng, n, g.arity));
        }
        ASSERT_NEAR(s.norm_squared(), 1, 1e-12);
    }
}

TEST(apply_unitary, density_matches_pure) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; trial++) {
        StateVector s = random_state(rng, 3);
        std::vector<size_t> t = random_targets(rng, 3, 2);
        DensityMatrix via_pure = DensityMatrix::from_pure(apply_unitary(s, cnot(), t));
        DensityMatrix via_mixed = apply_unitary(DensityMatrix::from_pure(s), cnot(), t);
        ASSERT_LT(via_pure.max_abs_diff(via_mixed), 1e-14);
    }
}

TEST(unitary_gate, rejects_non_unitary) {
    ASSERT_THROW(UnitaryGate("bad", 1, {1, 1, 1, 1}), std::invalid_argument);
    ASSERT_THROW(UnitaryGate("bad", 1, {1, 0, 0}), std::invalid_argument);
    ASSERT_THROW(UnitaryGate("bad", 4, std::vector<Complex>(256)), std::invalid_argument);
}

TEST(unitary_gate, library_is_unitary) {
    for (const UnitaryGate *g : {&hadamard(), &pauli_x(), &pauli_y(), &pauli_z(), &cnot(), &cz(), &toffoli(), &bt_gate(),
             &bell_measurement_gate()}) {
        ASSERT_LT(g->unitarity_error(), 1e-12) << g->name;
    }
}

TEST(kraus, rejects_non_cptp) {
    ASSERT_THROW(KrausChannel({Matrix2::identity(), Matrix2{0, 1, 1, 0}}), std::invalid_argument);
    ASSERT_THROW(KrausChannel({}), std::invalid_argument);
}

TEST(apply_kraus, bit_flip_zero_is_identity) {
    std::mt19937_64 rng(8);
    DensityMatrix r = random_density(rng, 2);
    KrausChannel ch = noise::kraus_set(noise::NoiseKind::BitFlip, noise::NoiseStrength(0));
    ASSERT_LT(apply_kraus(r, ch, 1).max_abs_diff(r), 1e-15);
}

TEST(apply_kraus, bit_flip_one_flips) {
    KrausChannel ch = noise::kraus_set(noise::NoiseKind::BitFlip, noise::NoiseStrength(1));
    DensityMatrix out = apply_kraus(DensityMatrix::from_pure(StateVector::basis(1, 0)), ch, 0);
    ASSERT_LT(out.max_abs_diff(DensityMatrix::from_pure(StateVector::basis(1, 1))), 1e-15);
}

TEST(apply_kraus, full_phase_damping_dephases_plus) {
    KrausChannel ch = noise::kraus_set(noise::NoiseKind::PhaseDamping, noise::NoiseStrength(1));
    DensityMatrix out = apply_kraus(DensityMatrix::from_pure(x_states().first), ch, 0);
    ASSERT_LT(out.max_abs_diff(DensityMatrix::maximally_mixed(1)), 1e-15);
}

TEST(apply_kraus, target_out_of_range) {
    KrausChannel ch = noise::kraus_set(noise::NoiseKind::BitFlip, noise::NoiseStrength(0.2));
    ASSERT_THROW(apply_kraus(DensityMatrix::maximally_mixed(2), ch, 2), std::out_of_range);
}

TEST(apply_kraus, preserves_trace_hermiticity_positivity) {
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> u(0, 1);
    for (int trial = 0; trial < 40; trial++) {
        auto kind = noise::kAllNoiseKinds[trial % 4];
        KrausChannel ch = noise::kraus_set(kind, noise::NoiseStrength(u(rng)));
        DensityMatrix r = random_density(rng, 3);
        for (size_t q = 0; q < 3; q++) {
            r = apply_kraus(r, ch, q);
        }
        ASSERT_NEAR(r.trace().real(), 1, 1e-10);
        ASSERT_NEAR(r.trace().imag(), 0, 1e-10);
        ASSERT_LT(r.hermiticity_error(), 1e-10);
        ASSERT_GT(min_eigenvalue(r), -1e-10);
    }
}

TEST(project, bell_eigenstate) {
    auto basis = bell_basis();
    size_t targets[] = {0, 1};
    auto p = project(bell_state(BellIndex(0)), basis, 0, targets);
    ASSERT_NEAR(p.probability, 1, 1e-15);
    ASSERT_NEAR(fidelity(p.post_state, bell_state(BellIndex(0))), 1, 1e-15);
    ASSERT_THROW(project(bell_state(BellIndex(0)), basis, 1, targets), ZeroProbabilityError);
}

TEST(project, rejects_non_orthonormal_basis) {
    StateVector basis[] = {StateVector::basis(1, 0), x_states().first};
    size_t targets[] = {0};
    ASSERT_THROW(project(StateVector::basis(1, 0), basis, 0, targets), std::invalid_argument);
}

TEST(project, probabilities_sum_to_one) {
    std::mt19937_64 rng(10);
    auto bell = bell_basis();
    for (int trial = 0; trial < 30; trial++) {
        StateVector s = random_state(rng, 4);
        std::vector<size_t> t = random_targets(rng, 4, 2);
        double total = 0;
        double total_mixed = 0;
        DensityMatrix r = random_density(rng, 4);
        for (size_t k = 0; k < 4; k++) {
            total += project(s, bell, k, t).probability;
            total_mixed += project(r, bell, k, t).probability;
        }
        ASSERT_NEAR(total, 1, 1e-10);
        ASSERT_NEAR(total_mixed, 1, 1e-10);
    }
}

TEST(project, post_state_is_normalized_and_in_the_outcome) {
    std::mt19937_64 rng(12);
    auto [plus, minus] = x_states();
    StateVector basis[] = {plus, minus};
    size_t targets[] = {1};
    StateVector s = random_state(rng, 3);
    auto p = project(s, basis, 1, targets);
    ASSERT_NEAR(p.post_state.norm_squared(), 1, 1e-12);
    auto again = project(p.post_state, basis, 1, targets);
    ASSERT_NEAR(again.probability, 1, 1e-12);
}

TEST(conditional_state, matches_manual_contraction) {
    std::mt19937_64 rng(13);
    StateVector s = random_state(rng, 3);
    StateVector b = random_state(rng, 1);
    size_t targets[] = {1};
    StateVector rest = conditional_state(s, b, targets);
    // Remaining qubits 0 and 2, in that order.
    for (size_t q0 = 0; q0 < 2; q0++) {
        for (size_t q2 = 0; q2 < 2; q2++) {
            Complex want = std::conj(b[0]) * s[q0 * 4 + q2] + std::conj(b[1]) * s[q0 * 4 + 2 + q2];
            ASSERT_NEAR(std::abs(rest[q0 * 2 + q2] - want), 0, 1e-15);
        }
    }
}

TEST(partial_trace, bell_marginal_is_maximally_mixed) {
    DensityMatrix r = DensityMatrix::from_pure(bell_state(BellIndex(0)));
    ASSERT_LT(partial_trace(r, {0}).max_abs_diff(DensityMatrix::maximally_mixed(1)), 1e-15);
    ASSERT_THROW(partial_trace(r, std::span<const size_t>{}), std::invalid_argument);
}

TEST(partial_trace, product_state_marginals) {
    std::mt19937_64 rng(14);
    for (int trial = 0; trial < 30; trial++) {
        StateVector a = random_state(rng, 1 + trial % 2);
        StateVector b = random_state(rng, 1 + trial % 3);
        DensityMatrix r = DensityMatrix::from_pure(tensor(a, b));
        std::vector<size_t> keep_a, keep_b;
        for (size_t q = 0; q < a.num_qubits(); q++) {
            keep_a.push_back(q);
        }
        for (size_t q = 0; q < b.num_qubits(); q++) {
            keep_b.push_back(a.num_qubits() + q);
        }
        ASSERT_LT(partial_trace(r, keep_a).max_abs_diff(DensityMatrix::from_pure(a)), 1e-10);
        ASSERT_LT(partial_trace(r, keep_b).max_abs_diff(DensityMatrix::from_pure(b)), 1e-10);
    }
}

TEST(partial_trace, keep_order_is_respected) {
    StateVector s = tensor(StateVector::basis(1, 0), StateVector::basis(1, 1));
    DensityMatrix swapped = partial_trace(DensityMatrix::from_pure(s), {1, 0});
    ASSERT_NEAR(swapped(2, 2).real(), 1, 1e-15);
}

TEST(partial_trace, preserves_trace) {
    std::mt19937_64 rng(15);
    DensityMatrix r = random_density(rng, 4);
    ASSERT_NEAR(partial_trace(r, {3, 1}).trace().real(), 1, 1e-12);
}

TEST(fidelity, examples) {
    StateVector zero = StateVector::basis(1, 0);
    ASSERT_NEAR(fidelity(zero, DensityMatrix::from_pure(zero)), 1, 1e-15);
    ASSERT_NEAR(fidelity(zero, DensityMatrix::from_pure(StateVector::basis(1, 1))), 0, 1e-15);
    ASSERT_NEAR(fidelity(x_states().first, DensityMatrix::maximally_mixed(1)), 0.5, 1e-15);
    ASSERT_THROW(fidelity(zero, DensityMatrix::maximally_mixed(2)), std::invalid_argument);
}

TEST(fidelity, ignores_global_phase_and_stays_in_range) {
    std::mt19937_64 rng(16);
    for (int trial = 0; trial < 30; trial++) {
        StateVector s = random_state(rng, 2);
        ASSERT_NEAR(fidelity(s, s * std::polar(1.0, 0.3 * trial)), 1, 1e-12);
        double f = fidelity(s, random_density(rng, 2));
        ASSERT_GE(f, 0);
        ASSERT_LE(f, 1);
    }
}

TEST(qubit_ordering, positions_and_permutation) {
    QubitOrdering a({"x", "y", "z"});
    QubitOrdering b({"z", "x", "y"});
    ASSERT_EQ(a.position("z"), 2u);
    ASSERT_THROW(a.position("w"), std::out_of_range);
    ASSERT_THROW(QubitOrdering({"x", "x"}), std::invalid_argument);
    ASSERT_EQ(a.permutation_to(b), (std::vector<size_t>{2, 0, 1}));
    ASSERT_EQ(b.joined(), "zxy");

    // |x=0 y=0 z=1> relabelled into z x y order is |100>.
    StateVector s = StateVector::from_bits("001");
    auto perm = a.permutation_to(b);
    ASSERT_EQ(permute_qubits(s, perm)[4], Complex(1));
}

TEST(orthonormality_error, detects_overlap) {
    auto bell = bell_basis();
    ASSERT_LT(orthonormality_error(bell), 1e-15);
    StateVector bad[] = {StateVector::basis(1, 0), x_states().first};
    ASSERT_NEAR(orthonormality_error(bad), kS, 1e-15);
}
