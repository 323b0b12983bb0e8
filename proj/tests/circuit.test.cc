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

#include "hqc/circuit.h"

#include <gtest/gtest.h>

#include <bit>

#include "test_util.h"

using namespace hqc;
using namespace hqc::circuit;
using protocol::ProtocolInputs;

namespace {

bool eval_anf(const BooleanFunction &f, uint8_t v) {
    bool out = false;
    for (uint8_t m : f.monomials) {
        out ^= (m & v) == m;
    }
    return out;
}

// CX(p, q) then H(p) sends Phi_i to |i&1, i>>1>.
int bell_from_bits(int first, int second) {
    return first + 2 * second;
}

UnitaryGate gate_of(const CircuitOp &op) {
    if (op.matrix) {
        const Matrix2 &m = *op.matrix;
        return UnitaryGate(op.name, 1, {m.m00, m.m01, m.m10, m.m11});
    }
    if (op.name == "h") return hadamard();
    if (op.name == "x") return pauli_x();
    if (op.name == "z") return pauli_z();
    if (op.name == "cx") return cnot();
    if (op.name == "cz") return cz();
    return toffoli();
}

// Full-matrix simulation, one embedded gate at a time.
StateVector simulate_by_matrices(const CircuitIR &c) {
    StateVector s = StateVector::basis(c.n_qubits, 0);
    for (const auto &op : c.ops) {
        s = hqc::testing::matvec(hqc::testing::embed(gate_of(op), op.qubits, c.n_qubits), s);
    }
    return s;
}

CircuitIR random_circuit(std::mt19937_64 &rng, size_t n, size_t gates) {
    CircuitIR c(n);
    std::uniform_int_distribution<int> kind(0, 6);
    std::vector<size_t> qs(n);
    for (size_t i = 0; i < n; i++) {
        qs[i] = i;
    }
    for (size_t g = 0; g < gates; g++) {
        std::shuffle(qs.begin(), qs.end(), rng);
        switch (kind(rng)) {
            case 0: c.h(qs[0]); break;
            case 1: c.x(qs[0]); break;
            case 2: c.z(qs[0]); break;
            case 3: c.cx(qs[0], qs[1]); break;
            case 4: c.cz(qs[0], qs[1]); break;
            case 5: c.ccx(qs[0], qs[1], qs[2]); break;
            default: {
                StateVector col = hqc::testing::random_state(rng, 1);
                UnitaryGate u = state_prep_gate(col[0], col[1]);
                c.unitary("u", Matrix2{u.at(0, 0), u.at(0, 1), u.at(1, 0), u.at(1, 1)}, qs[0]);
            }
        }
    }
    return c;
}

}  // namespace

TEST(circuit_layout, orderings) {
    ASSERT_EQ(circuit_ordering().joined(), "A0m1m2A1A2m3m4B1B2C");
    std::array<size_t, 8> want = {1, 5, 2, 6, 0, 3, 8, 9};
    ASSERT_EQ(measurement_qubits(), want);
}

TEST(circuit_ir, validate_errors) {
    CircuitIR c(3);
    c.ops.push_back({"foo", {0}, std::nullopt});
    ASSERT_THROW(c.validate(), std::invalid_argument);
    c.ops = {{"cx", {0}, std::nullopt}};
    ASSERT_THROW(c.validate(), std::invalid_argument);
    c.ops = {{"h", {3}, std::nullopt}};
    ASSERT_THROW(c.validate(), std::invalid_argument);
    c.ops = {{"ccx", {0, 1, 0}, std::nullopt}};
    ASSERT_THROW(c.validate(), std::invalid_argument);
    c.ops.clear();
    c.measured = {5};
    ASSERT_THROW(c.validate(), std::invalid_argument);
    c.measured = {2};
    ASSERT_NO_THROW(c.validate());
}

TEST(simulate, matches_full_matrix_products) {
    std::mt19937_64 rng(51);
    for (int trial = 0; trial < 20; trial++) {
        CircuitIR c = random_circuit(rng, 4, 12);
        ASSERT_LT(hqc::testing::max_abs_diff(simulate(c), simulate_by_matrices(c)), 1e-12);
    }
}

TEST(simulate, bell_pair_marginals) {
    CircuitIR c(2);
    c.h(0);
    c.cx(0, 1);
    c.measured = {0, 1};
    auto m = simulate_marginals(c);
    ASSERT_NEAR(m[0][0], 0.5, 1e-15);
    ASSERT_NEAR(m[1][1], 0.5, 1e-15);
    CircuitIR empty(1);
    empty.measured = {0};
    ASSERT_EQ(simulate_marginals(empty)[0][0], 1);
}

TEST(reduced_output, product_of_prepared_qubits) {
    CircuitIR c(3);
    c.x(2);
    c.h(0);
    size_t keep[] = {2, 0};
    DensityMatrix r = reduced_output(c, keep);
    StateVector want = tensor(StateVector::basis(1, 1), x_states().first);
    ASSERT_LT(r.max_abs_diff(DensityMatrix::from_pure(want)), 1e-15);
}

TEST(synthesize_corrections, reproduces_the_table) {
    CorrectionNetwork net = synthesize_corrections();
    ASSERT_EQ(net.alice.target, 4u);
    ASSERT_EQ(net.bob.target, 7u);
    for (unsigned v = 0; v < 256; v++) {
        auto bit = [&](int t) {
            return static_cast<int>((v >> t) & 1);
        };
        protocol::BranchSelector sel{BellIndex(bell_from_bits(bit(0), bit(1))),
            BellIndex(bell_from_bits(bit(2), bit(3))), BellIndex(bell_from_bits(bit(4), bit(5))), bit(6), bit(7)};
        auto alice = protocol::alice_correction(sel).canonical();
        auto bob = protocol::bob_correction(sel).canonical();
        uint8_t u = static_cast<uint8_t>(v);
        ASSERT_EQ(eval_anf(net.alice.x_part, u), alice.x_power) << sel.str();
        ASSERT_EQ(eval_anf(net.alice.z_part, u), alice.z_power) << sel.str();
        ASSERT_EQ(eval_anf(net.bob.x_part, u), bob.x_power) << sel.str();
        ASSERT_EQ(eval_anf(net.bob.z_part, u), bob.z_power) << sel.str();
    }
}

TEST(synthesize_corrections, degree_at_most_two) {
    CorrectionNetwork net = synthesize_corrections();
    for (const auto *f : {&net.alice.x_part, &net.alice.z_part, &net.bob.x_part, &net.bob.z_part}) {
        for (uint8_t m : f->monomials) {
            ASSERT_LE(std::popcount(m), 2);
        }
    }
}

TEST(build_protocol_circuit, rejects_high_degree_tables) {
    // Changing one entry turns its Pauli component into a point function,
    // whose normal form has the full degree-8 monomial.
    protocol::BranchSelector sel = protocol::BranchSelector::from_index(0);
    auto table = protocol::CorrectionTable::standard().with_entry(
        sel, protocol::bob_correction(sel), PauliString::parse("X"));
    CorrectionNetwork net = synthesize_corrections(table);
    ASSERT_NE(std::find(net.alice.x_part.monomials.begin(), net.alice.x_part.monomials.end(), 0xff),
        net.alice.x_part.monomials.end());
    ASSERT_THROW(build_protocol_circuit(ProtocolInputs(1, 0, 1, 0), table), std::invalid_argument);
}

TEST(build_protocol_circuit, shape) {
    CircuitIR c = build_protocol_circuit(ProtocolInputs(1 / std::sqrt(5.0), 2 / std::sqrt(5.0), 1 / std::sqrt(2.0),
        1 / std::sqrt(2.0)));
    ASSERT_EQ(c.n_qubits, 10u);
    std::vector<size_t> measured = {4, 7};
    ASSERT_EQ(c.measured, measured);
    for (const auto &op : c.ops) {
        ASSERT_NE(op.name, "measure");
        ASSERT_LE(op.qubits.size(), 3u);
    }
}

TEST(build_protocol_circuit, outputs_the_payloads) {
    std::mt19937_64 rng(52);
    size_t keep[] = {4, 7};
    for (int trial = 0; trial < 10; trial++) {
        ProtocolInputs in = hqc::testing::random_inputs(rng);
        DensityMatrix out = reduced_output(build_protocol_circuit(in), keep);
        ASSERT_GE(fidelity(tensor(in.rsp_state(), in.teleport_state()), out), 1 - 1e-10);
    }
}

TEST(build_protocol_circuit, example_marginals) {
    // a = b = 1/sqrt2 and (x, y) = (1, 2)/sqrt5.
    double r2 = 1 / std::sqrt(2.0), r5 = 1 / std::sqrt(5.0);
    auto m = simulate_marginals(build_protocol_circuit(ProtocolInputs(r5, 2 * r5, r2, r2)));
    ASSERT_NEAR(m[4][1], 0.5, 1e-9);
    ASSERT_NEAR(m[7][1], 0.8, 1e-9);
    ASSERT_NEAR(m[7][0] + m[7][1], 1, 1e-12);
}

TEST(build_protocol_circuit, basis_payloads) {
    auto m = simulate_marginals(build_protocol_circuit(ProtocolInputs(1, 0, 1, 0)));
    ASSERT_NEAR(m[4][0], 1, 1e-12);
    ASSERT_NEAR(m[7][0], 1, 1e-12);
    m = simulate_marginals(build_protocol_circuit(ProtocolInputs(0, 1, 0, 1)));
    ASSERT_NEAR(m[4][1], 1, 1e-12);
    ASSERT_NEAR(m[7][1], 1, 1e-12);
}
