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

#include <bit>
#include <set>
#include <stdexcept>

#include "hqc/bases.h"

namespace hqc::circuit {

using protocol::BranchSelector;
using protocol::CorrectionTable;
using protocol::ProtocolInputs;

namespace {

constexpr size_t kA0 = 0, kM1 = 1, kM2 = 2, kA1 = 3, kA2 = 4, kM3 = 5, kM4 = 6, kB1 = 7, kB2 = 8, kC = 9;

size_t expected_arity(const CircuitOp &op) {
    if (op.matrix) {
        return 1;
    }
    if (op.name == "h" || op.name == "x" || op.name == "z") {
        return 1;
    }
    if (op.name == "cx" || op.name == "cz") {
        return 2;
    }
    if (op.name == "ccx") {
        return 3;
    }
    throw std::invalid_argument("unknown gate '" + op.name + "'");
}

UnitaryGate gate_for(const CircuitOp &op) {
    if (op.matrix) {
        const Matrix2 &m = *op.matrix;
        return UnitaryGate(op.name, 1, {m.m00, m.m01, m.m10, m.m11}, 1e-10);
    }
    if (op.name == "h") return hadamard();
    if (op.name == "x") return pauli_x();
    if (op.name == "z") return pauli_z();
    if (op.name == "cx") return cnot();
    if (op.name == "cz") return cz();
    if (op.name == "ccx") return toffoli();
    throw std::invalid_argument("unknown gate '" + op.name + "'");
}

// Bell measurement as a basis change: CX(p, q) then H(p). Returns the Bell
// index read off as decode[bit_p][bit_q].
std::array<std::array<int, 2>, 2> bell_decoder() {
    std::array<std::array<int, 2>, 2> decode{};
    for (int i = 0; i < 4; i++) {
        StateVector s = apply_unitary(bell_state(BellIndex(i)), cnot(), {0, 1});
        s = apply_unitary(s, hadamard(), {0});
        size_t hit = 4;
        for (size_t idx = 0; idx < 4; idx++) {
            if (std::norm(s[idx]) > 0.5) {
                hit = idx;
            }
        }
        if (hit == 4) {
            throw std::logic_error("Bell basis change does not land on a basis state");
        }
        decode[hit >> 1][hit & 1] = i;
    }
    return decode;
}

// Moebius transform of a 256-entry truth table.
BooleanFunction anf(std::array<uint8_t, 256> f) {
    for (size_t bit = 1; bit < 256; bit <<= 1) {
        for (size_t m = 0; m < 256; m++) {
            if (m & bit) {
                f[m] ^= f[m ^ bit];
            }
        }
    }
    BooleanFunction out;
    for (size_t m = 0; m < 256; m++) {
        if (f[m]) {
            out.monomials.push_back(static_cast<uint8_t>(m));
        }
    }
    return out;
}

std::vector<size_t> controls_of(uint8_t mask) {
    std::vector<size_t> out;
    for (size_t t = 0; t < 8; t++) {
        if (mask & (1u << t)) {
            out.push_back(measurement_qubits()[t]);
        }
    }
    return out;
}

void emit(CircuitIR &c, const PauliNetwork &net) {
    size_t t = net.target;
    // X^x Z^z: the Z part acts first.
    for (uint8_t mask : net.z_part.monomials) {
        std::vector<size_t> ctl = controls_of(mask);
        switch (ctl.size()) {
            case 0:
                c.z(t);
                break;
            case 1:
                c.cz(ctl[0], t);
                break;
            case 2:
                c.h(t);
                c.ccx(ctl[0], ctl[1], t);
                c.h(t);
                break;
            default:
                throw std::invalid_argument("correction needs a Z controlled on " + std::to_string(ctl.size()) + " bits");
        }
    }
    for (uint8_t mask : net.x_part.monomials) {
        std::vector<size_t> ctl = controls_of(mask);
        switch (ctl.size()) {
            case 0:
                c.x(t);
                break;
            case 1:
                c.cx(ctl[0], t);
                break;
            case 2:
                c.ccx(ctl[0], ctl[1], t);
                break;
            default:
                throw std::invalid_argument("correction needs an X controlled on " + std::to_string(ctl.size()) + " bits");
        }
    }
}

}  // namespace

void CircuitIR::validate() const {
    if (n_qubits == 0 || n_qubits > kMaxQubits) {
        throw std::invalid_argument("circuit width " + std::to_string(n_qubits) + " is out of range");
    }
    for (size_t k = 0; k < ops.size(); k++) {
        const CircuitOp &op = ops[k];
        if (op.qubits.size() != expected_arity(op)) {
            throw std::invalid_argument("gate " + std::to_string(k) + " ('" + op.name + "') has " +
                                        std::to_string(op.qubits.size()) + " operands");
        }
        std::set<size_t> seen;
        for (size_t q : op.qubits) {
            if (q >= n_qubits) {
                throw std::invalid_argument("gate " + std::to_string(k) + " uses qubit " + std::to_string(q) +
                                            " outside a " + std::to_string(n_qubits) + "-qubit register");
            }
            if (!seen.insert(q).second) {
                throw std::invalid_argument("gate " + std::to_string(k) + " repeats qubit " + std::to_string(q));
            }
        }
    }
    std::set<size_t> seen;
    for (size_t q : measured) {
        if (q >= n_qubits || !seen.insert(q).second) {
            throw std::invalid_argument("bad measured qubit " + std::to_string(q));
        }
    }
}

const QubitOrdering &circuit_ordering() {
    static const QubitOrdering order({"A0", "m1", "m2", "A1", "A2", "m3", "m4", "B1", "B2", "C"});
    return order;
}

bool BooleanFunction::is_affine() const {
    for (uint8_t m : monomials) {
        if (std::popcount(static_cast<unsigned>(m)) > 1) {
            return false;
        }
    }
    return true;
}

const std::array<size_t, 8> &measurement_qubits() {
    static const std::array<size_t, 8> qubits = {kM1, kM3, kM2, kM4, kA0, kA1, kB2, kC};
    return qubits;
}

CorrectionNetwork synthesize_corrections(const CorrectionTable &table) {
    auto decode = bell_decoder();
    std::array<uint8_t, 256> ax{}, az{}, bx{}, bz{};
    for (size_t v = 0; v < 256; v++) {
        auto b = [&](int t) {
            return static_cast<int>((v >> t) & 1);
        };
        BranchSelector sel{BellIndex(decode[b(0)][b(1)]), BellIndex(decode[b(2)][b(3)]),
            BellIndex(decode[b(4)][b(5)]), b(6), b(7)};
        const auto &e = table.entry(sel);
        auto alice = e.alice_op.canonical();
        auto bob = e.bob_op.canonical();
        ax[v] = alice.x_power;
        az[v] = alice.z_power;
        bx[v] = bob.x_power;
        bz[v] = bob.z_power;
    }
    return {{kA2, anf(ax), anf(az)}, {kB1, anf(bx), anf(bz)}};
}

CircuitIR build_protocol_circuit(const ProtocolInputs &in, const CorrectionTable &table) {
    CorrectionNetwork net = synthesize_corrections(table);
    CircuitIR c(10);
    const UnitaryGate prep = state_prep_gate(in.x(), in.y());
    c.unitary("prep", Matrix2{prep.at(0, 0), prep.at(0, 1), prep.at(1, 0), prep.at(1, 1)}, kA0);

    // Xi1 on m1 m2 A1 A2.
    c.h(kM1);
    c.h(kM2);
    c.cx(kM1, kA1);
    c.cx(kM2, kA2);
    c.cz(kM1, kM2);
    // Xi2 on m3 m4 B1 B2 C.
    c.h(kM3);
    c.h(kM4);
    c.cx(kM3, kB1);
    c.cx(kM3, kC);
    c.cx(kM4, kB2);
    c.cx(kM4, kC);
    c.cz(kM3, kM4);

    // Mentor, Alice, Bob, Controller basis changes.
    c.cx(kM1, kM3);
    c.h(kM1);
    c.cx(kM2, kM4);
    c.h(kM2);
    c.cx(kA0, kA1);
    c.h(kA0);
    const UnitaryGate xi = xi_measurement_gate(in.xi_basis());
    c.unitary("xi", Matrix2{xi.at(0, 0), xi.at(0, 1), xi.at(1, 0), xi.at(1, 1)}, kB2);
    c.h(kC);

    emit(c, net.alice);
    emit(c, net.bob);
    c.measured = {kA2, kB1};
    c.validate();
    return c;
}

StateVector simulate(const CircuitIR &c) {
    c.validate();
    StateVector s = StateVector::basis(c.n_qubits, 0);
    for (const auto &op : c.ops) {
        s = apply_unitary(s, gate_for(op), op.qubits);
    }
    return s;
}

DensityMatrix reduced_output(const CircuitIR &c, std::span<const size_t> qubits) {
    return partial_trace(DensityMatrix::from_pure(simulate(c)), qubits);
}

std::map<size_t, std::array<double, 2>> simulate_marginals(const CircuitIR &c) {
    StateVector s = simulate(c);
    std::map<size_t, std::array<double, 2>> out;
    for (size_t q : c.measured) {
        size_t mask = size_t{1} << (c.n_qubits - 1 - q);
        std::array<double, 2> p{0, 0};
        for (size_t idx = 0; idx < s.dim(); idx++) {
            p[(idx & mask) ? 1 : 0] += std::norm(s[idx]);
        }
        out[q] = p;
    }
    return out;
}

}  // namespace hqc::circuit
