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

#ifndef HQC_CIRCUIT_H
#define HQC_CIRCUIT_H

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hqc/protocol.h"
#include "hqc/qcore.h"

/// The whole protocol as one coherent circuit. Every measurement except the
/// final read-out of A2 and B1 is replaced by a basis change, and the
/// classically conditioned corrections become controlled gates driven by the
/// rotated measurement qubits.
namespace hqc::circuit {

/// One gate application. Standard gates: h, x, z, cx, cz, ccx (controls
/// first). A gate carrying `matrix` is a custom single-qubit unitary; `name`
/// is then only a label.
struct CircuitOp {
    std::string name;
    std::vector<size_t> qubits;
    std::optional<Matrix2> matrix;
};

struct CircuitIR {
    size_t n_qubits = 0;
    std::vector<CircuitOp> ops;
    /// Qubits read out after every gate, in classical-bit order.
    std::vector<size_t> measured;

    explicit CircuitIR(size_t n = 0) : n_qubits(n) {}

    /// Throws std::invalid_argument on unknown gates, wrong operand counts,
    /// out-of-range or repeated operands.
    void validate() const;

    void h(size_t q) { ops.push_back({"h", {q}, std::nullopt}); }
    void x(size_t q) { ops.push_back({"x", {q}, std::nullopt}); }
    void z(size_t q) { ops.push_back({"z", {q}, std::nullopt}); }
    void cx(size_t c, size_t t) { ops.push_back({"cx", {c, t}, std::nullopt}); }
    void cz(size_t c, size_t t) { ops.push_back({"cz", {c, t}, std::nullopt}); }
    void ccx(size_t c1, size_t c2, size_t t) { ops.push_back({"ccx", {c1, c2, t}, std::nullopt}); }
    void unitary(std::string label, const Matrix2 &m, size_t q) { ops.push_back({std::move(label), {q}, m}); }
};

/// q0..q9 = A0 m1 m2 A1 A2 m3 m4 B1 B2 C.
const QubitOrdering &circuit_ordering();

/// Algebraic normal form of a Boolean function of the eight rotated
/// measurement bits: the XOR of the listed monomials, each a bit mask over
/// `measurement_qubits()`. Mask 0 is the constant term.
struct BooleanFunction {
    std::vector<uint8_t> monomials;
    bool is_affine() const;
};

/// Pauli correction on one output qubit as X^x_part Z^z_part.
struct PauliNetwork {
    size_t target;
    BooleanFunction x_part;
    BooleanFunction z_part;
};

struct CorrectionNetwork {
    PauliNetwork alice;  // on A2
    PauliNetwork bob;    // on B1
};

/// Circuit qubits whose Z-basis values feed the corrections, in bit order:
/// m1 m3 m2 m4 A0 A1 B2 C.
const std::array<size_t, 8> &measurement_qubits();

/// Derives the controlled-Pauli network from the correction table.
CorrectionNetwork synthesize_corrections(const protocol::CorrectionTable &table = protocol::CorrectionTable::standard());

/// Builds the deferred-measurement circuit: payload and channel preparation,
/// basis changes for every party, the controlled corrections, and read-out of
/// A2 (q4) and B1 (q7). Throws std::invalid_argument if a correction
/// monomial has degree above two (no gate for it).
CircuitIR build_protocol_circuit(const protocol::ProtocolInputs &in,
    const protocol::CorrectionTable &table = protocol::CorrectionTable::standard());

/// State of the register after every gate, starting from |0...0>.
StateVector simulate(const CircuitIR &c);

/// Reduced state of `qubits` (in that order) after every gate.
DensityMatrix reduced_output(const CircuitIR &c, std::span<const size_t> qubits);

/// Exact outcome distribution {P(0), P(1)} of each measured qubit.
std::map<size_t, std::array<double, 2>> simulate_marginals(const CircuitIR &c);

}  // namespace hqc::circuit

#endif
