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

#ifndef HQC_QASM_H
#define HQC_QASM_H

#include <string>

#include "hqc/circuit.h"

namespace hqc::circuit {

/// OpenQASM 3 text for one circuit.
struct QasmDoc {
    std::string text;
};

/// U = e^{i global_phase} u(theta, phi, lambda) with
/// u = [[cos t/2, -e^{i lambda} sin t/2], [e^{i phi} sin t/2, e^{i(phi+lambda)} cos t/2]].
struct EulerAngles {
    double theta;
    double phi;
    double lambda;
    double global_phase;
};

EulerAngles euler_zyz(const Matrix2 &u);
Matrix2 u_matrix(double theta, double phi, double lambda);

/// Emits `OPENQASM 3.0;` with stdgates.inc, a `qubit[n] q;` register and a
/// `bit[k] c;` register for the measured qubits. Custom single-qubit gates
/// become `u(theta, phi, lambda)` with the global phase dropped. Angles are
/// printed in shortest round-trip form, so equal circuits give equal bytes.
QasmDoc export_qasm(const CircuitIR &c);

/// Reads the subset export_qasm writes (h x z cx cz ccx u, measure into c).
/// Throws std::runtime_error with the line number on anything else.
CircuitIR parse_qasm(const std::string &text);

/// "protocol_<16 hex digits>.qasm", hashing the payload amplitudes.
std::string qasm_filename(const protocol::ProtocolInputs &in);

}  // namespace hqc::circuit

#endif
