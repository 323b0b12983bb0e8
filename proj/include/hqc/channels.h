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

#ifndef HQC_CHANNELS_H
#define HQC_CHANNELS_H

#include <utility>
#include <vector>

#include "hqc/bases.h"
#include "hqc/qcore.h"

/// The two pre-shared resource states: a 4-qubit channel between the Mentor
/// and Alice, and a 5-qubit channel between the Mentor, Bob and the
/// Controller.
namespace hqc::channels {

/// m1 m2 A1 A2
const QubitOrdering &xi1_ordering();
/// m3 m4 B1 B2 C
const QubitOrdering &xi2_ordering();
/// m1 m3 m2 m4 A1 A2 B1 B2 C, the order the combined channel is kept in.
const QubitOrdering &tau_ordering();
/// A1 A2 B1 B2 C
const QubitOrdering &m_ordering();

/// How far through the preparation circuit to run.
enum class PrepStage {
    Initial,    // all qubits |0>
    Hadamards,  // H on q0, q1
    Cnots,      // fan-out CNOTs applied
    Complete,   // final CZ(q0, q1)
};

StateVector prepare_xi1(PrepStage stage = PrepStage::Complete);
StateVector prepare_xi2(PrepStage stage = PrepStage::Complete);

/// Closed forms: (|0000>+|0101>+|1010>-|1111>)/2 and
/// (|00000>+|01011>+|10101>-|11110>)/2.
StateVector analytic_xi1();
StateVector analytic_xi2();

struct ChannelPair {
    StateVector xi1;
    StateVector xi2;
};

ChannelPair prepare_channels();

/// xi1 (x) xi2 reordered into `tau_ordering()`.
StateVector combined_tau();

/// Tabulated post-Mentor resource state on (A1 A2 B1 B2 C) for Mentor
/// outcomes Phi_i on (m1,m3) and Phi_j on (m2,m4).
StateVector m_state(BellIndex i, BellIndex j);

/// The same state recomputed by projecting `combined_tau()` onto the Mentor
/// outcome (i, j) and dropping the Mentor qubits, normalized.
StateVector m_state_by_projection(BellIndex i, BellIndex j);

/// Nonzero amplitudes as (bit string, amplitude), in index order.
std::vector<std::pair<std::string, Complex>> nonzero_terms(const StateVector &s, double tol = 1e-12);

}  // namespace hqc::channels

#endif
