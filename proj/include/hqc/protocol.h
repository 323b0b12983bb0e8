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

#ifndef HQC_PROTOCOL_H
#define HQC_PROTOCOL_H

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hqc/bases.h"
#include "hqc/qcore.h"

/// The Mentor-initiated, Controller-gated bidirectional exchange: Alice
/// teleports x|0>+y|1> to Bob while Bob remotely prepares a|0>+b|1> at
/// Alice's side.
///
/// Measurement order is Mentor (two Bell measurements on (m1,m3) and
/// (m2,m4)), Alice (Bell on A0 A1), Bob (xi basis on B2), Controller (X basis
/// on C). Alice then corrects A2 and Bob corrects B1.
namespace hqc::protocol {

/// Payload amplitudes. x, y are the unknown teleported qubit; a, b the known
/// remotely prepared qubit (real, non-negative).
class ProtocolInputs {
   public:
    /// Throws std::invalid_argument unless |x|^2+|y|^2 == 1 and a^2+b^2 == 1
    /// within 1e-12 and a, b >= 0.
    ProtocolInputs(Complex x, Complex y, double a, double b);

    /// Payload from squared magnitudes, as used by the fidelity formulas:
    /// x = sqrt(1-y2), y = sqrt(y2) e^{i y_phase}, a = sqrt(1-b2), b = sqrt(b2).
    static ProtocolInputs from_weights(double b2, double y2, double y_phase = 0.0);

    Complex x() const { return x_; }
    Complex y() const { return y_; }
    double a() const { return a_; }
    double b() const { return b_; }

    /// x|0>+y|1>
    StateVector teleport_state() const;
    /// a|0>+b|1>
    StateVector rsp_state() const;
    XiBasis xi_basis() const { return XiBasis(a_, b_); }

   private:
    Complex x_;
    Complex y_;
    double a_;
    double b_;
};

constexpr size_t kBranchCount = 256;

/// One joint outcome of all five measurements. bob_l picks xi_l; controller_m
/// is 0 for |+> and 1 for |->.
struct BranchSelector {
    BellIndex mentor_i;
    BellIndex mentor_j;
    BellIndex alice_k;
    int bob_l = 0;
    int controller_m = 0;

    /// Dense key in [0, 256): ((((i*4)+j)*4+k)*2+l)*2+m.
    size_t index() const;
    static BranchSelector from_index(size_t index);
    /// e.g. "mentor=(Phi0,Phi1) alice=Phi3 bob=xi1 controller=-"
    std::string str() const;

    friend bool operator==(const BranchSelector &, const BranchSelector &) = default;
};

std::vector<BranchSelector> all_selectors();

struct CorrectionEntry {
    BranchSelector selector;
    PauliString bob_op;
    PauliString alice_op;
};

/// Bob's and Alice's Pauli corrections for every branch, expanded from the
/// grouped correction tables: Bob's operator depends on the Mentor pair,
/// Alice's outcome and the Controller; Alice's on the Mentor pair, Bob's
/// outcome and the Controller.
class CorrectionTable {
   public:
    static const CorrectionTable &standard();

    const CorrectionEntry &entry(const BranchSelector &sel) const { return entries_[sel.index()]; }
    const std::vector<CorrectionEntry> &entries() const { return entries_; }
    /// Copy with one entry replaced.
    CorrectionTable with_entry(const BranchSelector &sel, PauliString bob_op, PauliString alice_op) const;

   private:
    CorrectionTable() = default;
    std::vector<CorrectionEntry> entries_;
};

PauliString bob_correction(const BranchSelector &sel);
PauliString alice_correction(const BranchSelector &sel);

/// Register used to run the protocol: A0 m1 m3 m2 m4 A1 A2 B1 B2 C.
const QubitOrdering &protocol_ordering();

/// (x|0>+y|1>)_{A0} (x) |tau>, laid out per `protocol_ordering()`.
StateVector initial_state(const ProtocolInputs &in);

/// The five single-measurement bases for a selector, each with its targets in
/// `protocol_ordering()`: Mentor (m1,m3), Mentor (m2,m4), Alice (A0,A1),
/// Bob B2, Controller C. Their tensor product is the joint outcome vector.
struct MeasurementStage {
    const char *party;
    std::vector<size_t> targets;
    StateVector outcome;
};
std::vector<MeasurementStage> measurement_stages(const ProtocolInputs &in, const BranchSelector &sel);

struct BranchResult {
    BranchSelector selector;
    double probability = 0;
    /// False when the branch has zero probability; states and fidelities are then unset/NaN.
    bool defined = false;
    StateVector a2_before;
    StateVector b1_before;
    StateVector a2_state;
    StateVector b1_state;
    double fidelity_rsp = 0;
    double fidelity_tp = 0;
};

/// Runs one branch end to end. Throws ZeroProbabilityError naming the party
/// whose projection vanished.
BranchResult run_branch(
    const ProtocolInputs &in, const BranchSelector &sel, const CorrectionTable &table = CorrectionTable::standard());

/// All 256 branches ordered by selector index. Zero-probability branches are
/// kept with probability 0 and `defined == false`.
std::vector<BranchResult> enumerate_branches(
    const ProtocolInputs &in, const CorrectionTable &table = CorrectionTable::standard(), size_t threads = 1);

/// Draws each party's outcome in protocol order from the Born rule.
/// Deterministic for a fixed seed.
std::pair<BranchSelector, BranchResult> sample_run(const ProtocolInputs &in, uint64_t seed);

/// Reduced (A2, B1) state when the Controller withholds the C measurement:
/// C is traced out instead of projected. Normalized.
DensityMatrix run_without_controller(const ProtocolInputs &in, BellIndex mentor_i, BellIndex mentor_j, BellIndex alice_k, int bob_l);

/// Splits a two-qubit product state into its factors (exact for product
/// states, otherwise the factors of the dominant amplitude's row and column).
std::pair<StateVector, StateVector> split_product(const StateVector &two_qubit);

/// CNOTs from qubit 0 onto every other qubit: a|0..0>+b|1..1> becomes
/// (a|0>+b|1>) (x) |0..0>. Throws std::invalid_argument if more than 1e-12 of
/// the weight lies outside |0..0> and |1..1>.
StateVector compress_payload(const StateVector &s);

/// Appends count-1 |0> qubits and fans qubit 0 out with CNOTs:
/// x|0>+y|1> becomes x|0..0>+y|1..1>.
StateVector expand_payload(const StateVector &q, size_t count);

struct GeneralizedResult {
    StateVector bob_state;    // n qubits, should match the teleported payload
    StateVector alice_state;  // m qubits, should match the prepared target
    double fidelity_tp;
    double fidelity_rsp;
};

/// Teleports an n-qubit GHZ-class payload and remotely prepares an m-qubit
/// GHZ-class target by compressing both to one qubit, running the base
/// protocol on `sel`, and expanding the outputs. The target's two amplitudes
/// must share a phase (the xi basis is real).
GeneralizedResult run_generalized(const StateVector &payload, const StateVector &target, const BranchSelector &sel);

}  // namespace hqc::protocol

#endif
