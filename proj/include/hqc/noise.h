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

#ifndef HQC_NOISE_H
#define HQC_NOISE_H

#include <array>
#include <string>
#include <vector>

#include "hqc/protocol.h"
#include "hqc/qcore.h"

/// Noisy distribution of the resource state. The Mentor keeps m1..m4; the
/// distributed qubits A1 A2 B1 B2 C each pass through the same single-qubit
/// channel before the measurements start.
namespace hqc::noise {

enum class NoiseKind { BitFlip, PhaseFlip, PhaseDamping, Depolarizing };

constexpr std::array<NoiseKind, 4> kAllNoiseKinds = {
    NoiseKind::BitFlip, NoiseKind::PhaseFlip, NoiseKind::PhaseDamping, NoiseKind::Depolarizing};

/// "bitflip", "phaseflip", "phasedamping", "depolarizing"
std::string to_string(NoiseKind kind);
/// Accepts the names above (case-insensitive, '-' and '_' ignored). Throws std::invalid_argument.
NoiseKind parse_noise_kind(const std::string &name);

/// Channel parameter: lambda, gamma, delta or tau depending on the kind.
class NoiseStrength {
   public:
    /// Throws std::invalid_argument outside [0, 1].
    explicit NoiseStrength(double value);
    double value() const { return value_; }

   private:
    double value_;
};

/// BitFlip {sqrt(1-p) I, sqrt(p) X}; PhaseFlip {sqrt(1-p) I, sqrt(p) Z};
/// PhaseDamping {sqrt(1-p) I, diag(sqrt p, 0), diag(0, sqrt p)};
/// Depolarizing {sqrt(1-p) I, sqrt(p/3) X, sqrt(p/3) Y, sqrt(p/3) Z}.
KrausChannel kraus_set(NoiseKind kind, NoiseStrength p);

/// Labels of the qubits that see noise: A1 A2 B1 B2 C.
const std::vector<std::string> &noisy_labels();

/// The combined resource |tau><tau| (in channels::tau_ordering()) after the
/// channel acts on each distributed qubit.
DensityMatrix noisy_channel(NoiseKind kind, NoiseStrength p);

struct BranchOutput {
    double probability;
    /// Corrected, renormalized state of (A2, B1).
    DensityMatrix state;
};

/// Projects every measured qubit of |psi0><psi0| (x) noisy per `sel`,
/// applies the tabulated corrections and reduces to (A2, B1). Throws
/// ZeroProbabilityError for a vanishing branch.
BranchOutput branch_output(const DensityMatrix &noisy, const protocol::ProtocolInputs &in,
    const protocol::BranchSelector &sel,
    const protocol::CorrectionTable &table = protocol::CorrectionTable::standard());

/// <Psi|out|Psi> with |Psi> = (a|0>+b|1>)_{A2} (x) (x|0>+y|1>)_{B1}.
double branch_fidelity(const DensityMatrix &out, const protocol::ProtocolInputs &in);

struct FidelityAverages {
    /// Plain mean over the 256 branches (zero-probability branches skipped).
    double uniform;
    /// Mean weighted by branch probability.
    double weighted;
    double min_probability;
    double max_probability;
};

/// Evaluates all 256 branches of one noisy resource. The Mentor and
/// Controller bases do not depend on the payload, so they are rotated onto
/// the computational basis once; each payload then only contracts Alice's and
/// Bob's outcome vectors into the diagonal blocks.
class BranchEvaluator {
   public:
    /// `noisy` is a 9-qubit resource in channels::tau_ordering().
    explicit BranchEvaluator(const DensityMatrix &noisy);
    FidelityAverages evaluate(const protocol::ProtocolInputs &in) const;

   private:
    DensityMatrix rotated_;
};

FidelityAverages average_fidelities(const DensityMatrix &noisy, const protocol::ProtocolInputs &in);
FidelityAverages average_fidelities(NoiseKind kind, NoiseStrength p, const protocol::ProtocolInputs &in);
/// The uniform mean.
double average_fidelity(NoiseKind kind, NoiseStrength p, const protocol::ProtocolInputs &in);

/// Closed-form average fidelity as a polynomial in the strength,
/// b^2 and |y|^2. Throws std::invalid_argument for arguments outside [0, 1].
double closed_form(NoiseKind kind, double p, double b2, double y2);

}  // namespace hqc::noise

#endif
