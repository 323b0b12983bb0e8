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

#include "hqc/noise.h"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>

#include "hqc/bases.h"
#include "hqc/channels.h"

namespace hqc::noise {

using protocol::BranchSelector;
using protocol::CorrectionTable;
using protocol::ProtocolInputs;

namespace {

void check_unit(double v, const char *what) {
    if (!(v >= 0 && v <= 1)) {
        throw std::invalid_argument(std::string(what) + " must lie in [0, 1]");
    }
}

DensityMatrix apply_corrections(DensityMatrix block, const protocol::CorrectionEntry &fix) {
    block = apply_unitary(block, fix.alice_op.gate(), {0});
    return apply_unitary(block, fix.bob_op.gate(), {1});
}

}  // namespace

std::string to_string(NoiseKind kind) {
    switch (kind) {
        case NoiseKind::BitFlip:
            return "bitflip";
        case NoiseKind::PhaseFlip:
            return "phaseflip";
        case NoiseKind::PhaseDamping:
            return "phasedamping";
        case NoiseKind::Depolarizing:
            return "depolarizing";
    }
    throw std::logic_error("unknown noise kind");
}

NoiseKind parse_noise_kind(const std::string &name) {
    std::string key;
    for (char c : name) {
        if (c != '-' && c != '_') {
            key.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
        }
    }
    for (NoiseKind k : kAllNoiseKinds) {
        if (to_string(k) == key) {
            return k;
        }
    }
    throw std::invalid_argument("unknown noise kind '" + name + "'");
}

NoiseStrength::NoiseStrength(double value) : value_(value) {
    check_unit(value, "noise strength");
}

KrausChannel kraus_set(NoiseKind kind, NoiseStrength strength) {
    double p = strength.value();
    double keep = std::sqrt(1 - p);
    Matrix2 identity = Matrix2::identity() * keep;
    switch (kind) {
        case NoiseKind::BitFlip:
            return KrausChannel({identity, Matrix2{0, 1, 1, 0} * std::sqrt(p)});
        case NoiseKind::PhaseFlip:
            return KrausChannel({identity, Matrix2{1, 0, 0, -1} * std::sqrt(p)});
        case NoiseKind::PhaseDamping:
            return KrausChannel({identity, Matrix2{std::sqrt(p), 0, 0, 0}, Matrix2{0, 0, 0, std::sqrt(p)}});
        case NoiseKind::Depolarizing: {
            double w = std::sqrt(p / 3);
            return KrausChannel({
                identity,
                Matrix2{0, 1, 1, 0} * w,
                Matrix2{0, Complex(0, -1), Complex(0, 1), 0} * w,
                Matrix2{1, 0, 0, -1} * w,
            });
        }
    }
    throw std::logic_error("unknown noise kind");
}

const std::vector<std::string> &noisy_labels() {
    static const std::vector<std::string> labels = {"A1", "A2", "B1", "B2", "C"};
    return labels;
}

DensityMatrix noisy_channel(NoiseKind kind, NoiseStrength p) {
    KrausChannel ch = kraus_set(kind, p);
    DensityMatrix rho = DensityMatrix::from_pure(channels::combined_tau());
    for (size_t q : channels::tau_ordering().positions(noisy_labels())) {
        rho = apply_kraus(rho, ch, q);
    }
    return rho;
}

BranchOutput branch_output(
    const DensityMatrix &noisy, const ProtocolInputs &in, const BranchSelector &sel, const CorrectionTable &table) {
    DensityMatrix full = tensor(DensityMatrix::from_pure(in.teleport_state()), noisy);
    StateVector joint = StateVector::basis(0, 0);
    std::vector<size_t> targets;
    for (const auto &stage : protocol::measurement_stages(in, sel)) {
        joint = tensor(joint, stage.outcome);
        targets.insert(targets.end(), stage.targets.begin(), stage.targets.end());
    }
    // The unmeasured qubits A2, B1 stay in protocol order.
    DensityMatrix block = conditional_state(full, joint, targets);
    double p = block.trace().real();
    if (p < kZeroProbability) {
        throw ZeroProbabilityError("noisy branch " + sel.str() + " has zero probability");
    }
    return {p, apply_corrections(block.scaled(1.0 / p), table.entry(sel))};
}

double branch_fidelity(const DensityMatrix &out, const ProtocolInputs &in) {
    if (out.num_qubits() != 2) {
        throw std::invalid_argument("branch fidelity expects the two-qubit (A2, B1) state");
    }
    return fidelity(tensor(in.rsp_state(), in.teleport_state()), out);
}

BranchEvaluator::BranchEvaluator(const DensityMatrix &noisy) {
    const QubitOrdering &order = channels::tau_ordering();
    if (noisy.num_qubits() != order.size()) {
        throw std::invalid_argument("noisy resource must have " + std::to_string(order.size()) + " qubits");
    }
    rotated_ = apply_unitary(noisy, bell_measurement_gate(), {order.position("m1"), order.position("m3")});
    rotated_ = apply_unitary(rotated_, bell_measurement_gate(), {order.position("m2"), order.position("m4")});
    rotated_ = apply_unitary(rotated_, hadamard(), {order.position("C")});
}

FidelityAverages BranchEvaluator::evaluate(const ProtocolInputs &in) const {
    const QubitOrdering &order = channels::tau_ordering();
    size_t n = order.size();
    auto bit = [&](const char *label, int value) -> size_t {
        return value ? size_t{1} << (n - 1 - order.position(label)) : 0;
    };

    // Alice's outcome k leaves <Phi_k|_{A0 A1} |psi0>_{A0} acting on A1.
    StateVector psi0 = in.teleport_state();
    std::array<std::array<Complex, 2>, 4> alice{};
    for (int k = 0; k < 4; k++) {
        StateVector phi = bell_state(BellIndex(k));
        for (int a1 = 0; a1 < 2; a1++) {
            alice[k][a1] = std::conj(phi[a1]) * psi0[0] + std::conj(phi[2 + a1]) * psi0[1];
        }
    }
    auto [xi0, xi1] = xi_states(in.xi_basis());
    const StateVector *bob[2] = {&xi0, &xi1};

    StateVector target = tensor(in.rsp_state(), in.teleport_state());
    const CorrectionTable &table = CorrectionTable::standard();

    FidelityAverages out{0, 0, std::numeric_limits<double>::infinity(), 0};
    size_t counted = 0;
    double total_probability = 0;
    for (const auto &sel : protocol::all_selectors()) {
        int i = sel.mentor_i.value();
        int j = sel.mentor_j.value();
        size_t fixed_bits = bit("m1", i >> 1) | bit("m3", i & 1) | bit("m2", j >> 1) | bit("m4", j & 1) |
                            bit("C", sel.controller_m);
        // Weighted row indices: (A1, B2) summed against the outcome vectors.
        std::array<std::pair<size_t, Complex>, 4> terms[4];
        for (int r = 0; r < 4; r++) {
            size_t t = 0;
            for (int a1 = 0; a1 < 2; a1++) {
                for (int b2 = 0; b2 < 2; b2++) {
                    size_t idx = fixed_bits | bit("A1", a1) | bit("B2", b2) | bit("A2", r >> 1) | bit("B1", r & 1);
                    Complex w = alice[sel.alice_k.value()][a1] * std::conj((*bob[sel.bob_l])[b2]);
                    terms[r][t++] = {idx, w};
                }
            }
        }
        DensityMatrix block = DensityMatrix::zeros(2);
        for (int r = 0; r < 4; r++) {
            for (int c = 0; c < 4; c++) {
                Complex v = 0;
                for (const auto &[ri, rw] : terms[r]) {
                    for (const auto &[ci, cw] : terms[c]) {
                        v += rw * rotated_(ri, ci) * std::conj(cw);
                    }
                }
                block(static_cast<size_t>(r), static_cast<size_t>(c)) = v;
            }
        }
        double p = block.trace().real();
        out.min_probability = std::min(out.min_probability, p);
        out.max_probability = std::max(out.max_probability, p);
        if (p < kZeroProbability) {
            continue;
        }
        double f = fidelity(target, apply_corrections(block.scaled(1.0 / p), table.entry(sel)));
        out.uniform += f;
        out.weighted += p * f;
        total_probability += p;
        counted++;
    }
    if (counted == 0) {
        throw ZeroProbabilityError("every branch of the noisy resource has zero probability");
    }
    out.uniform /= static_cast<double>(counted);
    out.weighted /= total_probability;
    return out;
}

FidelityAverages average_fidelities(const DensityMatrix &noisy, const ProtocolInputs &in) {
    return BranchEvaluator(noisy).evaluate(in);
}

FidelityAverages average_fidelities(NoiseKind kind, NoiseStrength p, const ProtocolInputs &in) {
    return average_fidelities(noisy_channel(kind, p), in);
}

double average_fidelity(NoiseKind kind, NoiseStrength p, const ProtocolInputs &in) {
    return average_fidelities(kind, p, in).uniform;
}

double closed_form(NoiseKind kind, double p, double b2, double y2) {
    check_unit(p, "noise strength");
    check_unit(b2, "b^2");
    check_unit(y2, "|y|^2");
    double b4 = b2 * b2;
    double y4 = y2 * y2;
    switch (kind) {
        case NoiseKind::BitFlip: {
            double s = 2 * p * (1 - p);
            return (1 - s * (1 - 2 * b2) * (1 - 2 * b2)) * (1 - s * (1 - 2 * y2) * (1 - 2 * y2));
        }
        case NoiseKind::PhaseFlip: {
            double g = p;
            return 1 - 4 * g * y2 * (3 - 6 * g + 4 * g * g) * (1 - y2) +
                   4 * (b4 - b2) *
                       (3 * g - 6 * g * g + 4 * g * g * g + 4 * (g - 4 * g * g * g + 4 * g * g * g * g) * (y4 - y2));
        }
        case NoiseKind::PhaseDamping: {
            double d = p;
            return 1 + 2 * d *
                           ((3 + (-3 + d) * d) * y2 * (-1 + y2) +
                               (b4 - b2) * (3 - 3 * d + d * d + 2 * (y4 - y2) * (2 + (-2 + d) * d * d)));
        }
        case NoiseKind::Depolarizing: {
            double t = p;
            double u = (3 - 4 * t) * (3 - 4 * t);
            return 1 - 8.0 / 243.0 * t *
                           (3 * (3 - 2 * t) * (9 - 6 * t + 4 * t * t) + (y2 - y4) * u * (9 - 4 * t * (3 - 2 * t)) +
                               (b2 - b4) * u * (9 - 12 * t + 8 * t * t - 4 * u * (y2 - y4)));
        }
    }
    throw std::logic_error("unknown noise kind");
}

}  // namespace hqc::noise
