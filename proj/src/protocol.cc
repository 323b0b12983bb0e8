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

#include "hqc/protocol.h"

#include <array>
#include <cmath>
#include <limits>
#include <random>

#include "hqc/channels.h"
#include "hqc/parallel.h"

namespace hqc::protocol {

namespace {

using MentorPair = std::pair<int, int>;

struct CorrectionGroup {
    std::array<MentorPair, 4> mentor;
    std::array<const char *, 8> ops;
};

// Bob's operator on B1; ops indexed by 2*alice_k + controller_m.
const std::array<CorrectionGroup, 4> kBobTable = {{
    {{{{0, 0}, {0, 1}, {1, 2}, {1, 3}}}, {"I", "Z", "Z", "I", "X", "XZ", "ZX", "ZXZ"}},
    {{{{1, 0}, {1, 1}, {0, 2}, {0, 3}}}, {"Z", "I", "I", "Z", "XZ", "X", "ZXZ", "ZX"}},
    {{{{2, 0}, {2, 1}, {3, 2}, {3, 3}}}, {"X", "XZ", "ZX", "ZXZ", "I", "Z", "Z", "I"}},
    {{{{3, 0}, {3, 1}, {2, 2}, {2, 3}}}, {"XZ", "X", "ZXZ", "ZX", "Z", "I", "I", "Z"}},
}};

// Alice's operator on A2; ops indexed by 2*bob_l + controller_m (last four unused).
const std::array<CorrectionGroup, 4> kAliceTable = {{
    {{{{0, 0}, {1, 0}, {2, 1}, {3, 1}}}, {"I", "Z", "XZ", "X"}},
    {{{{0, 1}, {1, 1}, {2, 0}, {3, 0}}}, {"Z", "I", "X", "XZ"}},
    {{{{0, 2}, {1, 2}, {2, 3}, {3, 3}}}, {"X", "ZX", "XZX", "I"}},
    {{{{0, 3}, {1, 3}, {2, 2}, {3, 2}}}, {"XZ", "ZXZ", "XZXZ", "Z"}},
}};

const CorrectionGroup &group_for(const std::array<CorrectionGroup, 4> &table, int i, int j) {
    for (const auto &g : table) {
        for (const auto &[gi, gj] : g.mentor) {
            if (gi == i && gj == j) {
                return g;
            }
        }
    }
    throw std::logic_error("mentor pair missing from correction table");
}

const StateVector &tau() {
    static const StateVector t = channels::combined_tau();
    return t;
}

std::vector<size_t> positions(std::initializer_list<const char *> labels) {
    std::vector<std::string> names(labels.begin(), labels.end());
    return protocol_ordering().positions(names);
}

// Deterministic uniform double in [0, 1) from the top 53 bits.
double next_unit(std::mt19937_64 &rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

size_t pick(std::span<const double> weights, double u) {
    double total = 0;
    for (double w : weights) {
        total += w;
    }
    double acc = 0;
    for (size_t i = 0; i < weights.size(); i++) {
        acc += weights[i];
        if (u * total < acc) {
            return i;
        }
    }
    return weights.size() - 1;
}

double reduced_fidelity(const StateVector &two_qubit, size_t which, const StateVector &target) {
    DensityMatrix rho = DensityMatrix::from_pure(two_qubit);
    return fidelity(target, partial_trace(rho, {which}));
}

}  // namespace

// ---------------------------------------------------------------------------
// Inputs and selectors

ProtocolInputs::ProtocolInputs(Complex x, Complex y, double a, double b) : x_(x), y_(y), a_(a), b_(b) {
    if (std::abs(std::norm(x) + std::norm(y) - 1) > 1e-12) {
        throw std::invalid_argument("teleported amplitudes are not normalized: |x|^2+|y|^2 != 1");
    }
    if (!(a >= 0 && b >= 0) || std::abs(a * a + b * b - 1) > 1e-12) {
        throw std::invalid_argument("prepared amplitudes must be real, non-negative and normalized: a^2+b^2 != 1");
    }
}

ProtocolInputs ProtocolInputs::from_weights(double b2, double y2, double y_phase) {
    if (!(b2 >= 0 && b2 <= 1 && y2 >= 0 && y2 <= 1)) {
        throw std::invalid_argument("b^2 and |y|^2 must lie in [0, 1]");
    }
    return ProtocolInputs(std::sqrt(1 - y2), std::polar(std::sqrt(y2), y_phase), std::sqrt(1 - b2), std::sqrt(b2));
}

StateVector ProtocolInputs::teleport_state() const {
    return StateVector{x_, y_};
}

StateVector ProtocolInputs::rsp_state() const {
    return StateVector{a_, b_};
}

size_t BranchSelector::index() const {
    return static_cast<size_t>((((mentor_i.value() * 4 + mentor_j.value()) * 4 + alice_k.value()) * 2 + bob_l) * 2 + controller_m);
}

BranchSelector BranchSelector::from_index(size_t index) {
    if (index >= kBranchCount) {
        throw std::out_of_range("branch index out of range");
    }
    int v = static_cast<int>(index);
    BranchSelector s;
    s.controller_m = v & 1;
    s.bob_l = (v >> 1) & 1;
    s.alice_k = BellIndex((v >> 2) & 3);
    s.mentor_j = BellIndex((v >> 4) & 3);
    s.mentor_i = BellIndex((v >> 6) & 3);
    return s;
}

std::string BranchSelector::str() const {
    return "mentor=(Phi" + std::to_string(mentor_i.value()) + ",Phi" + std::to_string(mentor_j.value()) + ") alice=Phi" +
           std::to_string(alice_k.value()) + " bob=xi" + std::to_string(bob_l) + " controller=" + (controller_m ? "-" : "+");
}

std::vector<BranchSelector> all_selectors() {
    std::vector<BranchSelector> out;
    out.reserve(kBranchCount);
    for (size_t i = 0; i < kBranchCount; i++) {
        out.push_back(BranchSelector::from_index(i));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Corrections

const CorrectionTable &CorrectionTable::standard() {
    static const CorrectionTable table = [] {
        CorrectionTable t;
        t.entries_.reserve(kBranchCount);
        for (const auto &sel : all_selectors()) {
            int i = sel.mentor_i.value();
            int j = sel.mentor_j.value();
            const char *bob = group_for(kBobTable, i, j).ops[static_cast<size_t>(2 * sel.alice_k.value() + sel.controller_m)];
            const char *alice = group_for(kAliceTable, i, j).ops[static_cast<size_t>(2 * sel.bob_l + sel.controller_m)];
            t.entries_.push_back({sel, PauliString::parse(bob), PauliString::parse(alice)});
        }
        return t;
    }();
    return table;
}

CorrectionTable CorrectionTable::with_entry(const BranchSelector &sel, PauliString bob_op, PauliString alice_op) const {
    CorrectionTable copy = *this;
    copy.entries_[sel.index()] = {sel, std::move(bob_op), std::move(alice_op)};
    return copy;
}

PauliString bob_correction(const BranchSelector &sel) {
    return CorrectionTable::standard().entry(sel).bob_op;
}

PauliString alice_correction(const BranchSelector &sel) {
    return CorrectionTable::standard().entry(sel).alice_op;
}

// ---------------------------------------------------------------------------
// Branch execution

const QubitOrdering &protocol_ordering() {
    static const QubitOrdering o({"A0", "m1", "m3", "m2", "m4", "A1", "A2", "B1", "B2", "C"});
    return o;
}

StateVector initial_state(const ProtocolInputs &in) {
    return tensor(in.teleport_state(), tau());
}

std::vector<MeasurementStage> measurement_stages(const ProtocolInputs &in, const BranchSelector &sel) {
    auto [xi0, xi1] = xi_states(in.xi_basis());
    auto [plus, minus] = x_states();
    return {
        {"Mentor (m1,m3)", positions({"m1", "m3"}), bell_state(sel.mentor_i)},
        {"Mentor (m2,m4)", positions({"m2", "m4"}), bell_state(sel.mentor_j)},
        {"Alice", positions({"A0", "A1"}), bell_state(sel.alice_k)},
        {"Bob", positions({"B2"}), sel.bob_l ? xi1 : xi0},
        {"Controller", positions({"C"}), sel.controller_m ? minus : plus},
    };
}

std::pair<StateVector, StateVector> split_product(const StateVector &two_qubit) {
    if (two_qubit.num_qubits() != 2) {
        throw std::invalid_argument("split_product expects a two-qubit state");
    }
    size_t best = 0;
    for (size_t i = 1; i < 4; i++) {
        if (std::abs(two_qubit[i]) > std::abs(two_qubit[best])) {
            best = i;
        }
    }
    size_t r = best >> 1;
    size_t c = best & 1;
    StateVector first{two_qubit[c], two_qubit[2 + c]};
    StateVector second{two_qubit[2 * r], two_qubit[2 * r + 1]};
    return {first.normalized(), second.normalized()};
}

BranchResult run_branch(const ProtocolInputs &in, const BranchSelector &sel, const CorrectionTable &table) {
    // Each stage conditions away the measured qubits; the remaining register
    // keeps its relative order, so targets are re-derived by label.
    std::vector<std::string> remaining = protocol_ordering().labels();
    StateVector state = initial_state(in);
    for (const auto &stage : measurement_stages(in, sel)) {
        std::vector<std::string> measured;
        for (size_t p : stage.targets) {
            measured.push_back(protocol_ordering().labels()[p]);
        }
        std::vector<size_t> local = QubitOrdering(remaining).positions(measured);
        state = conditional_state(state, stage.outcome, local);
        if (state.norm_squared() < kZeroProbability) {
            throw ZeroProbabilityError(std::string(stage.party) + " projection has zero probability on branch " + sel.str());
        }
        std::erase_if(remaining, [&](const std::string &l) {
            return std::find(measured.begin(), measured.end(), l) != measured.end();
        });
    }
    // remaining == {A2, B1}
    BranchResult out;
    out.selector = sel;
    out.probability = state.norm_squared();
    out.defined = true;
    StateVector post = state.normalized();
    std::tie(out.a2_before, out.b1_before) = split_product(post);

    const CorrectionEntry &fix = table.entry(sel);
    post = apply_unitary(post, fix.alice_op.gate(), {0});
    post = apply_unitary(post, fix.bob_op.gate(), {1});
    std::tie(out.a2_state, out.b1_state) = split_product(post);
    out.fidelity_rsp = reduced_fidelity(post, 0, in.rsp_state());
    out.fidelity_tp = reduced_fidelity(post, 1, in.teleport_state());
    return out;
}

std::vector<BranchResult> enumerate_branches(const ProtocolInputs &in, const CorrectionTable &table, size_t threads) {
    std::vector<BranchResult> out(kBranchCount);
    parallel_for(kBranchCount, threads, [&](size_t i) {
        BranchSelector sel = BranchSelector::from_index(i);
        try {
            out[i] = run_branch(in, sel, table);
        } catch (const ZeroProbabilityError &) {
            BranchResult r;
            r.selector = sel;
            r.fidelity_rsp = std::numeric_limits<double>::quiet_NaN();
            r.fidelity_tp = std::numeric_limits<double>::quiet_NaN();
            out[i] = std::move(r);
        }
    });
    return out;
}

std::pair<BranchSelector, BranchResult> sample_run(const ProtocolInputs &in, uint64_t seed) {
    std::mt19937_64 rng(seed);
    StateVector state = initial_state(in);
    std::vector<std::string> remaining = protocol_ordering().labels();

    // Outcome alphabet per stage, in protocol order.
    auto [xi0, xi1] = xi_states(in.xi_basis());
    auto [plus, minus] = x_states();
    std::array<StateVector, 4> bell = bell_basis();
    struct Stage {
        std::vector<std::string> labels;
        std::vector<StateVector> outcomes;
    };
    std::vector<Stage> stages = {
        {{"m1", "m3"}, {bell.begin(), bell.end()}},
        {{"m2", "m4"}, {bell.begin(), bell.end()}},
        {{"A0", "A1"}, {bell.begin(), bell.end()}},
        {{"B2"}, {xi0, xi1}},
        {{"C"}, {plus, minus}},
    };
    std::array<int, 5> chosen{};
    for (size_t s = 0; s < stages.size(); s++) {
        std::vector<size_t> local = QubitOrdering(remaining).positions(stages[s].labels);
        std::vector<StateVector> branches;
        std::vector<double> weights;
        for (const auto &o : stages[s].outcomes) {
            branches.push_back(conditional_state(state, o, local));
            weights.push_back(branches.back().norm_squared());
        }
        size_t k = pick(weights, next_unit(rng));
        chosen[s] = static_cast<int>(k);
        state = branches[k];
        std::erase_if(remaining, [&](const std::string &l) {
            return std::find(stages[s].labels.begin(), stages[s].labels.end(), l) != stages[s].labels.end();
        });
    }
    BranchSelector sel;
    sel.mentor_i = BellIndex(chosen[0]);
    sel.mentor_j = BellIndex(chosen[1]);
    sel.alice_k = BellIndex(chosen[2]);
    sel.bob_l = chosen[3];
    sel.controller_m = chosen[4];
    return {sel, run_branch(in, sel)};
}

DensityMatrix run_without_controller(const ProtocolInputs &in, BellIndex mentor_i, BellIndex mentor_j, BellIndex alice_k, int bob_l) {
    BranchSelector sel;
    sel.mentor_i = mentor_i;
    sel.mentor_j = mentor_j;
    sel.alice_k = alice_k;
    sel.bob_l = bob_l;
    std::vector<MeasurementStage> stages = measurement_stages(in, sel);
    stages.pop_back();  // Controller withheld

    StateVector joint = stages[0].outcome;
    std::vector<size_t> targets = stages[0].targets;
    for (size_t s = 1; s < stages.size(); s++) {
        joint = tensor(joint, stages[s].outcome);
        targets.insert(targets.end(), stages[s].targets.begin(), stages[s].targets.end());
    }
    // Remaining register: A2 B1 C.
    StateVector rest = conditional_state(initial_state(in), joint, targets).normalized();
    return partial_trace(DensityMatrix::from_pure(rest), {0, 1});
}

// ---------------------------------------------------------------------------
// GHZ-class payloads

StateVector compress_payload(const StateVector &s) {
    size_t n = s.num_qubits();
    if (n == 0) {
        throw std::invalid_argument("payload needs at least one qubit");
    }
    double stray = s.norm_squared() - std::norm(s[0]) - std::norm(s[s.dim() - 1]);
    if (n > 1 && stray > 1e-12) {
        throw std::invalid_argument("payload is not of the form a|0..0> + b|1..1>");
    }
    StateVector out = s;
    for (size_t q = 1; q < n; q++) {
        out = apply_unitary(out, cnot(), {0, q});
    }
    return out;
}

StateVector expand_payload(const StateVector &q, size_t count) {
    if (count < 1) {
        throw std::invalid_argument("expanded payload needs at least one qubit");
    }
    if (q.num_qubits() != 1) {
        throw std::invalid_argument("expand_payload takes a single qubit");
    }
    StateVector out = q;
    if (count > 1) {
        out = tensor(q, StateVector::basis(count - 1, 0));
    }
    for (size_t t = 1; t < count; t++) {
        out = apply_unitary(out, cnot(), {0, t});
    }
    return out;
}

GeneralizedResult run_generalized(const StateVector &payload, const StateVector &target, const BranchSelector &sel) {
    StateVector p = compress_payload(payload);
    StateVector t = compress_payload(target);
    size_t p_one = size_t{1} << (p.num_qubits() - 1);
    size_t t_one = size_t{1} << (t.num_qubits() - 1);
    Complex x = p[0];
    Complex y = p[p_one];
    Complex a = t[0];
    Complex b = t[t_one];
    // Strip the common phase of the target; a relative phase cannot be
    // expressed in the real xi basis.
    if (std::abs(a) > 1e-12 && std::abs(b) > 1e-12 && std::abs(std::arg(b / a)) > 1e-9) {
        throw std::invalid_argument("prepared target must have real, non-negative relative amplitudes");
    }
    ProtocolInputs in(x, y, std::abs(a), std::abs(b));
    BranchResult r = run_branch(in, sel);
    GeneralizedResult out{
        expand_payload(r.b1_state, payload.num_qubits()),
        expand_payload(r.a2_state, target.num_qubits()),
        0,
        0,
    };
    out.fidelity_tp = fidelity(payload, out.bob_state);
    out.fidelity_rsp = fidelity(target, out.alice_state);
    return out;
}

}  // namespace hqc::protocol
