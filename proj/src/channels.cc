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

#include "hqc/channels.h"

#include <array>
#include <cmath>

namespace hqc::channels {

namespace {

struct Term {
    int sign;
    const char *bits;
};

StateVector from_terms(size_t n, std::span<const Term> terms, double scale) {
    std::vector<Complex> amps(size_t{1} << n, 0.0);
    for (const auto &t : terms) {
        amps[std::stoul(t.bits, nullptr, 2)] += scale * t.sign;
    }
    return StateVector(std::move(amps));
}

// Rows indexed by 4*i + j; kets over A1 A2 B1 B2 C.
const std::array<std::array<Term, 4>, 16> kMStates = {{
    {{{+1, "00000"}, {+1, "01011"}, {+1, "10101"}, {+1, "11110"}}},
    {{{+1, "00000"}, {-1, "01011"}, {+1, "10101"}, {-1, "11110"}}},
    {{{+1, "00011"}, {+1, "01000"}, {-1, "10110"}, {-1, "11101"}}},
    {{{+1, "00011"}, {-1, "01000"}, {-1, "10110"}, {+1, "11101"}}},
    {{{+1, "00000"}, {+1, "01011"}, {-1, "10101"}, {-1, "11110"}}},
    {{{+1, "00000"}, {-1, "01011"}, {-1, "10101"}, {+1, "11110"}}},
    {{{+1, "00011"}, {+1, "01000"}, {+1, "10110"}, {+1, "11101"}}},
    {{{+1, "00011"}, {-1, "01000"}, {+1, "10110"}, {-1, "11101"}}},
    {{{+1, "00101"}, {-1, "01110"}, {+1, "10000"}, {-1, "11011"}}},
    {{{+1, "00101"}, {+1, "01110"}, {+1, "10000"}, {+1, "11011"}}},
    {{{-1, "00110"}, {+1, "01101"}, {+1, "10011"}, {-1, "11000"}}},
    {{{-1, "00110"}, {-1, "01101"}, {+1, "10011"}, {+1, "11000"}}},
    {{{+1, "00101"}, {-1, "01110"}, {-1, "10000"}, {+1, "11011"}}},
    {{{+1, "00101"}, {+1, "01110"}, {-1, "10000"}, {-1, "11011"}}},
    {{{-1, "00110"}, {+1, "01101"}, {-1, "10011"}, {+1, "11000"}}},
    {{{-1, "00110"}, {-1, "01101"}, {-1, "10011"}, {-1, "11000"}}},
}};

// H on the two leading qubits, CNOT fan-out, then CZ between the leaders.
StateVector run_prep(size_t n, const std::vector<std::pair<size_t, size_t>> &fanout, PrepStage stage) {
    StateVector s = StateVector::basis(n, 0);
    if (stage == PrepStage::Initial) {
        return s;
    }
    s = apply_unitary(s, hadamard(), {0});
    s = apply_unitary(s, hadamard(), {1});
    if (stage == PrepStage::Hadamards) {
        return s;
    }
    for (const auto &[control, target] : fanout) {
        s = apply_unitary(s, cnot(), {control, target});
    }
    if (stage == PrepStage::Cnots) {
        return s;
    }
    return apply_unitary(s, cz(), {0, 1});
}

}  // namespace

const QubitOrdering &xi1_ordering() {
    static const QubitOrdering o({"m1", "m2", "A1", "A2"});
    return o;
}

const QubitOrdering &xi2_ordering() {
    static const QubitOrdering o({"m3", "m4", "B1", "B2", "C"});
    return o;
}

const QubitOrdering &tau_ordering() {
    static const QubitOrdering o({"m1", "m3", "m2", "m4", "A1", "A2", "B1", "B2", "C"});
    return o;
}

const QubitOrdering &m_ordering() {
    static const QubitOrdering o({"A1", "A2", "B1", "B2", "C"});
    return o;
}

StateVector prepare_xi1(PrepStage stage) {
    return run_prep(4, {{0, 2}, {1, 3}}, stage);
}

StateVector prepare_xi2(PrepStage stage) {
    return run_prep(5, {{0, 2}, {0, 4}, {1, 3}, {1, 4}}, stage);
}

StateVector analytic_xi1() {
    static const Term terms[] = {{+1, "0000"}, {+1, "0101"}, {+1, "1010"}, {-1, "1111"}};
    return from_terms(4, terms, 0.5);
}

StateVector analytic_xi2() {
    static const Term terms[] = {{+1, "00000"}, {+1, "01011"}, {+1, "10101"}, {-1, "11110"}};
    return from_terms(5, terms, 0.5);
}

ChannelPair prepare_channels() {
    return {prepare_xi1(), prepare_xi2()};
}

StateVector combined_tau() {
    std::vector<std::string> labels = xi1_ordering().labels();
    for (const auto &l : xi2_ordering().labels()) {
        labels.push_back(l);
    }
    QubitOrdering natural(std::move(labels));
    ChannelPair pair = prepare_channels();
    return permute_qubits(tensor(pair.xi1, pair.xi2), natural.permutation_to(tau_ordering()));
}

StateVector m_state(BellIndex i, BellIndex j) {
    return from_terms(5, kMStates[static_cast<size_t>(4 * i.value() + j.value())], 0.5);
}

StateVector m_state_by_projection(BellIndex i, BellIndex j) {
    const QubitOrdering &order = tau_ordering();
    std::vector<size_t> mentor = order.positions({"m1", "m3", "m2", "m4"});
    StateVector outcome = tensor(bell_state(i), bell_state(j));
    return conditional_state(combined_tau(), outcome, mentor).normalized();
}

std::vector<std::pair<std::string, Complex>> nonzero_terms(const StateVector &s, double tol) {
    std::vector<std::pair<std::string, Complex>> out;
    size_t n = s.num_qubits();
    for (size_t i = 0; i < s.dim(); i++) {
        if (std::abs(s[i]) > tol) {
            std::string bits(n, '0');
            for (size_t q = 0; q < n; q++) {
                if (i & (size_t{1} << (n - 1 - q))) {
                    bits[q] = '1';
                }
            }
            out.emplace_back(std::move(bits), s[i]);
        }
    }
    return out;
}

}  // namespace hqc::channels
