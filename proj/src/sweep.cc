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

#include "hqc/sweep.h"

#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>

#include "hqc/parallel.h"

namespace hqc::noise {

namespace {

double parse_number(const std::string &text) {
    double v = 0;
    const char *begin = text.data();
    const char *end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(begin, end, v);
    if (ec != std::errc() || ptr != end) {
        throw std::invalid_argument("not a number: '" + text + "'");
    }
    return v;
}

std::vector<std::string> split(const std::string &s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) {
        out.push_back(cur);
    }
    if (!s.empty() && s.back() == sep) {
        out.emplace_back();
    }
    return out;
}

void check_values(const std::vector<double> &values, const char *what) {
    if (values.empty()) {
        throw std::invalid_argument(std::string(what) + " grid is empty");
    }
    for (double v : values) {
        if (!(v >= 0 && v <= 1)) {
            throw std::invalid_argument(std::string(what) + " value " + format_value(v) + " is outside [0, 1]");
        }
    }
}

const char *kHeader = "kind,strength,b2,y2,numeric_f,closed_form_f,deviation";

}  // namespace

void SweepGrid::validate() const {
    check_values(strengths, "strength");
    check_values(b2_values, "b2");
    check_values(y2_values, "y2");
}

std::vector<double> linspace(double start, double stop, size_t count) {
    if (count == 0) {
        throw std::invalid_argument("grid count must be at least 1");
    }
    if (count == 1) {
        return {start};
    }
    std::vector<double> out(count);
    for (size_t i = 0; i < count; i++) {
        out[i] = start + (stop - start) * static_cast<double>(i) / static_cast<double>(count - 1);
    }
    out.back() = stop;
    return out;
}

std::vector<double> parse_grid(const std::string &spec) {
    std::vector<std::string> parts = split(spec, ':');
    if (parts.size() == 1) {
        return {parse_number(parts[0])};
    }
    if (parts.size() != 3) {
        throw std::invalid_argument("grid must be 'value' or 'start:stop:count', got '" + spec + "'");
    }
    double start = parse_number(parts[0]);
    double stop = parse_number(parts[1]);
    double count = parse_number(parts[2]);
    if (count < 1 || count != std::floor(count)) {
        throw std::invalid_argument("grid count must be a positive integer, got '" + parts[2] + "'");
    }
    if (count == 1 && start != stop) {
        throw std::invalid_argument("a single-point grid needs start == stop");
    }
    return linspace(start, stop, static_cast<size_t>(count));
}

std::vector<FidelityRecord> sweep(const SweepGrid &grid, double y_phase, size_t threads) {
    grid.validate();
    size_t per_strength = grid.b2_values.size() * grid.y2_values.size();
    std::vector<FidelityRecord> out(grid.size());
    // The noisy resource depends only on the strength; each task owns one.
    parallel_for(grid.strengths.size(), threads, [&](size_t si) {
        double p = grid.strengths[si];
        BranchEvaluator eval(noisy_channel(grid.kind, NoiseStrength(p)));
        size_t slot = si * per_strength;
        for (double b2 : grid.b2_values) {
            for (double y2 : grid.y2_values) {
                FidelityAverages avg = eval.evaluate(protocol::ProtocolInputs::from_weights(b2, y2, y_phase));
                double cf = closed_form(grid.kind, p, b2, y2);
                out[slot++] = {grid.kind, p, b2, y2, avg.uniform, cf, std::abs(avg.uniform - cf), avg.weighted};
            }
        }
    });
    return out;
}

std::map<NoiseKind, SweepSummary> summarize(const std::vector<FidelityRecord> &records) {
    std::map<NoiseKind, SweepSummary> out;
    for (const auto &r : records) {
        SweepSummary &s = out[r.kind];
        s.rows++;
        s.max_deviation = std::max(s.max_deviation, r.deviation);
        s.max_weighted_gap = std::max(s.max_weighted_gap, std::abs(r.weighted_f - r.numeric_f));
        s.min_numeric_f = std::min(s.min_numeric_f, r.numeric_f);
        s.max_numeric_f = std::max(s.max_numeric_f, r.numeric_f);
    }
    return out;
}

std::string format_value(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 12);
    if (ec != std::errc()) {
        throw std::runtime_error("failed to format value");
    }
    return std::string(buf, ptr);
}

void write_csv(std::ostream &out, const std::vector<FidelityRecord> &records, bool with_weighted) {
    out << kHeader << (with_weighted ? ",weighted_f" : "") << '\n';
    for (const auto &r : records) {
        out << to_string(r.kind) << ',' << format_value(r.strength) << ',' << format_value(r.b2) << ','
            << format_value(r.y2) << ',' << format_value(r.numeric_f) << ',' << format_value(r.closed_form_f) << ','
            << format_value(r.deviation);
        if (with_weighted) {
            out << ',' << format_value(r.weighted_f);
        }
        out << '\n';
    }
}

std::vector<FidelityRecord> read_csv(std::istream &in) {
    std::string line;
    if (!std::getline(in, line)) {
        throw std::runtime_error("empty CSV");
    }
    bool with_weighted = line == std::string(kHeader) + ",weighted_f";
    if (!with_weighted && line != kHeader) {
        throw std::runtime_error("unexpected CSV header: " + line);
    }
    size_t columns = with_weighted ? 8 : 7;
    std::vector<FidelityRecord> out;
    size_t line_no = 1;
    while (std::getline(in, line)) {
        line_no++;
        if (line.empty()) {
            continue;
        }
        std::vector<std::string> f = split(line, ',');
        if (f.size() != columns) {
            throw std::runtime_error("CSV line " + std::to_string(line_no) + " has " + std::to_string(f.size()) + " fields");
        }
        try {
            FidelityRecord r{parse_noise_kind(f[0]), parse_number(f[1]), parse_number(f[2]), parse_number(f[3]),
                parse_number(f[4]), parse_number(f[5]), parse_number(f[6]), 0.0};
            r.weighted_f = with_weighted ? parse_number(f[7]) : r.numeric_f;
            out.push_back(r);
        } catch (const std::invalid_argument &e) {
            throw std::runtime_error("CSV line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    return out;
}

}  // namespace hqc::noise
