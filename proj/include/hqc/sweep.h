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

#ifndef HQC_SWEEP_H
#define HQC_SWEEP_H

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "hqc/noise.h"

namespace hqc::noise {

/// One evaluated grid point.
struct FidelityRecord {
    NoiseKind kind;
    double strength;
    double b2;
    double y2;
    double numeric_f;      // uniform 256-branch mean
    double closed_form_f;  // closed-form polynomial
    double deviation;      // |numeric_f - closed_form_f|
    double weighted_f;     // probability-weighted mean, for comparison
};

struct SweepGrid {
    NoiseKind kind;
    std::vector<double> strengths;
    std::vector<double> b2_values;
    std::vector<double> y2_values;

    /// Throws std::invalid_argument if any list is empty or has values outside [0, 1].
    void validate() const;
    size_t size() const { return strengths.size() * b2_values.size() * y2_values.size(); }
};

/// Parses "start:stop:count" (inclusive of both endpoints) or a single value.
std::vector<double> parse_grid(const std::string &spec);
/// `count` evenly spaced values from start to stop inclusive.
std::vector<double> linspace(double start, double stop, size_t count);

/// Evaluates every grid point. Rows are ordered by (strength, b2, y2) in grid
/// order regardless of `threads` (0 = hardware concurrency).
std::vector<FidelityRecord> sweep(const SweepGrid &grid, double y_phase = 0.0, size_t threads = 0);

struct SweepSummary {
    size_t rows = 0;
    double max_deviation = 0;
    double max_weighted_gap = 0;  // max |weighted_f - numeric_f|
    double min_numeric_f = 1;
    double max_numeric_f = 0;
};

std::map<NoiseKind, SweepSummary> summarize(const std::vector<FidelityRecord> &records);

/// Header "kind,strength,b2,y2,numeric_f,closed_form_f,deviation", values at
/// 12 significant digits, '.' decimal point, LF line endings. With
/// `with_weighted` a trailing weighted_f column is added.
void write_csv(std::ostream &out, const std::vector<FidelityRecord> &records, bool with_weighted = false);
/// Reads what write_csv produced (either column layout). Throws std::runtime_error on malformed input.
std::vector<FidelityRecord> read_csv(std::istream &in);

/// Formats a value the way the CSV does.
std::string format_value(double v);

}  // namespace hqc::noise

#endif
