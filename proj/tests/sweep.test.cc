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

#include <gtest/gtest.h>

#include <sstream>

using namespace hqc::noise;

TEST(parse_grid, forms) {
    ASSERT_EQ(parse_grid("0.25"), std::vector<double>{0.25});
    std::vector<double> g = parse_grid("0:1:5");
    ASSERT_EQ(g.size(), 5u);
    ASSERT_EQ(g.front(), 0);
    ASSERT_EQ(g.back(), 1);
    ASSERT_NEAR(g[1], 0.25, 1e-15);
    ASSERT_EQ(parse_grid("0.3:0.3:1"), std::vector<double>{0.3});
}

TEST(parse_grid, errors) {
    ASSERT_THROW(parse_grid("0:1"), std::invalid_argument);
    ASSERT_THROW(parse_grid("0:1:0"), std::invalid_argument);
    ASSERT_THROW(parse_grid("0:1:2.5"), std::invalid_argument);
    ASSERT_THROW(parse_grid("0:1:1"), std::invalid_argument);
    ASSERT_THROW(parse_grid("abc"), std::invalid_argument);
}

TEST(linspace, endpoints_exact) {
    std::vector<double> v = linspace(0.1, 0.7, 7);
    ASSERT_EQ(v.front(), 0.1);
    ASSERT_EQ(v.back(), 0.7);
    ASSERT_EQ(linspace(0.4, 0.4, 1), std::vector<double>{0.4});
    ASSERT_THROW(linspace(0, 1, 0), std::invalid_argument);
}

TEST(sweep_grid, validation) {
    SweepGrid g{NoiseKind::BitFlip, {0.5}, {0.2}, {}};
    ASSERT_THROW(g.validate(), std::invalid_argument);
    g.y2_values = {1.2};
    ASSERT_THROW(g.validate(), std::invalid_argument);
    g.y2_values = {0.3};
    ASSERT_NO_THROW(g.validate());
    ASSERT_EQ(g.size(), 1u);
}

TEST(sweep, ordering_and_thread_independence) {
    SweepGrid g{NoiseKind::PhaseDamping, linspace(0, 1, 3), {0.2, 0.6}, {0.1, 0.9}};
    std::vector<FidelityRecord> one = sweep(g, 0, 1);
    std::vector<FidelityRecord> many = sweep(g, 0, 4);
    ASSERT_EQ(one.size(), 12u);
    size_t row = 0;
    for (double p : g.strengths) {
        for (double b2 : g.b2_values) {
            for (double y2 : g.y2_values) {
                ASSERT_EQ(one[row].strength, p);
                ASSERT_EQ(one[row].b2, b2);
                ASSERT_EQ(one[row].y2, y2);
                ASSERT_EQ(one[row].numeric_f, many[row].numeric_f);
                ASSERT_LT(one[row].deviation, 1e-10);
                row++;
            }
        }
    }
}

TEST(sweep, bit_flip_symmetric_over_strength) {
    SweepGrid g{NoiseKind::BitFlip, linspace(0, 1, 21), {0.35}, {0.15}};
    std::vector<FidelityRecord> r = sweep(g);
    for (size_t i = 0; i < r.size(); i++) {
        ASSERT_NEAR(r[i].numeric_f, r[r.size() - 1 - i].numeric_f, 1e-12) << i;
    }
    ASSERT_NEAR(r.front().numeric_f, 1, 1e-12);
}

TEST(sweep, phase_flip_best_without_noise) {
    SweepGrid g{NoiseKind::PhaseFlip, linspace(0, 1, 6), {0.3}, {0.6}};
    std::vector<FidelityRecord> r = sweep(g);
    for (const auto &rec : r) {
        ASSERT_LE(rec.numeric_f, r.front().numeric_f + 1e-12);
    }
}

TEST(summarize, per_kind) {
    std::vector<FidelityRecord> records = {
        {NoiseKind::BitFlip, 0, 0.1, 0.1, 1.0, 1.0, 0.0, 1.0},
        {NoiseKind::BitFlip, 1, 0.1, 0.1, 0.5, 0.5 + 1e-13, 1e-13, 0.7},
        {NoiseKind::Depolarizing, 1, 0.1, 0.1, 0.25, 0.25, 0.0, 0.25},
    };
    auto s = summarize(records);
    ASSERT_EQ(s.size(), 2u);
    ASSERT_EQ(s[NoiseKind::BitFlip].rows, 2u);
    ASSERT_EQ(s[NoiseKind::BitFlip].max_deviation, 1e-13);
    ASSERT_NEAR(s[NoiseKind::BitFlip].max_weighted_gap, 0.2, 1e-15);
    ASSERT_EQ(s[NoiseKind::BitFlip].min_numeric_f, 0.5);
    ASSERT_EQ(s[NoiseKind::Depolarizing].max_numeric_f, 0.25);
}

TEST(csv, header_and_format) {
    std::vector<FidelityRecord> records = {{NoiseKind::PhaseFlip, 0.5, 0.25, 1.0 / 3, 0.9, 0.9, 0, 0.95}};
    std::ostringstream plain, wide;
    write_csv(plain, records);
    write_csv(wide, records, true);
    ASSERT_EQ(plain.str(),
        "kind,strength,b2,y2,numeric_f,closed_form_f,deviation\n"
        "phaseflip,0.5,0.25,0.333333333333,0.9,0.9,0\n");
    ASSERT_EQ(wide.str().substr(0, wide.str().find('\n')), "kind,strength,b2,y2,numeric_f,closed_form_f,deviation,weighted_f");
    ASSERT_EQ(format_value(1.0 / 7), "0.142857142857");
    ASSERT_EQ(format_value(1e-15), "1e-15");
}

TEST(csv, round_trip_to_twelve_digits) {
    SweepGrid g{NoiseKind::Depolarizing, linspace(0, 1, 4), {0.3, 0.7}, {0.45}};
    std::vector<FidelityRecord> records = sweep(g);
    for (bool wide : {false, true}) {
        std::stringstream buf;
        write_csv(buf, records, wide);
        std::vector<FidelityRecord> back = read_csv(buf);
        ASSERT_EQ(back.size(), records.size());
        for (size_t i = 0; i < records.size(); i++) {
            ASSERT_EQ(back[i].kind, records[i].kind);
            ASSERT_NEAR(back[i].strength, records[i].strength, 1e-12);
            ASSERT_NEAR(back[i].numeric_f, records[i].numeric_f, 1e-12);
            ASSERT_NEAR(back[i].closed_form_f, records[i].closed_form_f, 1e-12);
            if (wide) {
                ASSERT_NEAR(back[i].weighted_f, records[i].weighted_f, 1e-12);
            }
        }
    }
}

TEST(csv, read_errors) {
    std::istringstream empty("");
    ASSERT_THROW(read_csv(empty), std::runtime_error);
    std::istringstream bad_header("a,b,c\n");
    ASSERT_THROW(read_csv(bad_header), std::runtime_error);
    std::istringstream short_row("kind,strength,b2,y2,numeric_f,closed_form_f,deviation\nbitflip,0.5\n");
    ASSERT_THROW(read_csv(short_row), std::runtime_error);
    std::istringstream bad_value("kind,strength,b2,y2,numeric_f,closed_form_f,deviation\nbitflip,x,0,0,1,1,0\n");
    ASSERT_THROW(read_csv(bad_value), std::runtime_error);
    std::istringstream bad_kind("kind,strength,b2,y2,numeric_f,closed_form_f,deviation\nwobble,0,0,0,1,1,0\n");
    ASSERT_THROW(read_csv(bad_kind), std::runtime_error);
}
