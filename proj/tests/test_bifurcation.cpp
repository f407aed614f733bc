// Copyright 2026 The fracmap Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <cmath>
#include <sstream>

#include "common.hpp"
#include "fracmap/bifurcation.hpp"
#include "fracmap/thresholds.hpp"

using namespace fracmap;
using namespace fracmap::testing;

namespace {

ScanConfig contraction_scan() {
    ScanConfig cfg;
    cfg.spec = {MapKind::Dihedral, 2, 0.5, 0.0, 0.0, 0.0, 0.0, 0};
    cfg.axis = ScanAxis::ParamA;
    cfg.axis_min = -0.9;
    cfg.axis_max = 0.9;
    cfg.axis_steps = 11;
    cfg.initial_conditions = {{1.0, 0.0}, {0.3, -0.7}, {-0.2, 0.4}};
    cfg.steps = 300;
    cfg.discard = 250;
    cfg.keep = 50;
    cfg.seed = 1;
    return cfg;
}

bool sets_equal(const std::vector<BifurcativeSet>& a, const std::vector<BifurcativeSet>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].axis_values != b[i].axis_values) return false;
        if (a[i].samples != b[i].samples) return false;
        if (a[i].diverged != b[i].diverged) return false;
    }
    return true;
}

}  // namespace

TEST_SUITE("bifurcation-engine") {

TEST_CASE("a global contraction collapses every branch to the origin") {
    auto sets = run_scan(contraction_scan());
    REQUIRE(sets.size() == 3);
    for (const auto& s : sets) {
        REQUIRE(s.axis_values.size() == 11);
        for (std::size_t i = 0; i < s.axis_values.size(); ++i) {
            CHECK(!s.diverged[i]);
            REQUIRE(s.samples[i].size() == 50);
            for (const double x : s.samples[i]) CHECK(std::abs(x) < 1e-6);
        }
    }

    // same collapse along an x0 scan with randomized y0
    ScanConfig cfg = contraction_scan();
    cfg.axis = ScanAxis::InitX0;
    cfg.axis_min = -1.0;
    cfg.axis_max = 1.0;
    cfg.initial_conditions = {{0.0, 0.0}};
    cfg.randomize_y0 = true;
    for (const auto& s : run_scan(cfg))
        for (const auto& cell : s.samples)
            for (const double x : cell) CHECK(std::abs(x) < 1e-6);
}

TEST_CASE("scans are deterministic and thread-count independent") {
    // coupled dynamics, so the randomized y0 leaves a trace in x
    ScanConfig cfg;
    cfg.spec = dihedral3();
    cfg.axis = ScanAxis::InitX0;
    cfg.axis_min = -0.3;
    cfg.axis_max = 0.3;
    cfg.axis_steps = 9;
    cfg.initial_conditions = {{0.0, 0.0}};
    cfg.randomize_y0 = true;
    cfg.steps = 120;
    cfg.discard = 100;
    cfg.keep = 20;
    cfg.seed = 12345;
    const auto once = run_scan(cfg, 1);
    const auto again = run_scan(cfg, 1);
    const auto parallel = run_scan(cfg, 4);
    CHECK(sets_equal(once, again));
    CHECK(sets_equal(once, parallel));

    cfg.seed = 54321;
    CHECK(!sets_equal(once, run_scan(cfg, 1)));
}

TEST_CASE("invalid configurations are rejected before any computation") {
    ScanConfig cfg = contraction_scan();
    cfg.axis_min = cfg.axis_max;
    CHECK_THROWS_AS(run_scan(cfg), std::invalid_argument);

    cfg = contraction_scan();
    cfg.axis_steps = 1;
    CHECK_THROWS_AS(run_scan(cfg), std::invalid_argument);

    cfg = contraction_scan();
    cfg.discard = cfg.steps;
    CHECK_THROWS_AS(run_scan(cfg), std::invalid_argument);

    cfg = contraction_scan();
    cfg.randomize_y0 = true;  // only valid on x0 scans
    CHECK_THROWS_AS(run_scan(cfg), std::invalid_argument);

    cfg = contraction_scan();
    cfg.initial_conditions.clear();
    CHECK_THROWS_AS(run_scan(cfg), std::invalid_argument);

    cfg = contraction_scan();
    cfg.axis = ScanAxis::OrderQ;
    cfg.axis_min = 0.0;  // order grid must stay inside (0,1)
    cfg.axis_max = 0.9;
    CHECK_THROWS_AS(run_scan(cfg), std::invalid_argument);

    cfg = contraction_scan();
    cfg.axis = ScanAxis::OrderQ;
    cfg.axis_min = 0.1;
    cfg.axis_max = 0.9;
    cfg.q_fixed = 0.5;  // conflicts with the axis
    CHECK_THROWS_AS(run_scan(cfg), std::invalid_argument);

    cfg = contraction_scan();
    cfg.q_fixed = 1.5;
    CHECK_THROWS_AS(run_scan(cfg), std::invalid_argument);
}

TEST_CASE("diverging cells are recorded, not fatal") {
    ScanConfig cfg;
    cfg.spec = dihedral3();
    cfg.axis = ScanAxis::InitX0;
    cfg.axis_min = 40.0;
    cfg.axis_max = 60.0;
    cfg.axis_steps = 3;
    cfg.initial_conditions = {{0.0, 0.0}};
    cfg.steps = 200;
    cfg.discard = 100;
    const auto sets = run_scan(cfg);
    for (std::size_t i = 0; i < sets[0].axis_values.size(); ++i) {
        CHECK(sets[0].diverged[i]);
        CHECK(sets[0].samples[i].empty());
    }
}

TEST_CASE("poincare section picks the nearest grid slice") {
    const auto sets = run_scan(contraction_scan());
    const auto slices = poincare_section(sets, -0.05);  // grid step 0.18, nearest 0.0
    REQUIRE(slices.size() == 3);
    const std::size_t idx = 5;  // grid value 0.0
    CHECK(std::abs(sets[0].axis_values[idx] - (0.0)) < 1e-12);
    for (const auto& [ic, xs] : slices) CHECK(xs == sets[ic].samples[idx]);
    CHECK_THROWS_AS(poincare_section(sets, -2.0), std::invalid_argument);
    CHECK_THROWS_AS(poincare_section(sets, 1.0), std::invalid_argument);
}

TEST_CASE("distinctness matrix is symmetric, zero on the diagonal pairings") {
    const auto sets = run_scan(contraction_scan());
    const auto matrix = distinctness(sets, 0.0);
    REQUIRE(matrix.size() == 3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) CHECK(matrix[i][j] == matrix[j][i]);
    // all branches collapsed onto the origin, so every distance is ~0
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i + 1; j < 3; ++j) CHECK(matrix[i][j] < 1e-6);
}

TEST_CASE("slice metric hand values") {
    CHECK(slice_distance({0.0, 1.0}, {0.5}) == doctest::Approx(0.5));
    CHECK(slice_distance({1.0, 2.0}, {1.0, 2.0}) == 0.0);
    CHECK(std::isnan(slice_distance({}, {1.0})));
    CHECK(slice_spread({0.0, 1.0, 2.0}) == doctest::Approx(1.0));
    CHECK(slice_spread({5.0}) == 0.0);
    CHECK(slice_spread({1.0, 1.0, 1.0}) == 0.0);
    CHECK(slices_distinct({0.0, 0.1, 0.2}, {10.0, 10.1, 10.2}));
    CHECK(!slices_distinct({0.0, 0.1, 0.2}, {0.05, 0.15, 0.25}));
}

TEST_CASE("cluster grouping joins copies and separates far slices") {
    const std::vector<std::vector<double>> slices = {
        {0.0, 0.1, 0.2, 0.3}, {0.01, 0.11, 0.21, 0.31}, {10.0, 10.1, 10.2, 10.3}, {}};
    const auto groups = cluster_slices(slices);
    CHECK(groups[0] == 0);
    CHECK(groups[1] == 0);
    CHECK(groups[2] == 1);
    CHECK(groups[3] == -1);
}

TEST_CASE("five-branch parameter scan collapses to two distinct branches") {
    ScanConfig cfg;
    cfg.spec = dihedral3();
    cfg.axis = ScanAxis::ParamA;
    cfg.axis_min = -2.0;
    cfg.axis_max = -0.5;
    cfg.axis_steps = 301;
    cfg.initial_conditions = scan_ics_io();
    cfg.steps = 20200;
    cfg.discard = 20000;
    cfg.keep = 200;
    const auto sets = run_scan(cfg);

    const auto slices = poincare_section(sets, -1.755);
    std::vector<std::vector<double>> xs;
    for (const auto& [ic, s] : slices) {
        REQUIRE(!s.empty());
        xs.push_back(s);
    }
    const auto groups = cluster_slices(xs, thresholds::kSliceClusterFactor);
    int n_groups = 0;
    for (const int g : groups) n_groups = std::max(n_groups, g + 1);
    CHECK(n_groups == 2);

    // two of the five branches coincide to well below the sampling scale,
    // while the two leading branches stay far apart
    CHECK(!slices_distinct(xs[1], xs[2]));
    CHECK(slice_distance(xs[1], xs[2]) < 5e-5);
    CHECK(slice_distance(xs[0], xs[4]) > 0.1);
}

TEST_CASE("fractional x0 cells differ cell to cell, unlike the integer case") {
    ScanConfig cfg;
    cfg.spec = dihedral3();
    cfg.spec.a = -1.755;
    cfg.axis = ScanAxis::InitX0;
    cfg.axis_min = -1.5;
    cfg.axis_max = 1.5;
    cfg.axis_steps = 21;
    cfg.initial_conditions = {{0.0, 0.1}};
    cfg.q_fixed = 0.057;
    cfg.steps = 1500;
    cfg.discard = 500;
    cfg.keep = 200;
    const auto sets = run_scan(cfg);
    int distinct_pairs = 0;
    int usable_pairs = 0;
    for (std::size_t i = 0; i + 1 < sets[0].axis_values.size(); ++i) {
        if (sets[0].diverged[i] || sets[0].diverged[i + 1]) continue;
        ++usable_pairs;
        if (slices_distinct(sets[0].samples[i], sets[0].samples[i + 1])) ++distinct_pairs;
    }
    REQUIRE(usable_pairs > 10);
    CHECK(distinct_pairs == usable_pairs);
}

TEST_CASE("scan CSV layout") {
    BifurcativeSet set;
    set.ic_index = 2;
    set.axis_values = {0.25, 0.5};
    set.samples = {{1.0, -1.5}, {}};
    set.diverged = {false, true};
    std::ostringstream out;
    write_scan_csv(set, out);
    CHECK(out.str() == "axis_value,ic_index,x\n0.25,2,1\n0.25,2,-1.5\n");
}

}  // TEST_SUITE
