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

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <utility>
#include <vector>

#include "fracmap/orbit.hpp"

namespace fracmap {

enum class ScanAxis { ParamA, OrderQ, InitX0 };

/// One bifurcation-diagram sweep: a grid of scan-axis values crossed with
/// a list of initial conditions. For ParamA/InitX0 the cells run
/// integer-order unless q_fixed selects the fractional solver; OrderQ
/// cells always run fractionally with q equal to the axis value.
struct ScanConfig {
    MapSpec spec;
    ScanAxis axis = ScanAxis::ParamA;
    double axis_min = 0.0;
    double axis_max = 1.0;
    std::size_t axis_steps = 2;
    std::vector<ComplexPoint> initial_conditions;
    std::optional<double> q_fixed;
    std::size_t steps = 2200;
    std::size_t discard = 2000;
    std::size_t keep = 200;  // plotted samples per cell (the last `keep`)
    bool randomize_y0 = false;  // InitX0 scans only: fresh y0 every cell
    double y0_min = -1.0;
    double y0_max = 1.0;
    double escape_radius = kDefaultEscapeRadius;
    std::uint64_t seed = 0;
};

/// The bifurcation-diagram branch of a single initial condition:
/// per grid value, the kept post-transient x samples, or a divergence
/// mark and no samples.
struct BifurcativeSet {
    std::size_t ic_index = 0;
    std::vector<double> axis_values;
    std::vector<std::vector<double>> samples;  // aligned with axis_values
    std::vector<bool> diverged;                // aligned with axis_values
};

/// Runs every (axis value, initial condition) cell, in parallel across
/// `threads` workers (0 = hardware concurrency). Results are placed by
/// cell index, so the output is identical for any thread count, and the
/// per-cell RNG is derived from (seed, cell), so it is reproducible.
/// Throws std::invalid_argument on an invalid config, before computing.
std::vector<BifurcativeSet> run_scan(const ScanConfig& cfg, unsigned threads = 0);

/// The nearest-grid-point slice through every set at the given axis
/// value. Throws std::invalid_argument outside the scanned range.
std::vector<std::pair<std::size_t, std::vector<double>>> poincare_section(
    const std::vector<BifurcativeSet>& sets, double axis_value);

/// Pairwise symmetric mean nearest-neighbor distances between the slices
/// at axis_value. Entries involving an empty (diverged) slice are NaN.
std::vector<std::vector<double>> distinctness(const std::vector<BifurcativeSet>& sets,
                                              double axis_value);

/// Symmetric mean nearest-neighbor distance between two sample multisets.
double slice_distance(const std::vector<double>& a, const std::vector<double>& b);

/// Mean nearest-neighbor gap inside one slice: the sampling resolution
/// against which slice separations are judged.
double slice_spread(const std::vector<double>& xs);

/// True when the two slices are separated by more than their own
/// sampling resolution: distance > factor * max(spread_a, spread_b).
bool slices_distinct(const std::vector<double>& a, const std::vector<double>& b,
                     double factor = 1.0);

/// Single-linkage grouping of slices under the complement of
/// slices_distinct; returns one group id per slice (empty slices get -1).
std::vector<int> cluster_slices(const std::vector<std::vector<double>>& slices,
                                double factor = 1.0);

/// CSV rows "axis_value,ic_index,x", one per kept sample.
void write_scan_csv(const BifurcativeSet& set, std::ostream& out);

}  // namespace fracmap
