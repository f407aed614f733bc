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

#include "fracmap/bifurcation.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "fracmap/caputo.hpp"
#include "fracmap/io_iterator.hpp"
#include "fracmap/thresholds.hpp"

namespace fracmap {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Stable per-cell seed independent of scheduling.
std::uint64_t cell_seed(std::uint64_t seed, std::size_t axis_idx, std::size_t ic_idx) {
    return splitmix64(splitmix64(seed ^ (0x51ed2701 + axis_idx)) + ic_idx);
}

void validate_config(const ScanConfig& cfg) {
    validate(cfg.spec);
    if (!(cfg.axis_min < cfg.axis_max))
        throw std::invalid_argument("scan requires axis_min < axis_max");
    if (cfg.axis_steps < 2) throw std::invalid_argument("scan requires axis_steps >= 2");
    if (cfg.initial_conditions.empty())
        throw std::invalid_argument("scan requires at least one initial condition");
    if (cfg.discard >= cfg.steps)
        throw std::invalid_argument("scan requires discard < steps");
    if (cfg.keep < 1) throw std::invalid_argument("scan requires keep >= 1");
    if (cfg.randomize_y0 && cfg.axis != ScanAxis::InitX0)
        throw std::invalid_argument("randomize_y0 is only valid for x0 scans");
    if (cfg.randomize_y0 && !(cfg.y0_min < cfg.y0_max))
        throw std::invalid_argument("randomize_y0 requires y0_min < y0_max");
    if (!(cfg.escape_radius > 0.0))
        throw std::invalid_argument("escape_radius must be > 0");
    if (cfg.axis == ScanAxis::OrderQ) {
        if (cfg.q_fixed)
            throw std::invalid_argument("q_fixed conflicts with an order-q scan axis");
        if (!(cfg.axis_min > 0.0 && cfg.axis_max < 1.0))
            throw std::invalid_argument("order-q scans must stay inside (0, 1)");
    } else if (cfg.q_fixed && !(*cfg.q_fixed > 0.0 && *cfg.q_fixed < 1.0)) {
        throw std::invalid_argument("q_fixed must lie in (0, 1)");
    }
}

struct CellResult {
    std::vector<double> samples;
    bool diverged = false;
};

CellResult run_cell(const ScanConfig& cfg, double axis_value, std::size_t axis_idx,
                    std::size_t ic_idx) {
    MapSpec spec = cfg.spec;
    ComplexPoint ic = cfg.initial_conditions[ic_idx];
    std::optional<double> q = cfg.q_fixed;

    switch (cfg.axis) {
        case ScanAxis::ParamA: spec.a = axis_value; break;
        case ScanAxis::OrderQ: q = axis_value; break;
        case ScanAxis::InitX0: ic.x = axis_value; break;
    }
    if (cfg.randomize_y0) {
        std::uint64_t s = cell_seed(cfg.seed, axis_idx, ic_idx);
        const double u = static_cast<double>(splitmix64(s) >> 11) * 0x1.0p-53;
        ic.y = cfg.y0_min + u * (cfg.y0_max - cfg.y0_min);
    }

    const Orbit orbit = q ? iterate_fo(spec, ic, *q, cfg.steps, cfg.escape_radius)
                          : iterate_io(spec, ic, cfg.steps, cfg.escape_radius);

    CellResult result;
    if (orbit.diverged_at) {
        result.diverged = true;
        return result;
    }
    const std::size_t first = cfg.discard;
    const std::size_t total = orbit.points.size() - first;
    const std::size_t start = first + (total > cfg.keep ? total - cfg.keep : 0);
    result.samples.reserve(orbit.points.size() - start);
    for (std::size_t i = start; i < orbit.points.size(); ++i)
        result.samples.push_back(orbit.points[i].x);
    return result;
}

std::size_t nearest_grid_index(const std::vector<double>& grid, double value) {
    if (grid.empty() || value < grid.front() - 1e-12 || value > grid.back() + 1e-12)
        throw std::invalid_argument("axis value outside the scanned range");
    const auto it = std::lower_bound(grid.begin(), grid.end(), value);
    if (it == grid.begin()) return 0;
    if (it == grid.end()) return grid.size() - 1;
    const auto hi = static_cast<std::size_t>(it - grid.begin());
    return (value - grid[hi - 1] <= grid[hi] - value) ? hi - 1 : hi;
}

}  // namespace

std::vector<BifurcativeSet> run_scan(const ScanConfig& cfg, unsigned threads) {
    validate_config(cfg);

    std::vector<double> grid(cfg.axis_steps);
    const double span = cfg.axis_max - cfg.axis_min;
    for (std::size_t i = 0; i < cfg.axis_steps; ++i)
        grid[i] = cfg.axis_min +
                  span * static_cast<double>(i) / static_cast<double>(cfg.axis_steps - 1);

    const std::size_t n_ic = cfg.initial_conditions.size();
    const std::size_t n_cells = cfg.axis_steps * n_ic;
    std::vector<CellResult> results(n_cells);

    unsigned workers = threads ? threads : std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, n_cells));

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            const std::size_t c = next.fetch_add(1);
            if (c >= n_cells) return;
            const std::size_t axis_idx = c / n_ic;
            const std::size_t ic_idx = c % n_ic;
            results[c] = run_cell(cfg, grid[axis_idx], axis_idx, ic_idx);
        }
    };
    if (workers <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned t = 0; t < workers; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    std::vector<BifurcativeSet> sets(n_ic);
    for (std::size_t j = 0; j < n_ic; ++j) {
        sets[j].ic_index = j;
        sets[j].axis_values = grid;
        sets[j].samples.resize(cfg.axis_steps);
        sets[j].diverged.assign(cfg.axis_steps, false);
        for (std::size_t i = 0; i < cfg.axis_steps; ++i) {
            auto& cell = results[i * n_ic + j];
            sets[j].samples[i] = std::move(cell.samples);
            sets[j].diverged[i] = cell.diverged;
        }
    }
    return sets;
}

std::vector<std::pair<std::size_t, std::vector<double>>> poincare_section(
    const std::vector<BifurcativeSet>& sets, double axis_value) {
    if (sets.empty()) throw std::invalid_argument("no bifurcative sets");
    const std::size_t idx = nearest_grid_index(sets.front().axis_values, axis_value);
    std::vector<std::pair<std::size_t, std::vector<double>>> out;
    out.reserve(sets.size());
    for (const auto& s : sets) out.emplace_back(s.ic_index, s.samples[idx]);
    return out;
}

double slice_distance(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.empty() || b.empty()) return std::numeric_limits<double>::quiet_NaN();
    auto one_sided = [](const std::vector<double>& from, std::vector<double> to) {
        std::sort(to.begin(), to.end());
        double sum = 0.0;
        for (const double x : from) {
            const auto it = std::lower_bound(to.begin(), to.end(), x);
            double best = std::numeric_limits<double>::max();
            if (it != to.end()) best = std::min(best, *it - x);
            if (it != to.begin()) best = std::min(best, x - *(it - 1));
            sum += best;
        }
        return sum / static_cast<double>(from.size());
    };
    return 0.5 * (one_sided(a, b) + one_sided(b, a));
}

double slice_spread(const std::vector<double>& xs) {
    if (xs.size() < 2) return 0.0;
    std::vector<double> sorted(xs);
    std::sort(sorted.begin(), sorted.end());
    double sum = 0.0;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        double best = std::numeric_limits<double>::max();
        if (i > 0) best = std::min(best, sorted[i] - sorted[i - 1]);
        if (i + 1 < sorted.size()) best = std::min(best, sorted[i + 1] - sorted[i]);
        sum += best;
    }
    return sum / static_cast<double>(sorted.size());
}

bool slices_distinct(const std::vector<double>& a, const std::vector<double>& b,
                     double factor) {
    const double d = slice_distance(a, b);
    if (std::isnan(d)) return false;
    const double scale =
        std::max({slice_spread(a), slice_spread(b), thresholds::kSliceSpreadFloor});
    return d > factor * scale;
}

std::vector<int> cluster_slices(const std::vector<std::vector<double>>& slices,
                                double factor) {
    const std::size_t n = slices.size();
    std::vector<int> group(n, -1);
    int next_group = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (slices[i].empty() || group[i] >= 0) continue;
        // Flood-fill the "same attractor" relation from slice i.
        group[i] = next_group;
        std::vector<std::size_t> frontier{i};
        while (!frontier.empty()) {
            const std::size_t u = frontier.back();
            frontier.pop_back();
            for (std::size_t v = 0; v < n; ++v) {
                if (slices[v].empty() || group[v] >= 0) continue;
                if (!slices_distinct(slices[u], slices[v], factor)) {
                    group[v] = next_group;
                    frontier.push_back(v);
                }
            }
        }
        ++next_group;
    }
    return group;
}

std::vector<std::vector<double>> distinctness(const std::vector<BifurcativeSet>& sets,
                                              double axis_value) {
    const auto slices = poincare_section(sets, axis_value);
    const std::size_t n = slices.size();
    std::vector<std::vector<double>> matrix(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            matrix[i][j] = matrix[j][i] = slice_distance(slices[i].second, slices[j].second);
    return matrix;
}

void write_scan_csv(const BifurcativeSet& set, std::ostream& out) {
    out << "axis_value,ic_index,x\n";
    char buf[96];
    for (std::size_t i = 0; i < set.axis_values.size(); ++i) {
        for (const double x : set.samples[i]) {
            std::snprintf(buf, sizeof(buf), "%.15g,%zu,%.15g\n", set.axis_values[i],
                          set.ic_index, x);
            out << buf;
        }
    }
}

}  // namespace fracmap
