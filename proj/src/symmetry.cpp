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

#include "fracmap/symmetry.hpp"

#include <cstdio>
#include <limits>
#include <ostream>
#include <random>
#include <stdexcept>

#include "fracmap/caputo.hpp"
#include "fracmap/point_grid.hpp"

namespace fracmap {

namespace {

double unit_double(std::mt19937_64& rng) {
    // 53 random bits -> [0, 1); avoids distribution-implementation drift.
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

ComplexPoint sample_disk(std::mt19937_64& rng, double radius) {
    for (;;) {
        const double x = (2.0 * unit_double(rng) - 1.0) * radius;
        const double y = (2.0 * unit_double(rng) - 1.0) * radius;
        if (x * x + y * y <= radius * radius) return {x, y};
    }
}

std::span<const ComplexPoint> post_transient(const Orbit& orbit, std::size_t discard) {
    if (orbit.points.size() <= discard + 100)
        throw std::invalid_argument("orbit too short for the requested transient discard");
    if (orbit.diverged_at && *orbit.diverged_at <= discard)
        throw std::invalid_argument("orbit diverged inside the transient");
    const std::size_t end =
        orbit.diverged_at ? *orbit.diverged_at : orbit.points.size();
    return std::span<const ComplexPoint>(orbit.points).subspan(discard, end - discard);
}

}  // namespace

EquivarianceReport check_equivariance(const MapSpec& spec, const GroupElement& g,
                                      std::size_t samples, double radius,
                                      std::uint64_t seed) {
    validate(spec);
    if (samples < 1) throw std::invalid_argument("samples must be >= 1");
    std::mt19937_64 rng(seed);
    double worst = 0.0;
    for (std::size_t i = 0; i < samples; ++i) {
        const ComplexPoint z = sample_disk(rng, radius);
        const ComplexPoint lhs = eval(spec, apply(g, z));
        const ComplexPoint rhs = apply(g, eval(spec, z));
        worst = std::max(worst, distance(lhs, rhs));
    }
    return {g, worst, samples};
}

OrbitSymmetryReport orbit_symmetry_defect(const Orbit& orbit, const GroupElement& g,
                                          std::size_t discard) {
    const auto cloud = post_transient(orbit, discard);
    const PointGrid grid(cloud);
    double sum = 0.0;
    for (const auto& p : cloud) sum += grid.nearest_distance(apply(g, p));
    return {g, sum / static_cast<double>(cloud.size()), cloud.size()};
}

bool point_membership_test(const Orbit& orbit, ComplexPoint p, std::size_t discard,
                           double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be > 0");
    const auto cloud = post_transient(orbit, discard);
    const PointGrid grid(cloud);
    return grid.nearest_distance(p) <= tol;
}

std::vector<double> fo_equivariance_defects(const MapSpec& spec, const GroupElement& g,
                                            ComplexPoint z0, double q, std::size_t steps) {
    // Escape disabled: the comparison is between the two formula sides,
    // not a long-run attractor.
    const Orbit base = iterate_fo(spec, z0, q, steps,
                                  std::numeric_limits<double>::infinity());
    const CaputoWeights cw = caputo_weights(q, steps);

    std::vector<double> gfx(steps);
    std::vector<double> gfy(steps);
    for (std::size_t k = 1; k <= steps; ++k) {
        const ComplexPoint f = eval(spec, apply(g, base.points[k - 1]));
        gfx[k - 1] = f.x;
        gfy[k - 1] = f.y;
    }

    std::vector<double> defects(steps);
    for (std::size_t n = 1; n <= steps; ++n) {
        double sx = 0.0;
        double sy = 0.0;
        for (std::size_t k = 1; k <= n; ++k) {
            const double w = cw.w[n - k];
            sx += w * gfx[k - 1];
            sy += w * gfy[k - 1];
        }
        const ComplexPoint left{z0.x + sx, z0.y + sy};
        const ComplexPoint right = apply(g, base.points[n]);
        defects[n - 1] = distance(left, right);
    }
    return defects;
}

void write_report_csv(std::span<const EquivarianceReport> reports, std::ostream& out) {
    out << "element,kind,defect,samples\n";
    char buf[96];
    for (const auto& r : reports) {
        std::snprintf(buf, sizeof(buf), "%s,equivariance,%.15g,%zu\n",
                      name(r.element).c_str(), r.max_defect, r.sample_count);
        out << buf;
    }
}

void write_report_csv(std::span<const OrbitSymmetryReport> reports, std::ostream& out) {
    out << "element,kind,defect,samples\n";
    char buf[96];
    for (const auto& r : reports) {
        std::snprintf(buf, sizeof(buf), "%s,orbit,%.15g,%zu\n", name(r.element).c_str(),
                      r.defect, r.points_used);
        out << buf;
    }
}

}  // namespace fracmap
