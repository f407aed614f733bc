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
#include <span>

#include "fracmap/group.hpp"
#include "fracmap/orbit.hpp"

namespace fracmap {

/// Pointwise equivariance of the map itself:
/// max over sampled z of |f(g(z)) - g(f(z))|.
struct EquivarianceReport {
    GroupElement element;
    double max_defect = 0.0;
    std::size_t sample_count = 0;
};

/// Symmetry of a computed attractor cloud: one-sided mean
/// nearest-neighbor distance from the transformed post-transient cloud
/// to the original one.
struct OrbitSymmetryReport {
    GroupElement element;
    double defect = 0.0;
    std::size_t points_used = 0;
};

/// Samples `samples` seeded uniform points in the disk |z| <= radius and
/// measures the worst pointwise equivariance defect of the map under g.
EquivarianceReport check_equivariance(const MapSpec& spec, const GroupElement& g,
                                      std::size_t samples, double radius,
                                      std::uint64_t seed);

/// Transforms every post-transient orbit point by g and averages the
/// distance to the nearest original post-transient point (spatial grid
/// index, near-linear cost). Throws std::invalid_argument when the orbit
/// has fewer than discard + 100 points or diverged inside the transient.
OrbitSymmetryReport orbit_symmetry_defect(const Orbit& orbit, const GroupElement& g,
                                          std::size_t discard);

/// True iff some post-transient orbit point lies within tol of p.
bool point_membership_test(const Orbit& orbit, ComplexPoint p, std::size_t discard,
                           double tol);

/// Termwise comparison of the two sides of solution-formula equivariance
/// for the fractional-order orbit z(n) = z(0) + F_n:
///   left:  z(0) + F_n evaluated on the transformed history g(z(0..n-1))
///   right: g(z(n))
/// Both sides share F_n's memory weights; when the map is equivariant the
/// difference reduces to z(0) - g(z(0)), so the defect vanishes exactly
/// when g fixes the initial condition and stays bounded away from zero
/// otherwise. Returns |left - right| for n = 1..steps.
std::vector<double> fo_equivariance_defects(const MapSpec& spec, const GroupElement& g,
                                            ComplexPoint z0, double q, std::size_t steps);

/// CSV rows "element,kind,defect,samples" where kind names the check.
void write_report_csv(std::span<const EquivarianceReport> reports, std::ostream& out);
void write_report_csv(std::span<const OrbitSymmetryReport> reports, std::ostream& out);

}  // namespace fracmap
