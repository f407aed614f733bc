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

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <vector>

#include "fracmap/complex_point.hpp"
#include "fracmap/map_spec.hpp"

namespace fracmap {

inline constexpr double kDefaultEscapeRadius = 1e6;

/// A finite trajectory z(0..N). points[0] is the initial condition.
/// q is empty for integer-order orbits. When the trajectory escapes the
/// radius (or turns non-finite), diverged_at is the index of the first
/// such point and iteration stops there; all earlier points are finite.
struct Orbit {
    std::vector<ComplexPoint> points;
    MapSpec map;
    std::optional<double> q;
    std::optional<std::size_t> diverged_at;
    std::size_t discard = 0;  // transient length used downstream
};

/// CSV export: header "n,x,y", one row per step. Fractional-order orbits
/// get a leading "# q = ..." comment line.
void write_orbit_csv(const Orbit& orbit, std::ostream& out);

}  // namespace fracmap
