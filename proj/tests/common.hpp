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

#include <random>
#include <vector>

#include "fracmap/map_spec.hpp"

namespace fracmap::testing {

// Reference parameter sets used across the suites (the m = 3 dihedral,
// m = 4 cyclic and m = 6 Re-coupled benchmark maps).
inline MapSpec dihedral3() { return {MapKind::Dihedral, 3, -1.804, 1.0, 0.0, 0.5, 0.0, 0}; }
inline MapSpec cyclic4() { return {MapKind::Cyclic, 4, -1.86, 2.1, 0.1, -1.0, 0.0, 0}; }
inline MapSpec dihedral_re6() {
    return {MapKind::DihedralRe, 6, -2.584, 5.0, 0.0, -1.0, -2.0, 6};
}

// Benchmark initial conditions for integer-order scans ...
inline std::vector<ComplexPoint> scan_ics_io() {
    return {{0.05, 0.1}, {0.01, 0.01}, {0.001, 0.9667}, {-0.477, 0.4965}, {0.5, 0.0001}};
}
// ... and for fractional-order scans.
inline std::vector<ComplexPoint> scan_ics_fo() {
    return {{0.001, 0.9667}, {-0.477, -0.4965}, {0.5, 0.0001}, {-0.1, -0.1}, {0.00001, 0.1}};
}

// 53-bit uniform double in [0, 1); stable across library implementations.
inline double unit_double(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
    return lo + (hi - lo) * unit_double(rng);
}

inline ComplexPoint sample_disk(std::mt19937_64& rng, double radius) {
    for (;;) {
        const double x = uniform(rng, -radius, radius);
        const double y = uniform(rng, -radius, radius);
        if (x * x + y * y <= radius * radius) return {x, y};
    }
}

}  // namespace fracmap::testing
