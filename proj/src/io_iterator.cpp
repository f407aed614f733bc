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

#include "fracmap/io_iterator.hpp"

#include <stdexcept>

namespace fracmap {

Orbit iterate_io(const MapSpec& spec, ComplexPoint z0, std::size_t steps,
                 double escape_radius) {
    validate(spec);
    if (steps < 1) throw std::invalid_argument("steps must be >= 1");
    if (!(escape_radius > 0.0)) throw std::invalid_argument("escape_radius must be > 0");

    Orbit orbit;
    orbit.map = spec;
    orbit.points.reserve(steps + 1);
    orbit.points.push_back(z0);

    const double r2 = escape_radius * escape_radius;
    for (std::size_t n = 1; n <= steps; ++n) {
        const ComplexPoint z = eval(spec, orbit.points.back());
        orbit.points.push_back(z);
        if (!is_finite(z) || squared_modulus(z) > r2) {
            orbit.diverged_at = n;
            break;
        }
    }
    return orbit;
}

}  // namespace fracmap
