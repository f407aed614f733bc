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

#include "fracmap/orbit.hpp"

#include <cstdio>
#include <ostream>

namespace fracmap {

void write_orbit_csv(const Orbit& orbit, std::ostream& out) {
    char buf[96];
    if (orbit.q) {
        std::snprintf(buf, sizeof(buf), "# q = %.12g\n", *orbit.q);
        out << buf;
    }
    out << "n,x,y\n";
    for (std::size_t n = 0; n < orbit.points.size(); ++n) {
        std::snprintf(buf, sizeof(buf), "%zu,%.15g,%.15g\n", n, orbit.points[n].x,
                      orbit.points[n].y);
        out << buf;
    }
}

}  // namespace fracmap
