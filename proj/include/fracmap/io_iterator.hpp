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

#include "fracmap/orbit.hpp"

namespace fracmap {

/// Integer-order iteration z(n) = f(z(n-1)), n = 1..steps. Stops early
/// when |z| exceeds escape_radius or z turns non-finite; divergence is
/// recorded on the orbit, not an error.
Orbit iterate_io(const MapSpec& spec, ComplexPoint z0, std::size_t steps,
                 double escape_radius = kDefaultEscapeRadius);

}  // namespace fracmap
