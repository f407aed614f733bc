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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fracmap/complex_point.hpp"

namespace fracmap {

/// One of the 2m elements of the dihedral group D_m acting on the plane:
/// the rotation R_k by 2*pi*k/m, or the reflection S_k = R_k * S_0 where
/// S_0 is conjugation (x, y) -> (x, -y).
struct GroupElement {
    int m = 1;             // group order parameter, D_m has 2m elements
    int k = 0;             // rotation index in [0, m)
    bool reflect = false;  // true: S_k, false: R_k

    friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

inline GroupElement rotation(int m, int k) { return {m, k, false}; }
inline GroupElement reflection(int m, int k) { return {m, k, true}; }

/// Applies g to z through the 2x2 matrix form with cos/sin of 2*pi*k/m,
/// so the rounding error does not grow with k.
ComplexPoint apply(const GroupElement& g, ComplexPoint z);

/// The 2m elements of D_m: rotations R_0..R_{m-1} first, then S_0..S_{m-1}.
/// Throws std::invalid_argument for m < 1.
std::vector<GroupElement> elements(int m);

/// "R0", "R1", ..., "S0", ...
std::string name(const GroupElement& g);

/// Parses "Rk" / "Sk" with 0 <= k < m; empty optional on malformed input.
std::optional<GroupElement> parse_element(std::string_view text, int m);

}  // namespace fracmap
