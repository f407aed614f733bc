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

#include "fracmap/group.hpp"

#include <cassert>
#include <charconv>
#include <stdexcept>

namespace fracmap {

ComplexPoint apply(const GroupElement& g, ComplexPoint z) {
    assert(g.m >= 1 && g.k >= 0 && g.k < g.m);
    // Reflection first (S_k = R_k * S_0), then the rotation matrix.
    const double y0 = g.reflect ? -z.y : z.y;
    if (g.k == 0) return {z.x, y0};
    const double ang = 2.0 * std::numbers::pi * static_cast<double>(g.k) / g.m;
    const double c = std::cos(ang);
    const double s = std::sin(ang);
    return {c * z.x - s * y0, s * z.x + c * y0};
}

std::vector<GroupElement> elements(int m) {
    if (m < 1) throw std::invalid_argument("dihedral group requires m >= 1");
    std::vector<GroupElement> out;
    out.reserve(2 * static_cast<std::size_t>(m));
    for (int k = 0; k < m; ++k) out.push_back(rotation(m, k));
    for (int k = 0; k < m; ++k) out.push_back(reflection(m, k));
    return out;
}

std::string name(const GroupElement& g) {
    return (g.reflect ? "S" : "R") + std::to_string(g.k);
}

std::optional<GroupElement> parse_element(std::string_view text, int m) {
    if (m < 1 || text.size() < 2) return std::nullopt;
    bool reflect = false;
    if (text[0] == 'S' || text[0] == 's')
        reflect = true;
    else if (text[0] != 'R' && text[0] != 'r')
        return std::nullopt;
    int k = -1;
    auto [ptr, ec] = std::from_chars(text.data() + 1, text.data() + text.size(), k);
    if (ec != std::errc{} || ptr != text.data() + text.size()) return std::nullopt;
    if (k < 0 || k >= m) return std::nullopt;
    return GroupElement{m, k, reflect};
}

}  // namespace fracmap
