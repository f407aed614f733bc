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

#include <cmath>
#include <complex>
#include <numbers>

namespace fracmap {

/// A point z = x + iy of the complex plane.
struct ComplexPoint {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const ComplexPoint&, const ComplexPoint&) = default;
};

/// Polar form (r, theta) with r >= 0 and theta in (-pi, pi].
struct PolarForm {
    double r = 0.0;
    double theta = 0.0;
};

inline std::complex<double> to_complex(ComplexPoint p) { return {p.x, p.y}; }

inline ComplexPoint to_point(std::complex<double> z) { return {z.real(), z.imag()}; }

inline bool is_finite(ComplexPoint p) { return std::isfinite(p.x) && std::isfinite(p.y); }

inline double modulus(ComplexPoint p) { return std::hypot(p.x, p.y); }

inline double squared_modulus(ComplexPoint p) { return p.x * p.x + p.y * p.y; }

inline double distance(ComplexPoint a, ComplexPoint b) {
    return std::hypot(a.x - b.x, a.y - b.y);
}

/// atan2-based polar decomposition; (0,0) maps to (0,0), theta in (-pi, pi].
inline PolarForm to_polar(ComplexPoint p) {
    double theta = std::atan2(p.y, p.x);
    if (theta == -std::numbers::pi) theta = std::numbers::pi;
    return {std::hypot(p.x, p.y), theta};
}

inline ComplexPoint from_polar(double r, double theta) {
    return {r * std::cos(theta), r * std::sin(theta)};
}

}  // namespace fracmap
