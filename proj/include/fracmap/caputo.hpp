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

#include <functional>

#include "fracmap/orbit.hpp"

namespace fracmap {

/// Memory weights of the fractional-difference solution formula,
/// w[j] = Gamma(j + q) / (Gamma(q) * Gamma(j + 1)).
///
/// Computed by the multiplicative recurrence w[0] = 1,
/// w[j] = w[j-1] * (j - 1 + q) / j, which never evaluates Gamma at large
/// arguments (direct Gamma evaluation overflows near j = 170 in double
/// precision). For q in (0,1) the weights are positive and strictly
/// decreasing from w[1] = q on.
struct CaputoWeights {
    double q = 0.0;
    std::vector<double> w;
};

/// Weights w[0..n-1]. Throws std::invalid_argument unless 0 < q < 1 and
/// n >= 1 (only orders in (0,1) are in scope).
CaputoWeights caputo_weights(double q, std::size_t n);

/// Fractional-order orbit
///   z(n) = z(0) + sum_{k=1..n} w[n-k] * f(z(k-1)),
/// implemented by caching F(k) = f(z(k-1)) so each step costs one O(n)
/// dot product (O(N^2) total time, O(N) space). Early stop on escape.
///
/// memory = 0 keeps the full history (the default; the solution formula
/// is exact). memory = M > 0 truncates each sum to its last M terms, an
/// opt-in speed/accuracy trade.
Orbit iterate_fo(const MapSpec& spec, ComplexPoint z0, double q, std::size_t steps,
                 double escape_radius = kDefaultEscapeRadius, std::size_t memory = 0);

/// The same summation on a scalar state, for real-axis reference runs:
///   u(n) = u(0) + sum_{k=1..n} w[n-k] * f(u(k-1)).
std::vector<double> iterate_fo_real(const std::function<double(double)>& f, double u0,
                                    double q, std::size_t steps);

}  // namespace fracmap
