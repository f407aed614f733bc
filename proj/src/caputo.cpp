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

#include "fracmap/caputo.hpp"

#include <stdexcept>

namespace fracmap {

CaputoWeights caputo_weights(double q, std::size_t n) {
    if (!(q > 0.0 && q < 1.0))
        throw std::invalid_argument("fractional order q must lie in (0, 1)");
    if (n < 1) throw std::invalid_argument("weight count must be >= 1");

    CaputoWeights cw;
    cw.q = q;
    cw.w.resize(n);
    cw.w[0] = 1.0;
    for (std::size_t j = 1; j < n; ++j)
        cw.w[j] = cw.w[j - 1] * ((static_cast<double>(j) - 1.0 + q) / static_cast<double>(j));
    return cw;
}

Orbit iterate_fo(const MapSpec& spec, ComplexPoint z0, double q, std::size_t steps,
                 double escape_radius, std::size_t memory) {
    validate(spec);
    if (steps < 1) throw std::invalid_argument("steps must be >= 1");
    if (!(escape_radius > 0.0)) throw std::invalid_argument("escape_radius must be > 0");
    const CaputoWeights cw = caputo_weights(q, steps);

    Orbit orbit;
    orbit.map = spec;
    orbit.q = q;
    orbit.points.reserve(steps + 1);
    orbit.points.push_back(z0);

    // F(k) = f(z(k-1)), stored per component at index k-1.
    std::vector<double> fx;
    std::vector<double> fy;
    fx.reserve(steps);
    fy.reserve(steps);

    const double r2 = escape_radius * escape_radius;
    for (std::size_t n = 1; n <= steps; ++n) {
        const ComplexPoint f = eval(spec, orbit.points.back());
        fx.push_back(f.x);
        fy.push_back(f.y);

        const std::size_t k0 = (memory > 0 && n > memory) ? n - memory + 1 : 1;
        double sx = 0.0;
        double sy = 0.0;
        for (std::size_t k = k0; k <= n; ++k) {
            const double w = cw.w[n - k];
            sx += w * fx[k - 1];
            sy += w * fy[k - 1];
        }
        const ComplexPoint z{z0.x + sx, z0.y + sy};
        orbit.points.push_back(z);
        if (!is_finite(z) || squared_modulus(z) > r2) {
            orbit.diverged_at = n;
            break;
        }
    }
    return orbit;
}

std::vector<double> iterate_fo_real(const std::function<double(double)>& f, double u0,
                                    double q, std::size_t steps) {
    if (steps < 1) throw std::invalid_argument("steps must be >= 1");
    const CaputoWeights cw = caputo_weights(q, steps);

    std::vector<double> u;
    u.reserve(steps + 1);
    u.push_back(u0);

    std::vector<double> fu;
    fu.reserve(steps);
    for (std::size_t n = 1; n <= steps; ++n) {
        fu.push_back(f(u.back()));
        double s = 0.0;
        for (std::size_t k = 1; k <= n; ++k) s += cw.w[n - k] * fu[k - 1];
        u.push_back(u0 + s);
    }
    return u;
}

}  // namespace fracmap
