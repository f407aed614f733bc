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

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>

#include "common.hpp"
#include "fracmap/caputo.hpp"
#include "fracmap/io_iterator.hpp"
#include "fracmap/spectral.hpp"

using namespace fracmap;
using namespace fracmap::testing;

namespace {

constexpr double kTau = 2.0 * std::numbers::pi;

std::vector<double> two_tone(std::size_t n) {
    std::vector<double> x(n);
    for (std::size_t i = 0; i < n; ++i)
        x[i] = std::cos(kTau * static_cast<double>(i) * 0.11) +
               0.5 * std::cos(kTau * static_cast<double>(i) * 0.31);
    return x;
}

Orbit synthetic_orbit(const std::vector<double>& xs) {
    Orbit o;
    o.map = dihedral3();
    for (const double x : xs) o.points.push_back({x, 0.0});
    return o;
}

double median_power(const Spectrum& s) {
    std::vector<double> p = s.power;
    std::nth_element(p.begin(), p.begin() + p.size() / 2, p.end());
    return p[p.size() / 2];
}

}  // namespace

TEST_SUITE("spectral-classify") {

TEST_CASE("pure tone produces one dominant bin 40 dB above the floor") {
    std::vector<double> x(1024);
    for (std::size_t n = 0; n < x.size(); ++n)
        x[n] = std::cos(kTau * static_cast<double>(n) / 16.0);
    const Spectrum s = psd(x, Window::None);
    const auto it = std::max_element(s.power.begin(), s.power.end());
    const auto k = static_cast<std::size_t>(it - s.power.begin());
    CHECK(std::abs(s.freqs[k] - (1.0 / 16.0)) < 1e-12);
    CHECK(*it / median_power(s) > 1e4);  // >= 40 dB
}

TEST_CASE("two tones land within one bin of their true frequencies") {
    const Spectrum s = psd(two_tone(4096), Window::Hann);
    std::vector<std::pair<double, double>> peaks;  // (power, freq)
    for (std::size_t k = 1; k + 1 < s.power.size(); ++k)
        if (s.power[k] >= s.power[k - 1] && s.power[k] > s.power[k + 1])
            peaks.emplace_back(s.power[k], s.freqs[k]);
    std::sort(peaks.rbegin(), peaks.rend());
    REQUIRE(peaks.size() >= 2);
    const double bin = 1.0 / 4096.0;
    const double f1 = std::min(peaks[0].second, peaks[1].second);
    const double f2 = std::max(peaks[0].second, peaks[1].second);
    CHECK(std::abs(f1 - 0.11) <= bin);
    CHECK(std::abs(f2 - 0.31) <= bin);
}

TEST_CASE("bin powers sum to the windowed signal energy") {
    std::mt19937_64 rng(47);
    std::vector<double> x(3000);  // truncates to 2048
    for (auto& v : x) v = uniform(rng, -1.0, 1.0);
    const std::size_t n = 2048;
    for (const Window w : {Window::None, Window::Hann}) {
        const Spectrum s = psd(x, w);
        REQUIRE(s.freqs.size() == n / 2 + 1);
        double mean = 0.0;
        for (std::size_t i = 0; i < n; ++i) mean += x[i];
        mean /= static_cast<double>(n);
        double energy = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            double win = w == Window::Hann
                             ? 0.5 * (1.0 - std::cos(kTau * static_cast<double>(i) /
                                                     static_cast<double>(n)))
                             : 1.0;
            energy += (x[i] - mean) * win * (x[i] - mean) * win;
        }
        double sum = 0.0;
        for (const double p : s.power) sum += p;
        CHECK(std::abs(sum - energy) / energy < 1e-8);
    }
}

TEST_CASE("fft periodogram matches a direct DFT oracle") {
    std::mt19937_64 rng(53);
    std::vector<double> x(256);
    for (auto& v : x) v = uniform(rng, -1.0, 1.0);
    const Spectrum s = psd(x, Window::None);

    const std::size_t n = x.size();
    double mean = 0.0;
    for (const double v : x) mean += v;
    mean /= static_cast<double>(n);
    for (std::size_t k = 0; k <= n / 2; ++k) {
        std::complex<double> acc{0.0, 0.0};
        for (std::size_t i = 0; i < n; ++i) {
            const double ang = -kTau * static_cast<double>(k) * static_cast<double>(i) /
                               static_cast<double>(n);
            acc += (x[i] - mean) * std::complex<double>(std::cos(ang), std::sin(ang));
        }
        double expected = std::norm(acc) / static_cast<double>(n);
        if (k != 0 && k != n / 2) expected *= 2.0;
        CHECK(std::abs(s.power[k] - (expected)) < 1e-9);
    }
}

TEST_CASE("frequencies are an increasing grid in [0, 1/2]") {
    const Spectrum s = psd(two_tone(300), Window::Hann);  // truncates to 256
    REQUIRE(s.freqs.size() == 129);
    CHECK(s.freqs.front() == 0.0);
    CHECK(s.freqs.back() == 0.5);
    for (std::size_t k = 1; k < s.freqs.size(); ++k) {
        CHECK(s.freqs[k] > s.freqs[k - 1]);
        CHECK(s.power[k] >= 0.0);
    }
}

TEST_CASE("short inputs are rejected") {
    std::vector<double> x(63, 1.0);
    CHECK_THROWS_AS(psd(x, Window::Hann), std::invalid_argument);
    const Orbit o = iterate_io(dihedral3(), {0.05, 0.1}, 600);
    CHECK_THROWS_AS(classify(o, 200), std::invalid_argument);
}

TEST_CASE("constant orbits are periodic with period one") {
    const Orbit o = synthetic_orbit(std::vector<double>(700, 0.42));
    const auto label = classify(o, 100);
    CHECK(label.label == AttractorClass::PeriodicLike);
    REQUIRE(!label.dominant_freqs.empty());
    CHECK(label.dominant_freqs.front() == 1.0);
}

TEST_CASE("an exact short cycle is periodic-like") {
    std::vector<double> xs(1200);
    for (std::size_t i = 0; i < xs.size(); ++i)
        xs[i] = std::cos(kTau * static_cast<double>(i) / 16.0);
    const auto label = classify(synthetic_orbit(xs), 100);
    CHECK(label.label == AttractorClass::PeriodicLike);
    CHECK(label.dominant_freqs.front() == doctest::Approx(1.0 / 16.0));
}

TEST_CASE("incommensurate tones are quasiperiodic-like") {
    const auto label = classify(synthetic_orbit(two_tone(4696)), 600);
    CHECK(label.label == AttractorClass::QuasiperiodicLike);
    CHECK(label.peak_count == 2);
}

TEST_CASE("labels are stable under doubling the orbit length") {
    for (const std::size_t n : {4696u, 8792u}) {
        CHECK(classify(synthetic_orbit(two_tone(n)), 600).label ==
              AttractorClass::QuasiperiodicLike);
        std::vector<double> cyc(n);
        for (std::size_t i = 0; i < n; ++i)
            cyc[i] = std::cos(kTau * static_cast<double>(i) / 16.0);
        CHECK(classify(synthetic_orbit(cyc), 600).label == AttractorClass::PeriodicLike);
        CHECK(classify(synthetic_orbit(std::vector<double>(n, 1.0)), 600).label ==
              AttractorClass::PeriodicLike);
    }
}

TEST_CASE("diverged orbits pass through") {
    MapSpec s = dihedral3();
    s.a = 5.0;
    const Orbit o = iterate_io(s, {2.0, 0.0}, 2000);
    REQUIRE(o.diverged_at.has_value());
    CHECK(classify(o, 0).label == AttractorClass::Diverged);
}

TEST_CASE("benchmark attractors: quasiperiodic at -1.755, chaotic at -1.804") {
    MapSpec quasi = dihedral3();
    quasi.a = -1.755;
    const auto ql = classify(iterate_io(quasi, {0.05, 0.1}, 20000), 2000);
    CHECK(ql.label == AttractorClass::QuasiperiodicLike);
    CHECK(ql.dominant_freqs.size() >= 2);

    const auto cl = classify(iterate_io(dihedral3(), {0.05, 0.1}, 20000), 2000);
    CHECK(cl.label == AttractorClass::Chaotic);
}

TEST_CASE("fractional attractors at q = 0.057 split into regular and chaotic") {
    // the (-0.1,-0.1) cell is chaotic; the cycle-like (0.5,0.0001) and the
    // line-spectrum (0.00001,0.1) cells classify as regular
    const auto chaotic = classify(iterate_fo(dihedral3(), {-0.1, -0.1}, 0.057, 20000), 10000);
    CHECK(chaotic.label == AttractorClass::Chaotic);

    const auto cycle = classify(iterate_fo(dihedral3(), {0.5, 0.0001}, 0.057, 20000), 10000);
    const bool cycle_regular = cycle.label == AttractorClass::PeriodicLike ||
                               cycle.label == AttractorClass::QuasiperiodicLike;
    CHECK(cycle_regular);

    const auto lines = classify(iterate_fo(dihedral3(), {0.00001, 0.1}, 0.057, 20000), 10000);
    CHECK(lines.label == AttractorClass::QuasiperiodicLike);
}

TEST_CASE("spectrum CSV layout") {
    Spectrum s;
    s.freqs = {0.0, 0.25};
    s.power = {1.0, 0.5};
    std::ostringstream out;
    write_spectrum_csv(s, out);
    CHECK(out.str() == "freq,power\n0,1\n0.25,0.5\n");
}

}  // TEST_SUITE
