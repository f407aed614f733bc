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

#include "fracmap/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <stdexcept>

#include "fracmap/thresholds.hpp"

namespace fracmap {

namespace {

// In-place iterative radix-2 Cooley-Tukey, n a power of two.
void fft(std::vector<std::complex<double>>& a) {
    const std::size_t n = a.size();
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = -2.0 * std::numbers::pi / static_cast<double>(len);
        const std::complex<double> wlen(std::cos(ang), std::sin(ang));
        for (std::size_t i = 0; i < n; i += len) {
            std::complex<double> w(1.0, 0.0);
            for (std::size_t k = 0; k < len / 2; ++k) {
                const std::complex<double> u = a[i + k];
                const std::complex<double> v = a[i + k + len / 2] * w;
                a[i + k] = u + v;
                a[i + k + len / 2] = u - v;
                w *= wlen;
            }
        }
    }
}

std::size_t floor_pow2(std::size_t n) {
    std::size_t p = 1;
    while (p * 2 <= n) p *= 2;
    return p;
}

double median(std::vector<double> v) {
    if (v.empty()) return 0.0;
    const std::size_t mid = v.size() / 2;
    std::nth_element(v.begin(), v.begin() + mid, v.end());
    return v[mid];
}

struct Peak {
    std::size_t bin;
    double freq;
    double power;
};

// Mean power over the ring of bins just outside the +-half_width window
// around `bin`.
double ring_level(const Spectrum& s, std::size_t bin, std::size_t half_width,
                  std::size_t ring) {
    double sum = 0.0;
    int count = 0;
    for (std::size_t off = half_width + 1; off <= half_width + ring; ++off) {
        if (bin >= off) {
            sum += s.power[bin - off];
            ++count;
        }
        if (bin + off < s.power.size()) {
            sum += s.power[bin + off];
            ++count;
        }
    }
    return count ? sum / count : 0.0;
}

// Sharp spectral lines: local maxima at least `floor_ratio` above the
// median floor and `ring_ratio` above their own ring level.
std::vector<Peak> find_sharp_peaks(const Spectrum& s, double floor_ratio,
                                   double ring_ratio) {
    const double min_power = median(s.power) * floor_ratio;
    const auto half_width = static_cast<std::size_t>(thresholds::kPeakHalfWidthBins);
    const auto ring = static_cast<std::size_t>(thresholds::kPeakRingBins);
    std::vector<Peak> peaks;
    for (std::size_t k = 1; k + 1 < s.power.size(); ++k) {
        if (s.power[k] <= min_power) continue;
        if (s.power[k] < s.power[k - 1] || s.power[k] <= s.power[k + 1]) continue;
        if (s.power[k] > ring_ratio * ring_level(s, k, half_width, ring))
            peaks.push_back({k, s.freqs[k], s.power[k]});
    }
    std::sort(peaks.begin(), peaks.end(),
              [](const Peak& a, const Peak& b) { return a.power > b.power; });
    return peaks;
}

// Fraction of the total power carried by the strongest `budget` peaks,
// each widened by half_width bins on both sides.
double peak_energy_fraction(const Spectrum& s, const std::vector<Peak>& peaks,
                            std::size_t budget, std::size_t half_width) {
    double total = 0.0;
    for (const double p : s.power) total += p;
    if (total <= 0.0) return 0.0;

    std::vector<bool> counted(s.power.size(), false);
    double in_peaks = 0.0;
    for (std::size_t i = 0; i < peaks.size() && i < budget; ++i) {
        const std::size_t lo = peaks[i].bin > half_width ? peaks[i].bin - half_width : 0;
        const std::size_t hi = std::min(peaks[i].bin + half_width, s.power.size() - 1);
        for (std::size_t k = lo; k <= hi; ++k) {
            if (counted[k]) continue;
            counted[k] = true;
            in_peaks += s.power[k];
        }
    }
    return in_peaks / total;
}

}  // namespace

Spectrum psd(std::span<const double> x, Window window) {
    if (x.size() < 64) throw std::invalid_argument("psd needs at least 64 samples");
    const std::size_t n = floor_pow2(x.size());

    double mean = 0.0;
    for (std::size_t i = 0; i < n; ++i) mean += x[i];
    mean /= static_cast<double>(n);

    std::vector<std::complex<double>> a(n);
    for (std::size_t i = 0; i < n; ++i) {
        double w = 1.0;
        if (window == Window::Hann)
            w = 0.5 * (1.0 - std::cos(2.0 * std::numbers::pi * static_cast<double>(i) /
                                      static_cast<double>(n)));
        a[i] = {(x[i] - mean) * w, 0.0};
    }
    fft(a);

    Spectrum s;
    const std::size_t half = n / 2;
    s.freqs.resize(half + 1);
    s.power.resize(half + 1);
    for (std::size_t k = 0; k <= half; ++k) {
        s.freqs[k] = static_cast<double>(k) / static_cast<double>(n);
        const double p = std::norm(a[k]) / static_cast<double>(n);
        s.power[k] = (k == 0 || k == half) ? p : 2.0 * p;
    }
    return s;
}

AttractorLabel classify(const Orbit& orbit, std::size_t discard) {
    if (orbit.diverged_at) return {AttractorClass::Diverged, {}, 0};
    if (orbit.points.size() < discard + 512)
        throw std::invalid_argument("classification needs >= 512 post-transient points");

    std::vector<double> xs;
    xs.reserve(orbit.points.size() - discard);
    for (std::size_t i = discard; i < orbit.points.size(); ++i)
        xs.push_back(orbit.points[i].x);

    const Spectrum s = psd(xs, Window::Hann);
    const double floor_ratio = std::pow(10.0, thresholds::kPeakFloorDb / 10.0);
    const double ring_ratio = std::pow(10.0, thresholds::kPeakSharpnessDb / 10.0);
    const auto peaks = find_sharp_peaks(s, floor_ratio, ring_ratio);

    AttractorLabel label;
    label.peak_count = peaks.size();
    for (std::size_t i = 0; i < peaks.size() && i < 16; ++i)
        label.dominant_freqs.push_back(peaks[i].freq);

    // Recurrence first: a short period repeating within eps.
    const auto p_max =
        std::min<std::size_t>(thresholds::kMaxRecurrencePeriod, xs.size() - 1);
    for (std::size_t p = 1; p <= p_max; ++p) {
        double worst = 0.0;
        for (std::size_t i = 0; i + p < xs.size(); ++i)
            worst = std::max(worst, std::abs(xs[i + p] - xs[i]));
        if (worst < thresholds::kRecurrenceEps) {
            label.label = AttractorClass::PeriodicLike;
            label.dominant_freqs.insert(label.dominant_freqs.begin(),
                                        1.0 / static_cast<double>(p));
            return label;
        }
    }

    const double concentration = peak_energy_fraction(
        s, peaks, static_cast<std::size_t>(thresholds::kMaxSpectralPeaks),
        static_cast<std::size_t>(thresholds::kPeakHalfWidthBins));
    const bool line_like =
        !peaks.empty() && concentration >= thresholds::kPeakEnergyFraction;
    label.label = line_like ? AttractorClass::QuasiperiodicLike : AttractorClass::Chaotic;
    return label;
}

void write_spectrum_csv(const Spectrum& spectrum, std::ostream& out) {
    out << "freq,power\n";
    char buf[80];
    for (std::size_t k = 0; k < spectrum.freqs.size(); ++k) {
        std::snprintf(buf, sizeof(buf), "%.15g,%.15g\n", spectrum.freqs[k],
                      spectrum.power[k]);
        out << buf;
    }
}

const char* to_string(AttractorClass c) {
    switch (c) {
        case AttractorClass::PeriodicLike: return "periodic-like";
        case AttractorClass::QuasiperiodicLike: return "quasiperiodic-like";
        case AttractorClass::Chaotic: return "chaotic";
        case AttractorClass::Diverged: return "diverged";
    }
    return "?";
}

}  // namespace fracmap
