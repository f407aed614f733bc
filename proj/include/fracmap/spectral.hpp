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

#include <iosfwd>
#include <span>
#include <vector>

#include "fracmap/orbit.hpp"

namespace fracmap {

enum class Window { None, Hann };

/// One-sided power spectrum. Frequencies are cycles per iteration in
/// [0, 0.5]; the bin powers sum to the windowed-signal energy.
struct Spectrum {
    std::vector<double> freqs;
    std::vector<double> power;
};

enum class AttractorClass { PeriodicLike, QuasiperiodicLike, Chaotic, Diverged };

struct AttractorLabel {
    AttractorClass label = AttractorClass::Chaotic;
    // Peak frequencies, strongest first. PeriodicLike labels prepend the
    // recurrence rate 1/p of the detected period p.
    std::vector<double> dominant_freqs;
    std::size_t peak_count = 0;
};

/// Periodogram of the mean-removed, windowed sequence. The input is
/// truncated to the largest power of two; lengths below 64 throw
/// std::invalid_argument.
Spectrum psd(std::span<const double> x, Window window = Window::Hann);

/// Heuristic attractor label from the post-transient x series:
///   - PeriodicLike when some period p <= kMaxRecurrencePeriod recurs
///     within kRecurrenceEps,
///   - QuasiperiodicLike when the strongest kMaxSpectralPeaks peaks
///     (local maxima kPeakFloorDb above the median floor) carry at least
///     kPeakEnergyFraction of the spectral power,
///   - Chaotic otherwise; Diverged passes through from the orbit.
/// Requires at least 512 post-transient points.
AttractorLabel classify(const Orbit& orbit, std::size_t discard);

/// CSV rows "freq,power".
void write_spectrum_csv(const Spectrum& spectrum, std::ostream& out);

const char* to_string(AttractorClass c);

}  // namespace fracmap
