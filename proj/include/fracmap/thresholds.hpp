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

namespace fracmap::thresholds {

// Symmetry verdicts. A map passes an equivariance check when the max
// pointwise defect stays below kEquivariancePass; a broken symmetry is
// expected to exceed kEquivarianceFail on generic samples.
inline constexpr double kEquivariancePass = 1e-10;
inline constexpr double kEquivarianceFail = 1e-3;

// Attractor point clouds: mean nearest-neighbor defect below this counts
// as a symmetric cloud at desk-scale orbit lengths.
inline constexpr double kCloudDefectTol = 0.02;

// Attractor classification.
inline constexpr double kRecurrenceEps = 1e-6;  // periodic-like recurrence
inline constexpr int kMaxRecurrencePeriod = 64;
inline constexpr int kMaxSpectralPeaks = 12;    // quasiperiodic-like peak budget
inline constexpr double kPeakFloorDb = 20.0;    // peak over median floor
// A peak is "sharp" (a spectral line rather than a narrowband hump) when
// it rises kPeakSharpnessDb above the mean of the ring of bins just
// outside its +-kPeakHalfWidthBins window. Line spectra measure 25-80 dB
// here; chaotic humps stay under ~13 dB.
inline constexpr int kPeakHalfWidthBins = 2;
inline constexpr int kPeakRingBins = 3;  // ring spans the next kPeakRingBins bins
inline constexpr double kPeakSharpnessDb = 15.0;
// Line-like spectrum: the strongest kMaxSpectralPeaks sharp peaks carry
// at least this fraction of the total power.
inline constexpr double kPeakEnergyFraction = 0.1;

// Bifurcative-set slice comparison: spreads below this floor are treated
// as exact repeats (periodic cells produce duplicate samples).
inline constexpr double kSliceSpreadFloor = 1e-12;
// Single-linkage grouping of slices: two slices join a group when their
// distance stays within this multiple of their sampling resolution.
// Same-attractor slice pairs measure <= ~8x, distinct attractors ~10^3x.
inline constexpr double kSliceClusterFactor = 30.0;

}  // namespace fracmap::thresholds
