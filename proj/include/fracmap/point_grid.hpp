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

#include <span>
#include <vector>

#include "fracmap/complex_point.hpp"

namespace fracmap {

/// Uniform-cell spatial index over a fixed point cloud, for near-linear
/// nearest-neighbor queries against large orbit clouds.
class PointGrid {
public:
    /// Builds the index; the cloud must be non-empty and finite.
    explicit PointGrid(std::span<const ComplexPoint> points);

    /// Euclidean distance from query to the closest indexed point.
    double nearest_distance(ComplexPoint query) const;

    std::size_t size() const { return points_.size(); }

private:
    std::vector<ComplexPoint> points_;
    std::vector<std::vector<std::uint32_t>> cells_;
    int nx_ = 1;
    int ny_ = 1;
    double x0_ = 0.0;
    double y0_ = 0.0;
    double cell_w_ = 1.0;
    double cell_h_ = 1.0;
};

}  // namespace fracmap
