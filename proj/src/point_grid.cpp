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

#include "fracmap/point_grid.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <stdexcept>

namespace fracmap {

PointGrid::PointGrid(std::span<const ComplexPoint> points)
    : points_(points.begin(), points.end()) {
    if (points_.empty()) throw std::invalid_argument("point grid needs a non-empty cloud");

    double x1 = std::numeric_limits<double>::lowest();
    double y1 = x1;
    x0_ = std::numeric_limits<double>::max();
    y0_ = x0_;
    for (const auto& p : points_) {
        if (!is_finite(p)) throw std::invalid_argument("point grid needs finite points");
        x0_ = std::min(x0_, p.x);
        y0_ = std::min(y0_, p.y);
        x1 = std::max(x1, p.x);
        y1 = std::max(y1, p.y);
    }

    // Aim for ~2 points per cell on average.
    const auto side = static_cast<int>(
        std::ceil(std::sqrt(static_cast<double>(points_.size()) / 2.0)));
    nx_ = std::max(1, side);
    ny_ = std::max(1, side);
    const double w = x1 - x0_;
    const double h = y1 - y0_;
    cell_w_ = w > 0.0 ? w / nx_ : 1.0;
    cell_h_ = h > 0.0 ? h / ny_ : 1.0;

    cells_.resize(static_cast<std::size_t>(nx_) * ny_);
    for (std::uint32_t i = 0; i < points_.size(); ++i) {
        const auto cx = std::min(nx_ - 1, static_cast<int>((points_[i].x - x0_) / cell_w_));
        const auto cy = std::min(ny_ - 1, static_cast<int>((points_[i].y - y0_) / cell_h_));
        cells_[static_cast<std::size_t>(cy) * nx_ + cx].push_back(i);
    }
}

double PointGrid::nearest_distance(ComplexPoint query) const {
    // Cell coordinates of the query; may fall outside the grid range.
    const auto qx = static_cast<int>(std::floor((query.x - x0_) / cell_w_));
    const auto qy = static_cast<int>(std::floor((query.y - y0_) / cell_h_));

    double best2 = std::numeric_limits<double>::max();
    const double min_cell = std::min(cell_w_, cell_h_);
    const int max_ring = std::max({nx_ + std::abs(qx), ny_ + std::abs(qy), nx_ + ny_});

    for (int ring = 0; ring <= max_ring; ++ring) {
        // Any point in a cell at Chebyshev ring distance `ring` is at least
        // (ring - 1) * min_cell away, so once that bound exceeds the best
        // match the search is complete.
        if (ring > 1) {
            const double bound = (ring - 1) * min_cell;
            if (bound * bound > best2) break;
        }
        for (int cy = qy - ring; cy <= qy + ring; ++cy) {
            if (cy < 0 || cy >= ny_) continue;
            const bool edge_row = (cy == qy - ring || cy == qy + ring);
            const int step = edge_row ? 1 : 2 * ring;  // middle rows: two edge columns only
            for (int cx = qx - ring; cx <= qx + ring; cx += step) {
                if (cx < 0 || cx >= nx_) continue;
                for (const auto idx : cells_[static_cast<std::size_t>(cy) * nx_ + cx]) {
                    const double dx = points_[idx].x - query.x;
                    const double dy = points_[idx].y - query.y;
                    best2 = std::min(best2, dx * dx + dy * dy);
                }
            }
        }
    }
    return std::sqrt(best2);
}

}  // namespace fracmap
