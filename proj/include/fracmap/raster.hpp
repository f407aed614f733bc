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

#include <cstdint>
#include <string>
#include <vector>

namespace fracmap {

struct Rgb {
    std::uint8_t r = 0;
    std::uint8_t g = 0;
    std::uint8_t b = 0;
};

/// Fixed-size scatter canvas writing binary PPM (P6). Data coordinates
/// are mapped through the view rectangle set by set_view.
class Canvas {
public:
    Canvas(int width, int height, Rgb background = {255, 255, 255});

    void set_view(double xmin, double xmax, double ymin, double ymax);

    /// Plots one data point (1-pixel dot); silently ignores points
    /// outside the view.
    void plot(double x, double y, Rgb color);

    void save_ppm(const std::string& path) const;

    int width() const { return width_; }
    int height() const { return height_; }

private:
    int width_;
    int height_;
    double xmin_ = 0.0, xmax_ = 1.0, ymin_ = 0.0, ymax_ = 1.0;
    std::vector<std::uint8_t> pixels_;
};

/// Cycling scatter palette (one color per initial condition, etc.).
Rgb palette_color(std::size_t index);

}  // namespace fracmap
