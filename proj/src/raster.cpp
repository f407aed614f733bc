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

#include "fracmap/raster.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>

namespace fracmap {

Canvas::Canvas(int width, int height, Rgb background) : width_(width), height_(height) {
    if (width < 1 || height < 1) throw std::invalid_argument("canvas size must be positive");
    pixels_.resize(static_cast<std::size_t>(width) * height * 3);
    for (std::size_t i = 0; i < pixels_.size(); i += 3) {
        pixels_[i] = background.r;
        pixels_[i + 1] = background.g;
        pixels_[i + 2] = background.b;
    }
}

void Canvas::set_view(double xmin, double xmax, double ymin, double ymax) {
    if (!(xmin < xmax) || !(ymin < ymax))
        throw std::invalid_argument("canvas view must have positive extent");
    xmin_ = xmin;
    xmax_ = xmax;
    ymin_ = ymin;
    ymax_ = ymax;
}

void Canvas::plot(double x, double y, Rgb color) {
    if (!std::isfinite(x) || !std::isfinite(y)) return;
    const double u = (x - xmin_) / (xmax_ - xmin_);
    const double v = (y - ymin_) / (ymax_ - ymin_);
    const int px = static_cast<int>(u * (width_ - 1) + 0.5);
    const int py = (height_ - 1) - static_cast<int>(v * (height_ - 1) + 0.5);
    if (px < 0 || px >= width_ || py < 0 || py >= height_) return;
    const std::size_t off = (static_cast<std::size_t>(py) * width_ + px) * 3;
    pixels_[off] = color.r;
    pixels_[off + 1] = color.g;
    pixels_[off + 2] = color.b;
}

void Canvas::save_ppm(const std::string& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path);
    out << "P6\n" << width_ << ' ' << height_ << "\n255\n";
    out.write(reinterpret_cast<const char*>(pixels_.data()),
              static_cast<std::streamsize>(pixels_.size()));
    if (!out) throw std::runtime_error("short write to " + path);
}

Rgb palette_color(std::size_t index) {
    static constexpr Rgb palette[] = {
        {220, 20, 20},   // red
        {20, 20, 220},   // blue
        {20, 150, 20},   // green
        {10, 10, 10},    // black
        {200, 20, 200},  // magenta
        {230, 140, 0},   // orange
        {0, 160, 160},   // teal
    };
    return palette[index % (sizeof(palette) / sizeof(palette[0]))];
}

}  // namespace fracmap
