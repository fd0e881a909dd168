// Copyright 2026 The panuda Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "panuda/core/types.hpp"

namespace panuda::harness {

using Rgb = std::array<std::uint8_t, 3>;

/// 8-bit RGB raster with primitive drawing; saved through libpng.
class Canvas {
 public:
  Canvas(int height, int width, Rgb background = {255, 255, 255});

  int height() const { return h_; }
  int width() const { return w_; }
  Rgb at(int y, int x) const;
  void set(int y, int x, Rgb c);
  void fill_rect(int y0, int x0, int y1, int x1, Rgb c);
  void line(double x0, double y0, double x1, double y1, Rgb c);
  /// 5x7 glyphs for digits, upper-case letters and ".-+:%/_"; others render blank.
  void text(int y, int x, const std::string& s, Rgb c, int scale = 1);
  void blit(int y, int x, const Image& img);
  void save(const std::filesystem::path& path) const;

 private:
  int h_, w_;
  std::vector<std::uint8_t> px_;
};

struct Series {
  std::string name;
  std::vector<double> x, y;
};

/// Line chart with axes, extreme-value labels and a legend.
Canvas line_chart(const std::string& title, const std::vector<Series>& series, int height = 360, int width = 640);

/// Grouped bars: one group per label, one bar per series entry.
Canvas bar_chart(const std::string& title, const std::vector<std::string>& groups, const std::vector<Series>& series, int height = 360,
                 int width = 640);

/// Image blended with class colors; instance boundaries drawn white.
Image panoptic_overlay(const Image& image, const PanopticLabel& label, const ClassTable& table);

/// Distinct series color.
Rgb palette(std::size_t i);

}  // namespace panuda::harness
