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

#include <cstdint>
#include <filesystem>
#include <vector>

#include "panuda/core/types.hpp"

namespace panuda::png {

/// Raw decoded PNG: 1 (gray) or 3 (RGB) channels, 8 or 16 bits, interleaved.
struct Raster {
  int height = 0;
  int width = 0;
  int channels = 0;
  int bit_depth = 8;
  std::vector<std::uint16_t> samples;
};

void write(const std::filesystem::path& path, const Raster& r);
Raster read(const std::filesystem::path& path);

void write_rgb(const std::filesystem::path& path, const Image& img);
Image read_rgb(const std::filesystem::path& path);
void write_gray8(const std::filesystem::path& path, const Grid<std::uint8_t>& g);
Grid<std::uint8_t> read_gray8(const std::filesystem::path& path);
void write_gray16(const std::filesystem::path& path, const Grid<std::uint16_t>& g);
Grid<std::uint16_t> read_gray16(const std::filesystem::path& path);

}  // namespace panuda::png
