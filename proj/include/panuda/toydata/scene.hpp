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
#include <vector>

#include "panuda/core/types.hpp"

namespace panuda::toydata {

/// Appearance change applied only to target-domain renders.
struct DomainShift {
  double hue_degrees = 35.0;      // mean hue rotation
  double hue_jitter = 10.0;       // per-scene spread of the rotation
  double noise_sigma = 0.05;      // additive Gaussian noise
  double brightness = 0.8;        // multiplicative
  double contrast = 0.8;          // around the image mean
};

struct ThingRange {
  int min_count = 0;
  int max_count = 0;
  double spawn_probability = 1.0;  // chance the class appears at all
};

struct SceneSpec {
  std::uint64_t seed = 0;
  int height = 128;
  int width = 128;
  Domain domain = Domain::Source;

  double horizon_min = 0.30;  // fraction of height
  double horizon_max = 0.50;
  std::array<double, 5> stuff_noise{0.02, 0.06, 0.04, 0.03, 0.10};  // per stuff class
  double void_probability = 0.25;  // chance of an unlabeled patch at the bottom edge

  // disk, box, triangle: deliberately imbalanced (triangle rare).
  std::array<ThingRange, 3> things{ThingRange{1, 3, 0.95}, ThingRange{0, 2, 0.6}, ThingRange{1, 1, 0.2}};
  double thing_min_size = 0.09;  // fraction of min(height, width)
  double thing_max_size = 0.20;

  DomainShift shift;
};

struct Hsv {
  double h, s, v;  // hue in degrees
};

std::array<double, 3> hsv_to_rgb(Hsv c);

/// Pixels of a thing shape (disk, box or triangle class id) centred at
/// (cy, cx) with nominal size s; `aspect` only affects boxes.
Mask rasterize_thing(int cls, int height, int width, double cy, double cx, double s, double aspect);

/// Renders one scene. Geometry (and therefore the label) depends only on the
/// seed and layout parameters; the domain only changes appearance. Pixel values
/// are multiples of 1/255 so the image survives 8-bit PNG storage exactly.
Sample generate_scene(const SceneSpec& spec);

/// Sample id encoding the domain and seed, e.g. "source-000042".
std::string sample_id(Domain domain, std::uint64_t seed);

/// n samples with seeds base_seed .. base_seed + n - 1 rendered from `spec`
/// (whose seed and domain are overridden). Target datasets keep labels only
/// when keep_target_labels is set (evaluation splits).
Dataset generate_dataset(std::size_t n, Domain domain, std::uint64_t base_seed, const SceneSpec& spec = {},
                         bool keep_target_labels = true);

/// Pixel frequency of each class over all non-void pixels; sums to 1.
std::vector<double> compute_class_frequencies(const Dataset& ds);

}  // namespace panuda::toydata
