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

#include "panuda/core/rng.hpp"
#include "panuda/core/types.hpp"

namespace panuda::uda {

struct AugmentParams {
  double jitter_strength = 0.2;
  double jitter_probability = 0.8;
  double blur_probability = 0.5;
  double blur_sigma_min = 0.15;
  double blur_sigma_max = 1.15;
};

/// Brightness, contrast, saturation and hue jitter, each drawn from
/// [1 - s, 1 + s] (hue: a rotation of up to s turns), in that order.
void color_jitter(Image& img, double strength, Rng& rng);

/// Separable Gaussian blur with reflected borders. The kernel side is the odd
/// number nearest 0.1 * height.
void gaussian_blur(Image& img, double sigma);

/// Photometric augmentation of a mixed image; geometry is untouched.
void augment(Image& img, const AugmentParams& params, Rng& rng);

}  // namespace panuda::uda
