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

#include <span>
#include <vector>

#include "panuda/core/types.hpp"

namespace panuda::uda {

/// Teacher output on one target image.
struct PseudoLabel {
  Grid<std::uint8_t> classes;  // per-pixel argmax
  double confidence = 0.0;     // q in [0, 1]
  std::vector<InstancePrediction> instances;
};

/// Per-pixel argmax over planar (C, H, W) probabilities; ties go to the lowest class.
Grid<std::uint8_t> pseudo_label(std::span<const float> probs, int classes, int height, int width);
Grid<std::uint8_t> pseudo_label(std::span<const double> probs, int classes, int height, int width);

/// Fraction of all H * W pixels whose maximum probability strictly exceeds tau.
double confidence(std::span<const float> probs, int classes, int height, int width, double tau);
double confidence(std::span<const double> probs, int classes, int height, int width, double tau);

/// Argmax and confidence from one pass.
PseudoLabel pseudo_label_with_confidence(std::span<const float> probs, int classes, int height, int width, double tau);

}  // namespace panuda::uda
