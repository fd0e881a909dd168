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

#include <vector>

#include "panuda/core/rng.hpp"
#include "panuda/core/types.hpp"
#include "panuda/uda/pseudo_label.hpp"

namespace panuda::uda {

struct MixedInstance {
  Mask mask;
  int class_id = 0;
  double weight = 1.0;
};

struct MixResult {
  Image image;
  Grid<std::uint8_t> semantic;  // source label on the mix mask, pseudo-label elsewhere
  Mask mix;                     // 1 where the pixel comes from the source
  Grid<float> weight;           // 1 on source pixels, q on target pixels
  std::vector<MixedInstance> instances;
  std::vector<int> selected;    // source classes pasted, ascending
};

/// Classes present in a label (void excluded), ascending.
std::vector<int> present_classes(const PanopticLabel& label);

/// Pastes the pixels of ceil(N/2) randomly chosen source classes (out of the N
/// present) onto the target image. Source instances travel with their pixels;
/// teacher instances are clipped to the remaining target pixels and weighted by q.
/// Throws when the source label holds no class.
MixResult classmix(const Sample& source, const Image& target, const PseudoLabel& pseudo, Rng& rng);

}  // namespace panuda::uda
