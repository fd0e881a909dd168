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

#include <torch/torch.h>

#include <vector>

#include "panuda/core/types.hpp"

namespace panuda::network {

struct InstanceTarget {
  torch::Tensor mask;  // (H, W) float in {0, 1}
  torch::Tensor box;   // (4) tight pixel-edge bounds
  std::int64_t thing_index = 0;
  double weight = 1.0;
};

/// Supervision for one image. Pixel weights scale every per-pixel loss term;
/// instance weights scale the terms matched to that instance.
struct ImageTargets {
  torch::Tensor semantic;      // (H, W) int64, kVoid where ignored
  torch::Tensor pixel_weight;  // (H, W) float
  std::vector<InstanceTarget> instances;

  std::int64_t height() const { return semantic.size(0); }
  std::int64_t width() const { return semantic.size(1); }
};

/// Full-weight targets from a ground-truth label.
ImageTargets targets_from_label(const PanopticLabel& label, const ClassTable& table);

/// Pixel-weight value at the center of each box; (N) tensor.
torch::Tensor weight_at_box_centers(const torch::Tensor& pixel_weight, const torch::Tensor& boxes);

torch::Tensor image_to_tensor(const Image& img);  // (3, H, W)
torch::Tensor mask_to_tensor(const Mask& m);      // (H, W) float

}  // namespace panuda::network
