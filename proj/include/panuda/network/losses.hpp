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

#include "panuda/network/targets.hpp"

namespace panuda::network {

/// Pixel-weighted cross-entropy: sum of w * CE over non-void pixels divided by
/// the number of non-void pixels. logits (B, C, H, W); labels (B, H, W) int64.
torch::Tensor semantic_cross_entropy(const torch::Tensor& logits, const torch::Tensor& labels, const torch::Tensor& weights);

struct CenterOffsetTargets {
  torch::Tensor heatmap;  // (B, 1, H, W) Gaussian splats, max over instances
  torch::Tensor offset;   // (B, 2, H, W) centroid minus pixel, (dy, dx)
  torch::Tensor thing;    // (B, 1, H, W) 1 on instance pixels
  torch::Tensor weight;   // (B, 1, H, W) pixel weights
};

/// Centroid of each instance mask in pixel-index coordinates, (N, 2) as (y, x).
torch::Tensor instance_centroids(const std::vector<InstanceTarget>& instances);

CenterOffsetTargets center_offset_targets(const std::vector<ImageTargets>& targets, double sigma);

/// Mean over all pixels of w * (pred - target)^2.
torch::Tensor heatmap_loss(const torch::Tensor& pred, const CenterOffsetTargets& t);

/// Sum over thing pixels of w * (|dy| + |dx|) divided by the thing-pixel count;
/// 0 without thing pixels.
torch::Tensor offset_loss(const torch::Tensor& pred, const CenterOffsetTargets& t);

}  // namespace panuda::network
