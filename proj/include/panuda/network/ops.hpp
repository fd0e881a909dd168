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

#include <array>
#include <vector>

#include "panuda/core/rng.hpp"

namespace panuda::network {

/// Boxes are (N, 4) tensors of (x0, y0, x1, y1) in pixel-edge coordinates.
torch::Tensor box_area(const torch::Tensor& boxes);
/// (N, M) pairwise IoU.
torch::Tensor pairwise_iou(const torch::Tensor& a, const torch::Tensor& b);
torch::Tensor clip_boxes(const torch::Tensor& boxes, std::int64_t height, std::int64_t width);

/// Center/size delta parameterization with per-coordinate weights (wx, wy, ww, wh).
struct BoxCoder {
  std::array<double, 4> weights{1.0, 1.0, 1.0, 1.0};
  double max_log_scale = 4.135166556742356;  // log(1000 / 16)

  torch::Tensor encode(const torch::Tensor& targets, const torch::Tensor& references) const;
  torch::Tensor decode(const torch::Tensor& deltas, const torch::Tensor& references) const;
};

/// Greedy non-maximum suppression. Returns kept indices ordered by descending
/// score; equal scores keep the lower index first.
torch::Tensor nms(const torch::Tensor& boxes, const torch::Tensor& scores, double iou_threshold);

/// NMS applied independently within each group id.
torch::Tensor batched_nms(const torch::Tensor& boxes, const torch::Tensor& scores, const torch::Tensor& groups, double iou_threshold);

/// Bilinear RoI pooling of `features` (B, C, h, w) at `stride`. `rois` is (R, 4) in
/// image pixels and `batch_index` (R) selects the image. Each output bin averages
/// sampling x sampling bilinear samples. Returns (R, C, out, out).
torch::Tensor roi_align(const torch::Tensor& features, const torch::Tensor& rois, const torch::Tensor& batch_index, std::int64_t out, double stride,
                        std::int64_t sampling = 2);

/// Pyramid level (0..3) for each RoI: floor(1 + log2(sqrt(area) / 32)), clamped.
torch::Tensor roi_levels(const torch::Tensor& rois);

/// Uniformly random subset of `count` entries of `indices` (all if fewer), in
/// drawn order.
std::vector<std::int64_t> sample_subset(std::vector<std::int64_t> indices, std::size_t count, Rng& rng);

}  // namespace panuda::network
