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
#include "panuda/core/types.hpp"
#include "panuda/network/encoder.hpp"
#include "panuda/network/ops.hpp"
#include "panuda/network/targets.hpp"

namespace panuda::network {

struct TopDownConfig {
  std::int64_t dim = 64;
  std::array<double, 4> anchor_sizes{8, 16, 32, 64};
  std::vector<double> aspect_ratios{0.5, 1.0, 2.0};

  double rpn_positive_iou = 0.7;
  double rpn_negative_iou = 0.3;
  std::int64_t rpn_batch = 64;
  double rpn_positive_fraction = 0.5;
  double rpn_nms = 0.7;
  std::int64_t pre_nms_train = 256;  // per level
  std::int64_t post_nms_train = 128;
  std::int64_t pre_nms_test = 256;
  std::int64_t post_nms_test = 64;

  double roi_foreground_iou = 0.5;
  std::int64_t roi_batch = 64;
  double roi_foreground_fraction = 0.25;
  std::int64_t box_pool = 7;
  std::int64_t mask_pool = 14;
  std::int64_t fc_dim = 256;
  std::int64_t mask_dim = 32;

  double test_score_threshold = 0.05;
  double test_nms = 0.5;
  std::int64_t max_detections = 100;

  friend bool operator==(const TopDownConfig&, const TopDownConfig&) = default;
};

struct TopDownLosses {
  torch::Tensor rpn_cls, rpn_box, roi_cls, roi_box, roi_mask;
};

/// Proposal-based instance decoder: lateral pyramid, region proposal network,
/// RoI box head and class-agnostic 28x28 mask head.
class TopDownDecoderImpl : public torch::nn::Module {
 public:
  TopDownDecoderImpl(const std::array<std::int64_t, 4>& in_widths, std::vector<int> thing_ids, TopDownConfig cfg);

  TopDownLosses forward_train(const FeaturePyramid& fp, std::int64_t height, std::int64_t width, const std::vector<ImageTargets>& targets, Rng& rng);

  /// Per-image detections after per-class NMS, at most max_detections each.
  std::vector<std::vector<Detection>> predict(const FeaturePyramid& fp, std::int64_t height, std::int64_t width);

  /// Per-image proposal boxes (detached) and their objectness logits.
  std::vector<std::pair<torch::Tensor, torch::Tensor>> proposals(const FeaturePyramid& fp, std::int64_t height, std::int64_t width, bool training);

  /// Anchors for one level, ordered (y, x, ratio), (h * w * A, 4).
  torch::Tensor level_anchors(int level, std::int64_t h, std::int64_t w, const torch::TensorOptions& opts) const;

  const TopDownConfig& config() const { return cfg_; }
  std::int64_t num_things() const { return static_cast<std::int64_t>(thing_ids_.size()); }

 private:
  struct RpnOut {
    torch::Tensor objectness;  // (B, N)
    torch::Tensor deltas;      // (B, N, 4)
    torch::Tensor anchors;     // (N, 4)
    std::vector<std::int64_t> level_counts;
  };

  std::vector<torch::Tensor> pyramid(const FeaturePyramid& fp);
  RpnOut rpn(const std::vector<torch::Tensor>& p);
  std::vector<std::pair<torch::Tensor, torch::Tensor>> select_proposals(const RpnOut& out, std::int64_t height, std::int64_t width, bool training);
  torch::Tensor pool(const std::vector<torch::Tensor>& p, const torch::Tensor& rois, const torch::Tensor& batch_index, std::int64_t out);
  std::pair<torch::Tensor, torch::Tensor> box_head(const torch::Tensor& pooled);
  torch::Tensor mask_head(const torch::Tensor& pooled);

  TopDownConfig cfg_;
  std::vector<int> thing_ids_;
  BoxCoder rpn_coder_{{1.0, 1.0, 1.0, 1.0}};
  BoxCoder roi_coder_{{10.0, 10.0, 5.0, 5.0}};

  std::vector<torch::nn::Conv2d> lateral_, output_;
  torch::nn::Conv2d rpn_conv{nullptr}, rpn_objectness{nullptr}, rpn_deltas{nullptr};
  torch::nn::Linear fc1{nullptr}, fc2{nullptr}, cls_score{nullptr}, bbox_pred{nullptr};
  torch::nn::Conv2d mask_conv1{nullptr}, mask_conv2{nullptr}, mask_logits{nullptr};
  torch::nn::ConvTranspose2d mask_up{nullptr};
};
TORCH_MODULE(TopDownDecoder);

}  // namespace panuda::network
