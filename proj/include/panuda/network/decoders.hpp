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

#include "panuda/network/encoder.hpp"

namespace panuda::network {

struct ContextDecoderConfig {
  std::int64_t embed_dim = 64;
  std::vector<std::int64_t> dilations{1, 3, 6, 9};
  std::int64_t groups = 8;  // GroupNorm groups

  friend bool operator==(const ContextDecoderConfig&, const ContextDecoderConfig&) = default;
};

/// Depthwise 3x3 (dilated) -> pointwise -> GroupNorm -> ReLU.
class SeparableConvImpl : public torch::nn::Module {
 public:
  SeparableConvImpl(std::int64_t in, std::int64_t out, std::int64_t dilation, std::int64_t groups);
  torch::Tensor forward(const torch::Tensor& x);

 private:
  torch::nn::Conv2d depthwise{nullptr}, pointwise{nullptr};
  torch::nn::GroupNorm norm{nullptr};
};
TORCH_MODULE(SeparableConv);

/// Projects all four pyramid levels to a common width at stride 4 and fuses
/// them through parallel dilated separable convolutions. Returns (B, E, H/4, W/4).
class ContextDecoderImpl : public torch::nn::Module {
 public:
  ContextDecoderImpl(const std::array<std::int64_t, 4>& in_widths, ContextDecoderConfig cfg);
  torch::Tensor forward(const FeaturePyramid& fp);
  std::int64_t out_channels() const { return cfg_.embed_dim; }

 private:
  ContextDecoderConfig cfg_;
  std::array<std::int64_t, 4> in_widths_;
  std::vector<torch::nn::Conv2d> lateral_;
  torch::nn::Sequential pointwise_branch{nullptr};
  std::vector<SeparableConv> branches_;
  torch::nn::Sequential fuse{nullptr};
};
TORCH_MODULE(ContextDecoder);

/// 1x1 classifier producing per-class logits.
class SemanticHeadImpl : public torch::nn::Module {
 public:
  SemanticHeadImpl(std::int64_t in, std::int64_t classes);
  torch::Tensor forward(const torch::Tensor& x) { return classifier(x); }
  torch::nn::Conv2d classifier{nullptr};
};
TORCH_MODULE(SemanticHead);

/// Two 1x1 convolutions: sigmoid center heatmap and (dy, dx) offsets in pixels.
class CenterOffsetHeadImpl : public torch::nn::Module {
 public:
  explicit CenterOffsetHeadImpl(std::int64_t in);
  /// Returns {center (B,1,h,w) in [0,1], offset (B,2,h,w)} at the input resolution.
  std::pair<torch::Tensor, torch::Tensor> forward(const torch::Tensor& x);
  torch::nn::Conv2d center{nullptr}, offset{nullptr};
};
TORCH_MODULE(CenterOffsetHead);

/// Bilinear resize to (h, w) with align_corners=false.
torch::Tensor resize_to(const torch::Tensor& x, std::int64_t h, std::int64_t w);

}  // namespace panuda::network
