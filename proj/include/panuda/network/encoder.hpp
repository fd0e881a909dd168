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

namespace panuda::network {

/// Four feature maps at strides 4, 8, 16 and 32, each (B, C_i, H/s, W/s).
using FeaturePyramid = std::vector<torch::Tensor>;

struct EncoderConfig {
  std::array<std::int64_t, 4> widths{32, 64, 128, 256};
  std::array<std::int64_t, 4> depths{2, 2, 2, 2};
  std::array<std::int64_t, 4> heads{1, 2, 4, 8};
  std::array<std::int64_t, 4> reduction{8, 4, 2, 1};
  std::int64_t patch_size = 4;
  std::int64_t mlp_ratio = 4;
  std::int64_t in_channels = 3;

  void validate() const;
  friend bool operator==(const EncoderConfig&, const EncoderConfig&) = default;
};

inline constexpr std::array<std::int64_t, 4> kPyramidStrides{4, 8, 16, 32};

/// Overlapping strided convolution followed by LayerNorm; emits tokens (B, N, C).
class PatchEmbedImpl : public torch::nn::Module {
 public:
  PatchEmbedImpl(std::int64_t in, std::int64_t out, std::int64_t kernel, std::int64_t stride);
  torch::Tensor forward(const torch::Tensor& x, std::int64_t& h, std::int64_t& w);

 private:
  torch::nn::Conv2d proj{nullptr};
  torch::nn::LayerNorm norm{nullptr};
};
TORCH_MODULE(PatchEmbed);

/// Multi-head self-attention whose keys and values come from a spatially
/// reduced copy of the token grid.
class EfficientAttentionImpl : public torch::nn::Module {
 public:
  EfficientAttentionImpl(std::int64_t dim, std::int64_t heads, std::int64_t reduction);
  torch::Tensor forward(const torch::Tensor& x, std::int64_t h, std::int64_t w);

 private:
  std::int64_t heads_, reduction_;
  torch::nn::Linear q{nullptr}, kv{nullptr}, proj{nullptr};
  torch::nn::Conv2d sr{nullptr};
  torch::nn::LayerNorm sr_norm{nullptr};
};
TORCH_MODULE(EfficientAttention);

/// fc -> depthwise 3x3 -> GELU -> fc.
class MixFfnImpl : public torch::nn::Module {
 public:
  MixFfnImpl(std::int64_t dim, std::int64_t hidden);
  torch::Tensor forward(const torch::Tensor& x, std::int64_t h, std::int64_t w);

 private:
  torch::nn::Linear fc1{nullptr}, fc2{nullptr};
  torch::nn::Conv2d dw{nullptr};
};
TORCH_MODULE(MixFfn);

class TransformerBlockImpl : public torch::nn::Module {
 public:
  TransformerBlockImpl(std::int64_t dim, std::int64_t heads, std::int64_t reduction, std::int64_t mlp_ratio);
  torch::Tensor forward(torch::Tensor x, std::int64_t h, std::int64_t w);

 private:
  torch::nn::LayerNorm norm1{nullptr}, norm2{nullptr};
  EfficientAttention attn{nullptr};
  MixFfn ffn{nullptr};
};
TORCH_MODULE(TransformerBlock);

/// Hierarchical transformer encoder in the Mix Transformer layout.
class MixTransformerImpl : public torch::nn::Module {
 public:
  explicit MixTransformerImpl(EncoderConfig cfg);

  /// Throws panuda::Error unless H and W are divisible by 32.
  FeaturePyramid forward(const torch::Tensor& images);

  const EncoderConfig& config() const { return cfg_; }
  /// LayerNorm closing stage i (0-based).
  torch::nn::LayerNorm stage_norm(int i) const { return norms_[static_cast<std::size_t>(i)]; }

 private:
  EncoderConfig cfg_;
  std::vector<PatchEmbed> embeds_;
  std::vector<torch::nn::ModuleList> blocks_;
  std::vector<torch::nn::LayerNorm> norms_;
};
TORCH_MODULE(MixTransformer);

}  // namespace panuda::network
