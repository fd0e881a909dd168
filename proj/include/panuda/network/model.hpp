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
#include <string>
#include <vector>

#include "panuda/core/rng.hpp"
#include "panuda/core/types.hpp"
#include "panuda/network/decoders.hpp"
#include "panuda/network/encoder.hpp"
#include "panuda/network/losses.hpp"
#include "panuda/network/topdown.hpp"

namespace panuda::network {

enum class Topology { SNet, MNet, MDecBU, MDecTD };

std::string to_string(Topology t);
/// Accepts "s-net", "m-net", "m-dec-bu", "m-dec-td" (case-insensitive).
Topology topology_from_string(const std::string& s);
bool uses_topdown(Topology t);

/// Indices into LossWeights::topdown and TopDownLosses order.
enum TopDownTerm { kRpnCls = 0, kRpnBox, kRoiCls, kRoiBox, kRoiMask };

struct LossWeights {
  double semantic = 1.0;
  std::array<double, 5> topdown{1.0, 1.0, 1.0, 1.0, 1.0};
  double heatmap = 10.0;
  double offset = 0.1;

  friend bool operator==(const LossWeights&, const LossWeights&) = default;
};

struct ModelConfig {
  Topology topology = Topology::MDecTD;
  std::int64_t num_classes = 0;
  std::vector<int> thing_ids;
  EncoderConfig encoder;
  ContextDecoderConfig decoder;
  TopDownConfig topdown;
  double center_sigma = 8.0;
  LossWeights weights;

  static ModelConfig for_table(const ClassTable& table, Topology topology);
  friend bool operator==(const ModelConfig&, const ModelConfig&) = default;
};

/// Unweighted supervised loss terms. Terms a topology does not produce stay
/// undefined. `instance` is the weighted instance sum and `total` = semantic + instance.
struct LossBreakdown {
  torch::Tensor semantic;
  torch::Tensor rpn_cls, rpn_box, roi_cls, roi_box, roi_mask;
  torch::Tensor heatmap, offset;
  torch::Tensor instance;
  torch::Tensor total;
  /// Stride-32 features of every encoder, retained for feature regularization.
  std::vector<torch::Tensor> bottleneck;
};

struct ModelOutput {
  torch::Tensor semantic_probs;                      // (B, C, H, W)
  torch::Tensor center;                              // (B, 1, H, W), bottom-up only
  torch::Tensor offset;                              // (B, 2, H, W), bottom-up only
  std::vector<std::vector<Detection>> detections;    // top-down only
};

struct ParameterAudit {
  std::int64_t total = 0;
  std::int64_t semantic = 0;  // parameters on the semantic path
  std::int64_t instance = 0;  // parameters on the instance path
  std::int64_t shared = 0;    // parameters on both
};

class PanopticModelImpl : public torch::nn::Module {
 public:
  explicit PanopticModelImpl(ModelConfig cfg);

  /// images (B, 3, H, W); one target set per image.
  LossBreakdown loss(const torch::Tensor& images, const std::vector<ImageTargets>& targets, Rng& rng);
  ModelOutput infer(const torch::Tensor& images);
  /// Full-resolution semantic logits.
  torch::Tensor semantic_logits(const torch::Tensor& images);
  /// Stride-32 features of every encoder, in construction order.
  std::vector<torch::Tensor> bottleneck(const torch::Tensor& images);

  std::vector<MixTransformer> encoders() const;
  ParameterAudit audit() const;
  const ModelConfig& config() const { return cfg_; }

  MixTransformer encoder{nullptr}, instance_encoder{nullptr};
  ContextDecoder trunk{nullptr}, instance_trunk{nullptr};
  SemanticHead semantic_head{nullptr};
  CenterOffsetHead center_head{nullptr};
  TopDownDecoder topdown{nullptr};

 private:
  std::vector<const torch::nn::Module*> semantic_modules() const;
  std::vector<const torch::nn::Module*> instance_modules() const;
  ModelConfig cfg_;
};
TORCH_MODULE(PanopticModel);

/// Combines the weighted terms of a breakdown into `instance` and `total`.
void finalize_losses(LossBreakdown& l, const LossWeights& w);

}  // namespace panuda::network
