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

#include <filesystem>
#include <ostream>

#include "panuda/core/rng.hpp"
#include "panuda/network/encoder.hpp"

namespace panuda::uda {

/// Generic pretraining task for the frozen reference encoder: per-pixel
/// labelling of one to three shapes (disk, box, triangle) drawn in random hues
/// over a random-hue, noisy two-region background. A 1x1 classifier per
/// pyramid level, upsampled and summed, reads the features.
struct PretrainConfig {
  int image_size = 64;
  std::int64_t steps = 400;
  std::int64_t batch_size = 16;
  double lr = 1e-3;
  double weight_decay = 0.01;
  std::uint64_t seed = 1234;

  void validate() const;
};

/// Batch of pretraining images (B, 3, S, S) and label maps (B, S, S): 0 for
/// background, 1 + shape index on shape pixels.
std::pair<torch::Tensor, torch::Tensor> pretrain_batch(const PretrainConfig& cfg, Rng& rng);

/// Trains an encoder on the shape task. Progress lines, including held-out
/// accuracy, go to `log` when given.
network::MixTransformer pretrain_encoder(const network::EncoderConfig& enc, const PretrainConfig& cfg, std::ostream* log = nullptr);

/// Loads the encoder cached under `cache_dir` for (enc, cfg), training and
/// storing it first when absent.
network::MixTransformer load_or_pretrain(const network::EncoderConfig& enc, const PretrainConfig& cfg, const std::filesystem::path& cache_dir,
                                         std::ostream* log = nullptr);

/// Cache directory: $PANUDA_CACHE, or ~/.cache/panuda.
std::filesystem::path default_cache_dir();

}  // namespace panuda::uda
