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

#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "panuda/core/rng.hpp"
#include "panuda/core/types.hpp"
#include "panuda/fusion/fusion.hpp"
#include "panuda/network/model.hpp"
#include "panuda/uda/augment.hpp"
#include "panuda/uda/classmix.hpp"
#include "panuda/uda/rcs.hpp"

namespace panuda::uda {

struct UDAConfig {
  double alpha = 0.999;
  double tau = 0.968;
  double rcs_temperature = 0.01;
  double lambda_fd = 0.005;
  double instance_threshold = 0.95;
  bool self_training = true;
  bool mean_teacher = true;
  bool fd = true;
  bool rcs = true;

  std::int64_t iterations = 4000;
  std::int64_t batch_size = 2;
  double lr = 6e-5;
  double head_lr_mult = 10.0;
  double weight_decay = 0.01;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double warmup_fraction = 0.0375;
  double poly_power = 1.0;
  AugmentParams augment;

  void validate() const;
  /// "source-only" when self-training is off, otherwise "uda".
  std::string label() const;
};

/// Linear warmup over warmup_fraction of the run, then polynomial decay to 0.
double learning_rate(const UDAConfig& cfg, std::int64_t iteration);

struct StepLog {
  std::int64_t iteration = 0;
  double lr = 0.0;
  network::LossBreakdown source;  // detached scalars
  double fd = 0.0;
  double semantic_target = 0.0;
  double instance_target = 0.0;
  double q_mean = 0.0;
  double total = 0.0;

  nlohmann::json to_json() const;
};

/// Student, mean teacher, frozen reference encoders and optimizer.
struct TrainState {
  network::PanopticModel student{nullptr};
  network::PanopticModel teacher{nullptr};
  std::vector<network::MixTransformer> reference;
  std::unique_ptr<torch::optim::AdamW> optimizer;
  std::int64_t iteration = 0;

  /// Builds a student from `seed` (encoders initialized from `pretrained` when
  /// given), a teacher copy, frozen reference copies and the optimizer.
  static TrainState create(const network::ModelConfig& model, const UDAConfig& cfg, std::uint64_t seed,
                           const std::optional<network::MixTransformer>& pretrained);
};

/// Teacher pseudo-labels, confidences and instance proposals for a batch of target images.
std::vector<PseudoLabel> teacher_pseudo_labels(network::PanopticModel& teacher, const std::vector<const Image*>& images, const ClassTable& table,
                                               const UDAConfig& cfg);

/// One adaptation step on the given batches: teacher pseudo-labels, ClassMix,
/// student losses on source and mixed images, optimizer step, teacher update.
StepLog uda_train_step(TrainState& state, const std::vector<const Sample*>& source, const std::vector<const Sample*>& target, const UDAConfig& cfg,
                       const ClassTable& table, Rng& rng);

/// Batch sampling around uda_train_step. The step RNG derives from (seed,
/// iteration), so a run resumed from a checkpoint replays the same draws.
class Trainer {
 public:
  Trainer(network::ModelConfig model, UDAConfig cfg, const Dataset& source, const Dataset& target, std::uint64_t seed,
          const std::optional<network::MixTransformer>& pretrained);

  StepLog step();
  TrainState& state() { return state_; }
  const UDAConfig& config() const { return cfg_; }
  const network::ModelConfig& model_config() const { return model_; }
  std::uint64_t seed() const { return seed_; }

  void save(const std::filesystem::path& dir) const;
  /// Restores a checkpoint written by save; throws on a version or configuration mismatch.
  void load(const std::filesystem::path& dir);

 private:
  network::ModelConfig model_;
  UDAConfig cfg_;
  const Dataset& source_;
  const Dataset& target_;
  std::uint64_t seed_;
  std::optional<RCSampler> rcs_;
  TrainState state_;
};

inline constexpr int kCheckpointFormatVersion = 1;

/// Parsed state.json of a checkpoint directory; throws on a missing file or
/// an unsupported format version.
nlohmann::json read_checkpoint_meta(const std::filesystem::path& dir);

/// Tensor from an Image batch, (B, 3, H, W).
torch::Tensor batch_images(const std::vector<const Image*>& images);

/// Targets for a mixed image.
network::ImageTargets targets_from_mix(const MixResult& mix, const ClassTable& table);

}  // namespace panuda::uda
