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

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "panuda/fusion/fusion.hpp"
#include "panuda/network/model.hpp"
#include "panuda/toydata/scene.hpp"
#include "panuda/uda/reference_encoder.hpp"
#include "panuda/uda/trainer.hpp"

namespace panuda::harness {

/// Flat `key=value` text with dotted keys. `#` starts a comment; blank lines
/// are skipped; later assignments override earlier ones.
class KeyValues {
 public:
  static KeyValues parse(const std::string& text, const std::string& origin = "config");
  static KeyValues load(const std::filesystem::path& path);

  void set(const std::string& key, const std::string& value) { values_[key] = value; }
  const std::map<std::string, std::string>& values() const { return values_; }
  bool empty() const { return values_.empty(); }

 private:
  std::map<std::string, std::string> values_;
};

struct DataConfig {
  std::filesystem::path source_dir, target_dir, eval_dir;  // empty: generate in memory
  std::int64_t n_source = 400;
  std::int64_t n_target = 400;
  std::int64_t n_eval = 100;
  std::uint64_t seed = 0;
  toydata::SceneSpec scene;
};

struct ExperimentConfig {
  std::string profile = "desk";
  DataConfig data;
  network::Topology topology = network::Topology::MDecTD;
  network::EncoderConfig encoder;
  network::ContextDecoderConfig decoder;
  network::LossWeights loss;
  double center_sigma = 8.0;
  uda::UDAConfig uda;
  uda::PretrainConfig pretrain;
  fusion::FusionParams fusion;
  std::vector<std::uint64_t> seeds{0, 1, 2};
  std::int64_t eval_interval = 500;
  std::int64_t eval_samples = 0;  // 0: the whole evaluation split
  std::int64_t checkpoint_interval = 500;
  std::filesystem::path out = "runs/default";
  bool deterministic = true;

  /// Model configuration for a class table under this experiment.
  network::ModelConfig model_config(const ClassTable& table) const;
  void validate() const;
};

/// Defaults of the "desk" (acceptance scale) or "paper" profile.
ExperimentConfig profile_defaults(const std::string& profile);

/// Applies key=value overrides; throws on an unknown key or a malformed value.
void apply(ExperimentConfig& cfg, const KeyValues& kv);

/// Every key with its current value, sorted; parse(to_text(c)) reproduces c.
std::string to_text(const ExperimentConfig& cfg);

/// Profile defaults chosen by the `profile` key (desk when absent), then the
/// remaining keys applied on top.
ExperimentConfig resolve(const KeyValues& kv);

/// All recognised keys.
std::vector<std::string> config_keys();

}  // namespace panuda::harness
