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

#include <vector>

#include "panuda/core/types.hpp"
#include "panuda/fusion/fusion.hpp"
#include "panuda/metrics/metrics.hpp"
#include "panuda/network/model.hpp"

namespace panuda::harness {

/// Model output for one image after fusion.
struct Prediction {
  Grid<std::uint8_t> semantic;
  PanopticLabel panoptic;
  std::vector<InstancePrediction> scored_instances;  // ranked instances for mask AP
};

/// Score floor for the ranked detections that enter mask AP.
inline constexpr double kApScoreThreshold = 0.05;

/// Runs the model and the topology's fusion path over a batch.
std::vector<Prediction> predict(network::PanopticModel& model, const std::vector<const Image*>& images, const ClassTable& table,
                                const fusion::FusionParams& params);

/// Dataset-wide accumulation of PQ counts, the semantic confusion matrix and mask AP.
class ReportBuilder {
 public:
  explicit ReportBuilder(const ClassTable& table);
  void add(const Prediction& pred, const PanopticLabel& gt);
  metrics::PQReport finish() const;

 private:
  ClassTable table_;
  metrics::PQAccumulator pq_;
  metrics::ConfusionMatrix confusion_;
  metrics::MaskAPAccumulator ap_;
  std::int64_t images_ = 0;
};

/// Evaluates on the labeled samples of `data` (the first `max_samples` when > 0).
metrics::PQReport evaluate_model(network::PanopticModel& model, const Dataset& data, const fusion::FusionParams& params, std::size_t max_samples = 0,
                                 std::int64_t batch_size = 4);

/// Scores the ground truth against itself through the same path; every metric is 1.
metrics::PQReport evaluate_ground_truth(const Dataset& data);

}  // namespace panuda::harness
