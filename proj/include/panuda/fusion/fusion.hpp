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

#include <utility>
#include <vector>

#include "panuda/core/types.hpp"

namespace panuda::fusion {

struct FusionParams {
  double score_threshold = 0.95;
  int max_instances = 200;
  double center_threshold = 0.1;
  int center_pool = 7;
  /// Keep each instance's detection class instead of the majority vote.
  bool vote_with_detection_class = false;

  void validate() const;
};

/// Binary mask at image resolution: the detection's mask logits, bilinearly
/// resampled over its box, thresholded at probability 0.5.
Mask paste_mask(const Detection& d, int height, int width);

/// Detections scoring strictly above the threshold, by descending score (stable),
/// truncated to max_instances. Detections whose pasted mask is empty are dropped.
std::vector<InstancePrediction> select_instances(const std::vector<Detection>& dets, int height, int width, const FusionParams& params);

/// Instances claim pixels in descending score order. Each instance takes the
/// majority thing class of the semantic map over its claimed pixels (its own
/// class when none is a thing). Unclaimed thing pixels become void.
PanopticLabel fuse_topdown(const Grid<std::uint8_t>& semantic, const std::vector<InstancePrediction>& instances, const ClassTable& table,
                           const FusionParams& params);

struct Center {
  int y = 0;
  int x = 0;
  float score = 0.0f;
};

/// Heatmap peaks above the threshold that equal their pooled maximum, by
/// descending score then raster order, at most max_instances.
std::vector<Center> find_centers(const Grid<float>& heatmap, const FusionParams& params);

/// Assigns every thing pixel of the semantic map to the nearest center after
/// shifting it by its offset. Instance ids follow center order; each instance
/// takes the majority class of its pixels. `instance_scores`, when given,
/// receives the center score of each emitted instance id (index id - 1).
PanopticLabel group_centers(const CenterOffsetPrediction& pred, const Grid<std::uint8_t>& semantic, const ClassTable& table, const FusionParams& params,
                            std::vector<double>* instance_scores = nullptr);

/// One InstancePrediction per instance id of a panoptic label, in id order.
std::vector<InstancePrediction> instances_of(const PanopticLabel& label, const std::vector<double>& scores);

}  // namespace panuda::fusion
