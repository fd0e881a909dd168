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

#include "panuda/core/types.hpp"

namespace panuda::uda {

/// Cells of `factor` x `factor` pixels that are thing pixels by strict majority.
Mask majority_pool(const Mask& thing, int factor);

/// Thing-class indicator of a semantic map.
Mask thing_mask(const Grid<std::uint8_t>& semantic, const ClassTable& table);

/// Mean over masked locations of the L2 norm of the channel-wise feature
/// difference. student/frozen (B, C, h, w); mask (B, h, w) bool. 0 on an empty mask.
torch::Tensor feature_distance_loss(const torch::Tensor& student, const torch::Tensor& frozen, const torch::Tensor& mask);

}  // namespace panuda::uda
