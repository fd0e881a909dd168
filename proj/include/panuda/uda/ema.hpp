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

namespace panuda::uda {

/// teacher <- alpha * teacher + (1 - alpha) * student over every parameter and
/// floating-point buffer. Modules must have identical structure.
void ema_update(torch::nn::Module& teacher, const torch::nn::Module& student, double alpha);

/// teacher <- student, parameter by parameter.
void copy_parameters(torch::nn::Module& teacher, const torch::nn::Module& student);

/// Marks every parameter of `m` as not requiring gradients.
void freeze(torch::nn::Module& m);

}  // namespace panuda::uda
