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

#include <cstddef>
#include <vector>

#include "panuda/core/rng.hpp"
#include "panuda/core/types.hpp"

namespace panuda::uda {

/// P(c) = exp((1 - f_c) / T) / sum_c' exp((1 - f_c') / T), evaluated after
/// subtracting the largest exponent.
std::vector<double> rcs_probabilities(const std::vector<double>& frequencies, double temperature);

/// Two-stage rare-class sampler: draw a class from P, then a sample uniformly
/// from the samples containing it. Classes without samples are dropped and P
/// renormalized over the rest.
class RCSampler {
 public:
  RCSampler(const std::vector<double>& frequencies, double temperature, std::vector<std::vector<std::size_t>> per_class_index);

  struct Draw {
    int class_id;
    std::size_t sample;
  };
  Draw draw(Rng& rng) const;

  /// Effective probabilities after excluding empty classes.
  const std::vector<double>& probabilities() const { return probs_; }

 private:
  std::vector<double> probs_;
  std::vector<double> cumulative_;
  std::vector<std::vector<std::size_t>> index_;
};

}  // namespace panuda::uda
