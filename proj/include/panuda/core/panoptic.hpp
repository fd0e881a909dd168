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
#include <string>
#include <vector>

#include "panuda/core/types.hpp"

namespace panuda {

/// One connected-by-identity region: a stuff class (instance 0), a thing
/// instance, or the void region (class kVoid).
struct Segment {
  int class_id = 0;
  int instance_id = 0;
  std::vector<std::uint32_t> pixels;  // row-major indices, ascending
};

/// Lists every invariant breach of `label` against `table`. Empty means valid.
std::vector<std::string> validate_panoptic(const PanopticLabel& label, const ClassTable& table);

/// Throws Error listing the violations when the label is invalid.
void require_valid(const PanopticLabel& label, const ClassTable& table, const std::string& what = "label");

/// Partitions the label's pixels into segments sorted by (class, instance).
/// Void pixels, when present, form the last segment with class kVoid.
std::vector<Segment> extract_segments(const PanopticLabel& label, const ClassTable& table);

/// Per-class pixel counts (void excluded); size = table.size().
std::vector<std::uint64_t> class_pixel_counts(const PanopticLabel& label, int num_classes);

}  // namespace panuda
