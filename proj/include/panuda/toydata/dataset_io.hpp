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
#include <string>

#include "panuda/core/types.hpp"

namespace panuda::toydata {

inline constexpr int kDatasetFormatVersion = 1;

/// Writes `index.json`, `images/<id>.png` (8-bit RGB), `semantic/<id>.png`
/// (8-bit gray) and `instance/<id>.png` (16-bit gray) under `dir`.
void write_dataset(const Dataset& ds, const std::filesystem::path& dir);

/// Loads a directory written by write_dataset. Throws Error on a missing
/// index or file, an unknown format version, a shape or checksum mismatch,
/// or a label that does not validate against the stored class table.
Dataset read_dataset(const std::filesystem::path& dir);

/// FNV-1a over image bytes and label maps; stored per sample in the index.
std::string sample_checksum(const Sample& s);

}  // namespace panuda::toydata
