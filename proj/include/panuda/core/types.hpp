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

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace panuda {

/// Sentinel semantic id for unlabeled pixels. Ignored by every loss and metric.
inline constexpr std::uint8_t kVoid = 255;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class ClassKind { Stuff, Thing };

struct ClassInfo {
  int id = 0;
  std::string name;
  ClassKind kind = ClassKind::Stuff;
  std::array<std::uint8_t, 3> color{0, 0, 0};
};

/// Ordered class list. Ids are contiguous from 0, names unique, and both kinds
/// are represented; the constructor throws otherwise.
class ClassTable {
 public:
  ClassTable() = default;
  explicit ClassTable(std::vector<ClassInfo> entries);

  /// 5 stuff classes (sky, ground, wall, road, vegetation) followed by 3 thing
  /// classes (disk, box, triangle).
  static ClassTable toy_default();

  int size() const { return static_cast<int>(entries_.size()); }
  const ClassInfo& operator[](int id) const { return entries_.at(static_cast<std::size_t>(id)); }
  const std::vector<ClassInfo>& entries() const { return entries_; }

  bool contains(int id) const { return id >= 0 && id < size(); }
  bool is_thing(int id) const { return contains(id) && entries_[static_cast<std::size_t>(id)].kind == ClassKind::Thing; }
  bool is_stuff(int id) const { return contains(id) && entries_[static_cast<std::size_t>(id)].kind == ClassKind::Stuff; }
  std::vector<int> thing_ids() const;
  std::vector<int> stuff_ids() const;
  /// Position of a thing class among thing_ids(), or -1.
  int thing_index(int id) const;

  friend bool operator==(const ClassTable& a, const ClassTable& b);

 private:
  std::vector<ClassInfo> entries_;
};

bool operator==(const ClassInfo& a, const ClassInfo& b);

/// Row-major H×W map.
template <typename T>
struct Grid {
  int height = 0;
  int width = 0;
  std::vector<T> data;

  Grid() = default;
  Grid(int h, int w, T fill = T{}) : height(h), width(w), data(static_cast<std::size_t>(h) * static_cast<std::size_t>(w), fill) {}

  std::size_t size() const { return data.size(); }
  T& at(int y, int x) { return data[static_cast<std::size_t>(y) * static_cast<std::size_t>(width) + static_cast<std::size_t>(x)]; }
  const T& at(int y, int x) const { return data[static_cast<std::size_t>(y) * static_cast<std::size_t>(width) + static_cast<std::size_t>(x)]; }
  T& operator[](std::size_t i) { return data[i]; }
  const T& operator[](std::size_t i) const { return data[i]; }
  bool same_shape(int h, int w) const { return height == h && width == w; }
  template <typename U>
  bool same_shape(const Grid<U>& o) const { return height == o.height && width == o.width; }

  friend bool operator==(const Grid& a, const Grid& b) = default;
};

using Mask = Grid<std::uint8_t>;

/// Planar (CHW) RGB image with values in [0,1].
struct Image {
  int height = 0;
  int width = 0;
  std::vector<float> data;  // 3 * height * width, plane by plane

  Image() = default;
  Image(int h, int w) : height(h), width(w), data(3 * static_cast<std::size_t>(h) * static_cast<std::size_t>(w), 0.0f) {}

  std::size_t plane_size() const { return static_cast<std::size_t>(height) * static_cast<std::size_t>(width); }
  float* plane(int c) { return data.data() + static_cast<std::size_t>(c) * plane_size(); }
  const float* plane(int c) const { return data.data() + static_cast<std::size_t>(c) * plane_size(); }
  float& at(int c, int y, int x) { return plane(c)[static_cast<std::size_t>(y) * static_cast<std::size_t>(width) + static_cast<std::size_t>(x)]; }
  float at(int c, int y, int x) const { return plane(c)[static_cast<std::size_t>(y) * static_cast<std::size_t>(width) + static_cast<std::size_t>(x)]; }

  friend bool operator==(const Image& a, const Image& b) = default;
};

/// Paired semantic-class and instance-id maps. Instance 0 means "no instance".
struct PanopticLabel {
  Grid<std::uint8_t> semantic;
  Grid<std::uint16_t> instance;

  PanopticLabel() = default;
  PanopticLabel(int h, int w) : semantic(h, w, kVoid), instance(h, w, 0) {}

  int height() const { return semantic.height; }
  int width() const { return semantic.width; }

  friend bool operator==(const PanopticLabel& a, const PanopticLabel& b) = default;
};

enum class Domain { Source, Target };

std::string to_string(Domain d);
Domain domain_from_string(const std::string& s);

struct Sample {
  std::string id;
  Domain domain = Domain::Source;
  Image image;
  std::optional<PanopticLabel> label;

  friend bool operator==(const Sample& a, const Sample& b) = default;
};

class Dataset {
 public:
  Dataset() = default;
  Dataset(std::vector<Sample> samples, ClassTable table);

  std::size_t size() const { return samples_.size(); }
  const Sample& operator[](std::size_t i) const { return samples_.at(i); }
  const std::vector<Sample>& samples() const { return samples_; }
  const ClassTable& class_table() const { return table_; }
  /// Indices of samples whose label holds at least one pixel of class c.
  const std::vector<std::size_t>& samples_with_class(int c) const { return per_class_index_.at(static_cast<std::size_t>(c)); }
  const std::vector<std::vector<std::size_t>>& per_class_index() const { return per_class_index_; }

  friend bool operator==(const Dataset& a, const Dataset& b);

 private:
  std::vector<Sample> samples_;
  ClassTable table_;
  std::vector<std::vector<std::size_t>> per_class_index_;
};

struct Box {
  double x0 = 0, y0 = 0, x1 = 0, y1 = 0;  // pixel-edge coordinates, x1/y1 exclusive

  double width() const { return x1 - x0; }
  double height() const { return y1 - y0; }
  double area() const { return width() > 0 && height() > 0 ? width() * height() : 0.0; }
};

double box_iou(const Box& a, const Box& b);

/// Tight pixel-edge bounds of a non-empty mask.
Box mask_bounds(const Mask& mask);

struct InstancePrediction {
  Mask mask;
  int class_id = 0;
  double score = 0.0;
};

/// Detector output for one image in a torch-free form.
struct Detection {
  Box box;
  int class_id = 0;
  double score = 0.0;
  int mask_size = 0;               // side of the square mask logit grid
  std::vector<float> mask_logits;  // mask_size * mask_size, row-major over the box
};

struct CenterOffsetPrediction {
  Grid<float> center;    // heatmap in [0,1]
  Grid<float> offset_y;  // pixels
  Grid<float> offset_x;
};

}  // namespace panuda
