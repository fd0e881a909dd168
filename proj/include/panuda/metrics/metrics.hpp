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
#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "panuda/core/types.hpp"

namespace panuda::metrics {

/// Segment key: (class, instance id), instance 0 for stuff.
struct SegmentKey {
  int class_id = 0;
  int instance_id = 0;
  friend auto operator<=>(const SegmentKey&, const SegmentKey&) = default;
};

struct SegmentMatch {
  SegmentKey pred;
  SegmentKey gt;
  double iou = 0.0;
};

struct ClassCounts {
  double iou_sum = 0.0;
  std::int64_t tp = 0;
  std::int64_t fp = 0;
  std::int64_t fn = 0;

  friend bool operator==(const ClassCounts&, const ClassCounts&) = default;
};

struct MatchResult {
  std::vector<SegmentMatch> matches;     // sorted by gt key
  std::vector<SegmentKey> false_positives;  // sorted
  std::vector<SegmentKey> false_negatives;  // sorted
  std::vector<ClassCounts> per_class;
};

/// Same-class matching at IoU > 0.5. Void ground-truth pixels are removed from
/// the union, and unmatched predictions lying more than half on void are not
/// counted as false positives. Void predicted pixels form no segment.
MatchResult match_segments(const PanopticLabel& pred, const PanopticLabel& gt, const ClassTable& table);

struct ClassQuality {
  double pq = 0.0, sq = 0.0, rq = 0.0;
  std::int64_t tp = 0, fp = 0, fn = 0;
  bool present = false;  // tp + fp + fn > 0
};

struct PQReport {
  std::vector<std::string> class_names;
  std::vector<ClassQuality> per_class;
  double mpq = 0.0, msq = 0.0, mrq = 0.0;
  double miou = 0.0;
  double map = 0.0;
  std::vector<double> class_iou;  // NaN-free; 0 for absent classes
  std::vector<double> class_ap;   // -1 for classes without ground truth
  std::int64_t images = 0;

  nlohmann::json to_json() const;
  static PQReport from_json(const nlohmann::json& j);
  /// One row per class plus a final "mean" row: class,PQ,SQ,RQ,TP,FP,FN.
  std::string to_csv() const;
};

/// PQ = sum IoU / (TP + FP/2 + FN/2), SQ = sum IoU / TP, RQ = TP / (TP + FP/2 + FN/2).
ClassQuality class_quality(const ClassCounts& c);

/// Dataset-wide accumulation of match counts; merge is associative and order-independent.
class PQAccumulator {
 public:
  explicit PQAccumulator(int num_classes) : counts_(static_cast<std::size_t>(num_classes)) {}
  void add(const MatchResult& m);
  void merge(const PQAccumulator& other);
  const std::vector<ClassCounts>& counts() const { return counts_; }
  /// Fills per_class, mPQ, mSQ and mRQ; means run over present classes.
  void fill(PQReport& report) const;

 private:
  std::vector<ClassCounts> counts_;
};

/// Semantic confusion matrix; void ground truth is ignored, void predictions count as misses.
class ConfusionMatrix {
 public:
  explicit ConfusionMatrix(int num_classes);
  void add(const Grid<std::uint8_t>& pred, const Grid<std::uint8_t>& gt);
  void merge(const ConfusionMatrix& other);
  /// Per-class IoU (0 when the class is absent from both) and the mean over present classes.
  std::pair<std::vector<double>, double> iou() const;

 private:
  int n_;
  std::vector<std::int64_t> m_;  // n x (n + 1), last column is void prediction
};

/// COCO-style mask AP at IoU thresholds 0.50:0.05:0.95 with an all-point
/// precision envelope. Classes without ground truth are excluded from the mean.
class MaskAPAccumulator {
 public:
  explicit MaskAPAccumulator(const ClassTable& table);
  void add(const std::vector<InstancePrediction>& preds, const PanopticLabel& gt);
  void merge(const MaskAPAccumulator& other);
  /// Per-class AP (-1 without ground truth) and mAP.
  std::pair<std::vector<double>, double> result() const;

  static constexpr int kThresholds = 10;
  static double threshold(int i) { return static_cast<double>(10 + i) / 20.0; }

 private:
  struct Scored {
    double score;
    std::int64_t order;
    std::array<bool, kThresholds> tp;
  };
  ClassTable table_;
  std::vector<std::vector<Scored>> preds_;
  std::vector<std::int64_t> gt_count_;
  std::int64_t next_order_ = 0;
};

/// Area under the all-point precision envelope for score-sorted TP flags.
double average_precision(const std::vector<bool>& tp_sorted, std::int64_t num_gt);

/// mPQ_UDA / mPQ_Sup in percent.
double relative_uda(double mpq_uda, double mpq_supervised);

}  // namespace panuda::metrics
