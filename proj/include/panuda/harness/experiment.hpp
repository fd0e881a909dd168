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
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"
#include "panuda/core/types.hpp"
#include "panuda/harness/config.hpp"
#include "panuda/metrics/metrics.hpp"

namespace panuda::harness {

struct Datasets {
  Dataset source;
  Dataset target;  // unlabeled training split
  Dataset eval;    // labeled target split
};

/// Reads the configured directories, or renders the splits in memory when a
/// directory is not set. Throws when the class tables differ.
Datasets prepare_data(const ExperimentConfig& cfg);

/// Writes source/, target/ and eval/ under `out`; refuses a non-empty directory.
void generate_data(const ExperimentConfig& cfg, const std::filesystem::path& out);

/// Single-threaded, deterministic kernels.
void set_deterministic(bool on);

struct RunSummary {
  std::string label;  // "uda" or "source-only"
  std::uint64_t seed = 0;
  std::int64_t iterations = 0;
  std::int64_t best_iteration = 0;
  double seconds = 0.0;
  bool complete = true;
  metrics::PQReport final_report;
  metrics::PQReport best_report;
  network::ParameterAudit audit;

  nlohmann::json to_json() const;
  static RunSummary from_json(const nlohmann::json& j);
};

/// Trains one seed into `out`: config.resolved, log.jsonl, eval.jsonl,
/// checkpoints/{latest,best,final}, report.json, report.csv and run.json.
/// Resumes from checkpoints/latest when present. A positive `stop_after`
/// saves checkpoints/latest and returns after that many steps of this call; the
/// summary then has `complete` false and no reports.
RunSummary train_run(const ExperimentConfig& cfg, std::uint64_t seed, const Datasets& data, const std::filesystem::path& out, std::ostream* log,
                     std::int64_t stop_after = 0);

/// Loads checkpoints/<which> of a run directory and evaluates it on `data`.
metrics::PQReport evaluate_checkpoint(const ExperimentConfig& cfg, const std::filesystem::path& checkpoint, const Dataset& data);

/// One named row of a study or ablation: configuration overrides applied to a base config.
struct Cell {
  std::string name;
  KeyValues overrides;
};

struct RowStats {
  std::string name;
  std::vector<RunSummary> runs;
  double mean(double metrics::PQReport::*field) const;
  double stddev(double metrics::PQReport::*field) const;
};

/// Runs every cell over cfg.seeds with a fresh state each, under out/<cell>/seed-<s>.
/// Completed runs whose resolved configuration matches are reused.
std::vector<RowStats> run_cells(const ExperimentConfig& base, const std::vector<Cell>& cells, const std::filesystem::path& out, std::ostream* log);

/// Cells of the four topologies.
std::vector<Cell> study_cells();
/// Cumulative Self-Tr., MT, FD, RCS rows, starting from source-only.
std::vector<Cell> uda_ablation_cells();
/// Eight loss masks over (rpn_cls, rpn_box, roi_cls, roi_box, roi_mask).
std::vector<Cell> instance_loss_cells();

/// mean ± std table: name,mAP,mAP_std,mIoU,mIoU_std,mSQ,mSQ_std,mRQ,mRQ_std,mPQ,mPQ_std (percent).
std::string table_csv(const std::vector<RowStats>& rows);

/// Writes plots/loss.png, plots/pq.png and, when a final checkpoint exists,
/// plots/overlay.png (image, ground truth, prediction for the first eval
/// samples). Throws on a directory without log.jsonl. Returns the files written.
std::vector<std::filesystem::path> plot_run(const std::filesystem::path& run_dir);

/// Bar chart of mPQ and mAP means per row.
void plot_table(const std::vector<RowStats>& rows, const std::string& title, const std::filesystem::path& path);

}  // namespace panuda::harness
