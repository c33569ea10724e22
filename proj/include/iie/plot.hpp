// Copyright 2026 The IIE Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#ifndef IIE_PLOT_HPP_
#define IIE_PLOT_HPP_

// Reading run directories back and drawing learning curves and the
// curriculum panel as standalone SVG files.

#include <filesystem>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "iie/run.hpp"

namespace iie::plot {

class NoData : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CurriculumRow {
  long env_steps = 0;
  int imagined_steps = 0;
  int distance_to_goal = -1;
  int door_open = -1;
};

struct RunData {
  std::filesystem::path dir;
  std::string mode;
  std::vector<run::MetricsRow> metrics;
  std::vector<CurriculumRow> curriculum;
};

RunData read_run(const std::filesystem::path& dir);

struct Band {
  std::string label;
  std::vector<double> x, mean, lo, hi;
};

// Mean and 95% interval of eval_success_rate across runs. Runs with a
// different x-grid are interpolated onto the coarsest grid and a warning is
// appended.
Band success_band(std::span<const RunData> runs, const std::string& label,
                  std::vector<std::string>* warnings);

// Spearman rank correlation with average ranks for ties.
double spearman(std::span<const double> x, std::span<const double> y);

// Teleport statistics in equal-width step bins: mean distance to goal and
// door-open fraction.
struct CurriculumBins {
  std::vector<double> step, distance, door_open;
  std::vector<long> count;
};
CurriculumBins curriculum_bins(std::span<const CurriculumRow> rows, int bins, long max_step);

struct Chart {
  std::string title, xlabel, ylabel;
  double ymin = 0.0, ymax = 1.0;
  std::vector<Band> bands;
};
std::string render_svg(const Chart& chart);

// Groups run directories by mode and writes success.svg and, when teleports
// were logged, curriculum.svg. Returns the written paths.
std::vector<std::filesystem::path> plot_runs(std::span<const std::filesystem::path> dirs,
                                             const std::filesystem::path& out,
                                             std::vector<std::string>* warnings);

}  // namespace iie::plot

#endif  // IIE_PLOT_HPP_
