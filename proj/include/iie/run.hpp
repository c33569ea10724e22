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


#ifndef IIE_RUN_HPP_
#define IIE_RUN_HPP_

// Experiment plumbing shared by the command-line driver and the acceptance
// binary: run configuration, trajectory records, metrics and the training
// loop that writes them.

#include <filesystem>
#include <iosfwd>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "iie/orchestrator.hpp"
#include "iie/pass_grid.hpp"
#include "iie/tabular_climb.hpp"
#include "json.hpp"

namespace iie::run {

// Invalid configuration. `field` is the dotted path of the offending key.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string field, const std::string& message)
      : std::runtime_error(field + ": " + message), field_(std::move(field)) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

struct EnvConfig {
  std::string name = "pass_grid";  // pass_grid | tabular_climb
  env::PassGridConfig pass_grid;
  env::TabularClimbConfig climb;
};

struct RunConfig {
  EnvConfig env;
  uint64_t seed = 0;
  long total_env_steps = 400000;
  long eval_interval = 10000;
  int eval_episodes = 32;
  int dump_every = 100;  // dump every n-th episode; 0 disables
  orchestrator::TrainerConfig trainer;
};

// Unknown keys and out-of-range values throw ConfigError naming the field.
RunConfig parse_config(const nlohmann::json& j);
RunConfig load_config(const std::filesystem::path& path);
nlohmann::json to_json(const RunConfig& config);

std::string mode_name(orchestrator::Mode mode);
orchestrator::Mode parse_mode(const std::string& name);

std::unique_ptr<env::Environment> make_env(const EnvConfig& config);

// One line of a trajectory dump.
struct StepRecord {
  uint64_t episode_id = 0;
  int t = 0;
  std::string state;  // hex of the canonical serialisation
  std::vector<env::Observation> obs;
  Prompt prompt;
  env::JointAction actions;
  double reward = 0.0;
  double influence = 0.0;
  bool imagined = false;
  bool boundary = false;     // first real step after an imagined prefix
  bool segment_end = false;  // a top-K influence step of a plain episode

  bool operator==(const StepRecord&) const = default;
};

nlohmann::json to_json(const StepRecord& r);
StepRecord step_record_from_json(const nlohmann::json& j);
std::vector<StepRecord> records_of(const Episode& ep, int top_k);

struct MetricsRow {
  long env_steps = 0;
  double eval_success_rate = 0.0;
  double eval_return = 0.0;
  double td_loss = 0.0;
  double imagination_loss = 0.0;
  double promptgen_loss = 0.0;
  double alpha = 1.0;
  double branch_rate = 0.0;

  static std::string header();
  std::string csv() const;
};

struct TrainSummary {
  std::vector<MetricsRow> rows;
  long teleports = 0;
  std::filesystem::path checkpoint;
};

// Runs the orchestrator to total_env_steps and writes config.json,
// metrics.csv, timing.csv, curriculum.csv, trajectories.jsonl and
// checkpoint.bin into `out`. `verbatim_config` is copied as given when
// non-empty.
TrainSummary train(const RunConfig& config, const std::filesystem::path& out,
                   const std::string& verbatim_config = {}, std::ostream* log = nullptr);

// Greedy evaluation of a checkpoint written by train().
orchestrator::EvalSummary evaluate_checkpoint(const std::filesystem::path& checkpoint,
                                              int episodes, uint64_t seed);

}  // namespace iie::run

#endif  // IIE_RUN_HPP_
