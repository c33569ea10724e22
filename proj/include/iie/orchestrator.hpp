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


#ifndef IIE_ORCHESTRATOR_HPP_
#define IIE_ORCHESTRATOR_HPP_

// Outer training loop: pretraining, the alpha-scheduled branch between plain
// episodes and imagine-teleport-explore episodes, stitching, replay and the
// coordinated updates of the policy, prompt generator and imagination model.

#include <cstdint>
#include <deque>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "iie/env.hpp"
#include "iie/episode.hpp"
#include "iie/imagination.hpp"
#include "iie/influence.hpp"
#include "iie/policy.hpp"
#include "iie/promptgen.hpp"
#include "iie/segmenter.hpp"

namespace iie::orchestrator {

struct Schedule {
  long pretrain_end = 20000;
  long anneal_end = 40000;
  double alpha_lo = 0.5;

  // 1 before pretrain_end, linear to alpha_lo at anneal_end, alpha_lo after.
  double alpha(long step) const;
  void validate() const;
};

// Episode-level FIFO with uniform sampling without replacement.
class ReplayBuffer {
 public:
  explicit ReplayBuffer(size_t capacity = 5000);

  void add(Episode episode);
  size_t size() const { return episodes_.size(); }
  size_t capacity() const { return capacity_; }
  const Episode& at(size_t i) const { return episodes_[i]; }
  std::vector<const Episode*> sample(size_t batch, nn::Rng& rng) const;

 private:
  size_t capacity_;
  std::deque<Episode> episodes_;
};

// Imagined prefix followed by the real episode that starts at its terminal
// state. Throws std::logic_error when the boundary states differ.
Episode stitch(const imagination::ImaginedTrajectory& imagined, const Episode& real,
               const env::Environment& env);

enum class Mode { kIie, kBaseline };

struct TrainerConfig {
  Mode mode = Mode::kIie;
  Schedule schedule;
  policy::EpsilonSchedule epsilon;
  policy::PolicyConfig policy;
  promptgen::PromptGenConfig promptgen;
  imagination::ImaginationConfig imagination;
  int top_k = 4;
  double lambda = 0.2;
  size_t demo_capacity = 512;
  size_t buffer_capacity = 5000;
  int imagination_batch = 8;
  int imagination_updates = 1;  // per plain episode
  int promptgen_batch = 32;
};

struct TeleportRecord {
  long env_steps = 0;
  uint64_t episode_id = 0;
  Prompt prompt;
  int imagined_steps = 0;
  env::EnvState target;
  bool used_demo = false;
};

struct IterationStats {
  uint64_t episode_id = 0;
  bool imagine_branch = false;   // z > alpha
  bool teleported = false;
  bool fallback = false;         // imagine branch that had to play from s_0
  int real_steps = 0;
  int imagined_steps = 0;
  double episode_return = 0.0;   // real steps only
  bool success = false;
  std::optional<double> td_loss;
  std::optional<double> imagination_loss;
  std::optional<double> promptgen_loss;
};

struct EvalSummary {
  int episodes = 0;
  double success_rate = 0.0;
  double success_ci = 0.0;  // half-width of the 95% interval
  double mean_return = 0.0;
  double return_ci = 0.0;
};

// Normal-approximation half-width of the 95% interval of the mean.
double ci95(std::span<const double> values);

// Independent generators derived from one seed.
struct Streams {
  explicit Streams(uint64_t seed);
  nn::Rng action, buffer, branch, prompt, model, eval;
};

class Trainer {
 public:
  Trainer(std::unique_ptr<env::Environment> env, TrainerConfig config, uint64_t seed);

  IterationStats run_iteration();
  // Greedy episodes from reset() on a separate environment and generator.
  EvalSummary evaluate(int episodes);

  long env_steps() const { return env_steps_; }
  long iterations() const { return iterations_; }
  long teleports() const { return teleports_; }
  double alpha() const;
  const TrainerConfig& config() const { return config_; }
  const env::Environment& env() const { return *env_; }
  const ReplayBuffer& buffer() const { return buffer_; }
  const segment::DemoStore& demos() const { return demos_; }
  const std::vector<TeleportRecord>& teleport_log() const { return teleport_log_; }
  policy::QLearner& learner() { return learner_; }
  const policy::QLearner& learner() const { return learner_; }
  promptgen::PromptGenerator& prompt_generator() { return promptgen_; }
  imagination::ImaginationModel& imagination_model() { return model_; }

  // Called with every real joint action, in order.
  std::function<void(const env::JointAction&)> on_action;
  // Called with every episode that enters the replay buffer.
  std::function<void(const Episode&)> on_episode;

  void save(Checkpoint& ckpt) const;
  void load(const Checkpoint& ckpt);

 private:
  // Plays epsilon-greedily until the episode ends, starting from `start`.
  Episode play(const env::Reset& start, policy::AgentMemory memory, bool record_influence);
  std::optional<Episode> imagine_and_explore(IterationStats& stats);
  void learn_from_plain(const Episode& ep, IterationStats& stats);
  const imagination::TokenSequence& tokens_of(const segment::Segment& seg);

  std::unique_ptr<env::Environment> env_;
  std::unique_ptr<env::Environment> eval_env_;
  TrainerConfig config_;
  Streams streams_;
  policy::QLearner learner_;
  promptgen::PromptGenerator promptgen_;
  imagination::ImaginationModel model_;
  ReplayBuffer buffer_;
  segment::DemoStore demos_;
  std::unordered_map<uint64_t, imagination::TokenSequence> token_cache_;
  std::vector<TeleportRecord> teleport_log_;
  long env_steps_ = 0;
  long iterations_ = 0;
  long teleports_ = 0;
  uint64_t next_episode_id_ = 0;
  uint64_t next_segment_id_ = 0;
};

}  // namespace iie::orchestrator

#endif  // IIE_ORCHESTRATOR_HPP_
