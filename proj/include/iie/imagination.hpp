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


#ifndef IIE_IMAGINATION_HPP_
#define IIE_IMAGINATION_HPP_

// Prompt-conditioned causal transformer over flattened multi-agent
// trajectories. Per step the token order is
//   s_t, o^1_t .. o^n_t, P_t, u^1_t .. u^n_t, r_t.
// Predictions: s_t from the r_{t-1} position, u^1_t from P_t, u^{a+1}_t from
// u^a_t, r_t from u^n_t. Observations come from a separate head that reads
// only the s_t input embedding. Prompts are inputs only.

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "iie/checkpoint.hpp"
#include "iie/env.hpp"
#include "iie/episode.hpp"
#include "iie/layers.hpp"
#include "iie/optim.hpp"
#include "iie/segmenter.hpp"

namespace iie::imagination {

enum class Modality { kState, kObs, kPrompt, kAction, kReward };

struct Token {
  Modality modality = Modality::kState;
  int timestep = 0;
  int agent = -1;           // obs and action tokens only
  std::vector<int> fields;  // state/obs fields, {action} or {reward bin}
  Prompt prompt;            // prompt tokens only

  bool operator==(const Token&) const = default;
};

struct TokenSequence {
  std::vector<Token> tokens;
  std::optional<size_t> demo_boundary;  // index of the first live token
};

struct DemoMix {
  double demo_prob = 0.5;
  double self_prob = 0.5;
};

struct ImaginationConfig {
  int n_layer = 6;
  int n_head = 8;
  int n_embd = 64;
  int mlp_hidden = 256;
  int obs_head_hidden = 128;
  double lr = 6e-4;
  double weight_decay = 0.1;
  double beta1 = 0.9;
  double beta2 = 0.95;
  double grad_clip = 1.0;
  int reward_bins = 21;     // integer bins over [0, reward_bins - 1]
  int context_steps = 0;    // 0: the environment horizon
  DemoMix demos;
};

// Discrete layout the model needs from an environment.
struct Layout {
  int n_agents = 0;
  int n_actions = 0;
  int horizon = 0;
  std::vector<int> state_fields;
  std::vector<int> obs_fields;

  static Layout of(const env::Environment& env);
};

int reward_bin(double reward, int bins);

// Flattens a relabelled segment.
TokenSequence tokenize(const segment::Segment& segment, const env::Environment& env);

// Fields recovered from a token sequence, one entry per step.
struct DecodedStep {
  std::vector<int> state_fields;
  std::vector<std::vector<int>> obs_fields;
  Prompt prompt;
  env::JointAction actions;
  int reward_bin = 0;
  int timestep = 0;
};
std::vector<DecodedStep> detokenize(const TokenSequence& seq, int n_agents);

// Keeps the last `max_demo_steps` steps of the demo in front of `live` and
// marks the boundary. Only the live part carries loss targets.
TokenSequence prepend_demo(const TokenSequence& demo, const TokenSequence& live, int max_demo_steps,
                           int n_agents);

// Training view of `live`: with probability demo_prob a demonstration is
// prepended as context. It is `live` itself with probability self_prob
// (retrieval of a stored segment's own descriptor returns that segment),
// otherwise a uniform pool draw. Three uniforms are consumed per call.
TokenSequence training_view(const TokenSequence& live, std::span<const TokenSequence* const> pool,
                            const DemoMix& mix, int context_steps, int n_agents, nn::Rng& rng);

struct LossTerms {
  double state = 0.0;
  double obs = 0.0;
  double action = 0.0;
  double reward = 0.0;
  double total() const { return state + obs + action + reward; }
};

struct Accuracy {
  long correct = 0;
  long total = 0;
  double rate() const { return total ? static_cast<double>(correct) / total : 1.0; }
};

// Which likelihood terms enter a loss.
struct TermMask {
  bool state = true;
  bool obs = true;
  bool action = true;
  bool reward = true;
};

// Per-position head outputs of one forward pass. Rows follow token order.
struct HeadOutputs {
  Mat hidden;        // [L, n_embd] final-layer outputs
  Mat state_logits;  // [L, sum(state_fields)]
  Mat action_logits; // [L, n_actions]
  Mat reward_logits; // [L, reward_bins]
  Mat obs_logits;    // [steps * n_agents, sum(obs_fields)], row t * n + a
};

// Per-field probabilities of one categorical group layout.
std::vector<std::vector<double>> group_softmax(std::span<const double> logits,
                                               std::span<const int> sizes);

struct ImaginedStep {
  std::vector<int> state_fields;
  std::vector<std::vector<int>> obs_fields;
  Prompt prompt;
  env::JointAction actions;
  int reward_bin = 0;
  double reward = 0.0;
};

struct ImaginedTrajectory {
  std::vector<ImaginedStep> steps;
  std::vector<int> terminal_fields;  // s_T
  int demo_steps = 0;                // demonstration steps that were in context
};

class ImaginationModel {
 public:
  ImaginationModel(Layout layout, ImaginationConfig config, uint64_t seed);

  const Layout& layout() const { return layout_; }
  const ImaginationConfig& config() const { return config_; }
  int context_steps() const { return context_steps_; }
  int tokens_per_step() const { return 2 * layout_.n_agents + 3; }
  long updates() const { return updates_; }
  bool trained() const { return updates_ > 0; }

  // Differentiable mean negative log-likelihood per step over the batch,
  // plus the per-term breakdown.
  ad::Tensor loss(std::span<const TokenSequence> batch, LossTerms* terms = nullptr,
                  const TermMask& mask = {}, Accuracy* accuracy = nullptr) const;
  // One AdamW step with gradient clipping. Returns the loss before the step.
  double train_step(std::span<const TokenSequence> batch, LossTerms* terms = nullptr);

  // Full forward pass over one sequence (no demo handling).
  HeadOutputs decode_heads(const TokenSequence& seq) const;

  // Greedy autoregressive rollout from s0 for prompt.timesteps transitions.
  // The demonstration, if any, is prepended and truncated from its front to
  // fit the context; it is not part of the result.
  ImaginedTrajectory rollout(std::span<const int> s0_fields, const Prompt& prompt,
                             const TokenSequence* demo) const;

  nn::ParameterSet& parameters() { return params_; }
  void save(Checkpoint& ckpt) const;
  void load(const Checkpoint& ckpt);

 private:
  struct Block {
    nn::LayerNorm ln1, ln2;
    nn::Linear qkv, proj, fc, out;
  };
  class Cache;

  int prompt_width() const;
  void encode_prompt(const Prompt& p, Eigen::Ref<Eigen::RowVectorXd> row) const;
  // roles[i] is 1 for demonstration tokens, 0 for live ones; null means all live.
  ad::Tensor embed(std::span<const Token> tokens, ad::Tensor* state_embeddings,
                   std::vector<int>* state_rows, const std::vector<int>* roles = nullptr) const;
  ad::Tensor trunk(const ad::Tensor& x, const std::vector<int>& lengths) const;
  ad::Tensor obs_head(const ad::Tensor& state_emb, std::span<const int> agents) const;
  Mat feed(Cache& cache, const Token& token, Mat* state_embedding, int role = 0) const;

  Layout layout_;
  ImaginationConfig config_;
  int context_steps_;
  int state_width_, obs_width_;
  std::vector<kernels::Group> state_groups_, obs_groups_;
  nn::Rng init_rng_;
  nn::ParameterSet params_;
  nn::Linear emb_state_, emb_obs_, emb_prompt_, emb_action_, emb_reward_;
  nn::LayerNorm ln_state_, ln_obs_, ln_prompt_, ln_action_, ln_reward_;
  nn::Embedding time_emb_, slot_emb_, role_emb_;
  std::vector<Block> blocks_;
  nn::LayerNorm ln_f_;
  nn::Linear head_state_, head_action_, head_reward_;
  nn::Linear obs_fc1_, obs_fc2_;
  std::unique_ptr<nn::AdamW> optim_;
  long updates_ = 0;
};

}  // namespace iie::imagination

#endif  // IIE_IMAGINATION_HPP_
