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


#ifndef IIE_POLICY_HPP_
#define IIE_POLICY_HPP_

// Recurrent per-agent Q-networks with shared parameters, a monotonic
// hypernetwork mixer, and their TD learner.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "iie/checkpoint.hpp"
#include "iie/env.hpp"
#include "iie/episode.hpp"
#include "iie/layers.hpp"
#include "iie/optim.hpp"

namespace iie::policy {

struct PolicyConfig {
  int hidden_dim = 64;
  int mixer_embed = 32;
  double gamma = 0.99;
  double lr = 5e-4;
  double rms_alpha = 0.99;
  double rms_eps = 1e-5;
  double grad_clip = 10.0;
  int target_interval = 200;  // TD updates between target copies
  int batch_size = 32;
};

// Linear decay from `start` to `end` over `anneal_steps`, flat afterwards.
struct EpsilonSchedule {
  double start = 1.0;
  double end = 0.05;
  long anneal_steps = 50000;

  double operator()(long step) const;
};

// Hidden state of every agent's GRU, one row per agent.
struct AgentMemory {
  Mat hidden;
  env::JointAction last_action;
};

// Per-agent utilities: input obs ++ one-hot(agent id) -> fc -> ReLU -> GRU
// -> fc. All agents share the weights.
class AgentNetwork {
 public:
  AgentNetwork(nn::ParameterSet& ps, const std::string& prefix, int obs_dim, int n_agents,
               int n_actions, int hidden, nn::Rng& rng);

  // inputs [R, obs_dim + n_agents], h [R, hidden]; returns q [R, n_actions]
  // and writes the next hidden state.
  ad::Tensor forward(const ad::Tensor& inputs, const ad::Tensor& h, ad::Tensor& h_next) const;
  // Row a of the result is obs[a] ++ one-hot(a).
  Mat inputs(std::span<const env::Observation> obs) const;

  int input_dim() const { return obs_dim_ + n_agents_; }
  int hidden_dim() const { return hidden_; }
  int n_actions() const { return n_actions_; }

  nn::Linear fc1, fc2;
  nn::GruCell gru;

 private:
  int obs_dim_, n_agents_, n_actions_, hidden_;
};

// Q_tot = |W2(s)|^T elu(|W1(s)|^T q + b1(s)) + V(s). Every weight that
// multiplies q passes through abs, so dQ_tot/dq_a >= 0.
class Mixer {
 public:
  Mixer(nn::ParameterSet& ps, const std::string& prefix, int state_dim, int n_agents,
        int embed, nn::Rng& rng);

  // q [B, n_agents], states [B, state_dim] -> [B, 1].
  ad::Tensor forward(const ad::Tensor& q, const ad::Tensor& states) const;
  double apply(std::span<const double> q, std::span<const double> state) const;

  int n_agents() const { return n_agents_; }
  int embed() const { return embed_; }

  nn::Linear hyper_w1, hyper_b1, hyper_w2, v1, v2;

 private:
  int n_agents_, embed_;
};

// Greedy per agent over available actions (lowest index wins ties); with
// probability epsilon an agent instead picks uniformly among its available
// actions. Draws exactly one uniform per agent plus one index per exploring
// agent.
env::JointAction select_actions(const Mat& q, const env::AvailActions& avail, double epsilon,
                                nn::Rng& rng);

// Online and target networks plus the RMSProp TD learner.
class QLearner {
 public:
  QLearner(const env::EnvSpec& spec, PolicyConfig config, uint64_t seed);

  const PolicyConfig& config() const { return config_; }
  const env::EnvSpec& spec() const { return spec_; }

  AgentMemory initial_memory() const;
  // One recurrent step for the whole team; returns q [n_agents, n_actions].
  Mat agent_q(std::span<const env::Observation> obs, AgentMemory& memory) const;
  // Memory after feeding the observation sequence in order. An empty
  // sequence gives zero memory.
  AgentMemory init_memory(std::span<const std::vector<env::Observation>> obs_seq,
                          std::span<const env::JointAction> actions) const;
  AgentMemory init_memory(const Episode& imagined_prefix) const;

  double mix(std::span<const double> chosen_q, std::span<const double> state) const {
    return mixer_.apply(chosen_q, state);
  }

  // Masked mean squared TD error over the batch. Differentiable w.r.t. the
  // online parameters; the target side is constant.
  ad::Tensor td_loss(std::span<const Episode* const> batch) const;
  // td_loss, backward, clip, RMSProp step and the periodic target copy.
  // Throws std::runtime_error on a non-finite loss.
  double td_update(std::span<const Episode* const> batch);
  void update_target();

  long updates() const { return updates_; }
  nn::ParameterSet& parameters() { return online_; }
  const nn::ParameterSet& parameters() const { return online_; }
  const nn::ParameterSet& target_parameters() const { return target_; }
  const AgentNetwork& agent() const { return agent_; }
  const Mixer& mixer() const { return mixer_; }
  const AgentNetwork& target_agent() const { return target_agent_; }
  const Mixer& target_mixer() const { return target_mixer_; }

  void save(Checkpoint& ckpt) const;
  void load(const Checkpoint& ckpt);

 private:
  env::EnvSpec spec_;
  PolicyConfig config_;
  nn::Rng init_rng_;
  nn::ParameterSet online_, target_;
  AgentNetwork agent_, target_agent_;
  Mixer mixer_, target_mixer_;
  nn::RmsProp optim_;
  long updates_ = 0;
};

}  // namespace iie::policy

#endif  // IIE_POLICY_HPP_
