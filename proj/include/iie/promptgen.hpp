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


#ifndef IIE_PROMPTGEN_HPP_
#define IIE_PROMPTGEN_HPP_

// Factorised categorical prompt generator p(I | s) p(T | s, I) p(R | s, I, T)
// with value-tilted sampling.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "iie/checkpoint.hpp"
#include "iie/episode.hpp"
#include "iie/layers.hpp"
#include "iie/optim.hpp"

namespace iie::promptgen {

inline constexpr int kInfluenceBins = 11;
inline constexpr int kReturnBins = 21;

// p_i proportional to exp(logp_i + kappa (values_i - lo) / (hi - lo)).
std::vector<double> tilt(std::span<const double> logp, std::span<const double> values,
                         double lo, double hi, double kappa);

// Index drawn by inverse CDF from one uniform.
int sample_index(std::span<const double> probs, nn::Rng& rng);

struct PromptGenConfig {
  int hidden1 = 64;
  int hidden2 = 32;
  double lr = 1e-3;
  double kappa = 10.0;
};

// One labelled example: start-state features and the descriptor to imitate.
struct Example {
  std::vector<double> features;
  Prompt descriptor;
  double weight = 1.0;
};

class PromptGenerator {
 public:
  PromptGenerator(int state_dim, int horizon, PromptGenConfig config, uint64_t seed);

  int horizon() const { return horizon_; }
  const PromptGenConfig& config() const { return config_; }
  bool trained() const { return updates_ > 0; }
  long updates() const { return updates_; }

  // Log-probabilities of each head under its conditioning.
  std::vector<double> log_probs_influence(std::span<const double> features) const;
  std::vector<double> log_probs_timesteps(std::span<const double> features, int influence) const;
  std::vector<double> log_probs_return(std::span<const double> features, int influence,
                                       int timesteps) const;

  // I, then T given I, then R given (I, T), each from its tilted head.
  // Throws std::logic_error before the first training step.
  Prompt sample(std::span<const double> features, double kappa, nn::Rng& rng) const;

  // Weighted cross-entropy of the three heads, summed; weights are used as
  // given. One optimiser step; returns the loss before the step.
  double train_step(std::span<const Example> batch);
  ad::Tensor loss(std::span<const Example> batch) const;

  nn::ParameterSet& parameters() { return params_; }
  void save(Checkpoint& ckpt) const;
  void load(const Checkpoint& ckpt);

 private:
  Mat trunk_input(std::span<const double> features, double x1, double x2) const;
  ad::Tensor trunk(const ad::Tensor& x) const;
  std::vector<double> head_log_probs(const nn::Linear& head, const Mat& input) const;

  int state_dim_;
  int horizon_;
  PromptGenConfig config_;
  nn::Rng init_rng_;
  nn::ParameterSet params_;
  nn::Linear fc1_, fc2_, head_i_, head_t_, head_r_;
  nn::AdamW optim_;
  long updates_ = 0;
};

}  // namespace iie::promptgen

#endif  // IIE_PROMPTGEN_HPP_
