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


#ifndef IIE_INFLUENCE_HPP_
#define IIE_INFLUENCE_HPP_

// Influence of a joint action: for each agent, how much better the taken
// joint action scores under the mixer than the average over that agent's
// own alternatives with the others held fixed. The state's influence is the
// largest such advantage.

#include <functional>
#include <span>
#include <vector>

#include "iie/env.hpp"
#include "iie/policy.hpp"

namespace iie::influence {

inline constexpr int kMinBin = 0;
inline constexpr int kMaxBin = 10;

struct InfluenceRecord {
  int timestep = 0;
  double value = 0.0;
  std::vector<double> per_agent_advantage;
};

enum class Baseline {
  kUniform,        // uniform over the agent's available actions
  kEpsilonGreedy,  // the acting epsilon-greedy distribution
};

// Q_tot of a joint action at the current state and histories.
using JointValue = std::function<double(const env::JointAction&)>;

// Core definition. With `weights` null the counterfactual expectation is the
// plain average over available actions; otherwise weights[a][u] is agent a's
// baseline distribution.
InfluenceRecord influence(const JointValue& q_joint, const env::JointAction& taken,
                          const env::AvailActions& avail, int timestep,
                          const std::vector<std::vector<double>>* weights = nullptr);

// q holds per-agent utilities [n_agents, n_actions] for the current
// histories. Every Q_tot evaluation is a separate single-row mixer call.
InfluenceRecord influence(const Mat& q, std::span<const double> state_features,
                          const env::JointAction& taken, const env::AvailActions& avail,
                          const policy::Mixer& mixer, int timestep,
                          Baseline baseline = Baseline::kUniform, double epsilon = 0.0);

// Same, computing q from observations and a copy of the team memory.
InfluenceRecord influence(const policy::QLearner& learner,
                          std::span<const env::Observation> obs, const policy::AgentMemory& memory,
                          std::span<const double> state_features, const env::JointAction& taken,
                          const env::AvailActions& avail, int timestep);

// Clamp to [0, 10] and round half up.
int influence_bin(double value);

}  // namespace iie::influence

#endif  // IIE_INFLUENCE_HPP_
