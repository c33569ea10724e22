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

#ifndef IIE_TABULAR_CLIMB_HPP_
#define IIE_TABULAR_CLIMB_HPP_

#include <array>

#include "iie/env.hpp"

namespace iie::env {

// Two agents walk a shared chain of `chain_length` cells, one cell per step.
// The last step pays climb-game reward payoff[u0][u1]; all other steps pay 0.
// Small enough for brute-force oracles over every joint action.
//
// Payload bytes: position, last action of agent 0, last action of agent 1
// (3 = no action yet).
struct TabularClimbConfig {
  int chain_length = 5;
  std::array<std::array<double, 3>, 3> payoff = {{
      {11.0, -30.0, 0.0},
      {-30.0, 7.0, 6.0},
      {0.0, 0.0, 5.0},
  }};
};

class TabularClimb final : public Environment {
 public:
  static constexpr int kAgents = 2;
  static constexpr int kActions = 3;
  static constexpr int kNoAction = 3;

  explicit TabularClimb(TabularClimbConfig config = {});

  std::string name() const override { return "tabular_climb"; }
  const EnvSpec& spec() const override { return spec_; }
  std::unique_ptr<Environment> clone() const override;

  Reset reset(uint64_t seed) override;
  StepResult step(const JointAction& actions) override;
  EnvState get_state() const override { return state_; }
  Reset set_state(const EnvState& state) override;
  bool episode_done() const override { return done_; }

  void validate(const EnvState& state) const override;
  std::vector<Observation> observe(const EnvState& state) const override;
  AvailActions available_actions(const EnvState& state) const override;
  std::vector<double> state_features(const EnvState& state) const override;

  std::vector<int> state_field_sizes() const override;
  std::vector<int> state_fields(const EnvState& state) const override;
  EnvState state_from_fields(std::span<const int> fields, int timestep) const override;
  EnvState encode_fields(std::span<const int> fields, int timestep) const override;
  std::vector<int> obs_field_sizes() const override;
  std::vector<int> obs_fields(const EnvState& state, int agent) const override;
  Observation obs_from_fields(std::span<const int> fields) const override;

  const TabularClimbConfig& config() const { return config_; }
  // Every valid state, in a fixed enumeration order.
  std::vector<EnvState> all_states() const;

 private:
  EnvState make_state(int timestep, int la0, int la1) const;

  TabularClimbConfig config_;
  EnvSpec spec_;
  EnvState state_;
  bool done_ = false;
};

}  // namespace iie::env

#endif  // IIE_TABULAR_CLIMB_HPP_
