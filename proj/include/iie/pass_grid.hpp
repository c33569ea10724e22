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

#ifndef IIE_PASS_GRID_HPP_
#define IIE_PASS_GRID_HPP_

#include <array>
#include <vector>

#include "iie/env.hpp"

namespace iie::env {

struct Cell {
  int row = 0;
  int col = 0;
  bool operator==(const Cell&) const = default;
};

// Two rooms separated by a wall column with a single door cell. The door is
// open during a step iff some agent stood on a switch at the end of the
// previous step. The team is paid `goal_reward` once, when both goal cells
// in room B are occupied, which ends the episode.
struct PassGridConfig {
  int rows = 7;
  int cols = 9;
  int wall_col = 4;
  int door_row = 3;
  std::vector<Cell> switches = {{1, 2}, {5, 6}};
  std::array<Cell, 2> starts = {{{1, 0}, {5, 0}}};
  std::array<Cell, 2> goals = {{{1, 8}, {5, 8}}};
  double goal_reward = 10.0;
  int horizon = 50;
};

// Actions: 0 up, 1 down, 2 left, 3 right, 4 stay. Blocked moves (out of
// bounds, wall, closed door, occupied cell) become stay. When two agents
// target one cell the lower index wins; swaps are blocked.
//
// Payload bytes: r0, c0, r1, c1, door_open, last0, last1 (5 = no action).
class PassGrid final : public Environment {
 public:
  static constexpr int kAgents = 2;
  static constexpr int kActions = 5;
  static constexpr int kNoAction = 5;
  static constexpr int kUp = 0, kDown = 1, kLeft = 2, kRight = 3, kStay = 4;
  // Observation layout.
  static constexpr int kWindowChannels = 4;  // wall, door, agent, goal

  explicit PassGrid(PassGridConfig config = {});

  std::string name() const override { return "pass_grid"; }
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

  const PassGridConfig& config() const { return config_; }

  // Decoded view of a state.
  struct View {
    std::array<Cell, 2> pos;
    bool door_open = false;
    std::array<int, 2> last_action = {kNoAction, kNoAction};
  };
  View view(const EnvState& state) const;
  EnvState make_state(const View& v, int timestep) const;

  bool is_wall(Cell c) const;
  bool is_door(Cell c) const { return c.row == config_.door_row && c.col == config_.wall_col; }
  bool is_goal(Cell c) const;
  bool is_switch(Cell c) const;
  bool in_bounds(Cell c) const;
  // Sum of Manhattan distances to the goal cells under the best assignment.
  int distance_to_goal(const EnvState& state) const;
  // One-step dynamics as a pure function; ignores the horizon.
  View transition(const View& v, const JointAction& actions) const;
  bool success(const View& v) const;

 private:
  PassGridConfig config_;
  EnvSpec spec_;
  EnvState state_;
  bool done_ = false;
};

}  // namespace iie::env

#endif  // IIE_PASS_GRID_HPP_
