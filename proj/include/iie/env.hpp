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

#ifndef IIE_ENV_HPP_
#define IIE_ENV_HPP_

// Cooperative Dec-POMDP environments with an exact teleport contract:
// set_state(x) puts the simulator into state x such that the future is
// identical to having reached x by playing.

#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace iie::env {

struct EnvSpec {
  int n_agents = 0;
  int n_actions = 0;
  int state_dim = 0;
  int obs_dim = 0;
  int max_episode_steps = 0;
  double reward_lo = 0.0;
  double reward_hi = 0.0;

  // Throws std::invalid_argument on a violated invariant.
  void validate() const;
};

// Full simulator state. The payload is a canonical byte encoding of every
// dynamic field in a fixed order, so equality is bitwise.
struct EnvState {
  std::vector<uint8_t> payload;
  int timestep = 0;

  bool operator==(const EnvState&) const = default;
};

// Canonical byte string: 4-byte little-endian timestep followed by payload.
std::vector<uint8_t> serialize(const EnvState& state);
EnvState deserialize(std::span<const uint8_t> bytes);
std::string to_hex(std::span<const uint8_t> bytes);
std::vector<uint8_t> from_hex(const std::string& hex);

using Observation = std::vector<double>;
using JointAction = std::vector<int>;

class AvailActions {
 public:
  AvailActions() = default;
  AvailActions(int n_agents, int n_actions, bool value = true)
      : n_agents_(n_agents), n_actions_(n_actions),
        mask_(static_cast<size_t>(n_agents) * n_actions, value ? 1 : 0) {}

  bool operator()(int agent, int action) const {
    return mask_[static_cast<size_t>(agent) * n_actions_ + action] != 0;
  }
  void set(int agent, int action, bool value) {
    mask_[static_cast<size_t>(agent) * n_actions_ + action] = value ? 1 : 0;
  }
  int n_agents() const { return n_agents_; }
  int n_actions() const { return n_actions_; }
  int count(int agent) const;
  bool operator==(const AvailActions&) const = default;

 private:
  int n_agents_ = 0;
  int n_actions_ = 0;
  std::vector<uint8_t> mask_;
};

struct Reset {
  EnvState state;
  std::vector<Observation> obs;
  AvailActions avail;
};

struct StepResult {
  EnvState next_state;
  std::vector<Observation> next_obs;
  double reward = 0.0;
  bool done = false;
  // done because of a terminal rule rather than the horizon; TD targets do
  // not bootstrap past terminated steps.
  bool terminated = false;
  AvailActions avail;
};

// Raised when a caller breaks a precondition (unavailable action, stepping a
// finished episode).
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Raised by set_state / state_from_fields for states that violate the
// environment's invariants. The message lists every violated invariant.
class InvalidState : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class Environment {
 public:
  virtual ~Environment() = default;

  virtual std::string name() const = 0;
  virtual const EnvSpec& spec() const = 0;
  virtual std::unique_ptr<Environment> clone() const = 0;

  // Canonical initial state s_0. Both shipped environments are deterministic,
  // so the seed does not change s_0.
  virtual Reset reset(uint64_t seed) = 0;
  virtual StepResult step(const JointAction& actions) = 0;
  virtual EnvState get_state() const = 0;
  // Teleport. Validates the state first.
  virtual Reset set_state(const EnvState& state) = 0;
  virtual bool episode_done() const = 0;

  // Pure functions of a state.
  virtual void validate(const EnvState& state) const = 0;
  virtual std::vector<Observation> observe(const EnvState& state) const = 0;
  virtual AvailActions available_actions(const EnvState& state) const = 0;
  // Global state vector for the mixer and prompt generator, length state_dim.
  virtual std::vector<double> state_features(const EnvState& state) const = 0;

  // Discrete factorisation used by the imagination model. Every state and
  // observation is a tuple of categorical fields.
  virtual std::vector<int> state_field_sizes() const = 0;
  virtual std::vector<int> state_fields(const EnvState& state) const = 0;
  // Inverse of state_fields; throws InvalidState when the fields do not
  // describe a valid state.
  virtual EnvState state_from_fields(std::span<const int> fields, int timestep) const = 0;
  // Same encoding without the validity check. Fields must still lie inside
  // their sizes. Used for intermediate imagined states, which never reach a
  // simulator.
  virtual EnvState encode_fields(std::span<const int> fields, int timestep) const = 0;
  virtual std::vector<int> obs_field_sizes() const = 0;
  virtual std::vector<int> obs_fields(const EnvState& state, int agent) const = 0;
  virtual Observation obs_from_fields(std::span<const int> fields) const = 0;
};

}  // namespace iie::env

#endif  // IIE_ENV_HPP_
