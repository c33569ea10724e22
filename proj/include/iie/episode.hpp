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


#ifndef IIE_EPISODE_HPP_
#define IIE_EPISODE_HPP_

#include <cstdint>
#include <vector>

#include "iie/env.hpp"

namespace iie {

// Hindsight or sampled conditioning triple for the imagination model.
struct Prompt {
  int influence = 0;      // bin in [0, 10]
  int timesteps = 0;      // timestep-to-go in [0, horizon]
  double ret = 0.0;       // return-to-go in [0, 20]

  bool operator==(const Prompt&) const = default;
};

// One transition out of `state`.
struct Step {
  env::EnvState state;
  std::vector<env::Observation> obs;
  env::AvailActions avail;
  std::vector<double> features;  // state_features(state)
  env::JointAction actions;
  double reward = 0.0;
  bool terminated = false;
  bool imagined = false;
  double influence = 0.0;
  Prompt prompt;
};

// A played (or stitched) episode: steps[t] leaves state t, `last` is the
// state after the final transition. Imagined steps form a prefix of length
// `boundary`.
struct Episode {
  uint64_t id = 0;
  std::vector<Step> steps;
  env::EnvState last;
  std::vector<env::Observation> last_obs;
  env::AvailActions last_avail;
  std::vector<double> last_features;
  int boundary = 0;

  int length() const { return static_cast<int>(steps.size()); }
  double total_reward() const {
    double r = 0.0;
    for (const auto& s : steps) r += s.reward;
    return r;
  }
  bool success() const { return !steps.empty() && steps.back().terminated; }
};

}  // namespace iie

#endif  // IIE_EPISODE_HPP_
