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


#ifndef IIE_SEGMENTER_HPP_
#define IIE_SEGMENTER_HPP_

// Top-K influence prefixes of played episodes, hindsight prompts, sampling
// weights with a uniform floor, and the demonstration store.

#include <cstdint>
#include <deque>
#include <memory>
#include <span>
#include <vector>

#include "iie/episode.hpp"

namespace iie::segment {

inline constexpr double kMaxReturn = 20.0;

// A prefix steps[0..e] of an episode. steps[i].prompt is the hindsight
// prompt (I, e - i, clamped reward-to-go); steps[e].state is the
// high-influence state the prefix leads to.
struct Segment {
  uint64_t id = 0;
  uint64_t episode_id = 0;
  std::vector<Step> steps;
  double end_influence = 0.0;
  Prompt descriptor;

  int end() const { return static_cast<int>(steps.size()) - 1; }
};

// Prefixes ending at the K steps with the highest stored influence, highest
// first; ties go to the earlier step. Episodes shorter than K give one
// segment per step. Every segment is relabelled.
std::vector<Segment> segment_episode(const Episode& episode, int k);

// Fills per-step prompts and the descriptor from rewards and end_influence.
void relabel(Segment& segment);

// w_i = lambda / N + (1 - lambda) softmax(end_influence)_i.
std::vector<double> sampling_weights(std::span<const double> end_influence, double lambda);

// Euclidean distance over (I / 10, T / horizon, R / 20).
double prompt_distance(const Prompt& a, const Prompt& b, int horizon);

// Bounded FIFO of segments keyed by descriptor. Also serves as the training
// pool for the imagination model and the prompt generator.
class DemoStore {
 public:
  explicit DemoStore(size_t capacity = 512) : capacity_(capacity) {}

  void add(Segment segment);
  size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  size_t capacity() const { return capacity_; }
  // Oldest first.
  const std::deque<std::shared_ptr<const Segment>>& entries() const { return entries_; }
  const Segment& at(size_t i) const { return *entries_[i]; }

  // Nearest descriptor to `query`; ties go to the most recent entry.
  // Returns nullptr for an empty store.
  std::shared_ptr<const Segment> retrieve(const Prompt& query, int horizon) const;

 private:
  size_t capacity_;
  std::deque<std::shared_ptr<const Segment>> entries_;
};

}  // namespace iie::segment

#endif  // IIE_SEGMENTER_HPP_
