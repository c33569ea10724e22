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

#ifndef IIE_CHECKPOINT_HPP_
#define IIE_CHECKPOINT_HPP_

// Self-describing tensor container.
//
// Layout: 8-byte magic "IIECKPT1", little-endian u64 header length, a JSON
// header {"meta": {...}, "tensors": [{"name", "shape": [rows, cols],
// "offset"}]}, then the raw little-endian float64 payload. Offsets are in
// bytes from the start of the payload.

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "iie/layers.hpp"
#include "json.hpp"

namespace iie {

struct Checkpoint {
  nlohmann::json meta = nlohmann::json::object();
  std::vector<std::pair<std::string, Mat>> tensors;

  const Mat& find(const std::string& name) const;
};

void write_checkpoint(const std::filesystem::path& path, const Checkpoint& ckpt);
Checkpoint read_checkpoint(const std::filesystem::path& path);

// Appends every parameter of `params` under "<prefix>/<name>".
void store_parameters(const nn::ParameterSet& params, const std::string& prefix,
                      Checkpoint& ckpt);
// Loads values back; names and shapes must match exactly.
void load_parameters(nn::ParameterSet& params, const std::string& prefix,
                     const Checkpoint& ckpt);

}  // namespace iie

#endif  // IIE_CHECKPOINT_HPP_
