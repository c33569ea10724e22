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

#ifndef IIE_LAYERS_HPP_
#define IIE_LAYERS_HPP_

#include <random>
#include <string>
#include <vector>

#include "iie/autodiff.hpp"

namespace iie::nn {

using Rng = std::mt19937_64;

struct NamedParam {
  std::string name;
  ad::Tensor tensor;
  bool decay = true;  // subject to decoupled weight decay
};

// Owns the trainable tensors of one model, in registration order.
class ParameterSet {
 public:
  ad::Tensor add(std::string name, Mat init, bool decay = true);

  std::vector<NamedParam>& params() { return params_; }
  const std::vector<NamedParam>& params() const { return params_; }
  const ad::Tensor& get(const std::string& name) const;

  void zero_grad();
  double grad_norm() const;
  // Rescales gradients so their global L2 norm is at most max_norm.
  // Returns the norm before clipping.
  double clip_grad_norm(double max_norm);
  // Copies values from a set with identical names and shapes.
  void copy_from(const ParameterSet& other);
  bool all_finite() const;
  size_t scalar_count() const;

 private:
  std::vector<NamedParam> params_;
};

enum class Init { kUniformFanIn, kNormal002, kZeros };

class Linear {
 public:
  Linear() = default;
  Linear(ParameterSet& ps, const std::string& name, int in, int out, Rng& rng,
         Init init = Init::kUniformFanIn);

  ad::Tensor operator()(const ad::Tensor& x) const { return ad::linear(x, w, b); }
  // Graph-free evaluation for inference paths.
  Mat apply(const Mat& x) const;

  ad::Tensor w;  // [in, out]
  ad::Tensor b;  // [1, out]
};

class LayerNorm {
 public:
  LayerNorm() = default;
  LayerNorm(ParameterSet& ps, const std::string& name, int dim);

  ad::Tensor operator()(const ad::Tensor& x) const {
    return ad::layer_norm(x, gamma, beta);
  }
  Mat apply(const Mat& x) const;

  ad::Tensor gamma;
  ad::Tensor beta;
};

// Gated recurrent unit; gate layout r, z, n.
class GruCell {
 public:
  GruCell() = default;
  GruCell(ParameterSet& ps, const std::string& name, int in, int hidden, Rng& rng);

  ad::Tensor operator()(const ad::Tensor& x, const ad::Tensor& h) const;
  int hidden() const { return hidden_; }

  ad::Tensor w_ih, w_hh, b_ih, b_hh;

 private:
  int hidden_ = 0;
};

class Embedding {
 public:
  Embedding() = default;
  Embedding(ParameterSet& ps, const std::string& name, int count, int dim, Rng& rng);

  ad::Tensor operator()(std::span<const int> ids) const {
    return ad::gather_rows(table, ids);
  }

  ad::Tensor table;
};

}  // namespace iie::nn

#endif  // IIE_LAYERS_HPP_
