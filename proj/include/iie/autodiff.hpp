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

#ifndef IIE_AUTODIFF_HPP_
#define IIE_AUTODIFF_HPP_

// Minimal reverse-mode automatic differentiation over row-major double
// matrices. A Tensor is a shared handle to a graph node; operations build the
// graph eagerly and `backward` walks it in reverse topological order.
// Everything is 2-D: vectors are [1, n] rows or [n, 1] columns.

#include <functional>
#include <initializer_list>
#include <memory>
#include <span>
#include <vector>

#include "iie/kernels.hpp"

namespace iie::ad {

struct Node {
  Mat value;
  Mat grad;
  bool requires_grad = false;
  std::vector<std::shared_ptr<Node>> inputs;
  std::function<void(Node&)> backward;

  // Adds g into grad, allocating on first use. No-op for constants.
  void accumulate(const Mat& g);
};

class Tensor {
 public:
  Tensor() = default;
  explicit Tensor(std::shared_ptr<Node> node) : node_(std::move(node)) {}

  bool defined() const { return node_ != nullptr; }
  const Mat& value() const { return node_->value; }
  Mat& mutable_value() { return node_->value; }
  // Gradient buffer; zero-sized until a backward pass reaches this node.
  const Mat& grad() const { return node_->grad; }
  Mat& grad() { return node_->grad; }
  Eigen::Index rows() const { return node_->value.rows(); }
  Eigen::Index cols() const { return node_->value.cols(); }
  bool requires_grad() const { return node_->requires_grad; }
  double item() const;
  Node* node() const { return node_.get(); }
  const std::shared_ptr<Node>& shared() const { return node_; }

 private:
  std::shared_ptr<Node> node_;
};

Tensor constant(Mat value);
Tensor parameter(Mat value);

// Seeds d(loss)/d(loss) = 1 and accumulates into every reachable node that
// requires a gradient. `loss` must be 1x1.
void backward(const Tensor& loss);

bool grad_enabled();

// Disables graph recording in the current thread for its lifetime.
class NoGradGuard {
 public:
  NoGradGuard();
  ~NoGradGuard();
  NoGradGuard(const NoGradGuard&) = delete;
  NoGradGuard& operator=(const NoGradGuard&) = delete;

 private:
  bool previous_;
};

// Linear algebra.
Tensor matmul(const Tensor& a, const Tensor& b);
// x * w + b with b a [1, out] row broadcast over rows.
Tensor linear(const Tensor& x, const Tensor& w, const Tensor& b);

// Elementwise, identical shapes.
Tensor add(const Tensor& a, const Tensor& b);
Tensor sub(const Tensor& a, const Tensor& b);
Tensor mul(const Tensor& a, const Tensor& b);
Tensor operator+(const Tensor& a, const Tensor& b);
Tensor operator-(const Tensor& a, const Tensor& b);
Tensor operator*(const Tensor& a, const Tensor& b);
Tensor scale(const Tensor& x, double s);
Tensor add_scalar(const Tensor& x, double s);
// Elementwise product with a constant matrix (e.g. a mask).
Tensor mul_const(const Tensor& x, const Mat& c);

// Broadcasts.
Tensor add_row(const Tensor& x, const Tensor& row);     // row is [1, cols]
Tensor mul_col(const Tensor& x, const Tensor& col);     // col is [rows, 1]

// Activations.
Tensor sigmoid(const Tensor& x);
Tensor tanh(const Tensor& x);
Tensor relu(const Tensor& x);
Tensor elu(const Tensor& x);
Tensor gelu(const Tensor& x);
Tensor abs(const Tensor& x);

// Shape manipulation.
Tensor concat_cols(std::span<const Tensor> parts);
Tensor concat_cols(std::initializer_list<Tensor> parts);
Tensor concat_rows(std::span<const Tensor> parts);
Tensor slice_cols(const Tensor& x, int start, int len);
Tensor slice_rows(const Tensor& x, int start, int len);
Tensor reshape(const Tensor& x, int rows, int cols);
// Row lookup into an embedding table: out[i] = table[idx[i]].
Tensor gather_rows(const Tensor& table, std::span<const int> idx);
// One column per row: out[i, 0] = x[i, idx[i]].
Tensor gather_cols(const Tensor& x, std::span<const int> idx);

// Reductions.
Tensor sum(const Tensor& x);
Tensor row_sum(const Tensor& x);

// Per-row vector-matrix product used by hypernetwork mixers:
// q is [B, n], w is [B, n * e] holding one row-major [n, e] matrix per row;
// out[b, j] = sum_i q[b, i] * w[b, i * e + j].
Tensor row_bmm(const Tensor& q, const Tensor& w, int e);

// Fused kernels.
Tensor layer_norm(const Tensor& x, const Tensor& gamma, const Tensor& beta,
                  double eps = 1e-5);
// GRU update from affine pre-activations gi [R, 3H], gh [R, 3H], h [R, H].
Tensor gru_cell(const Tensor& gi, const Tensor& gh, const Tensor& h);
Tensor causal_attention(const Tensor& q, const Tensor& k, const Tensor& v,
                        int heads);
// Several independent sequences packed along the rows; `lengths` sums to
// q.rows() and no token attends across a sequence boundary.
Tensor causal_attention(const Tensor& q, const Tensor& k, const Tensor& v,
                        int heads, std::vector<int> lengths);
// Weighted grouped categorical NLL, returns a 1x1 sum.
Tensor grouped_xent(const Tensor& logits, std::vector<kernels::Group> groups,
                    std::vector<int> targets, std::vector<double> weights);

}  // namespace iie::ad

#endif  // IIE_AUTODIFF_HPP_
