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

#ifndef IIE_KERNELS_HPP_
#define IIE_KERNELS_HPP_

// Dense numeric kernels used by the autodiff layer.
//
// Every kernel exists twice: `iie::kernels::*` is the OpenMP-parallel version
// used in training, `iie::kernels::reference::*` is a plain serial loop nest
// kept as the oracle for tests and as the baseline in bench/. Parallel
// kernels partition work into fixed-size blocks that do not depend on the
// thread count, so results are bitwise reproducible for any OMP_NUM_THREADS.

#include <span>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace iie {

using Mat = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

namespace kernels {

// One categorical distribution inside a row of logits: columns
// [offset, offset + size).
struct Group {
  int offset = 0;
  int size = 0;
};

// Cached activations of a GRU gate evaluation, needed by the backward pass.
struct GruCache {
  Mat r, z, n, gh_n;
};

// C = op(A) * op(B) + beta * C, beta in {0, 1}.
void gemm(const Mat& a, bool trans_a, const Mat& b, bool trans_b, Mat& c,
          double beta);

// Causal multi-head attention. q, k, v are [L, D] with D divisible by heads.
// `probs` receives one [L, L] attention matrix per head.
void attention_forward(const Mat& q, const Mat& k, const Mat& v, int heads,
                       Mat& out, std::vector<Mat>& probs);
void attention_backward(const Mat& q, const Mat& k, const Mat& v, int heads,
                        const std::vector<Mat>& probs, const Mat& d_out,
                        Mat& d_q, Mat& d_k, Mat& d_v);

// Row-wise layer normalisation; mean and rstd are [rows, 1] caches.
void layer_norm_forward(const Mat& x, const Mat& gamma, const Mat& beta,
                        double eps, Mat& y, Mat& mean, Mat& rstd);
void layer_norm_backward(const Mat& x, const Mat& gamma, const Mat& mean,
                         const Mat& rstd, const Mat& d_y, Mat& d_x,
                         Mat& d_gamma, Mat& d_beta);

// GRU gate arithmetic (PyTorch gate order r, z, n) given the two affine
// pre-activations gi = x W_ih + b_ih and gh = h W_hh + b_hh.
void gru_forward(const Mat& gi, const Mat& gh, const Mat& h, Mat& h_next,
                 GruCache& cache);
void gru_backward(const Mat& h, const GruCache& cache, const Mat& d_h_next,
                  Mat& d_gi, Mat& d_gh, Mat& d_h);

// Weighted negative log-likelihood of grouped categoricals.
// targets is [rows, groups.size()] (row-major), -1 skips an entry.
// Returns sum_r w_r sum_g -log p_rg(target); d_logits gets the gradient.
double grouped_xent(const Mat& logits, std::span<const Group> groups,
                    std::span<const int> targets, std::span<const double> weights,
                    Mat& d_logits);

namespace reference {

void gemm(const Mat& a, bool trans_a, const Mat& b, bool trans_b, Mat& c,
          double beta);
void attention_forward(const Mat& q, const Mat& k, const Mat& v, int heads,
                       Mat& out, std::vector<Mat>& probs);
void attention_backward(const Mat& q, const Mat& k, const Mat& v, int heads,
                        const std::vector<Mat>& probs, const Mat& d_out,
                        Mat& d_q, Mat& d_k, Mat& d_v);
void layer_norm_forward(const Mat& x, const Mat& gamma, const Mat& beta,
                        double eps, Mat& y, Mat& mean, Mat& rstd);
void layer_norm_backward(const Mat& x, const Mat& gamma, const Mat& mean,
                         const Mat& rstd, const Mat& d_y, Mat& d_x,
                         Mat& d_gamma, Mat& d_beta);
void gru_forward(const Mat& gi, const Mat& gh, const Mat& h, Mat& h_next,
                 GruCache& cache);
void gru_backward(const Mat& h, const GruCache& cache, const Mat& d_h_next,
                  Mat& d_gi, Mat& d_gh, Mat& d_h);
double grouped_xent(const Mat& logits, std::span<const Group> groups,
                    std::span<const int> targets, std::span<const double> weights,
                    Mat& d_logits);

}  // namespace reference

// Number of OpenMP threads the parallel kernels will use.
int max_threads();

}  // namespace kernels
}  // namespace iie

#endif  // IIE_KERNELS_HPP_
