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


// Parallel kernels against their serial reference versions.
//
//   ./build/bench/kernel_bench --benchmark_filter=attention

#include <random>

#include <benchmark/benchmark.h>

#include "iie/kernels.hpp"

namespace {

using iie::Mat;
namespace k = iie::kernels;

Mat random_mat(int r, int c, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> d(0.0, 1.0);
  Mat m(r, c);
  for (Eigen::Index i = 0; i < m.size(); ++i) m.data()[i] = d(rng);
  return m;
}

template <bool kReference>
void BM_Gemm(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Mat a = random_mat(n, 64, 1), b = random_mat(64, 192, 2);
  Mat c(n, 192);
  for (auto _ : state) {
    if constexpr (kReference) {
      k::reference::gemm(a, false, b, false, c, 0.0);
    } else {
      k::gemm(a, false, b, false, c, 0.0);
    }
    benchmark::DoNotOptimize(c.data());
  }
  state.SetItemsProcessed(state.iterations() * int64_t(n) * 64 * 192);
}

template <bool kReference>
void BM_Attention(benchmark::State& state) {
  const int len = static_cast<int>(state.range(0));
  const Mat q = random_mat(len, 64, 3), kk = random_mat(len, 64, 4), v = random_mat(len, 64, 5);
  Mat out;
  std::vector<Mat> probs;
  for (auto _ : state) {
    if constexpr (kReference) {
      k::reference::attention_forward(q, kk, v, 8, out, probs);
    } else {
      k::attention_forward(q, kk, v, 8, out, probs);
    }
    benchmark::DoNotOptimize(out.data());
  }
}

template <bool kReference>
void BM_AttentionBackward(benchmark::State& state) {
  const int len = static_cast<int>(state.range(0));
  const Mat q = random_mat(len, 64, 3), kk = random_mat(len, 64, 4), v = random_mat(len, 64, 5);
  const Mat d_out = random_mat(len, 64, 6);
  Mat out, dq, dk, dv;
  std::vector<Mat> probs;
  k::attention_forward(q, kk, v, 8, out, probs);
  for (auto _ : state) {
    if constexpr (kReference) {
      k::reference::attention_backward(q, kk, v, 8, probs, d_out, dq, dk, dv);
    } else {
      k::attention_backward(q, kk, v, 8, probs, d_out, dq, dk, dv);
    }
    benchmark::DoNotOptimize(dq.data());
  }
}

template <bool kReference>
void BM_LayerNorm(benchmark::State& state) {
  const int rows = static_cast<int>(state.range(0));
  const Mat x = random_mat(rows, 64, 7), g = random_mat(1, 64, 8), b = random_mat(1, 64, 9);
  Mat y, mean, rstd;
  for (auto _ : state) {
    if constexpr (kReference) {
      k::reference::layer_norm_forward(x, g, b, 1e-5, y, mean, rstd);
    } else {
      k::layer_norm_forward(x, g, b, 1e-5, y, mean, rstd);
    }
    benchmark::DoNotOptimize(y.data());
  }
}

template <bool kReference>
void BM_Gru(benchmark::State& state) {
  const int rows = static_cast<int>(state.range(0));
  const Mat gi = random_mat(rows, 192, 10), gh = random_mat(rows, 192, 11), h = random_mat(rows, 64, 12);
  Mat h_next;
  k::GruCache cache;
  for (auto _ : state) {
    if constexpr (kReference) {
      k::reference::gru_forward(gi, gh, h, h_next, cache);
    } else {
      k::gru_forward(gi, gh, h, h_next, cache);
    }
    benchmark::DoNotOptimize(h_next.data());
  }
}

BENCHMARK(BM_Gemm<false>)->Name("gemm/parallel")->Arg(64)->Arg(350)->Arg(2800);
BENCHMARK(BM_Gemm<true>)->Name("gemm/reference")->Arg(64)->Arg(350)->Arg(2800);
BENCHMARK(BM_Attention<false>)->Name("attention/parallel")->Arg(56)->Arg(350)->Arg(700);
BENCHMARK(BM_Attention<true>)->Name("attention/reference")->Arg(56)->Arg(350)->Arg(700);
BENCHMARK(BM_AttentionBackward<false>)->Name("attention_backward/parallel")->Arg(350);
BENCHMARK(BM_AttentionBackward<true>)->Name("attention_backward/reference")->Arg(350);
BENCHMARK(BM_LayerNorm<false>)->Name("layer_norm/parallel")->Arg(2800);
BENCHMARK(BM_LayerNorm<true>)->Name("layer_norm/reference")->Arg(2800);
BENCHMARK(BM_Gru<false>)->Name("gru/parallel")->Arg(64)->Arg(2048);
BENCHMARK(BM_Gru<true>)->Name("gru/reference")->Arg(64)->Arg(2048);

}  // namespace

BENCHMARK_MAIN();
