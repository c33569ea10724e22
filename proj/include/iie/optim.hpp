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

#ifndef IIE_OPTIM_HPP_
#define IIE_OPTIM_HPP_

#include <vector>

#include "iie/layers.hpp"

namespace iie::nn {

// RMSProp as used by value-decomposition learners: v <- a v + (1-a) g^2,
// p <- p - lr g / (sqrt(v) + eps).
class RmsProp {
 public:
  struct Options {
    double lr = 5e-4;
    double alpha = 0.99;
    double eps = 1e-5;
  };
  RmsProp(ParameterSet& params, Options opt);
  void step();

 private:
  ParameterSet& params_;
  Options opt_;
  std::vector<Mat> sq_;
};

// Adam with decoupled weight decay applied to parameters flagged `decay`.
class AdamW {
 public:
  struct Options {
    double lr = 6e-4;
    double beta1 = 0.9;
    double beta2 = 0.95;
    double eps = 1e-8;
    double weight_decay = 0.1;
  };
  AdamW(ParameterSet& params, Options opt);
  void step();
  long steps() const { return t_; }

 private:
  ParameterSet& params_;
  Options opt_;
  std::vector<Mat> m_, v_;
  long t_ = 0;
};

}  // namespace iie::nn

#endif  // IIE_OPTIM_HPP_
