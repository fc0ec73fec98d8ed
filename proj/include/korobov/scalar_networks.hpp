/* Copyright 2026 The korobov-cnn Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#pragma once

// The sawtooth iterates g_m, the squaring approximation sq_n and the product
// gadget prd_n, as closed-form reference functions and (for sq_n) as an
// explicitly constructed channel-wise CNN.

#include "korobov/network.hpp"

namespace korobov {

// g(x) = 2 sigma(x) - 4 sigma(x - 1/2) + 2 sigma(x - 1). Evaluated literally
// outside [0,1], no clamping.
double hat_g(double x);

// g_m = g o ... o g (m-fold); g_0 is the identity.
double sawtooth(int m, double x);

// sq_n as the piecewise-linear interpolant of x^2 on the breakpoints l/2^n.
double sq_oracle(int n, double x);

// sq_n as x - sum_{m=1}^n 4^{-m} g_m(x). Independent of sq_oracle.
double sq_series(int n, double x);

// 2 (sq_n((x+y)/2) - sq_n(x/2) - sq_n(y/2)).
double prd_oracle(int n, double x, double y);

// Channel-wise sq_n on c-channel inputs: depth 2(n+1), hidden width 4c.
struct SqNet {
  int n;
  int channels;
  ConvNet net;
};

SqNet build_sq_net(int n, int channels, int spatial, int half_width);

}  // namespace korobov
