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

#include "korobov/scalar_networks.hpp"

#include <cmath>
#include <string>

#include "korobov/errors.hpp"

namespace korobov {

namespace {

double sigma(double x) { return x > 0.0 ? x : 0.0; }

void require_level(int n) {
  if (n < 1) throw std::invalid_argument("approximation level must be >= 1, got " + std::to_string(n));
}

}  // namespace

double hat_g(double x) { return 2.0 * sigma(x) - 4.0 * sigma(x - 0.5) + 2.0 * sigma(x - 1.0); }

double sawtooth(int m, double x) {
  for (int i = 0; i < m; ++i) x = hat_g(x);
  return x;
}

double sq_oracle(int n, double x) {
  require_level(n);
  const double cells = std::ldexp(1.0, n);
  double cell = std::floor(x * cells);
  if (cell < 0.0) cell = 0.0;
  if (cell > cells - 1.0) cell = cells - 1.0;
  const double left = cell / cells;
  const double right = (cell + 1.0) / cells;
  const double weight = (x - left) * cells;
  return (1.0 - weight) * left * left + weight * right * right;
}

double sq_series(int n, double x) {
  require_level(n);
  double result = x;
  double g = x;
  for (int m = 1; m <= n; ++m) {
    g = hat_g(g);
    result -= std::ldexp(g, -2 * m);
  }
  return result;
}

double prd_oracle(int n, double x, double y) {
  return 2.0 * (sq_oracle(n, (x + y) / 2.0) - sq_oracle(n, x / 2.0) - sq_oracle(n, y / 2.0));
}

// Channel layout with c input channels:
//   f^0      = (X; X)                                        2c channels
//   f^{j,1}  = (sq_{j-1}; g; sigma(g - 1/2); sigma(g - 1))   4c channels
//   f^j      = (sq_j; g_j)                                   2c channels
// and a final projection onto the first c channels.
SqNet build_sq_net(int n, int channels, int spatial, int half_width) {
  require_level(n);
  const int c = channels;
  std::vector<ConvLayer> layers;

  ConvKernel dup(2 * c, c, half_width);
  for (int q = 1; q <= c; ++q) {
    dup.set(q, q, 0, 0, 1.0);
    dup.set(c + q, q, 0, 0, 1.0);
  }
  layers.push_back(ConvLayer(std::move(dup), BiasVector(std::vector<double>(2 * c, 0.0))));

  for (int j = 1; j <= n; ++j) {
    ConvKernel split(4 * c, 2 * c, half_width);
    std::vector<double> split_bias(4 * c, 0.0);
    for (int q = 1; q <= c; ++q) {
      split.set(q, q, 0, 0, 1.0);
      split.set(c + q, c + q, 0, 0, 1.0);
      split.set(2 * c + q, c + q, 0, 0, 1.0);
      split.set(3 * c + q, c + q, 0, 0, 1.0);
      split_bias[2 * c + q - 1] = -0.5;
      split_bias[3 * c + q - 1] = -1.0;
    }
    layers.push_back(ConvLayer(std::move(split), BiasVector(std::move(split_bias))));

    // sq_j = sq_{j-1} - 4^{-j} (2 sigma(g) - 4 sigma(g - 1/2) + 2 sigma(g - 1))
    const double outer = std::ldexp(1.0, -(2 * j - 1));
    const double inner = std::ldexp(1.0, -(2 * j - 2));
    ConvKernel merge(2 * c, 4 * c, half_width);
    for (int q = 1; q <= c; ++q) {
      merge.set(q, q, 0, 0, 1.0);
      merge.set(q, c + q, 0, 0, -outer);
      merge.set(q, 2 * c + q, 0, 0, inner);
      merge.set(q, 3 * c + q, 0, 0, -outer);
      merge.set(c + q, c + q, 0, 0, 2.0);
      merge.set(c + q, 2 * c + q, 0, 0, -4.0);
      merge.set(c + q, 3 * c + q, 0, 0, 2.0);
    }
    layers.push_back(ConvLayer(std::move(merge), BiasVector(std::vector<double>(2 * c, 0.0))));
  }

  ConvKernel project(c, 2 * c, half_width);
  for (int q = 1; q <= c; ++q) project.set(q, q, 0, 0, 1.0);
  layers.push_back(ConvLayer(std::move(project), BiasVector(std::vector<double>(c, 0.0))));

  return SqNet{n, c, ConvNet(c, spatial, half_width, std::move(layers))};
}

}  // namespace korobov
