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

#include "korobov/product_network.hpp"

#include <string>

#include "korobov/errors.hpp"
#include "korobov/scalar_networks.hpp"

namespace korobov {

bool is_power_of_two(int value) { return value > 0 && (value & (value - 1)) == 0; }

int log2_exact(int value) {
  int p = 0;
  while ((1 << p) < value) ++p;
  return p;
}

int product_net_depth(int n, int spatial) {
  return 2 * (2 * n + 3) * log2_exact(spatial) + 2 * (spatial - 1);
}

namespace {

struct Offsets {
  int prev_s;
  int prev_t;
};

Offsets previous_entry(ReductionAxis axis) {
  return axis == ReductionAxis::kColumns ? Offsets{0, -1} : Offsets{-1, 0};
}

void require_shape(int n, int spatial) {
  if (n < 1) throw std::invalid_argument("approximation level must be >= 1");
  if (spatial < 2 || !is_power_of_two(spatial)) {
    throw UnsupportedError("product networks are built for d = 2^p, p >= 1; got d = " +
                           std::to_string(spatial));
  }
}

// K^4 = 2 (S^{0,0}, -S^{0,0}, -S^{0,0}).
ConvLayer combine_layer(int half_width) {
  ConvKernel k4(1, 3, half_width);
  k4.set(1, 1, 0, 0, 2.0);
  k4.set(1, 2, 0, 0, -2.0);
  k4.set(1, 3, 0, 0, -2.0);
  return ConvLayer::without_bias(std::move(k4));
}

}  // namespace

ConvNet build_reduction_round(int n, int round, int spatial, int half_width, ReductionAxis axis) {
  require_shape(n, spatial);
  if (round < 1 || (1 << round) > spatial) {
    throw std::invalid_argument("reduction round " + std::to_string(round) + " out of range");
  }
  const auto [ps, pt] = previous_entry(axis);
  std::vector<ConvLayer> layers;

  if (round == 1) {
    // K^0 = 1/2 (S_prev + S^{0,0}; S_prev; S^{0,0})
    ConvKernel k0(3, 1, half_width);
    k0.add(1, 1, ps, pt, 0.5);
    k0.add(1, 1, 0, 0, 0.5);
    k0.set(2, 1, ps, pt, 0.5);
    k0.set(3, 1, 0, 0, 0.5);
    layers.push_back(ConvLayer::without_bias(std::move(k0)));
  } else {
    // K^1 = (S_prev; S^{0,0})
    ConvKernel k1(2, 1, half_width);
    k1.set(1, 1, ps, pt, 1.0);
    k1.set(2, 1, 0, 0, 1.0);
    layers.push_back(ConvLayer::without_bias(std::move(k1)));

    // K^2 = diag(S_prev, S^{0,0}), repeated 2^{q-1} - 2 times.
    const int repeats = (1 << (round - 1)) - 2;
    for (int r = 0; r < repeats; ++r) {
      ConvKernel k2(2, 2, half_width);
      k2.set(1, 1, ps, pt, 1.0);
      k2.set(2, 2, 0, 0, 1.0);
      layers.push_back(ConvLayer::without_bias(std::move(k2)));
    }

    // K^3 = 1/2 ((S_prev, S^{0,0}); (S_prev, 0); (0, S^{0,0}))
    ConvKernel k3(3, 2, half_width);
    k3.set(1, 1, ps, pt, 0.5);
    k3.set(1, 2, 0, 0, 0.5);
    k3.set(2, 1, ps, pt, 0.5);
    k3.set(3, 2, 0, 0, 0.5);
    layers.push_back(ConvLayer::without_bias(std::move(k3)));
  }

  ConvNet head(1, spatial, half_width, std::move(layers));
  const SqNet sq = build_sq_net(n, 3, spatial, half_width);
  ConvNet tail(3, spatial, half_width, {combine_layer(half_width)});
  return compose(compose(head, sq.net), tail);
}

ConvNet build_reduction_stage(int n, int spatial, int half_width, ReductionAxis axis) {
  require_shape(n, spatial);
  const int rounds = log2_exact(spatial);
  ConvNet stage(1, spatial, half_width);
  for (int q = 1; q <= rounds; ++q) {
    stage = compose(stage, build_reduction_round(n, q, spatial, half_width, axis));
  }
  return stage;
}

ProductNet build_product_net(int n, int spatial, int half_width) {
  require_shape(n, spatial);
  ConvNet columns = build_reduction_stage(n, spatial, half_width, ReductionAxis::kColumns);
  ConvNet rows = build_reduction_stage(n, spatial, half_width, ReductionAxis::kRows);
  ConvNet net = compose(columns, rows);
  return ProductNet{n, spatial, std::move(columns), std::move(rows), std::move(net)};
}

namespace {

std::vector<double> reduce_pairs(int n, std::vector<double> values) {
  while (values.size() > 1) {
    std::vector<double> next(values.size() / 2);
    for (std::size_t j = 0; j < next.size(); ++j) {
      next[j] = prd_oracle(n, values[2 * j], values[2 * j + 1]);
    }
    values = std::move(next);
  }
  return values;
}

}  // namespace

std::vector<double> column_reduction_oracle(int n, const DataTensor& x) {
  require_shape(n, x.spatial());
  if (x.channels() != 1) throw ShapeError("product reduction acts on one-channel tensors");
  const int d = x.spatial();
  std::vector<double> result(d);
  for (int m = 1; m <= d; ++m) {
    std::vector<double> row(d);
    for (int j = 1; j <= d; ++j) row[j - 1] = x(1, m, j);
    result[m - 1] = reduce_pairs(n, std::move(row)).front();
  }
  return result;
}

double reduction_oracle(int n, const DataTensor& x) {
  return reduce_pairs(n, column_reduction_oracle(n, x)).front();
}

double exact_product(const DataTensor& x) {
  double product = 1.0;
  for (double v : x.values()) product *= v;
  return product;
}

}  // namespace korobov
