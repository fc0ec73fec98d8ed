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

#include <cmath>

#include "doctest.h"
#include "korobov/basis_network.hpp"
#include "korobov/errors.hpp"
#include "korobov/product_network.hpp"
#include "korobov/random.hpp"
#include "oracles.hpp"

using namespace korobov;

namespace {

double g_oracle(const LevelIndex& li, int n, const DataTensor& x) {
  return oracle::pairwise_reduction(n, oracle::hats(li.level, li.index, x));
}

LevelIndex random_index(Rng& rng, int dim, int max_level) {
  std::vector<int> level(dim), index(dim);
  for (int j = 0; j < dim; ++j) {
    level[j] = 1 + static_cast<int>(rng.below(max_level));
    index[j] = 2 * static_cast<int>(rng.below(std::uint64_t{1} << (level[j] - 1))) + 1;
  }
  return LevelIndex(level, index);
}

DataTensor centre(const LevelIndex& li, int d) {
  DataTensor x(1, d);
  for (int j = 0; j < d * d; ++j) {
    x.values()[j] = std::ldexp(static_cast<double>(li.index[j]), -li.level[j]);
  }
  return x;
}

}  // namespace

TEST_CASE("phi net on the basic examples") {
  for (int d : {3, 4, 5}) {
    const LevelIndex ones = LevelIndex::ones(d * d);
    const ConvNet phi = build_phi_net(ones, d, 1);
    CHECK(phi.depth() == phi_net_depth(d));
    CHECK(phi.depth() == 5 * d / 2 + 3);
    CHECK(phi.width() == 2 * d * d);
    DataTensor half(1, d, std::vector<double>(d * d, 0.5));
    CHECK(forward(phi, half) == DataTensor(1, d, std::vector<double>(d * d, 1.0)));
    CHECK(forward(phi, DataTensor(1, d)) == DataTensor(1, d));
  }
  CHECK_THROWS_AS(build_phi_net(LevelIndex::ones(8), 3, 1), ShapeError);
}

TEST_CASE("phi net applies the hat entrywise") {
  Rng rng(11);
  for (int d : {3, 4, 6}) {
    for (int trial = 0; trial < 6; ++trial) {
      const LevelIndex li = random_index(rng, d * d, 5);
      const ConvNet phi = build_phi_net(li, d, trial % 2 == 0 ? 1 : 2);
      for (int s = 0; s < 40; ++s) {
        DataTensor x(1, d, rng.uniform_vector(d * d));
        const DataTensor y = forward(phi, x);
        for (int m = 1; m <= d; ++m) {
          for (int c = 1; c <= d; ++c) {
            const int j = (m - 1) * d + (c - 1);
            CHECK(std::fabs(y(1, m, c) - oracle::hat(li.level[j], li.index[j], x(1, m, c))) <= 1e-12);
          }
        }
      }
    }
  }
}

TEST_CASE("factory phi agrees with the direct build") {
  Rng rng(12);
  const BasisNetFactory factory(2, 4, 1);
  for (int t = 0; t < 4; ++t) {
    const LevelIndex li = random_index(rng, 16, 3);
    CHECK(factory.phi(li) == build_phi_net(li, 4, 1));
  }
}

TEST_CASE("basis net shape and values") {
  Rng rng(13);
  for (int d : {4, 8}) {
    for (int n : {1, 2, 3}) {
      const BasisNetFactory factory(n, d, 1);
      for (int t = 0; t < (d == 8 ? 2 : 4); ++t) {
        const LevelIndex li = random_index(rng, d * d, std::min(n, 3));
        const BasisNet g = factory.build(li);
        CHECK(g.net.depth() == basis_net_depth(n, d));
        CHECK(g.net.depth() == 2 * (2 * n + 3) * log2_exact(d) + 5 * d);
        CHECK(g.net.width() == 2 * d * d);
        CHECK(g.net.output_channels() == 1);

        // Grid point: every hat is 1 and the product stage passes 1 exactly.
        CHECK(forward(g.net, centre(li, d))(1, d, d) == 1.0);

        const double bound = 1.5 * std::ldexp(1.0, -2 * n) * (d * d - 1);
        for (int s = 0; s < 30; ++s) {
          DataTensor x(1, d);
          // Half the draws inside the support box, half anywhere.
          for (int j = 0; j < d * d; ++j) {
            const Interval box = hat_support(li.level[j], li.index[j]);
            x.values()[j] = s % 2 == 0 ? rng.uniform(box.lo, box.hi) : rng.uniform();
          }
          const double y = forward(g.net, x)(1, d, d);
          const double target = basis_nd(li, x.values());
          CHECK(std::fabs(y - target) <= bound);
          CHECK(std::fabs(y - g_oracle(li, n, x)) <= 1e-9);
          CHECK(std::fabs(basis_oracle(li, n, x) - g_oracle(li, n, x)) <= 1e-12);
          if (target == 0.0) CHECK(y == 0.0);
        }
      }
    }
  }
}

TEST_CASE("basis net rejects unsupported sizes") {
  CHECK_THROWS_AS(BasisNetFactory(2, 3, 1), UnsupportedError);
  CHECK_THROWS_AS(BasisNetFactory(2, 2, 1), UnsupportedError);
}
