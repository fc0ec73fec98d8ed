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
#include <numeric>

#include "doctest.h"
#include "korobov/approximator.hpp"
#include "korobov/basis_network.hpp"
#include "korobov/errors.hpp"
#include "korobov/random.hpp"

using namespace korobov;

namespace {

DataTensor random_input(Rng& rng, int d) { return DataTensor(1, d, rng.uniform_vector(d * d)); }

}  // namespace

TEST_CASE("full branch set: width, depth and readout slots") {
  const int d = 4, dd = 16;
  for (int n : {1, 2}) {
    SparseExpansion e(dd, n);
    e.add(LevelIndex::ones(dd), 0.75);
    const KorobovApproximator app = build_approximator(e, n, d, 1);
    const std::int64_t th = theta(dd, n);
    CHECK(static_cast<std::int64_t>(app.branches.size()) == th);
    CHECK(app.branches == enumerate_indices(dd, n));
    CHECK(app.h.net().width() == 2 * th * dd);
    CHECK(app.h.net().depth() == approximator_depth(n, d));
    CHECK(app.h.net().depth() == 2 * (2 * n + 3) * 2 + 6 * d);
    CHECK(app.h.net().output_channels() == th);
    CHECK(app.h.beta() == 0.0);
    REQUIRE(app.h.alpha().size() == static_cast<std::size_t>(th * dd));
    // Only slots c d^2 may be nonzero; slot 1 carries v_{1,1}.
    for (std::size_t j = 0; j < app.h.alpha().size(); ++j) {
      if ((j + 1) % dd != 0) CHECK(app.h.alpha()[j] == 0.0);
    }
    CHECK(app.h.alpha()[dd - 1] == 0.75);
    const int nonzero = static_cast<int>(
        std::count_if(app.h.alpha().begin(), app.h.alpha().end(), [](double a) { return a != 0.0; }));
    CHECK(nonzero == 1);
  }
}

TEST_CASE("a single term reproduces its basis net") {
  const int d = 4, n = 2;
  const LevelIndex li({2, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1},
                      {3, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1});
  SparseExpansion e(16, n);
  e.add(li, 1.0);
  const KorobovApproximator app = build_approximator(e, n, d, 1, BranchSet::kSupport);
  REQUIRE(app.branches.size() == 1);
  const BasisNet g = build_basis_net(li, n, d, 1);
  Rng rng(3);
  for (int s = 0; s < 50; ++s) {
    const DataTensor x = random_input(rng, d);
    CHECK(evaluate(app.h, x) == forward(g.net, x)(1, d, d));
  }
}

TEST_CASE("empty expansions give the zero function") {
  SparseExpansion e(16, 2);
  const KorobovApproximator app = build_approximator(e, 2, 4, 1, BranchSet::kSupport);
  CHECK(app.branches.empty());
  CHECK(app.h.net().depth() == approximator_depth(2, 4));
  Rng rng(4);
  for (int s = 0; s < 10; ++s) CHECK(evaluate(app.h, random_input(rng, 4)) == 0.0);
}

TEST_CASE("support and full branch sets agree") {
  const Target t = make_target("combo", 4, 2);
  const KorobovApproximator full = build_approximator(t.expansion, 2, 4, 1, BranchSet::kFull);
  const KorobovApproximator support = build_approximator(t.expansion, 2, 4, 1, BranchSet::kSupport);
  CHECK(support.branches.size() == t.expansion.terms().size());
  Rng rng(5);
  for (int s = 0; s < 30; ++s) {
    const DataTensor x = random_input(rng, 4);
    CHECK(std::fabs(evaluate(full.h, x) - evaluate(support.h, x)) <= 1e-12);
  }
}

TEST_CASE("linearity in the coefficients") {
  const int d = 4, n = 2, dd = 16;
  const auto all = enumerate_indices(dd, n);
  Rng rng(6);
  SparseExpansion a(dd, n), b(dd, n), mix(dd, n);
  for (std::size_t j = 0; j < all.size(); j += 3) {
    const double va = rng.uniform(-1, 1), vb = rng.uniform(-1, 1);
    a.add(all[j], va);
    b.add(all[j], vb);
    mix.add(all[j], 2.0 * va - 0.5 * vb);
  }
  const auto ha = build_approximator(a, n, d, 1), hb = build_approximator(b, n, d, 1),
             hm = build_approximator(mix, n, d, 1);
  CHECK(ha.h.net() == hm.h.net());
  for (int s = 0; s < 20; ++s) {
    const DataTensor x = random_input(rng, d);
    CHECK(std::fabs(evaluate(hm.h, x) - (2.0 * evaluate(ha.h, x) - 0.5 * evaluate(hb.h, x))) <= 1e-12);
  }
}

TEST_CASE("error bound on an exact expansion") {
  const int d = 4;
  for (int n : {2, 3}) {
    const Target t = make_target("combo", d, n);
    const auto app = build_approximator(t.expansion, n, d, 1, BranchSet::kSupport);
    const double bound = 1.5 * std::ldexp(1.0, -2 * n) * (d * d - 1) * t.expansion.coefficient_abs_sum();
    const ErrorEstimate e = measure_error(app, t.f, kInfinity, 200, 9);
    CHECK(e.value <= bound);
    CHECK(e.value > 0.0);
    CHECK(e.standard_error == 0.0);
    CHECK(e.points > 200);
  }
}

TEST_CASE("build_approximator input validation") {
  SparseExpansion wrong(9, 2);
  CHECK_THROWS_AS(build_approximator(wrong, 2, 4, 1), ShapeError);
  SparseExpansion big(16, 3);
  big.add(LevelIndex({3, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1},
                     {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1}),
          1.0);
  CHECK_THROWS_AS(build_approximator(big, 2, 4, 1), std::invalid_argument);
  SparseExpansion nine(9, 2);
  CHECK_THROWS_AS(build_approximator(nine, 2, 3, 1), UnsupportedError);
}

TEST_CASE("size report") {
  SparseExpansion e(16, 2);
  e.add(LevelIndex::ones(16), 1.0);
  const auto app = build_approximator(e, 2, 4, 1);
  const std::int64_t th = theta(16, 2);
  CHECK_THROWS_AS(check_size_bound(app, th - 1), std::invalid_argument);
  double previous = 0.0;
  for (std::int64_t N : {th, th + 1, 2 * th, 1000 * th}) {
    const SizeReport r = check_size_bound(app, N);
    CHECK(r.size == size_of(app.h));
    const std::int64_t sum = std::accumulate(
        r.breakdown.begin(), r.breakdown.end(), std::int64_t{0},
        [](std::int64_t acc, const SizeEntry& s) { return acc + s.size; });
    CHECK(sum == r.size);
    CHECK(r.bound == doctest::Approx(24.0 * 9 * std::pow(4.0, 5) * N * std::log2(N)));
    CHECK(r.level_bound == doctest::Approx(24.0 * 9 * std::pow(4.0, 5) * 2 * th));
    CHECK(r.bound > previous);
    CHECK(r.pass == (r.size <= r.bound));
    previous = r.bound;
  }
  CHECK(check_size_bound(app, th).pass);
}

TEST_CASE("select_N") {
  for (double p : {2.0, 4.0, kInfinity}) {
    double previous = 0.0;
    for (double eps : {1e-1, 1e-2, 1e-3, 1e-4}) {
      const NSelection s = select_N(eps, p, 3);
      CHECK(s.log2_N > previous);
      CHECK(s.log2_rhs <= std::log2(eps));
      previous = s.log2_N;
    }
  }
  CHECK(select_N(0.1, kInfinity, 3).beta == doctest::Approx(1.5 * 8));
  CHECK(select_N(0.1, 2.0, 3).beta == doctest::Approx(5.0 / 3.0 * 8));
  CHECK_FALSE(select_N(0.1, 2.0, 3).N.has_value());
  CHECK_THROWS_AS(select_N(0.0, 2.0, 3), std::invalid_argument);
  CHECK_THROWS_AS(select_N(1.0, 2.0, 3), std::invalid_argument);
  CHECK_THROWS_AS(select_N(0.1, 1.5, 3), std::invalid_argument);
  CHECK_THROWS_AS(select_N(0.1, 2.0, 2), std::invalid_argument);
  // Bound is decreasing in N for large N.
  CHECK(log2_error_bound(200.0, 2.0, 3) < log2_error_bound(150.0, 2.0, 3));
}

TEST_CASE("measure_error trivial cases") {
  SparseExpansion e(16, 1);
  const auto zero = build_approximator(e, 1, 4, 1, BranchSet::kSupport);
  const TargetFunction f0 = [](std::span<const double>) { return 0.0; };
  const TargetFunction f1 = [](std::span<const double>) { return 1.0; };
  CHECK(measure_error(zero, f0, kInfinity, 50, 1).value == 0.0);
  CHECK(measure_error(zero, f1, kInfinity, 50, 1).value == 1.0);
  const ErrorEstimate l2 = measure_error(zero, f1, 2.0, 50, 1);
  CHECK(l2.value == doctest::Approx(1.0));
  CHECK(l2.standard_error == doctest::Approx(0.0));
  CHECK(l2.points == 50);
  CHECK_THROWS_AS(measure_error(zero, f0, 2.0, 0, 1), std::invalid_argument);
  // Same seed, same estimate.
  const Target t = make_target("bubble", 4, 2);
  const auto app = build_approximator(t.expansion, 2, 4, 1, BranchSet::kSupport);
  CHECK(measure_error(app, t.f, 2.0, 100, 3).value == measure_error(app, t.f, 2.0, 100, 3).value);
}

TEST_CASE("targets") {
  for (const auto& name : target_names()) {
    const Target t = make_target(name, 4, 3);
    CHECK(t.expansion.dimension() == 16);
    if (t.exact) {
      Rng rng(8);
      for (int s = 0; s < 100; ++s) {
        const auto x = rng.uniform_vector(16);
        CHECK(std::fabs(t.f(x) - eval_truncation(t.expansion, x)) <= 1e-14);
      }
    }
  }
  CHECK_THROWS_AS(make_target("nope", 4, 2), std::invalid_argument);
  CHECK_THROWS_AS(make_target("hat2", 4, 1), std::invalid_argument);
}
