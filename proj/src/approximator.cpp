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

#include "korobov/approximator.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <string>
#include <thread>

#include "korobov/basis_network.hpp"
#include "korobov/errors.hpp"
#include "korobov/product_network.hpp"
#include "korobov/random.hpp"

namespace korobov {

int approximator_depth(int n, int spatial) {
  return 2 * (2 * n + 3) * log2_exact(spatial) + 6 * spatial;
}

KorobovApproximator build_approximator(const SparseExpansion& expansion, int n, int spatial,
                                       int half_width, BranchSet branch_set) {
  const int d = spatial;
  const int dd = d * d;
  if (expansion.dimension() != dd) {
    throw ShapeError("expansion dimension " + std::to_string(expansion.dimension()) +
                     " does not match d^2 = " + std::to_string(dd));
  }
  for (const auto& term : expansion.terms()) {
    if (term.li.level_sum() > n + dd - 1) {
      throw std::invalid_argument("expansion term with |l|_1 = " +
                                  std::to_string(term.li.level_sum()) + " lies outside Xi_" +
                                  std::to_string(n));
    }
  }
  const BasisNetFactory factory(n, d, half_width);

  std::vector<LevelIndex> branches;
  if (branch_set == BranchSet::kFull) {
    branches = enumerate_indices(dd, n);
  } else {
    for (const auto& term : expansion.terms()) {
      if (term.coefficient != 0.0) branches.push_back(term.li);
    }
  }

  const int theta_n = static_cast<int>(branches.size());
  std::vector<double> alpha(static_cast<std::size_t>(std::max(theta_n, 1)) * dd, 0.0);
  ConvNet net(1, d, half_width);

  if (theta_n == 0) {
    // Nothing to represent: a single zero branch keeps the shapes valid.
    ConvKernel dup(1, 1, half_width);
    dup.touch(1, 1);
    ConvNet zero(1, d, half_width, {ConvLayer::without_bias(std::move(dup))});
    net = deepen(zero, approximator_depth(n, d));
  } else {
    ConvKernel dup(theta_n, 1, half_width);
    for (int c = 1; c <= theta_n; ++c) dup.set(c, 1, 0, 0, 1.0);
    const ConvNet duplicate(1, d, half_width, {ConvLayer::without_bias(std::move(dup))});

    std::vector<ConvNet> parts;
    parts.reserve(theta_n);
    for (const auto& li : branches) parts.push_back(factory.build(li).net);
    net = deepen(compose(duplicate, concatenate(parts)), approximator_depth(n, d));

    for (int c = 1; c <= theta_n; ++c) {
      alpha[static_cast<std::size_t>(c) * dd - 1] = expansion.coefficient(branches[c - 1]);
    }
  }

  HypothesisFunction h(std::move(net), std::move(alpha), 0.0);
  return KorobovApproximator{n, d, half_width, branch_set, expansion, std::move(branches),
                             std::move(h)};
}

// ---------------------------------------------------------------------------

SizeReport check_size_bound(const KorobovApproximator& app, std::int64_t capacity) {
  const int d = app.spatial;
  const int dd = d * d;
  const std::int64_t branches = static_cast<std::int64_t>(app.branches.size());
  const std::int64_t theta_n =
      app.branch_set == BranchSet::kFull ? branches : theta(dd, app.n);
  if (theta_n > capacity) {
    throw std::invalid_argument("theta_n = " + std::to_string(theta_n) + " exceeds N = " +
                                std::to_string(capacity));
  }
  SizeReport report{};
  report.size = size_of(app.h);
  report.capacity = capacity;
  const double tap = std::pow(2.0 * app.half_width + 1.0, 2);
  const double d5 = std::pow(static_cast<double>(d), 5);
  report.bound = 24.0 * tap * d5 * static_cast<double>(capacity) *
                 std::log2(static_cast<double>(capacity));
  report.level_bound = 24.0 * tap * d5 * app.n * static_cast<double>(theta_n);
  report.pass = static_cast<double>(report.size) <= report.bound;

  const auto layers = app.h.net().layers();
  if (app.branches.empty()) {
    report.breakdown.push_back({"network", size_of(app.h.net())});
    report.breakdown.push_back({"readout", size_of(app.h) - size_of(app.h.net())});
    return report;
  }
  // Concatenation is block diagonal, so sizes add over branches.
  const int phi_depth = phi_net_depth(d);
  const int branch_depth = basis_net_depth(app.n, d);
  auto stage_size = [&](int first, int last) {
    std::vector<ConvLayer> slice(layers.begin() + first, layers.begin() + last);
    const int in = slice.front().kernel.in_channels();
    return size_of(ConvNet(in, d, app.half_width, std::move(slice)));
  };
  report.breakdown.push_back({"duplication", stage_size(0, 1)});
  report.breakdown.push_back({"phi", stage_size(1, 1 + phi_depth)});
  report.breakdown.push_back({"product", stage_size(1 + phi_depth, 1 + branch_depth)});
  report.breakdown.push_back(
      {"depth_padding", static_cast<int>(layers.size()) > 1 + branch_depth
                            ? stage_size(1 + branch_depth, static_cast<int>(layers.size()))
                            : 0});
  report.breakdown.push_back({"readout", size_of(app.h) - size_of(app.h.net())});
  return report;
}

// ---------------------------------------------------------------------------

namespace {

void require_p(double p) {
  if (!(p >= 2.0)) throw std::invalid_argument("p must lie in [2, inf]");
}

// 1/p, with 1/inf = 0.
double reciprocal(double p) { return std::isinf(p) ? 0.0 : 1.0 / p; }

// p / (2p - 1) = 1 / (2 - 1/p).
double rate_exponent(double p) { return 1.0 / (2.0 - reciprocal(p)); }

// (3p - 1) / (2p - 1) = (3 - 1/p) / (2 - 1/p).
double log_exponent(double p) { return (3.0 - reciprocal(p)) / (2.0 - reciprocal(p)); }

}  // namespace

double log2_error_bound(double log2_N, double p, int spatial) {
  const double dd = static_cast<double>(spatial) * spatial;
  const double r = reciprocal(p);
  return 2.0 - (1.0 - r) * dd + (3.0 - r) * (dd - 1.0) * std::log2(log2_N) - (2.0 - r) * log2_N;
}

NSelection select_N(double epsilon, double p, int spatial) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw std::invalid_argument("epsilon must lie in (0, 1)");
  }
  require_p(p);
  if (spatial < 3) throw std::invalid_argument("d must be >= 3");
  const double dd = static_cast<double>(spatial) * spatial;
  const double r = reciprocal(p);

  NSelection s{};
  s.epsilon = epsilon;
  s.p = p;
  s.spatial = spatial;
  s.beta = log_exponent(p) * (dd - 1.0);
  s.log2_gamma = ((1.0 - r) * dd - 2.0) * rate_exponent(p);

  const double beta = s.beta;
  const double log2_R = beta * std::log2(6.0 * beta * std::log2(beta));
  const double abs_log2_eps = std::fabs(std::log2(epsilon));
  s.log2_N = log2_R - s.log2_gamma + beta * std::log2(log_exponent(p)) +
             rate_exponent(p) * abs_log2_eps + beta * std::log2(abs_log2_eps);

  // Round up in the integer domain only when the value fits.
  if (s.log2_N < 62.0) {
    s.N = static_cast<std::int64_t>(std::ceil(std::exp2(s.log2_N)));
  }
  const double log2_N_int = s.N ? std::log2(static_cast<double>(*s.N)) : s.log2_N;

  s.log2_eta = s.log2_gamma - rate_exponent(p) * abs_log2_eps;
  const double log2_inv_eta = -s.log2_eta;
  bool holds = beta > 2.0 && s.log2_eta <= std::log2(1.0 / 3.0) && log2_inv_eta > 0.0;
  if (holds) {
    const double log2_threshold = log2_R + beta * std::log2(log2_inv_eta) + log2_inv_eta;
    holds = log2_N_int >= log2_threshold;
  }
  s.hypothesis_holds = holds;
  s.log2_rhs = log2_error_bound(log2_N_int, p, spatial);
  return s;
}

// ---------------------------------------------------------------------------

int evaluation_threads() {
  int threads = static_cast<int>(std::thread::hardware_concurrency());
  if (threads < 1) threads = 1;
  if (const char* env = std::getenv("KOROBOV_CNN_THREADS")) {
    const int cap = std::atoi(env);
    if (cap >= 1) threads = std::min(threads, cap);
  }
  return threads;
}

std::vector<std::vector<double>> structured_points(const SparseExpansion& expansion,
                                                   std::uint64_t seed) {
  constexpr int kSignPatterns = 8;
  constexpr int kInnerSamples = 24;
  constexpr int kLineSteps = 64;
  constexpr std::size_t kMaxTerms = 256;
  const int dim = expansion.dimension();
  Rng rng(seed);
  std::vector<std::vector<double>> points;
  std::size_t used = 0;
  for (const auto& term : expansion.terms()) {
    if (term.coefficient == 0.0) continue;
    if (++used > kMaxTerms) break;
    std::vector<double> centre(dim), half(dim);
    for (int j = 0; j < dim; ++j) {
      const double h = std::ldexp(1.0, -term.li.level[j]);
      centre[j] = term.li.index[j] * h;
      half[j] = h / 2.0;
    }
    points.push_back(centre);
    for (int pattern = 0; pattern < kSignPatterns + 2; ++pattern) {
      std::vector<double> x(dim);
      for (int j = 0; j < dim; ++j) {
        double sign;
        if (pattern == 0) {
          sign = -1.0;
        } else if (pattern == 1) {
          sign = 1.0;
        } else {
          sign = rng.below(2) == 0 ? -1.0 : 1.0;
        }
        x[j] = centre[j] + sign * half[j];
      }
      points.push_back(std::move(x));
    }
    // Diagonal lines centre +- u h: every hat factor equals 1 - u at once,
    // where the product stage error peaks.
    for (int sign = -1; sign <= 1; sign += 2) {
      for (int step = 1; step < kLineSteps; ++step) {
        const double u = static_cast<double>(step) / kLineSteps;
        std::vector<double> x(dim);
        for (int j = 0; j < dim; ++j) x[j] = centre[j] + sign * u * 2.0 * half[j];
        points.push_back(std::move(x));
      }
    }
    for (int s = 0; s < kInnerSamples; ++s) {
      std::vector<double> x(dim);
      for (int j = 0; j < dim; ++j) x[j] = rng.uniform(centre[j] - half[j], centre[j] + half[j]);
      points.push_back(std::move(x));
    }
  }
  return points;
}

namespace {

// |f_ref(x) - h(x)| for every point, evaluated on worker threads.
std::vector<double> pointwise_errors(const KorobovApproximator& app, const TargetFunction& f_ref,
                                     const std::vector<std::vector<double>>& points) {
  std::vector<double> errors(points.size());
  const int d = app.spatial;
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < points.size(); i = next++) {
      const DataTensor x(1, d, points[i]);
      errors[i] = std::fabs(f_ref(points[i]) - evaluate(app.h, x));
    }
  };
  const int threads =
      std::max(1, std::min<int>(evaluation_threads(), static_cast<int>(points.size())));
  std::vector<std::jthread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  return errors;
}

}  // namespace

ErrorEstimate measure_error(const KorobovApproximator& app, const TargetFunction& f_ref, double p,
                            int samples, std::uint64_t seed) {
  if (samples < 1) throw std::invalid_argument("samples must be >= 1");
  if (!(p >= 1.0)) throw std::invalid_argument("p must be >= 1");
  const int dim = app.spatial * app.spatial;

  std::vector<std::vector<double>> points;
  Rng rng(seed);
  const std::uint64_t structured_seed = rng.next();
  if (std::isinf(p)) points = structured_points(app.expansion, structured_seed);
  for (int s = 0; s < samples; ++s) points.push_back(rng.uniform_vector(dim));

  const std::vector<double> errors = pointwise_errors(app, f_ref, points);
  ErrorEstimate estimate{0.0, 0.0, static_cast<std::int64_t>(points.size())};
  if (std::isinf(p)) {
    for (double e : errors) estimate.value = std::max(estimate.value, e);
    return estimate;
  }
  // Mean of |e|^p and its standard error, mapped through t -> t^{1/p}.
  double mean = 0.0;
  for (double e : errors) mean += std::pow(e, p);
  mean /= static_cast<double>(errors.size());
  double var = 0.0;
  for (double e : errors) var += std::pow(std::pow(e, p) - mean, 2);
  var /= std::max<double>(1.0, static_cast<double>(errors.size()) - 1.0);
  const double se_mean = std::sqrt(var / static_cast<double>(errors.size()));
  estimate.value = std::pow(mean, 1.0 / p);
  estimate.standard_error =
      mean > 0.0 ? std::pow(mean, 1.0 / p - 1.0) / p * se_mean : 0.0;
  return estimate;
}

// ---------------------------------------------------------------------------

namespace {

LevelIndex refined(int dim, int coordinate, int index) {
  std::vector<int> level(dim, 1), idx(dim, 1);
  level[coordinate] = 2;
  idx[coordinate] = index;
  return LevelIndex(std::move(level), std::move(idx));
}

TargetFunction expansion_function(const SparseExpansion& e) {
  return [e](std::span<const double> x) { return eval_truncation(e, x); };
}

void require_budget(const std::string& name, int n, int needed) {
  if (n < needed) {
    throw std::invalid_argument("target " + name + " needs n >= " + std::to_string(needed));
  }
}

}  // namespace

std::vector<std::string> target_names() { return {"hat111", "hat2", "combo", "bubble"}; }

Target make_target(const std::string& name, int spatial, int n) {
  const int dim = spatial * spatial;
  if (name == "hat111") {
    SparseExpansion e(dim, n);
    e.add(LevelIndex::ones(dim), 1.0);
    return Target{name, e, expansion_function(e), true};
  }
  if (name == "hat2") {
    require_budget(name, n, 2);
    SparseExpansion e(dim, n);
    e.add(refined(dim, dim - 1, 3), 1.0);
    return Target{name, e, expansion_function(e), true};
  }
  if (name == "combo") {
    require_budget(name, n, 2);
    SparseExpansion e(dim, n);
    e.add(LevelIndex::ones(dim), 1.0);
    e.add(refined(dim, 0, 1), -0.5);
    e.add(refined(dim, dim / 2, 3), 0.5);
    return Target{name, e, expansion_function(e), true};
  }
  if (name == "bubble") {
    // prod_j 4 x_j (1 - x_j); its expansion is infinite, truncated at n.
    std::vector<std::function<double(double)>> factors(
        dim, [](double x) { return 4.0 * x * (1.0 - x); });
    SparseExpansion e = hierarchize_separable(factors, n);
    TargetFunction f = [](std::span<const double> x) {
      double v = 1.0;
      for (double xj : x) v *= 4.0 * xj * (1.0 - xj);
      return v;
    };
    return Target{name, std::move(e), std::move(f), false};
  }
  throw std::invalid_argument("unknown target '" + name + "'");
}

}  // namespace korobov
