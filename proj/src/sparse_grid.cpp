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

#include "korobov/sparse_grid.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "korobov/errors.hpp"

namespace korobov {

bool valid_component(int level, int index) {
  if (level < 1 || level > 62) return false;
  const std::int64_t upper = (std::int64_t{1} << level) - 1;
  return index >= 1 && index <= upper && (index % 2 == 1);
}

LevelIndex::LevelIndex(std::vector<int> level_in, std::vector<int> index_in)
    : level(std::move(level_in)), index(std::move(index_in)) {
  if (level.size() != index.size() || level.empty()) {
    throw ShapeError("level and index multi-indices must have equal, nonzero length");
  }
  for (std::size_t j = 0; j < level.size(); ++j) {
    if (!valid_component(level[j], index[j])) {
      throw IndexError("component " + std::to_string(j + 1) + ": (l, i) = (" +
                       std::to_string(level[j]) + ", " + std::to_string(index[j]) +
                       ") is not in I_l");
    }
  }
}

LevelIndex LevelIndex::ones(int dimension) {
  return LevelIndex(std::vector<int>(dimension, 1), std::vector<int>(dimension, 1));
}

int LevelIndex::level_sum() const { return std::accumulate(level.begin(), level.end(), 0); }

double hat_1d(int level, int index, double x) {
  if (!valid_component(level, index)) {
    throw IndexError("(l, i) = (" + std::to_string(level) + ", " + std::to_string(index) +
                     ") is not a valid hierarchical index");
  }
  // (x - i h) / h = x 2^l - i, exact for dyadic x.
  const double u = std::ldexp(x, level) - index;
  const double v = 1.0 - std::fabs(u);
  return v > 0.0 ? v : 0.0;
}

double basis_nd(const LevelIndex& li, std::span<const double> x) {
  if (static_cast<int>(x.size()) != li.dimension()) {
    throw ShapeError("point has dimension " + std::to_string(x.size()) + ", basis function " +
                     std::to_string(li.dimension()));
  }
  double product = 1.0;
  for (std::size_t j = 0; j < x.size(); ++j) {
    product *= hat_1d(li.level[j], li.index[j], x[j]);
    if (product == 0.0) return 0.0;
  }
  return product;
}

Interval hat_support(int level, int index) {
  const double h = std::ldexp(1.0, -level);
  return Interval{(index - 1) * h, (index + 1) * h};
}

bool canonical_less(const LevelIndex& a, const LevelIndex& b) {
  const int sa = a.level_sum();
  const int sb = b.level_sum();
  if (sa != sb) return sa < sb;
  if (a.level != b.level) return a.level < b.level;
  return a.index < b.index;
}

// ---------------------------------------------------------------------------

SparseExpansion::SparseExpansion(int dimension, int budget)
    : dimension_(dimension), budget_(budget) {
  if (dimension < 1) throw ShapeError("expansion dimension must be positive");
  if (budget < 1) throw std::invalid_argument("expansion budget n must be >= 1");
}

SparseExpansion::SparseExpansion(int dimension, int budget, std::vector<ExpansionTerm> terms)
    : SparseExpansion(dimension, budget) {
  for (auto& term : terms) add(std::move(term.li), term.coefficient);
}

void SparseExpansion::add(LevelIndex li, double coefficient) {
  if (li.dimension() != dimension_) {
    throw ShapeError("term dimension " + std::to_string(li.dimension()) +
                     " does not match expansion dimension " + std::to_string(dimension_));
  }
  if (li.level_sum() > budget_ + dimension_ - 1) {
    throw std::invalid_argument("term with |l|_1 = " + std::to_string(li.level_sum()) +
                                " exceeds the budget n + D - 1 = " +
                                std::to_string(budget_ + dimension_ - 1));
  }
  auto it = std::lower_bound(terms_.begin(), terms_.end(), li,
                             [](const ExpansionTerm& t, const LevelIndex& key) {
                               return canonical_less(t.li, key);
                             });
  if (it != terms_.end() && it->li == li) throw std::invalid_argument("duplicate expansion term");
  terms_.insert(it, ExpansionTerm{std::move(li), coefficient});
}

double SparseExpansion::coefficient(const LevelIndex& li) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), li,
                             [](const ExpansionTerm& t, const LevelIndex& key) {
                               return canonical_less(t.li, key);
                             });
  return (it != terms_.end() && it->li == li) ? it->coefficient : 0.0;
}

double SparseExpansion::coefficient_abs_sum() const {
  double sum = 0.0;
  for (const auto& term : terms_) sum += std::fabs(term.coefficient);
  return sum;
}

double eval_truncation(const SparseExpansion& expansion, std::span<const double> x) {
  if (static_cast<int>(x.size()) != expansion.dimension()) {
    throw ShapeError("point dimension does not match expansion dimension");
  }
  double sum = 0.0;
  for (const auto& term : expansion.terms()) sum += term.coefficient * basis_nd(term.li, x);
  return sum;
}

// ---------------------------------------------------------------------------

namespace {

// Visits every level vector with l_j >= 1 and sum exactly `total`, in
// lexicographic order.
template <typename Visit>
void for_each_level(int dimension, int total, Visit&& visit) {
  std::vector<int> level(dimension, 1);
  auto recurse = [&](auto&& self, int j, int remaining) -> void {
    if (j == dimension - 1) {
      level[j] = remaining;
      visit(level);
      return;
    }
    const int rest = dimension - 1 - j;  // coordinates after j need >= 1 each
    for (int v = 1; v <= remaining - rest; ++v) {
      level[j] = v;
      self(self, j + 1, remaining - v);
    }
  };
  recurse(recurse, 0, total);
}

template <typename Visit>
void for_each_index(const std::vector<int>& level, Visit&& visit) {
  std::vector<int> index(level.size(), 1);
  while (true) {
    visit(index);
    int j = static_cast<int>(level.size()) - 1;
    while (j >= 0) {
      index[j] += 2;
      if (index[j] <= (1 << level[j]) - 1) break;
      index[j] = 1;
      --j;
    }
    if (j < 0) return;
  }
}

std::int64_t saturating_add(std::int64_t a, std::int64_t b) {
  constexpr auto kMax = std::numeric_limits<std::int64_t>::max();
  return (a > kMax - b) ? kMax : a + b;
}

std::int64_t saturating_mul(std::int64_t a, std::int64_t b) {
  constexpr auto kMax = std::numeric_limits<std::int64_t>::max();
  if (a != 0 && b > kMax / a) return kMax;
  return a * b;
}

// C(top, choose), saturating.
std::int64_t binomial(int top, int choose) {
  if (choose < 0 || choose > top) return 0;
  choose = std::min(choose, top - choose);
  // Exact while it fits: C(top, r) = C(top, r-1) * (top - r + 1) / r.
  unsigned __int128 value = 1;
  for (int r = 1; r <= choose; ++r) {
    value = value * static_cast<unsigned>(top - r + 1) / static_cast<unsigned>(r);
    if (value > static_cast<unsigned __int128>(std::numeric_limits<std::int64_t>::max())) {
      return std::numeric_limits<std::int64_t>::max();
    }
  }
  return static_cast<std::int64_t>(value);
}

}  // namespace

std::vector<LevelIndex> enumerate_indices(int dimension, int n) {
  if (dimension < 1) throw ShapeError("dimension must be positive");
  if (n < 1) throw std::invalid_argument("budget n must be >= 1");
  std::vector<LevelIndex> result;
  for (int total = dimension; total <= n + dimension - 1; ++total) {
    for_each_level(dimension, total, [&](const std::vector<int>& level) {
      for_each_index(level, [&](const std::vector<int>& index) {
        LevelIndex li;
        li.level = level;
        li.index = index;
        result.push_back(std::move(li));
      });
    });
  }
  return result;
}

std::int64_t theta(int dimension, int n) {
  if (dimension < 1) throw ShapeError("dimension must be positive");
  if (n < 1) throw std::invalid_argument("budget n must be >= 1");
  // Level sums D + j for j = 0..n-1: C(D + j - 1, D - 1) level vectors,
  // each with 2^j odd index vectors.
  std::int64_t total = 0;
  for (int j = 0; j < n; ++j) {
    const std::int64_t levels = binomial(dimension + j - 1, dimension - 1);
    const std::int64_t indices = j < 62 ? (std::int64_t{1} << j)
                                        : std::numeric_limits<std::int64_t>::max();
    total = saturating_add(total, saturating_mul(levels, indices));
  }
  return total;
}

int tau(std::int64_t capacity, int dimension) {
  if (capacity < theta(dimension, 1)) {
    throw std::invalid_argument("N = " + std::to_string(capacity) + " is below theta_1 = 1");
  }
  int n = 1;
  while (theta(dimension, n + 1) <= capacity) ++n;
  return n;
}

double surplus_1d(const std::function<double(double)>& f, int level, int index) {
  if (!valid_component(level, index)) throw IndexError("invalid hierarchical index");
  const double h = std::ldexp(1.0, -level);
  const double x = index * h;
  return f(x) - 0.5 * (f(x - h) + f(x + h));
}

SparseExpansion hierarchize_separable(std::span<const std::function<double(double)>> factors,
                                      int n) {
  const int dimension = static_cast<int>(factors.size());
  SparseExpansion expansion(dimension, n);
  for (const auto& f : factors) {
    if (f(0.0) != 0.0 || f(1.0) != 0.0) {
      throw UnsupportedError("separable factors must vanish at 0 and 1");
    }
  }

  // Per-dimension surplus tables for levels 1..n (|l|_1 <= n + D - 1 and
  // l_j >= 1 force l_j <= n).
  struct Surplus {
    int level;
    int index;
    double value;
  };
  std::vector<std::vector<Surplus>> tables(dimension);
  for (int j = 0; j < dimension; ++j) {
    for (int l = 1; l <= n; ++l) {
      for (int i = 1; i < (1 << l); i += 2) {
        const double w = surplus_1d(factors[j], l, i);
        if (w != 0.0) tables[j].push_back({l, i, w});
      }
    }
  }

  std::vector<ExpansionTerm> terms;
  LevelIndex current;
  current.level.assign(dimension, 1);
  current.index.assign(dimension, 1);
  auto recurse = [&](auto&& self, int j, int spare, double value) -> void {
    if (j == dimension) {
      terms.push_back({current, value});
      return;
    }
    for (const auto& s : tables[j]) {
      if (s.level - 1 > spare) continue;
      current.level[j] = s.level;
      current.index[j] = s.index;
      self(self, j + 1, spare - (s.level - 1), value * s.value);
    }
  };
  recurse(recurse, 0, n - 1, 1.0);

  std::sort(terms.begin(), terms.end(),
            [](const ExpansionTerm& a, const ExpansionTerm& b) { return canonical_less(a.li, b.li); });
  for (auto& term : terms) {
    if (term.coefficient != 0.0) expansion.add(std::move(term.li), term.coefficient);
  }
  return expansion;
}

double coefficient_bound(int level_sum, int dimension, double p, double norm) {
  if (p < 1.0) throw std::invalid_argument("p must be >= 1");
  const double q = std::isinf(p) ? 1.0 : (p == 1.0 ? kInfinity : p / (p - 1.0));
  const double conjugate_factor =
      std::isinf(q) ? 1.0 : std::pow(2.0 / (q + 1.0), dimension / q) * std::pow(2.0, -level_sum / q);
  return std::pow(2.0, -level_sum - dimension) * conjugate_factor * norm;
}

double basis_lp_norm(int level_sum, int dimension, double p) {
  if (std::isinf(p)) return 1.0;
  return std::pow(2.0 / (p + 1.0), dimension / p) * std::pow(2.0, -level_sum / p);
}

}  // namespace korobov
