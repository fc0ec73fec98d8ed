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

// Hierarchical hat basis on [0,1]^D and the sparse-grid truncation
// f_n = sum_{|l|_1 <= n + D - 1} sum_{i in I_l} v_{l,i} phi_{l,i}.

#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <vector>

namespace korobov {

// Pair (l, i) of multi-indices: l_j >= 1, i_j odd with 1 <= i_j <= 2^{l_j} - 1.
struct LevelIndex {
  std::vector<int> level;
  std::vector<int> index;

  LevelIndex() = default;
  // Throws IndexError when any component is outside I_l.
  LevelIndex(std::vector<int> level, std::vector<int> index);
  // l = (1,...,1), i = (1,...,1).
  static LevelIndex ones(int dimension);

  int dimension() const { return static_cast<int>(level.size()); }
  int level_sum() const;

  friend bool operator==(const LevelIndex&, const LevelIndex&) = default;
  friend auto operator<=>(const LevelIndex&, const LevelIndex&) = default;
};

// True when 1 <= i <= 2^l - 1 and i is odd.
bool valid_component(int level, int index);

// phi((x - i 2^{-l}) / 2^{-l}) with phi(x) = max(0, 1 - |x|).
double hat_1d(int level, int index, double x);

// prod_j phi_{l_j, i_j}(x_j).
double basis_nd(const LevelIndex& li, std::span<const double> x);

// Support box [x_{l,i} - h_l, x_{l,i} + h_l] of one component.
struct Interval {
  double lo;
  double hi;
};
Interval hat_support(int level, int index);

struct ExpansionTerm {
  LevelIndex li;
  double coefficient;
};

class SparseExpansion {
 public:
  SparseExpansion(int dimension, int budget);
  SparseExpansion(int dimension, int budget, std::vector<ExpansionTerm> terms);

  int dimension() const { return dimension_; }
  int budget() const { return budget_; }
  std::span<const ExpansionTerm> terms() const { return terms_; }
  // v_{l,i}, zero when (l,i) is not a term.
  double coefficient(const LevelIndex& li) const;
  double coefficient_abs_sum() const;

  // Throws on dimension mismatch, an index over budget, or a duplicate.
  void add(LevelIndex li, double coefficient);

 private:
  int dimension_;
  int budget_;
  std::vector<ExpansionTerm> terms_;  // sorted like enumerate_indices
};

double eval_truncation(const SparseExpansion& expansion, std::span<const double> x);

// Canonical order: by |l|_1, then l lexicographically, then i.
bool canonical_less(const LevelIndex& a, const LevelIndex& b);

// All (l,i) with |l|_1 <= n + D - 1 in canonical order. Its length is theta_n.
std::vector<LevelIndex> enumerate_indices(int dimension, int n);

// theta_n = #Xi_n = sum_{j=0}^{n-1} 2^j C(j + D - 1, D - 1), saturating at
// the int64 maximum.
std::int64_t theta(int dimension, int n);

// max{n : theta_n <= N}; throws std::invalid_argument when N < theta_1 = 1.
int tau(std::int64_t capacity, int dimension);

// Hierarchical surplus of a univariate function at (l, i):
// f(x_{l,i}) - (f(x_{l,i} - h_l) + f(x_{l,i} + h_l)) / 2.
double surplus_1d(const std::function<double(double)>& f, int level, int index);

// Coefficients of f(x) = prod_j f_j(x_j) truncated to budget n; each f_j must
// vanish at 0 and 1. Exact zeros are dropped.
SparseExpansion hierarchize_separable(std::span<const std::function<double(double)>> factors,
                                      int n);

// Bound on |v_{l,i}| for ||f||_{X^{2,p}} <= norm, with q the conjugate
// exponent of p (p = infinity gives q = 1).
double coefficient_bound(int level_sum, int dimension, double p, double norm);

// ||phi_{l,i}||_{L^p([0,1]^D)}; p = infinity gives 1.
double basis_lp_norm(int level_sum, int dimension, double p);

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

}  // namespace korobov
