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

// The full network h_n(X) = sum_{(l,i)} v_{l,i} [g_{l,i}(X)]_{d,d}: a
// duplication layer, the concatenation of every basis net, identity layers
// up to the stated depth, and a readout that picks entry (d,d) of each
// branch. Also size accounting, the choice of N for a target accuracy and
// the empirical error harness.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "korobov/network.hpp"
#include "korobov/sparse_grid.hpp"

namespace korobov {

enum class BranchSet {
  kFull,     // one branch per element of Xi_n, in enumerate_indices order
  kSupport,  // only branches whose coefficient is nonzero
};

struct KorobovApproximator {
  int n;
  int spatial;
  int half_width;
  BranchSet branch_set;
  SparseExpansion expansion;
  std::vector<LevelIndex> branches;  // mu: channel c of the output is branches[c-1]
  HypothesisFunction h;
};

// Throws ShapeError on a dimension mismatch, std::invalid_argument when a
// term lies outside Xi_n, UnsupportedError when d < 3 or d is not 2^p.
KorobovApproximator build_approximator(const SparseExpansion& expansion, int n, int spatial,
                                       int half_width, BranchSet branch_set = BranchSet::kFull);

// 2(2n+3) log2(d) + 6d.
int approximator_depth(int n, int spatial);

struct SizeEntry {
  std::string module;
  std::int64_t size;
};

struct SizeReport {
  std::int64_t size;                    // size_of(h)
  std::int64_t capacity;                // N
  double bound;                         // 24 (2k+1)^2 d^5 N log2 N
  double level_bound;                   // 24 (2k+1)^2 d^5 n theta_n
  bool pass;                            // size <= bound
  std::vector<SizeEntry> breakdown;     // sums to size
};

// Throws std::invalid_argument unless theta_n <= N.
SizeReport check_size_bound(const KorobovApproximator& app, std::int64_t capacity);

struct NSelection {
  double epsilon;
  double p;
  int spatial;
  double beta;
  double log2_gamma;
  double log2_N;                  // log2 of the formula before rounding up
  std::optional<std::int64_t> N;  // set when N < 2^62
  double log2_eta;                // eta = gamma eps^{p/(2p-1)}
  // beta > 2, eta <= 1/3 and N at or above the threshold of the
  // bound log^beta(x)/x <= eta. Reported, never enforced.
  bool hypothesis_holds;
  double log2_rhs;                // log2 of the error bound evaluated at N
};

// Throws std::invalid_argument unless 0 < eps < 1, 2 <= p <= inf, d >= 3.
NSelection select_N(double epsilon, double p, int spatial);

// log2 of 4 / 2^{(1-1/p)d^2} (log2 N)^{(3-1/p)(d^2-1)} / N^{2-1/p}, given log2 N.
double log2_error_bound(double log2_N, double p, int spatial);

using TargetFunction = std::function<double(std::span<const double>)>;

struct ErrorEstimate {
  double value;           // sup error (p = inf) or the L^p estimate
  double standard_error;  // zero for p = inf
  std::int64_t points;
};

// p = inf: max |f_ref - h| over structured points of the expansion plus
// `samples` uniform points. Finite p: Monte Carlo L^p over `samples` uniform
// points with the delta-method standard error.
ErrorEstimate measure_error(const KorobovApproximator& app, const TargetFunction& f_ref, double p,
                            int samples, std::uint64_t seed);

// Structured sup-error probes for an expansion: term centres, +-h/2 corner
// midpoints, the two diagonals centre +- u h and seeded points inside the
// inner half of each support box.
std::vector<std::vector<double>> structured_points(const SparseExpansion& expansion,
                                                   std::uint64_t seed);

// Test targets with known expansions.
struct Target {
  std::string name;
  SparseExpansion expansion;
  TargetFunction f;
  bool exact;  // f equals the expansion on [0,1]^D
};

// hat111, hat2, combo, bubble. Throws std::invalid_argument for other names.
Target make_target(const std::string& name, int spatial, int n);
std::vector<std::string> target_names();

// Worker count for evaluation batches: KOROBOV_CNN_THREADS if set, else the
// hardware concurrency.
int evaluation_threads();

}  // namespace korobov
