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

// The 12-channel network whose (d,d) output approximates the product of all
// d^2 entries of a one-channel d x d input, for d a power of two.
//
// The column stage pairs columns with prd_n in log2(d) rounds (round q joins
// columns 2^q j - 2^{q-1} and 2^q j into column 2^q j), leaving the row
// products in column d. The row stage repeats the same reduction along the
// vertical axis, so entry (d,d) ends up holding the product of everything.

#include "korobov/network.hpp"

namespace korobov {

enum class ReductionAxis {
  kColumns,  // pairs horizontally adjacent entries (shift block S^{0,-1})
  kRows,     // pairs vertically adjacent entries (shift block S^{-1,0})
};

struct ProductNet {
  int n;
  int spatial;
  ConvNet column_stage;
  ConvNet row_stage;
  ConvNet net;  // row_stage o column_stage
};

// Throws UnsupportedError unless d = 2^p with p >= 1.
ProductNet build_product_net(int n, int spatial, int half_width);

// One reduction stage (all log2(d) rounds) along `axis`.
ConvNet build_reduction_stage(int n, int spatial, int half_width, ReductionAxis axis);

// Round q of a stage: Lambda_q.
ConvNet build_reduction_round(int n, int round, int spatial, int half_width, ReductionAxis axis);

// 2(2n+3) log2(d) + 2(d-1).
int product_net_depth(int n, int spatial);

// Pairwise prd_n reduction of the columns, returning the d values that the
// column stage leaves in column d (row i holds the reduced row i).
std::vector<double> column_reduction_oracle(int n, const DataTensor& x);

// Column reduction followed by the row reduction of the resulting column;
// the value the network leaves at (d,d).
double reduction_oracle(int n, const DataTensor& x);

double exact_product(const DataTensor& x);

bool is_power_of_two(int value);
int log2_exact(int value);

}  // namespace korobov
