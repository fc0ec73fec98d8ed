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

// Basic shift blocks S^{s,t} and the entry selector Delta_{m,n}.

#include <vector>

#include "korobov/network.hpp"
#include "korobov/tensor.hpp"

namespace korobov {

// A (2k+1)x(2k+1) single-channel kernel with a lone 1 at offset (s,t).
// Convolving with it reads [out]_{m,n} = [iota(X)]_{m+s,n+t}.
struct ShiftBlock {
  int s = 0;
  int t = 0;

  ShiftBlock reflected() const { return ShiftBlock{-s, -t}; }
  friend bool operator==(const ShiftBlock&, const ShiftBlock&) = default;
};

// Single-channel kernel realizing `block`; throws IndexError if |s| or |t| > k.
ConvKernel shift_kernel(ShiftBlock block, int half_width);

// conv2d(S^{s,t}, X) on a one-channel tensor.
DataTensor shift_apply(ShiftBlock block, const DataTensor& x, int half_width = 1);

// Kernel sequence K^1..K^r with K^r * ... * K^1 * X = Delta_{m,n}(X).
struct SelectorPlan {
  int m = 1;
  int n = 1;
  int spatial = 1;
  std::vector<ShiftBlock> kernels;  // applied front to back

  int length() const { return static_cast<int>(kernels.size()); }
};

SelectorPlan build_selector(int m, int n, int spatial);

// Applies the plan to a one-channel tensor through plain convolutions.
DataTensor apply_selector(const SelectorPlan& plan, const DataTensor& x, int half_width = 1);

// The plan as a one-channel network: one sigma o A_{S} layer per kernel.
// Equals Delta_{m,n} on nonnegative inputs.
ConvNet selector_net(const SelectorPlan& plan, int half_width);

// Reference masking: X_{m,n} at (m,n), zeros elsewhere.
DataTensor mask_entry(const DataTensor& x, int m, int n);

// floor(5d/2) - 1, the largest plan length the construction ever needs.
int selector_length_bound(int spatial);

}  // namespace korobov
