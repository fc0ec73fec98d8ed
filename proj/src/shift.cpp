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

#include "korobov/shift.hpp"

#include <string>

#include "korobov/errors.hpp"

namespace korobov {

ConvKernel shift_kernel(ShiftBlock block, int half_width) {
  ConvKernel kernel(1, 1, half_width);
  kernel.set(1, 1, block.s, block.t, 1.0);
  return kernel;
}

DataTensor shift_apply(ShiftBlock block, const DataTensor& x, int half_width) {
  if (x.channels() != 1) throw ShapeError("shift blocks act on one-channel tensors");
  return conv2d(shift_kernel(block, half_width), x);
}

namespace {

void append(std::vector<ShiftBlock>& seq, ShiftBlock block, int times) {
  for (int i = 0; i < times; ++i) seq.push_back(block);
}

// Cases with m <= ceil(d/2). The sequences move the target entry into a
// corner, sweep it to the opposite corner (which flushes every other entry
// into the padding) and walk it back to (m,n).
std::vector<ShiftBlock> upper_half_sequence(int m, int n, int d) {
  const int half = (d + 1) / 2;
  std::vector<ShiftBlock> seq;
  if (n <= half) {
    if (m <= n) {
      append(seq, {1, 1}, m - 1);
      append(seq, {0, 1}, n - m);
      append(seq, {-1, -1}, d - 1);
      append(seq, {1, 1}, d - n);
      append(seq, {1, 0}, n - m);
    } else {
      append(seq, {1, 1}, n - 1);
      append(seq, {1, 0}, m - n);
      append(seq, {-1, -1}, d - 1);
      append(seq, {1, 1}, d - m);
      append(seq, {0, 1}, m - n);
    }
  } else {
    if (m + n <= d + 1) {
      append(seq, {1, -1}, m - 1);
      append(seq, {0, -1}, d + 1 - m - n);
      append(seq, {-1, 1}, d - 1);
      append(seq, {1, -1}, n - 1);
      append(seq, {1, 0}, d + 1 - m - n);
    } else {
      append(seq, {1, -1}, d - n);
      append(seq, {1, 0}, m + n - d - 1);
      append(seq, {-1, 1}, d - 1);
      append(seq, {1, -1}, d - m);
      append(seq, {0, -1}, m + n - d - 1);
    }
  }
  return seq;
}

}  // namespace

SelectorPlan build_selector(int m, int n, int spatial) {
  if (spatial < 1) throw ShapeError("spatial size must be positive");
  if (m < 1 || m > spatial || n < 1 || n > spatial) {
    throw IndexError("selector target (" + std::to_string(m) + "," + std::to_string(n) +
                     ") outside 1:" + std::to_string(spatial));
  }
  SelectorPlan plan{m, n, spatial, {}};
  const int half = (spatial + 1) / 2;
  if (m <= half) {
    plan.kernels = upper_half_sequence(m, n, spatial);
  } else {
    // Lower half: rotate the grid by 180 degrees, which maps S^{s,t} to
    // S^{-s,-t} and (m,n) to (d+1-m, d+1-n) in the upper half.
    plan.kernels = upper_half_sequence(spatial + 1 - m, spatial + 1 - n, spatial);
    for (auto& block : plan.kernels) block = block.reflected();
  }
  return plan;
}

DataTensor apply_selector(const SelectorPlan& plan, const DataTensor& x, int half_width) {
  if (x.channels() != 1 || x.spatial() != plan.spatial) {
    throw ShapeError("selector plan does not match tensor shape");
  }
  DataTensor y = x;
  for (const auto& block : plan.kernels) y = shift_apply(block, y, half_width);
  return y;
}

ConvNet selector_net(const SelectorPlan& plan, int half_width) {
  std::vector<ConvLayer> layers;
  layers.reserve(plan.kernels.size());
  for (const auto& block : plan.kernels) {
    layers.push_back(ConvLayer::without_bias(shift_kernel(block, half_width)));
  }
  return ConvNet(1, plan.spatial, half_width, std::move(layers));
}

DataTensor mask_entry(const DataTensor& x, int m, int n) {
  if (x.channels() != 1) throw ShapeError("masking acts on one-channel tensors");
  DataTensor out(1, x.spatial());
  out(1, m, n) = x.at(1, m, n);
  return out;
}

int selector_length_bound(int spatial) { return (5 * spatial) / 2 - 1; }

}  // namespace korobov
