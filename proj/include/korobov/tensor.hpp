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

// Data tensors, zero-padding multi-channel convolution, ReLU and
// vectorization. All public indices are 1-based: channels q in 1:c,
// spatial m,n in 1:d, kernel offsets s,t in -k:k.

#include <cstddef>
#include <span>
#include <vector>

namespace korobov {

class DataTensor {
 public:
  // All-zero tensor with `channels` x `spatial` x `spatial` entries.
  DataTensor(int channels, int spatial);
  // Takes values in vectorization order, i.e. [q][m][n] row-major.
  DataTensor(int channels, int spatial, std::vector<double> values);

  int channels() const { return channels_; }
  int spatial() const { return spatial_; }
  std::size_t size() const { return values_.size(); }

  // Unchecked 1-based access.
  double operator()(int q, int m, int n) const { return values_[offset(q, m, n)]; }
  double& operator()(int q, int m, int n) { return values_[offset(q, m, n)]; }

  // Bounds-checked 1-based access; throws IndexError.
  double at(int q, int m, int n) const;

  std::span<const double> values() const { return values_; }
  std::span<double> values() { return values_; }
  std::span<const double> channel(int q) const;

  // Stacks channel blocks on top of each other: (X; Y).
  static DataTensor stack(std::span<const DataTensor> parts);
  // Channels [first, first + count) as a new tensor (1-based first).
  DataTensor slice_channels(int first, int count) const;

  friend bool operator==(const DataTensor&, const DataTensor&) = default;

 private:
  std::size_t offset(int q, int m, int n) const {
    return (static_cast<std::size_t>(q - 1) * spatial_ + (m - 1)) * spatial_ + (n - 1);
  }

  int channels_;
  int spatial_;
  std::vector<double> values_;
};

// [iota(X)]_{q,m,n}: the entry for m,n in 1:d, zero in the padding region.
double zero_pad_lookup(const DataTensor& x, int q, int m, int n);

// Convolution kernel of shape c' x c x (2k+1) x (2k+1), stored block-sparse:
// only (p,q) blocks that a construction touches are materialized. A missing
// block is a structural zero and does not count towards network size.
class ConvKernel {
 public:
  struct Block {
    int in;                    // input channel q, 1-based
    std::vector<double> taps;  // (2k+1)^2 values, row s=-k..k, col t=-k..k
  };

  ConvKernel(int out_channels, int in_channels, int half_width);

  int out_channels() const { return out_channels_; }
  int in_channels() const { return in_channels_; }
  int half_width() const { return half_width_; }
  int spatial_size() const { return 2 * half_width_ + 1; }

  // Entry [K]_{p,q,s,t}; zero when the block is structurally absent.
  double at(int p, int q, int s, int t) const;
  // Overwrites [K]_{p,q,s,t}, materializing block (p,q) if needed.
  void set(int p, int q, int s, int t, double value);
  // Adds to [K]_{p,q,s,t}, materializing block (p,q) if needed.
  void add(int p, int q, int s, int t, double value);
  // Materializes block (p,q) as all zeros (a free but currently zero block).
  void touch(int p, int q);

  bool has_block(int p, int q) const;
  // Blocks feeding output channel p, sorted by input channel.
  std::span<const Block> row(int p) const;
  std::size_t block_count() const;

  // Places `other` with its channel (1,1) at (p0+1, q0+1).
  void embed(const ConvKernel& other, int p0, int q0);

  // Same kernel with extra trailing output / input channels of zero blocks.
  ConvKernel padded(int out_channels, int in_channels) const;

  friend bool operator==(const ConvKernel&, const ConvKernel&);

 private:
  Block& block_for(int p, int q);
  std::size_t tap_index(int s, int t) const;
  void check_indices(int p, int q, int s, int t) const;

  int out_channels_;
  int in_channels_;
  int half_width_;
  std::vector<std::vector<Block>> rows_;
};

bool operator==(const ConvKernel::Block& a, const ConvKernel::Block& b);

// Bias vector b in R^{c'}. Entries flagged as not free are structural zeros.
class BiasVector {
 public:
  BiasVector() = default;
  // All entries free.
  explicit BiasVector(std::vector<double> values);
  BiasVector(std::vector<double> values, std::vector<bool> free);
  // A length-c bias that the construction never uses (layers of the form A_K).
  static BiasVector structural_zero(int length);

  int size() const { return static_cast<int>(values_.size()); }
  double operator[](int p) const { return values_[p - 1]; }  // 1-based
  bool is_free(int p) const { return free_[p - 1]; }
  std::span<const double> values() const { return values_; }
  const std::vector<bool>& free_mask() const { return free_; }
  int free_count() const;

  static BiasVector concat(const BiasVector& a, const BiasVector& b);

  friend bool operator==(const BiasVector&, const BiasVector&) = default;

 private:
  std::vector<double> values_;
  std::vector<bool> free_;
};

// K * X with zero padding. Per output entry the sum runs over q (outer),
// then s, then t, in increasing order.
DataTensor conv2d(const ConvKernel& kernel, const DataTensor& x);

DataTensor relu(const DataTensor& x);

// Entry (q-1)d^2 + (m-1)d + n (1-based) equals [X]_{q,m,n}.
std::vector<double> vectorize(const DataTensor& x);
DataTensor unvectorize(std::span<const double> v, int channels, int spatial);

}  // namespace korobov
