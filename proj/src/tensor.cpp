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

#include "korobov/tensor.hpp"

#include <algorithm>
#include <string>

#include "korobov/errors.hpp"

namespace korobov {

namespace {

void require_positive(int value, const char* what) {
  if (value <= 0) {
    throw ShapeError(std::string(what) + " must be positive, got " + std::to_string(value));
  }
}

}  // namespace

DataTensor::DataTensor(int channels, int spatial) : channels_(channels), spatial_(spatial) {
  require_positive(channels, "channel count");
  require_positive(spatial, "spatial size");
  values_.assign(static_cast<std::size_t>(channels) * spatial * spatial, 0.0);
}

DataTensor::DataTensor(int channels, int spatial, std::vector<double> values)
    : channels_(channels), spatial_(spatial), values_(std::move(values)) {
  require_positive(channels, "channel count");
  require_positive(spatial, "spatial size");
  if (values_.size() != static_cast<std::size_t>(channels) * spatial * spatial) {
    throw ShapeError("tensor value count " + std::to_string(values_.size()) +
                     " does not match " + std::to_string(channels) + "x" +
                     std::to_string(spatial) + "x" + std::to_string(spatial));
  }
}

double DataTensor::at(int q, int m, int n) const {
  if (q < 1 || q > channels_ || m < 1 || m > spatial_ || n < 1 || n > spatial_) {
    throw IndexError("tensor index (" + std::to_string(q) + "," + std::to_string(m) + "," +
                     std::to_string(n) + ") out of range");
  }
  return (*this)(q, m, n);
}

std::span<const double> DataTensor::channel(int q) const {
  if (q < 1 || q > channels_) throw IndexError("channel " + std::to_string(q) + " out of range");
  const std::size_t plane = static_cast<std::size_t>(spatial_) * spatial_;
  return std::span<const double>(values_).subspan((q - 1) * plane, plane);
}

DataTensor DataTensor::stack(std::span<const DataTensor> parts) {
  if (parts.empty()) throw ShapeError("cannot stack zero tensors");
  const int d = parts.front().spatial();
  int channels = 0;
  std::vector<double> values;
  for (const auto& part : parts) {
    if (part.spatial() != d) throw ShapeError("stacked tensors differ in spatial size");
    channels += part.channels();
    values.insert(values.end(), part.values_.begin(), part.values_.end());
  }
  return DataTensor(channels, d, std::move(values));
}

DataTensor DataTensor::slice_channels(int first, int count) const {
  if (first < 1 || count < 1 || first + count - 1 > channels_) {
    throw IndexError("channel slice out of range");
  }
  const std::size_t plane = static_cast<std::size_t>(spatial_) * spatial_;
  std::vector<double> values(values_.begin() + (first - 1) * plane,
                             values_.begin() + (first - 1 + count) * plane);
  return DataTensor(count, spatial_, std::move(values));
}

double zero_pad_lookup(const DataTensor& x, int q, int m, int n) {
  if (q < 1 || q > x.channels()) {
    throw IndexError("channel " + std::to_string(q) + " out of range 1:" +
                     std::to_string(x.channels()));
  }
  const int d = x.spatial();
  if (m < 1 || m > d || n < 1 || n > d) return 0.0;
  return x(q, m, n);
}

// ---------------------------------------------------------------------------

ConvKernel::ConvKernel(int out_channels, int in_channels, int half_width)
    : out_channels_(out_channels), in_channels_(in_channels), half_width_(half_width) {
  require_positive(out_channels, "kernel output channel count");
  require_positive(in_channels, "kernel input channel count");
  if (half_width < 0) throw ShapeError("kernel half width must be nonnegative");
  rows_.resize(out_channels);
}

void ConvKernel::check_indices(int p, int q, int s, int t) const {
  if (p < 1 || p > out_channels_ || q < 1 || q > in_channels_) {
    throw IndexError("kernel channel pair (" + std::to_string(p) + "," + std::to_string(q) +
                     ") out of range");
  }
  if (s < -half_width_ || s > half_width_ || t < -half_width_ || t > half_width_) {
    throw IndexError("kernel offset (" + std::to_string(s) + "," + std::to_string(t) +
                     ") outside -k:k");
  }
}

std::size_t ConvKernel::tap_index(int s, int t) const {
  return static_cast<std::size_t>(s + half_width_) * spatial_size() + (t + half_width_);
}

ConvKernel::Block& ConvKernel::block_for(int p, int q) {
  auto& row = rows_[p - 1];
  auto it = std::lower_bound(row.begin(), row.end(), q,
                             [](const Block& b, int in) { return b.in < in; });
  if (it == row.end() || it->in != q) {
    const std::size_t taps = static_cast<std::size_t>(spatial_size()) * spatial_size();
    it = row.insert(it, Block{q, std::vector<double>(taps, 0.0)});
  }
  return *it;
}

double ConvKernel::at(int p, int q, int s, int t) const {
  check_indices(p, q, s, t);
  const auto& row = rows_[p - 1];
  auto it = std::lower_bound(row.begin(), row.end(), q,
                             [](const Block& b, int in) { return b.in < in; });
  if (it == row.end() || it->in != q) return 0.0;
  return it->taps[tap_index(s, t)];
}

void ConvKernel::set(int p, int q, int s, int t, double value) {
  check_indices(p, q, s, t);
  block_for(p, q).taps[tap_index(s, t)] = value;
}

void ConvKernel::add(int p, int q, int s, int t, double value) {
  check_indices(p, q, s, t);
  block_for(p, q).taps[tap_index(s, t)] += value;
}

void ConvKernel::touch(int p, int q) {
  check_indices(p, q, 0, 0);
  block_for(p, q);
}

bool ConvKernel::has_block(int p, int q) const {
  check_indices(p, q, 0, 0);
  const auto& row = rows_[p - 1];
  return std::binary_search(row.begin(), row.end(), Block{q, {}},
                            [](const Block& a, const Block& b) { return a.in < b.in; });
}

std::span<const ConvKernel::Block> ConvKernel::row(int p) const {
  if (p < 1 || p > out_channels_) throw IndexError("kernel output channel out of range");
  return rows_[p - 1];
}

std::size_t ConvKernel::block_count() const {
  std::size_t total = 0;
  for (const auto& row : rows_) total += row.size();
  return total;
}

void ConvKernel::embed(const ConvKernel& other, int p0, int q0) {
  if (other.half_width_ != half_width_) throw ShapeError("embedded kernel spatial size differs");
  if (p0 < 0 || q0 < 0 || p0 + other.out_channels_ > out_channels_ ||
      q0 + other.in_channels_ > in_channels_) {
    throw ShapeError("embedded kernel does not fit");
  }
  for (int p = 1; p <= other.out_channels_; ++p) {
    auto& row = rows_[p0 + p - 1];
    for (const auto& block : other.rows_[p - 1]) {
      const int q = q0 + block.in;
      auto it = std::lower_bound(row.begin(), row.end(), q,
                                 [](const Block& b, int in) { return b.in < in; });
      if (it != row.end() && it->in == q) throw ShapeError("embedded kernel overlaps a block");
      row.insert(it, Block{q, block.taps});
    }
  }
}

ConvKernel ConvKernel::padded(int out_channels, int in_channels) const {
  if (out_channels < out_channels_ || in_channels < in_channels_) {
    throw ShapeError("padding cannot shrink a kernel");
  }
  ConvKernel result(out_channels, in_channels, half_width_);
  for (int p = 0; p < out_channels_; ++p) result.rows_[p] = rows_[p];
  return result;
}

bool operator==(const ConvKernel::Block& a, const ConvKernel::Block& b) {
  return a.in == b.in && a.taps == b.taps;
}

bool operator==(const ConvKernel& a, const ConvKernel& b) {
  return a.out_channels_ == b.out_channels_ && a.in_channels_ == b.in_channels_ &&
         a.half_width_ == b.half_width_ && a.rows_ == b.rows_;
}

// ---------------------------------------------------------------------------

BiasVector::BiasVector(std::vector<double> values)
    : values_(std::move(values)), free_(values_.size(), true) {}

BiasVector::BiasVector(std::vector<double> values, std::vector<bool> free)
    : values_(std::move(values)), free_(std::move(free)) {
  if (values_.size() != free_.size()) throw ShapeError("bias mask length mismatch");
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!free_[i] && values_[i] != 0.0) {
      throw ShapeError("structural-zero bias entry holds a nonzero value");
    }
  }
}

BiasVector BiasVector::structural_zero(int length) {
  return BiasVector(std::vector<double>(length, 0.0), std::vector<bool>(length, false));
}

int BiasVector::free_count() const {
  return static_cast<int>(std::count(free_.begin(), free_.end(), true));
}

BiasVector BiasVector::concat(const BiasVector& a, const BiasVector& b) {
  std::vector<double> values = a.values_;
  values.insert(values.end(), b.values_.begin(), b.values_.end());
  std::vector<bool> free = a.free_;
  free.insert(free.end(), b.free_.begin(), b.free_.end());
  return BiasVector(std::move(values), std::move(free));
}

// ---------------------------------------------------------------------------

DataTensor conv2d(const ConvKernel& kernel, const DataTensor& x) {
  if (kernel.in_channels() != x.channels()) {
    throw ShapeError("kernel expects " + std::to_string(kernel.in_channels()) +
                     " input channels, tensor has " + std::to_string(x.channels()));
  }
  const int d = x.spatial();
  const int k = kernel.half_width();
  const int width = kernel.spatial_size();
  DataTensor out(kernel.out_channels(), d);
  auto out_values = out.values();
  const auto in_values = x.values();
  const std::size_t plane = static_cast<std::size_t>(d) * d;

  // Every output entry accumulates its terms in (q, s, t) order; looping the
  // taps outermost and the pixels innermost preserves that per-entry order.
  for (int p = 1; p <= kernel.out_channels(); ++p) {
    double* acc = out_values.data() + (p - 1) * plane;
    for (const auto& block : kernel.row(p)) {
      const double* src = in_values.data() + (block.in - 1) * plane;
      for (int s = -k; s <= k; ++s) {
        const int m_lo = std::max(1, 1 - s);
        const int m_hi = std::min(d, d - s);
        for (int t = -k; t <= k; ++t) {
          const double w = block.taps[static_cast<std::size_t>(s + k) * width + (t + k)];
          if (w == 0.0) continue;
          const int n_lo = std::max(1, 1 - t);
          const int n_hi = std::min(d, d - t);
          for (int m = m_lo; m <= m_hi; ++m) {
            double* dst_row = acc + static_cast<std::size_t>(m - 1) * d;
            const double* src_row = src + static_cast<std::size_t>(m + s - 1) * d;
            for (int n = n_lo; n <= n_hi; ++n) dst_row[n - 1] += w * src_row[n + t - 1];
          }
        }
      }
    }
  }
  return out;
}

DataTensor relu(const DataTensor& x) {
  DataTensor out = x;
  for (double& v : out.values()) v = v > 0.0 ? v : 0.0;
  return out;
}

std::vector<double> vectorize(const DataTensor& x) {
  return std::vector<double>(x.values().begin(), x.values().end());
}

DataTensor unvectorize(std::span<const double> v, int channels, int spatial) {
  return DataTensor(channels, spatial, std::vector<double>(v.begin(), v.end()));
}

}  // namespace korobov
