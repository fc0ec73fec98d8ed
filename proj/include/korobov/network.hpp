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

// Deep ReLU CNNs h^L = sigma o A_{K^L,b^L} o ... o sigma o A_{K^1,b^1}, the
// affine readout on top of them, and the structural combinators used to
// assemble larger networks from smaller ones.

#include <cstdint>
#include <span>
#include <vector>

#include "korobov/tensor.hpp"

namespace korobov {

struct ConvLayer {
  ConvKernel kernel;
  BiasVector bias;

  // Throws ShapeError unless bias length equals kernel out_channels.
  ConvLayer(ConvKernel kernel, BiasVector bias);
  // A layer of the form sigma o A_K (no bias term).
  static ConvLayer without_bias(ConvKernel kernel);

  friend bool operator==(const ConvLayer&, const ConvLayer&) = default;
};

class ConvNet {
 public:
  // An L = 0 network (the identity on c0-channel inputs).
  ConvNet(int input_channels, int spatial, int half_width);
  ConvNet(int input_channels, int spatial, int half_width, std::vector<ConvLayer> layers);

  int input_channels() const { return input_channels_; }
  int output_channels() const;
  int spatial() const { return spatial_; }
  int half_width() const { return half_width_; }
  int depth() const { return static_cast<int>(layers_.size()); }
  // max{c_1, ..., c_L}; zero for the empty network.
  int width() const;
  // (c_0, ..., c_L)
  std::vector<int> channel_sizes() const;
  std::span<const ConvLayer> layers() const { return layers_; }

  friend bool operator==(const ConvNet&, const ConvNet&) = default;

 private:
  int input_channels_;
  int spatial_;
  int half_width_;
  std::vector<ConvLayer> layers_;
};

// beta + <alpha, vect(h^L(X))>.
class HypothesisFunction {
 public:
  HypothesisFunction(ConvNet net, std::vector<double> alpha, double beta);

  const ConvNet& net() const { return net_; }
  std::span<const double> alpha() const { return alpha_; }
  double beta() const { return beta_; }

 private:
  ConvNet net_;
  std::vector<double> alpha_;
  double beta_;
};

DataTensor forward(const ConvNet& net, const DataTensor& x);
// Output of every layer, h^1(X) ... h^L(X).
std::vector<DataTensor> forward_trace(const ConvNet& net, const DataTensor& x);
double evaluate(const HypothesisFunction& h, const DataTensor& x);

// Possibly-nonzero parameter count: every materialized kernel block counts
// (2k+1)^2 entries, every free bias entry counts one. A hypothesis function
// adds its full readout (c_L d^2 coefficients plus beta).
std::int64_t size_of(const ConvNet& net);
std::int64_t size_of(const HypothesisFunction& h);

// Pads the first hidden layer to `target_width` channels with structural
// zero blocks; requires depth >= 2 and target_width >= width().
ConvNet widen(const ConvNet& net, int target_width);

// Appends identity layers (diagonal S^{0,0} blocks, no bias) up to
// `target_depth`. The appended layers reproduce their input only when it is
// nonnegative, which holds for the output of any layer ending in sigma.
ConvNet deepen(const ConvNet& net, int target_depth);

// g o f: runs `first`, then `second`.
ConvNet compose(const ConvNet& first, const ConvNet& second);

// f (+) g on stacked inputs (X; Y) -> (f(X); g(Y)). All parts must share
// depth, spatial size and kernel size.
ConvNet concatenate(const ConvNet& f, const ConvNet& g);
ConvNet concatenate(std::span<const ConvNet> parts);

// A single layer of identity blocks on `channels` channels.
ConvLayer identity_layer(int channels, int half_width);

}  // namespace korobov
