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

#include "korobov/network.hpp"

#include <algorithm>
#include <string>

#include "korobov/errors.hpp"

namespace korobov {

ConvLayer::ConvLayer(ConvKernel kernel_in, BiasVector bias_in)
    : kernel(std::move(kernel_in)), bias(std::move(bias_in)) {
  if (bias.size() != kernel.out_channels()) {
    throw ShapeError("bias length " + std::to_string(bias.size()) +
                     " does not match kernel output channels " +
                     std::to_string(kernel.out_channels()));
  }
}

ConvLayer ConvLayer::without_bias(ConvKernel kernel) {
  const int c = kernel.out_channels();
  return ConvLayer(std::move(kernel), BiasVector::structural_zero(c));
}

ConvLayer identity_layer(int channels, int half_width) {
  ConvKernel kernel(channels, channels, half_width);
  for (int c = 1; c <= channels; ++c) kernel.set(c, c, 0, 0, 1.0);
  return ConvLayer::without_bias(std::move(kernel));
}

// ---------------------------------------------------------------------------

ConvNet::ConvNet(int input_channels, int spatial, int half_width)
    : ConvNet(input_channels, spatial, half_width, {}) {}

ConvNet::ConvNet(int input_channels, int spatial, int half_width, std::vector<ConvLayer> layers)
    : input_channels_(input_channels),
      spatial_(spatial),
      half_width_(half_width),
      layers_(std::move(layers)) {
  if (input_channels <= 0 || spatial <= 0 || half_width < 0) {
    throw ShapeError("network needs positive channels and spatial size");
  }
  int channels = input_channels;
  for (std::size_t l = 0; l < layers_.size(); ++l) {
    const auto& kernel = layers_[l].kernel;
    if (kernel.half_width() != half_width) {
      throw ShapeError("layer " + std::to_string(l + 1) + " has kernel size " +
                       std::to_string(kernel.spatial_size()) + ", network uses " +
                       std::to_string(2 * half_width + 1));
    }
    if (kernel.in_channels() != channels) {
      throw ShapeError("layer " + std::to_string(l + 1) + " expects " +
                       std::to_string(kernel.in_channels()) + " channels, previous layer gives " +
                       std::to_string(channels));
    }
    channels = kernel.out_channels();
  }
}

int ConvNet::output_channels() const {
  return layers_.empty() ? input_channels_ : layers_.back().kernel.out_channels();
}

int ConvNet::width() const {
  int w = 0;
  for (const auto& layer : layers_) w = std::max(w, layer.kernel.out_channels());
  return w;
}

std::vector<int> ConvNet::channel_sizes() const {
  std::vector<int> sizes{input_channels_};
  for (const auto& layer : layers_) sizes.push_back(layer.kernel.out_channels());
  return sizes;
}

HypothesisFunction::HypothesisFunction(ConvNet net, std::vector<double> alpha, double beta)
    : net_(std::move(net)), alpha_(std::move(alpha)), beta_(beta) {
  const std::size_t expected =
      static_cast<std::size_t>(net_.output_channels()) * net_.spatial() * net_.spatial();
  if (alpha_.size() != expected) {
    throw ShapeError("readout has " + std::to_string(alpha_.size()) + " coefficients, network " +
                     "output vectorizes to " + std::to_string(expected));
  }
}

// ---------------------------------------------------------------------------

namespace {

void check_input(const ConvNet& net, const DataTensor& x) {
  if (x.channels() != net.input_channels() || x.spatial() != net.spatial()) {
    throw ShapeError("input is " + std::to_string(x.channels()) + "x" +
                     std::to_string(x.spatial()) + "x" + std::to_string(x.spatial()) +
                     ", network expects " + std::to_string(net.input_channels()) + "x" +
                     std::to_string(net.spatial()) + "x" + std::to_string(net.spatial()));
  }
}

DataTensor apply_layer(const ConvLayer& layer, const DataTensor& x) {
  DataTensor y = conv2d(layer.kernel, x);
  const std::size_t plane = static_cast<std::size_t>(x.spatial()) * x.spatial();
  auto values = y.values();
  for (int p = 1; p <= y.channels(); ++p) {
    const double b = layer.bias[p];
    double* row = values.data() + (p - 1) * plane;
    for (std::size_t i = 0; i < plane; ++i) {
      const double v = row[i] + b;
      row[i] = v > 0.0 ? v : 0.0;
    }
  }
  return y;
}

}  // namespace

DataTensor forward(const ConvNet& net, const DataTensor& x) {
  check_input(net, x);
  DataTensor h = x;
  for (const auto& layer : net.layers()) h = apply_layer(layer, h);
  return h;
}

std::vector<DataTensor> forward_trace(const ConvNet& net, const DataTensor& x) {
  check_input(net, x);
  std::vector<DataTensor> trace;
  trace.reserve(net.layers().size());
  const DataTensor* h = &x;
  for (const auto& layer : net.layers()) {
    trace.push_back(apply_layer(layer, *h));
    h = &trace.back();
  }
  return trace;
}

double evaluate(const HypothesisFunction& h, const DataTensor& x) {
  const DataTensor out = forward(h.net(), x);
  const auto values = out.values();
  const auto alpha = h.alpha();
  double sum = h.beta();
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (alpha[i] != 0.0) sum += alpha[i] * values[i];
  }
  return sum;
}

std::int64_t size_of(const ConvNet& net) {
  const std::int64_t taps = static_cast<std::int64_t>(2 * net.half_width() + 1) *
                            (2 * net.half_width() + 1);
  std::int64_t total = 0;
  for (const auto& layer : net.layers()) {
    total += static_cast<std::int64_t>(layer.kernel.block_count()) * taps;
    total += layer.bias.free_count();
  }
  return total;
}

std::int64_t size_of(const HypothesisFunction& h) {
  return size_of(h.net()) + static_cast<std::int64_t>(h.alpha().size()) + 1;
}

// ---------------------------------------------------------------------------

ConvNet widen(const ConvNet& net, int target_width) {
  if (net.depth() < 2) {
    throw UnsupportedError("widening needs at least two layers, network has " +
                           std::to_string(net.depth()));
  }
  if (target_width < net.width()) {
    throw ShapeError("target width " + std::to_string(target_width) +
                     " is below current width " + std::to_string(net.width()));
  }
  std::vector<ConvLayer> layers(net.layers().begin(), net.layers().end());
  const int c1 = layers[0].kernel.out_channels();
  if (target_width == c1) return net;

  const int extra = target_width - c1;
  ConvKernel first = layers[0].kernel.padded(target_width, layers[0].kernel.in_channels());
  BiasVector first_bias = BiasVector::concat(layers[0].bias, BiasVector::structural_zero(extra));
  layers[0] = ConvLayer(std::move(first), std::move(first_bias));

  ConvKernel second = layers[1].kernel.padded(layers[1].kernel.out_channels(), target_width);
  layers[1] = ConvLayer(std::move(second), layers[1].bias);
  return ConvNet(net.input_channels(), net.spatial(), net.half_width(), std::move(layers));
}

ConvNet deepen(const ConvNet& net, int target_depth) {
  if (target_depth < net.depth()) {
    throw ShapeError("target depth " + std::to_string(target_depth) + " is below current depth " +
                     std::to_string(net.depth()));
  }
  std::vector<ConvLayer> layers(net.layers().begin(), net.layers().end());
  const ConvLayer id = identity_layer(net.output_channels(), net.half_width());
  while (static_cast<int>(layers.size()) < target_depth) layers.push_back(id);
  return ConvNet(net.input_channels(), net.spatial(), net.half_width(), std::move(layers));
}

ConvNet compose(const ConvNet& first, const ConvNet& second) {
  if (first.spatial() != second.spatial() || first.half_width() != second.half_width()) {
    throw ShapeError("composed networks differ in spatial or kernel size");
  }
  if (second.input_channels() != first.output_channels()) {
    throw ShapeError("composition expects " + std::to_string(second.input_channels()) +
                     " channels, first network outputs " +
                     std::to_string(first.output_channels()));
  }
  std::vector<ConvLayer> layers(first.layers().begin(), first.layers().end());
  layers.insert(layers.end(), second.layers().begin(), second.layers().end());
  return ConvNet(first.input_channels(), first.spatial(), first.half_width(), std::move(layers));
}

ConvNet concatenate(const ConvNet& f, const ConvNet& g) {
  const ConvNet parts[] = {f, g};
  return concatenate(parts);
}

ConvNet concatenate(std::span<const ConvNet> parts) {
  if (parts.empty()) throw ShapeError("nothing to concatenate");
  const ConvNet& head = parts.front();
  int input_channels = 0;
  for (const auto& part : parts) {
    if (part.depth() != head.depth()) {
      throw ShapeError("concatenated networks differ in depth (" + std::to_string(head.depth()) +
                       " vs " + std::to_string(part.depth()) + "); deepen the shallower one first");
    }
    if (part.spatial() != head.spatial() || part.half_width() != head.half_width()) {
      throw ShapeError("concatenated networks differ in spatial or kernel size");
    }
    input_channels += part.input_channels();
  }

  std::vector<ConvLayer> layers;
  layers.reserve(head.depth());
  for (int l = 0; l < head.depth(); ++l) {
    int out_total = 0;
    int in_total = 0;
    for (const auto& part : parts) {
      out_total += part.layers()[l].kernel.out_channels();
      in_total += part.layers()[l].kernel.in_channels();
    }
    ConvKernel kernel(out_total, in_total, head.half_width());
    std::vector<double> bias_values;
    std::vector<bool> bias_free;
    bias_values.reserve(out_total);
    bias_free.reserve(out_total);
    int p0 = 0;
    int q0 = 0;
    for (const auto& part : parts) {
      const auto& layer = part.layers()[l];
      kernel.embed(layer.kernel, p0, q0);
      p0 += layer.kernel.out_channels();
      q0 += layer.kernel.in_channels();
      bias_values.insert(bias_values.end(), layer.bias.values().begin(), layer.bias.values().end());
      bias_free.insert(bias_free.end(), layer.bias.free_mask().begin(),
                       layer.bias.free_mask().end());
    }
    layers.emplace_back(std::move(kernel), BiasVector(std::move(bias_values), std::move(bias_free)));
  }
  return ConvNet(input_channels, head.spatial(), head.half_width(), std::move(layers));
}

}  // namespace korobov
