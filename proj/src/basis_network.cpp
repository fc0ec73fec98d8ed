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

#include "korobov/basis_network.hpp"

#include <cmath>
#include <string>

#include "korobov/errors.hpp"
#include "korobov/product_network.hpp"
#include "korobov/shift.hpp"

namespace korobov {

namespace {

void require_dimension(const LevelIndex& li, int spatial) {
  if (li.dimension() != spatial * spatial) {
    throw ShapeError("level-index dimension " + std::to_string(li.dimension()) +
                     " does not match d^2 = " + std::to_string(spatial * spatial));
  }
}

}  // namespace

int phi_net_depth(int spatial) { return (5 * spatial) / 2 + 3; }

int basis_net_depth(int n, int spatial) {
  return 2 * (2 * n + 3) * log2_exact(spatial) + 5 * spatial;
}

namespace {

// Layers 1 and 2 of Phi: channel j of the output holds phi_{l_j,i_j} applied
// to every entry of X (only entry (m(j), n(j)) is used downstream).
ConvNet phi_head(const LevelIndex& li, int spatial, int half_width) {
  const int dd = spatial * spatial;

  // Channels 2j-1, 2j: sigma(2^l X - i) and sigma(i - 2^l X), the ramps
  // (X - x_{l,i}) / h_l and its negation.
  ConvKernel k1(2 * dd, 1, half_width);
  std::vector<double> b1(2 * dd);
  for (int j = 1; j <= dd; ++j) {
    const double scale = std::ldexp(1.0, li.level[j - 1]);
    const double shift = li.index[j - 1];
    k1.set(2 * j - 1, 1, 0, 0, scale);
    k1.set(2 * j, 1, 0, 0, -scale);
    b1[2 * j - 2] = -shift;
    b1[2 * j - 1] = shift;
  }

  // phi(u) = sigma(1 - sigma(u) - sigma(-u)).
  ConvKernel k2(dd, 2 * dd, half_width);
  for (int j = 1; j <= dd; ++j) {
    k2.set(j, 2 * j - 1, 0, 0, -1.0);
    k2.set(j, 2 * j, 0, 0, -1.0);
  }

  return ConvNet(1, spatial, half_width,
                 {ConvLayer(std::move(k1), BiasVector(std::move(b1))),
                  ConvLayer(std::move(k2), BiasVector(std::vector<double>(dd, 1.0)))});
}

// Delta (channel j keeps entry (m(j), n(j)), each selector padded to depth
// floor(5d/2)) followed by the summing kernel K^3.
ConvNet phi_selector_stage(int spatial, int half_width) {
  const int d = spatial;
  const int dd = d * d;
  const int selector_depth = (5 * d) / 2;
  std::vector<ConvNet> selectors;
  selectors.reserve(dd);
  for (int j = 1; j <= dd; ++j) {
    const int m = (j - 1) / d + 1;
    const int n = j - d * ((j - 1) / d);
    selectors.push_back(deepen(selector_net(build_selector(m, n, d), half_width), selector_depth));
  }
  ConvKernel k3(1, dd, half_width);
  for (int j = 1; j <= dd; ++j) k3.set(1, j, 0, 0, 1.0);
  ConvNet tail(dd, d, half_width, {ConvLayer(std::move(k3), BiasVector(std::vector<double>{0.0}))});
  return compose(concatenate(selectors), tail);
}

}  // namespace

ConvNet build_phi_net(const LevelIndex& li, int spatial, int half_width) {
  require_dimension(li, spatial);
  return compose(phi_head(li, spatial, half_width), phi_selector_stage(spatial, half_width));
}

BasisNetFactory::BasisNetFactory(int n, int spatial, int half_width)
    : n_(n),
      spatial_(spatial),
      half_width_(half_width),
      selector_stage_(1, spatial, half_width),
      product_(1, spatial, half_width) {
  if (spatial < 3) {
    throw UnsupportedError("basis networks need d >= 3 so that width 2d^2 covers the 12-channel "
                           "product stage; got d = " + std::to_string(spatial));
  }
  ConvNet product = build_product_net(n, spatial, half_width).net;
  selector_stage_ = phi_selector_stage(spatial, half_width);
  // ceil(d/2) - 1 identity layers close the gap to the stated total depth.
  const int pad = (spatial + 1) / 2 - 1;
  product_ = compose(deepen(ConvNet(1, spatial, half_width), pad), product);
}

ConvNet BasisNetFactory::phi(const LevelIndex& li) const {
  require_dimension(li, spatial_);
  return compose(phi_head(li, spatial_, half_width_), selector_stage_);
}

BasisNet BasisNetFactory::build(const LevelIndex& li) const {
  return BasisNet{li, n_, compose(phi(li), product_)};
}

BasisNet build_basis_net(const LevelIndex& li, int n, int spatial, int half_width) {
  require_dimension(li, spatial);
  return BasisNetFactory(n, spatial, half_width).build(li);
}

DataTensor phi_oracle(const LevelIndex& li, const DataTensor& x) {
  require_dimension(li, x.spatial());
  if (x.channels() != 1) throw ShapeError("Phi acts on one-channel tensors");
  const int d = x.spatial();
  DataTensor out(1, d);
  for (int m = 1; m <= d; ++m) {
    for (int n = 1; n <= d; ++n) {
      const int j = (m - 1) * d + n;
      out(1, m, n) = hat_1d(li.level[j - 1], li.index[j - 1], x(1, m, n));
    }
  }
  return out;
}

double basis_oracle(const LevelIndex& li, int n, const DataTensor& x) {
  return reduction_oracle(n, phi_oracle(li, x));
}

double basis_target(const LevelIndex& li, const DataTensor& x) {
  require_dimension(li, x.spatial());
  return basis_nd(li, x.values());
}

}  // namespace korobov
