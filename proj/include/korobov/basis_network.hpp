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

// Phi_{l,i}: applies the 1D hat phi_{l_j,i_j} to entry j = (m-1)d + n of a
// one-channel d x d tensor. g_{l,i} = product net o Phi_{l,i} leaves an
// approximation of phi_{l,i}(vect(X)) at output entry (d,d).

#include "korobov/network.hpp"
#include "korobov/sparse_grid.hpp"

namespace korobov {

// Depth floor(5d/2) + 3, width 2d^2. Throws ShapeError unless D = d^2.
ConvNet build_phi_net(const LevelIndex& li, int spatial, int half_width);

struct BasisNet {
  LevelIndex li;
  int n;
  ConvNet net;
};

// Depth 2(2n+3) log2(d) + 5d, width 2d^2. Requires d >= 3 and d a power of
// two (UnsupportedError otherwise).
BasisNet build_basis_net(const LevelIndex& li, int n, int spatial, int half_width);

int phi_net_depth(int spatial);
int basis_net_depth(int n, int spatial);

// Builds g_{l,i} for many (l,i) at fixed (n, d, k). The selector stage, the
// summing layer and the product net do not depend on (l,i) and are shared.
class BasisNetFactory {
 public:
  BasisNetFactory(int n, int spatial, int half_width);

  int n() const { return n_; }
  int spatial() const { return spatial_; }
  int half_width() const { return half_width_; }
  ConvNet phi(const LevelIndex& li) const;
  BasisNet build(const LevelIndex& li) const;
  // Identity padding layers followed by the product net.
  const ConvNet& product() const { return product_; }

 private:
  int n_;
  int spatial_;
  int half_width_;
  ConvNet selector_stage_;  // Delta followed by K^3
  ConvNet product_;
};

// Entrywise reference: [out]_{m,n} = hat_1d(l_j, i_j, X_{m,n}).
DataTensor phi_oracle(const LevelIndex& li, const DataTensor& x);

// Reduction oracle applied to phi_oracle(X): the value g_{l,i} leaves at (d,d).
double basis_oracle(const LevelIndex& li, int n, const DataTensor& x);

// phi_{l,i}(vect(X)).
double basis_target(const LevelIndex& li, const DataTensor& x);

}  // namespace korobov
