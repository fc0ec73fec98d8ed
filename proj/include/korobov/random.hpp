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

// Seeded sampling shared by every verification path. The generator is
// std::mt19937_64 (fixed by the standard, so a seed means the same stream on
// every platform); a uniform double is (next >> 11) * 2^-53.

#include <cstdint>
#include <random>
#include <vector>

namespace korobov {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform on [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  // Uniform integer in [0, bound).
  std::uint64_t below(std::uint64_t bound) { return engine_() % bound; }
  std::uint64_t next() { return engine_(); }

  std::vector<double> uniform_vector(std::size_t count) {
    std::vector<double> v(count);
    for (auto& x : v) x = uniform();
    return v;
  }

 private:
  std::mt19937_64 engine_;
};

inline constexpr const char* kRngName = "mt19937_64/53bit-v1";

}  // namespace korobov
