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

#include <stdexcept>
#include <string>

namespace korobov {

// Tensor/kernel/network extents do not line up.
class ShapeError : public std::invalid_argument {
 public:
  explicit ShapeError(const std::string& what) : std::invalid_argument(what) {}
};

// A 1-based index fell outside its declared range.
class IndexError : public std::out_of_range {
 public:
  explicit IndexError(const std::string& what) : std::out_of_range(what) {}
};

// The request is well-formed but outside what the constructions cover
// (e.g. widening a one-layer net, non power-of-two product networks).
class UnsupportedError : public std::domain_error {
 public:
  explicit UnsupportedError(const std::string& what) : std::domain_error(what) {}
};

}  // namespace korobov
