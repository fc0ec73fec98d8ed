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

// Network files, verification suites and parameter sweeps behind the
// korobov_cnn command-line tool.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "korobov/network.hpp"

namespace korobov {

inline constexpr int kSchemaVersion = 1;

struct Readout {
  std::vector<double> alpha;
  double beta = 0.0;
};

// One serialized network. Kernel blocks are stored as a list of
// {"out", "in", "values"} objects with 1-based channels; "values" is
// indexed [row][col] with rows s = -k..k written as 0..2k (likewise t).
// Structurally absent blocks are omitted.
struct NetworkFile {
  std::string construction;
  int spatial = 0;
  int half_width = 0;
  int input_channels = 1;
  std::vector<ConvLayer> layers;
  std::optional<Readout> readout;
  // Construction parameters (n, c, level/index, ...), kept verbatim.
  std::string parameters_json = "{}";

  ConvNet net() const;
};

NetworkFile make_network_file(std::string construction, const ConvNet& net,
                              std::optional<Readout> readout = std::nullopt,
                              std::string parameters_json = "{}");

// Deterministic text form; serialize(parse(serialize(f))) == serialize(f).
std::string serialize_network(const NetworkFile& file);
// Throws std::runtime_error on malformed input or an unknown schema version,
// ShapeError when the layers do not chain.
NetworkFile parse_network(const std::string& text);

// ---------------------------------------------------------------------------

struct VerifyParams {
  int spatial = 4;
  int half_width = 1;
  int n = 2;
  int n_max = 6;
  int samples = 500;
  std::uint64_t seed = 7;
  double p = 0.0;  // 0 means infinity
  std::string target = "hat111";
};

struct Check {
  std::string name;
  double measured;
  double bound;
  bool pass;
  std::uint64_t seed;
};

struct VerifyReport {
  std::string suite;
  std::vector<Check> checks;
  bool pass() const;
};

// sq, prd, product, selector, phi, basis, e2e, size.
std::vector<std::string> verify_suites();
// Throws std::invalid_argument for an unknown suite.
VerifyReport run_verify(const std::string& suite, const VerifyParams& params);
void print_report(std::ostream& out, const VerifyReport& report);

// ---------------------------------------------------------------------------

struct SweepRow {
  int n;
  int spatial;
  int half_width;
  double bound;
  double measured_error;
  int samples;
  std::uint64_t seed;
  double wall_time_ms;
};

inline constexpr const char* kSweepHeader =
    "n,d,k,bound,measured_error,samples,seed,wall_time_ms";

// kind: product, basis or e2e; one row per n in [n_min, n_max]. Throws
// std::invalid_argument on an empty range or unknown kind.
std::vector<SweepRow> run_sweep(const std::string& kind, int n_min, int n_max,
                                const VerifyParams& params);
void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);

// ---------------------------------------------------------------------------

struct BuildParams {
  int spatial = 4;
  int half_width = 1;
  int n = 2;
  int channels = 1;
  std::string target = "hat111";
};

// kind: sq, prd, product, phi, basis, approximator.
NetworkFile build_network(const std::string& kind, const BuildParams& params);
std::vector<std::string> build_kinds();

}  // namespace korobov
