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

#include "korobov/harness.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <stdexcept>

#include "json.hpp"
#include "korobov/approximator.hpp"
#include "korobov/basis_network.hpp"
#include "korobov/errors.hpp"
#include "korobov/product_network.hpp"
#include "korobov/random.hpp"
#include "korobov/scalar_networks.hpp"
#include "korobov/shift.hpp"

namespace korobov {

using nlohmann::json;

ConvNet NetworkFile::net() const { return ConvNet(input_channels, spatial, half_width, layers); }

NetworkFile make_network_file(std::string construction, const ConvNet& net,
                              std::optional<Readout> readout, std::string parameters_json) {
  NetworkFile file;
  file.construction = std::move(construction);
  file.spatial = net.spatial();
  file.half_width = net.half_width();
  file.input_channels = net.input_channels();
  file.layers.assign(net.layers().begin(), net.layers().end());
  file.readout = std::move(readout);
  file.parameters_json = std::move(parameters_json);
  return file;
}

namespace {

json kernel_blocks(const ConvKernel& kernel) {
  const int k = kernel.half_width();
  json blocks = json::array();
  for (int p = 1; p <= kernel.out_channels(); ++p) {
    for (const auto& block : kernel.row(p)) {
      json rows = json::array();
      for (int s = -k; s <= k; ++s) {
        json row = json::array();
        for (int t = -k; t <= k; ++t) row.push_back(kernel.at(p, block.in, s, t));
        rows.push_back(std::move(row));
      }
      blocks.push_back({{"out", p}, {"in", block.in}, {"values", std::move(rows)}});
    }
  }
  return blocks;
}

ConvKernel parse_kernel(const json& layer, int half_width) {
  ConvKernel kernel(layer.at("out_channels").get<int>(), layer.at("in_channels").get<int>(),
                    half_width);
  const int size = 2 * half_width + 1;
  for (const auto& block : layer.at("blocks")) {
    const int p = block.at("out").get<int>();
    const int q = block.at("in").get<int>();
    const auto& rows = block.at("values");
    if (static_cast<int>(rows.size()) != size) throw std::runtime_error("kernel block has wrong row count");
    kernel.touch(p, q);
    for (int r = 0; r < size; ++r) {
      if (static_cast<int>(rows[r].size()) != size) {
        throw std::runtime_error("kernel block has wrong column count");
      }
      for (int c = 0; c < size; ++c) {
        const double v = rows[r][c].get<double>();
        if (v != 0.0) kernel.set(p, q, r - half_width, c - half_width, v);
      }
    }
  }
  return kernel;
}

}  // namespace

std::string serialize_network(const NetworkFile& file) {
  const ConvNet net = file.net();
  json j;
  j["schema_version"] = kSchemaVersion;
  j["construction"] = file.construction;
  j["metadata"] = {
      {"d", file.spatial},
      {"k", file.half_width},
      {"channel_sizes", net.channel_sizes()},
      {"depth", net.depth()},
      {"width", net.width()},
      {"kernel_index_order", "[out][in][row][col]"},
      {"offset_convention", "row r holds s = r - k, column c holds t = c - k; channels 1-based"},
  };
  j["parameters"] = json::parse(file.parameters_json);
  json layers = json::array();
  for (const auto& layer : file.layers) {
    std::vector<bool> free_mask = layer.bias.free_mask();
    layers.push_back({
        {"out_channels", layer.kernel.out_channels()},
        {"in_channels", layer.kernel.in_channels()},
        {"blocks", kernel_blocks(layer.kernel)},
        {"bias", {{"values", std::vector<double>(layer.bias.values().begin(),
                                                 layer.bias.values().end())},
                  {"free", free_mask}}},
    });
  }
  j["layers"] = std::move(layers);
  if (file.readout) {
    j["readout"] = {{"alpha", file.readout->alpha}, {"beta", file.readout->beta}};
  }
  return j.dump(1) + "\n";
}

NetworkFile parse_network(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw std::runtime_error(std::string("malformed network file: ") + e.what());
  }
  try {
    const int version = j.at("schema_version").get<int>();
    if (version != kSchemaVersion) {
      throw std::runtime_error("unsupported schema_version " + std::to_string(version));
    }
    NetworkFile file;
    file.construction = j.at("construction").get<std::string>();
    const auto& meta = j.at("metadata");
    file.spatial = meta.at("d").get<int>();
    file.half_width = meta.at("k").get<int>();
    const auto channels = meta.at("channel_sizes").get<std::vector<int>>();
    if (channels.empty()) throw std::runtime_error("channel_sizes is empty");
    file.input_channels = channels.front();
    file.parameters_json = j.at("parameters").dump();
    for (const auto& layer : j.at("layers")) {
      ConvKernel kernel = parse_kernel(layer, file.half_width);
      const auto& bias = layer.at("bias");
      BiasVector b(bias.at("values").get<std::vector<double>>(),
                   bias.at("free").get<std::vector<bool>>());
      file.layers.emplace_back(std::move(kernel), std::move(b));
    }
    if (j.contains("readout")) {
      file.readout = Readout{j["readout"].at("alpha").get<std::vector<double>>(),
                             j["readout"].at("beta").get<double>()};
    }
    const ConvNet net = file.net();  // validates the channel chain
    if (net.channel_sizes() != channels) {
      throw std::runtime_error("channel_sizes does not match the stored layers");
    }
    return file;
  } catch (const json::exception& e) {
    throw std::runtime_error(std::string("malformed network file: ") + e.what());
  }
}

// ---------------------------------------------------------------------------

bool VerifyReport::pass() const {
  for (const auto& c : checks) {
    if (!c.pass) return false;
  }
  return true;
}

std::vector<std::string> verify_suites() {
  return {"sq", "prd", "product", "selector", "phi", "basis", "e2e", "size"};
}

void print_report(std::ostream& out, const VerifyReport& report) {
  for (const auto& c : report.checks) {
    char line[512];
    std::snprintf(line, sizeof line, "%-4s %-48s measured=%-12.6g bound=%-12.6g seed=%llu\n",
                  c.pass ? "ok" : "FAIL", c.name.c_str(), c.measured, c.bound,
                  static_cast<unsigned long long>(c.seed));
    out << line;
  }
  out << report.suite << ": " << (report.pass() ? "all checks passed" : "bound violation") << "\n";
}

namespace {

constexpr double kIdentityUlps = 4.0 * std::numeric_limits<double>::epsilon();

std::string tag(const std::string& base, int n) { return base + " n=" + std::to_string(n); }

Check at_most(std::string name, double measured, double bound, std::uint64_t seed) {
  return Check{std::move(name), measured, bound, measured <= bound, seed};
}

// Entries uniform on [a, 1] with a = s / samples, so the batch covers both
// products near zero and products near one.
DataTensor sample_tensor(Rng& rng, int spatial, int s, int samples) {
  const double lo = static_cast<double>(s) / samples;
  DataTensor x(1, spatial);
  for (auto& v : x.values()) v = rng.uniform(lo, 1.0);
  return x;
}

// Five LevelIndex values of dimension d^2 with distinct level patterns.
std::vector<LevelIndex> representative_indices(int spatial) {
  const int dim = spatial * spatial;
  std::vector<LevelIndex> out;
  out.push_back(LevelIndex::ones(dim));
  auto with = [&](std::vector<std::pair<int, std::pair<int, int>>> entries) {
    std::vector<int> l(dim, 1), i(dim, 1);
    for (const auto& [j, li] : entries) {
      l[j] = li.first;
      i[j] = li.second;
    }
    return LevelIndex(l, i);
  };
  out.push_back(with({{0, {2, 1}}}));
  out.push_back(with({{dim - 1, {2, 3}}}));
  out.push_back(with({{dim / 2, {3, 5}}}));
  out.push_back(with({{1, {2, 3}}, {dim - 2, {2, 1}}}));
  return out;
}

// Half the samples inside the support box of li, half uniform on the cube.
DataTensor sample_for_basis(Rng& rng, const LevelIndex& li, int spatial, int s) {
  DataTensor x(1, spatial);
  auto values = x.values();
  for (int j = 0; j < spatial * spatial; ++j) {
    if (s % 2 == 0) {
      const Interval box = hat_support(li.level[j], li.index[j]);
      values[j] = rng.uniform(box.lo, box.hi);
    } else {
      values[j] = rng.uniform();
    }
  }
  return x;
}

double max_abs_diff(const DataTensor& a, const DataTensor& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::fabs(a.values()[i] - b.values()[i]));
  return m;
}

void verify_sq(const VerifyParams& p, VerifyReport& r) {
  for (int n = 1; n <= p.n_max; ++n) {
    double lo = 0.0, hi = 0.0;
    for (int g = 0; g <= 10000; ++g) {
      const double x = g / 10000.0;
      const double e = sq_oracle(n, x) - x * x;
      lo = std::min(lo, e);
      hi = std::max(hi, e);
    }
    r.checks.push_back(Check{tag("sq_n - x^2 >= 0", n), lo, 0.0, lo >= 0.0, 0});
    r.checks.push_back(at_most(tag("sq_n - x^2 <= 4^-(n+1)", n), hi,
                               std::ldexp(1.0, -2 * (n + 1)) + 1e-12, 0));
    const SqNet net = build_sq_net(n, 1, p.spatial, p.half_width);
    Rng rng(p.seed);
    double diff = 0.0;
    for (int s = 0; s < p.samples; ++s) {
      const DataTensor x(1, p.spatial, rng.uniform_vector(p.spatial * p.spatial));
      const DataTensor y = forward(net.net, x);
      for (std::size_t i = 0; i < x.size(); ++i) {
        diff = std::max(diff, std::fabs(y.values()[i] - sq_series(n, x.values()[i])));
      }
    }
    r.checks.push_back(at_most(tag("network vs series", n), diff, 1e-9, p.seed));
    r.checks.push_back(Check{tag("depth 2(n+1)", n), static_cast<double>(net.net.depth()),
                             2.0 * (n + 1), net.net.depth() == 2 * (n + 1), 0});
  }
}

void verify_prd(const VerifyParams& p, VerifyReport& r) {
  for (int n = 1; n <= p.n_max; ++n) {
    double err = 0.0;
    for (int a = 0; a < 200; ++a) {
      for (int b = 0; b < 200; ++b) {
        const double x = a / 199.0, y = b / 199.0;
        err = std::max(err, std::fabs(prd_oracle(n, x, y) - x * y));
      }
    }
    r.checks.push_back(at_most(tag("|prd_n - xy| on 200x200 grid", n), err,
                               3.0 * std::ldexp(1.0, -2 * n - 1), 0));
    Rng rng(p.seed);
    double zero = 0.0, one = 0.0;
    for (int s = 0; s < p.samples; ++s) {
      const double y = rng.uniform();
      zero = std::max(zero, std::fabs(prd_oracle(n, 0.0, y)));
      one = std::max(one, std::fabs(prd_oracle(n, 1.0, y) - y));
    }
    r.checks.push_back(at_most(tag("prd_n(0,y) = 0", n), zero, 0.0, p.seed));
    // A real-arithmetic identity; floating point leaves a few ulps.
    r.checks.push_back(at_most(tag("prd_n(1,y) = y", n), one, kIdentityUlps, p.seed));
  }
}

void verify_product(const VerifyParams& p, VerifyReport& r) {
  const int d = p.spatial;
  for (int n = 1; n <= p.n_max; ++n) {
    const ProductNet pn = build_product_net(n, d, p.half_width);
    Rng rng(p.seed);
    double err = 0.0, oracle = 0.0;
    for (int s = 0; s < p.samples; ++s) {
      const DataTensor x = sample_tensor(rng, d, s, p.samples);
      const double y = forward(pn.net, x)(1, d, d);
      err = std::max(err, std::fabs(y - exact_product(x)));
      oracle = std::max(oracle, std::fabs(y - reduction_oracle(n, x)));
    }
    r.checks.push_back(at_most(tag("|net - prod X|", n), err,
                               3.0 * std::ldexp(1.0, -2 * n - 1) * (d * d - 1), p.seed));
    r.checks.push_back(at_most(tag("network vs pairwise oracle", n), oracle, 1e-9, p.seed));

    double zero = 0.0;
    for (int s = 0; s < 16; ++s) {
      DataTensor x = sample_tensor(rng, d, s, 16);
      x.values()[rng.below(x.size())] = 0.0;
      zero = std::max(zero, std::fabs(forward(pn.net, x)(1, d, d)));
    }
    r.checks.push_back(at_most(tag("zero entry gives exactly 0", n), zero, 0.0, p.seed));
    DataTensor ones(1, d);
    for (auto& v : ones.values()) v = 1.0;
    const double one = std::fabs(forward(pn.net, ones)(1, d, d) - 1.0);
    r.checks.push_back(at_most(tag("all-ones gives exactly 1", n), one, 0.0, 0));
    r.checks.push_back(Check{tag("width <= 12", n), static_cast<double>(pn.net.width()), 12.0,
                             pn.net.width() <= 12, 0});
    r.checks.push_back(Check{tag("depth", n), static_cast<double>(pn.net.depth()),
                             static_cast<double>(product_net_depth(n, d)),
                             pn.net.depth() == product_net_depth(n, d), 0});
  }
}

void verify_selector(const VerifyParams& p, VerifyReport& r) {
  const int d = p.spatial;
  Rng rng(p.seed);
  const DataTensor x(1, d, rng.uniform_vector(d * d));
  for (int m = 1; m <= d; ++m) {
    for (int n = 1; n <= d; ++n) {
      const SelectorPlan plan = build_selector(m, n, d);
      const std::string name = "Delta_{" + std::to_string(m) + "," + std::to_string(n) + "}";
      r.checks.push_back(Check{name + " length", static_cast<double>(plan.length()),
                               static_cast<double>(selector_length_bound(d)),
                               plan.length() <= selector_length_bound(d), 0});
      const double diff = max_abs_diff(apply_selector(plan, x, p.half_width), mask_entry(x, m, n));
      r.checks.push_back(at_most(name + " masks exactly", diff, 0.0, p.seed));
    }
  }
}

void verify_phi(const VerifyParams& p, VerifyReport& r) {
  const int d = p.spatial;
  const int dim = d * d;
  Rng rng(p.seed);
  for (int trial = 0; trial < 3; ++trial) {
    std::vector<int> l(dim), i(dim);
    for (int j = 0; j < dim; ++j) {
      l[j] = 1 + static_cast<int>(rng.below(3));
      i[j] = 2 * static_cast<int>(rng.below(std::uint64_t{1} << (l[j] - 1))) + 1;
    }
    const LevelIndex li(l, i);
    const ConvNet net = build_phi_net(li, d, p.half_width);
    double diff = 0.0;
    for (int s = 0; s < p.samples; ++s) {
      const DataTensor x(1, d, rng.uniform_vector(dim));
      diff = std::max(diff, max_abs_diff(forward(net, x), phi_oracle(li, x)));
    }
    const std::string name = "Phi random level set " + std::to_string(trial + 1);
    r.checks.push_back(at_most(name + " vs entrywise hats", diff, 1e-12, p.seed));
    r.checks.push_back(Check{name + " depth", static_cast<double>(net.depth()),
                             static_cast<double>(phi_net_depth(d)), net.depth() == phi_net_depth(d),
                             0});
    r.checks.push_back(Check{name + " width <= 2d^2", static_cast<double>(net.width()), 2.0 * dim,
                             net.width() <= 2 * dim, 0});
  }
}

void verify_basis(const VerifyParams& p, VerifyReport& r) {
  const int d = p.spatial;
  const auto indices = representative_indices(d);
  for (int n = 1; n <= p.n_max; ++n) {
    const BasisNetFactory factory(n, d, p.half_width);
    for (std::size_t t = 0; t < indices.size(); ++t) {
      const BasisNet g = factory.build(indices[t]);
      Rng rng(p.seed + t);
      double err = 0.0, leak = 0.0, oracle = 0.0;
      for (int s = 0; s < p.samples; ++s) {
        const DataTensor x = sample_for_basis(rng, g.li, d, s);
        const double y = forward(g.net, x)(1, d, d);
        const double target = basis_target(g.li, x);
        err = std::max(err, std::fabs(y - target));
        if (target == 0.0) leak = std::max(leak, std::fabs(y));
        oracle = std::max(oracle, std::fabs(y - basis_oracle(g.li, n, x)));
      }
      const std::string name = tag("g_{l,i} #" + std::to_string(t + 1), n);
      r.checks.push_back(at_most(name + " |g - phi|", err,
                                 1.5 * std::ldexp(1.0, -2 * n) * (d * d - 1), p.seed + t));
      r.checks.push_back(at_most(name + " support", leak, 0.0, p.seed + t));
      r.checks.push_back(at_most(name + " vs oracle", oracle, 1e-9, p.seed + t));
    }
  }
}

void verify_e2e(const VerifyParams& p, VerifyReport& r) {
  const int d = p.spatial;
  const double lp = p.p == 0.0 ? kInfinity : p.p;
  double previous = 0.0;
  for (int n = p.n; n <= p.n_max; ++n) {
    const Target target = make_target(p.target, d, n);
    if (!target.exact) {
      throw std::invalid_argument("e2e needs a target with a finite expansion; '" + p.target +
                                  "' is truncated");
    }
    const KorobovApproximator app =
        build_approximator(target.expansion, n, d, p.half_width, BranchSet::kSupport);
    const ErrorEstimate e = measure_error(app, target.f, lp, p.samples, p.seed);
    const double bound =
        1.5 * std::ldexp(1.0, -2 * n) * (d * d - 1) * target.expansion.coefficient_abs_sum();
    r.checks.push_back(at_most(tag(p.target + " error", n), e.value, bound, p.seed));
    if (n > p.n && e.value > 0.0) {
      const double ratio = previous / e.value;
      r.checks.push_back(Check{tag(p.target + " error ratio vs n-1", n), ratio, 3.0, ratio >= 3.0,
                               p.seed});
    }
    previous = e.value;
  }
}

void verify_size(const VerifyParams& p, VerifyReport& r) {
  const int d = p.spatial;
  const int n = p.n;
  const Target target = make_target(p.target, d, n);
  const KorobovApproximator app = build_approximator(target.expansion, n, d, p.half_width);
  const std::int64_t theta_n = theta(d * d, n);
  const std::int64_t width = app.h.net().width();
  r.checks.push_back(Check{"W = 2 theta_n d^2", static_cast<double>(width),
                           static_cast<double>(2 * theta_n * d * d), width == 2 * theta_n * d * d,
                           0});
  r.checks.push_back(Check{"L = 2(2n+3)log2 d + 6d", static_cast<double>(app.h.net().depth()),
                           static_cast<double>(approximator_depth(n, d)),
                           app.h.net().depth() == approximator_depth(n, d), 0});
  const SizeReport size = check_size_bound(app, theta_n);
  r.checks.push_back(Check{"size <= 24(2k+1)^2 d^5 N log2 N, N = theta_n",
                           static_cast<double>(size.size), size.bound, size.pass, 0});
  std::int64_t sum = 0;
  for (const auto& entry : size.breakdown) sum += entry.size;
  r.checks.push_back(Check{"size breakdown sums to total", static_cast<double>(sum),
                           static_cast<double>(size.size), sum == size.size, 0});
}

}  // namespace

VerifyReport run_verify(const std::string& suite, const VerifyParams& params) {
  VerifyReport report{suite, {}};
  if (suite == "sq") {
    verify_sq(params, report);
  } else if (suite == "prd") {
    verify_prd(params, report);
  } else if (suite == "product") {
    verify_product(params, report);
  } else if (suite == "selector") {
    verify_selector(params, report);
  } else if (suite == "phi") {
    verify_phi(params, report);
  } else if (suite == "basis") {
    verify_basis(params, report);
  } else if (suite == "e2e") {
    verify_e2e(params, report);
  } else if (suite == "size") {
    verify_size(params, report);
  } else {
    throw std::invalid_argument("unknown verify suite '" + suite + "'");
  }
  return report;
}

// ---------------------------------------------------------------------------

std::vector<SweepRow> run_sweep(const std::string& kind, int n_min, int n_max,
                                const VerifyParams& params) {
  if (n_min < 1 || n_max < n_min) throw std::invalid_argument("sweep range is empty");
  if (kind != "product" && kind != "basis" && kind != "e2e") {
    throw std::invalid_argument("unknown sweep kind '" + kind + "'");
  }
  const int d = params.spatial;
  std::vector<SweepRow> rows;
  for (int n = n_min; n <= n_max; ++n) {
    const auto start = std::chrono::steady_clock::now();
    double bound = 0.0, measured = 0.0;
    if (kind == "product") {
      const ProductNet pn = build_product_net(n, d, params.half_width);
      Rng rng(params.seed);
      for (int s = 0; s < params.samples; ++s) {
        const DataTensor x = sample_tensor(rng, d, s, params.samples);
        measured = std::max(measured, std::fabs(forward(pn.net, x)(1, d, d) - exact_product(x)));
      }
      bound = 3.0 * std::ldexp(1.0, -2 * n - 1) * (d * d - 1);
    } else {
      const Target target = make_target(kind == "basis" ? "hat111" : params.target, d, n);
      const KorobovApproximator app =
          build_approximator(target.expansion, n, d, params.half_width, BranchSet::kSupport);
      const double lp = params.p == 0.0 ? kInfinity : params.p;
      measured = measure_error(app, target.f, lp, params.samples, params.seed).value;
      bound = 1.5 * std::ldexp(1.0, -2 * n) * (d * d - 1) * target.expansion.coefficient_abs_sum();
    }
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    rows.push_back(SweepRow{n, d, params.half_width, bound, measured, params.samples, params.seed, ms});
  }
  return rows;
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << kSweepHeader << "\n";
  for (const auto& row : rows) {
    char line[256];
    std::snprintf(line, sizeof line, "%d,%d,%d,%.17g,%.17g,%d,%llu,%.3f\n", row.n, row.spatial,
                  row.half_width, row.bound, row.measured_error, row.samples,
                  static_cast<unsigned long long>(row.seed), row.wall_time_ms);
    out << line;
  }
}

// ---------------------------------------------------------------------------

std::vector<std::string> build_kinds() {
  return {"sq", "prd", "product", "phi", "basis", "approximator"};
}

NetworkFile build_network(const std::string& kind, const BuildParams& p) {
  const int d = p.spatial;
  json params = {{"n", p.n}, {"d", d}, {"k", p.half_width}};
  if (kind == "sq") {
    params["c"] = p.channels;
    const SqNet sq = build_sq_net(p.n, p.channels, d, p.half_width);
    return make_network_file("sq", sq.net, std::nullopt, params.dump());
  }
  if (kind == "prd") {
    // prd_n of horizontally adjacent pairs: the first column reduction round.
    const ConvNet net = build_reduction_round(p.n, 1, d, p.half_width, ReductionAxis::kColumns);
    return make_network_file("prd", net, std::nullopt, params.dump());
  }
  if (kind == "product") {
    return make_network_file("product", build_product_net(p.n, d, p.half_width).net,
                             std::nullopt, params.dump());
  }
  const Target target = make_target(p.target, d, p.n);
  params["target"] = p.target;
  if (kind == "phi" || kind == "basis") {
    if (target.expansion.terms().empty()) throw std::invalid_argument("target has no terms");
    const LevelIndex& li = target.expansion.terms().front().li;
    params["level"] = li.level;
    params["index"] = li.index;
    const ConvNet net = kind == "phi" ? build_phi_net(li, d, p.half_width)
                                      : build_basis_net(li, p.n, d, p.half_width).net;
    return make_network_file(kind, net, std::nullopt, params.dump());
  }
  if (kind == "approximator") {
    const KorobovApproximator app = build_approximator(target.expansion, p.n, d, p.half_width);
    params["theta_n"] = app.branches.size();
    Readout readout{std::vector<double>(app.h.alpha().begin(), app.h.alpha().end()), app.h.beta()};
    return make_network_file("approximator", app.h.net(), std::move(readout), params.dump());
  }
  throw std::invalid_argument("unknown build kind '" + kind + "'");
}

}  // namespace korobov
