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

// korobov_cnn: build, verify, sweep and export constructed networks.
// Exit status: 0 all checks pass, 1 bound violation, 2 usage error.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "korobov/approximator.hpp"
#include "korobov/harness.hpp"

namespace {

constexpr int kPass = 0;
constexpr int kViolation = 1;
constexpr int kUsage = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
  if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

// One row per stored kernel tap and bias entry.
std::string export_csv(const korobov::NetworkFile& file) {
  std::ostringstream out;
  out << "layer,kind,out,in,s,t,value,free\n";
  char line[160];
  for (std::size_t l = 0; l < file.layers.size(); ++l) {
    const auto& layer = file.layers[l];
    const int k = layer.kernel.half_width();
    for (int p = 1; p <= layer.kernel.out_channels(); ++p) {
      for (const auto& block : layer.kernel.row(p)) {
        for (int s = -k; s <= k; ++s) {
          for (int t = -k; t <= k; ++t) {
            std::snprintf(line, sizeof line, "%zu,kernel,%d,%d,%d,%d,%.17g,1\n", l + 1, p, block.in,
                          s, t, layer.kernel.at(p, block.in, s, t));
            out << line;
          }
        }
      }
    }
    for (int p = 1; p <= layer.bias.size(); ++p) {
      std::snprintf(line, sizeof line, "%zu,bias,%d,,,,%.17g,%d\n", l + 1, p, layer.bias[p],
                    layer.bias.is_free(p) ? 1 : 0);
      out << line;
    }
  }
  if (file.readout) {
    for (std::size_t i = 0; i < file.readout->alpha.size(); ++i) {
      std::snprintf(line, sizeof line, "0,alpha,%zu,,,,%.17g,1\n", i + 1, file.readout->alpha[i]);
      out << line;
    }
    std::snprintf(line, sizeof line, "0,beta,,,,,%.17g,1\n", file.readout->beta);
    out << line;
  }
  return out.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Constructive 2D ReLU CNN approximation of Korobov functions"};
  app.require_subcommand(1);

  korobov::BuildParams build;
  korobov::VerifyParams verify;
  std::string kind, suite, out_path, in_path, format = "json";
  double p_flag = 0.0;
  double epsilon = 0.0;
  int n_min = 1;

  auto* build_cmd = app.add_subcommand("build", "Construct a network and write it as JSON");
  build_cmd->add_option("kind", kind, "sq, prd, product, phi, basis or approximator")
      ->required()
      ->check(CLI::IsMember(korobov::build_kinds()));
  build_cmd->add_option("--d", build.spatial, "Spatial size d");
  build_cmd->add_option("--k", build.half_width, "Kernel half width (size 2k+1)");
  build_cmd->add_option("--n", build.n, "Approximation level n");
  build_cmd->add_option("--c", build.channels, "Channels for sq");
  build_cmd->add_option("--target", build.target, "Expansion target for phi, basis, approximator");
  build_cmd->add_option("--out", out_path, "Output path (stdout if omitted)");

  auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
  verify_cmd->add_option("suite", suite, "sq, prd, product, selector, phi, basis, e2e or size")
      ->required()
      ->check(CLI::IsMember(korobov::verify_suites()));
  verify_cmd->add_option("--d", verify.spatial, "Spatial size d");
  verify_cmd->add_option("--k", verify.half_width, "Kernel half width");
  verify_cmd->add_option("--n", verify.n, "Level n (first level for e2e)");
  verify_cmd->add_option("--n-max", verify.n_max, "Largest level checked");
  verify_cmd->add_option("--samples", verify.samples, "Random samples per check");
  verify_cmd->add_option("--seed", verify.seed, "PRNG seed");
  verify_cmd->add_option("--p", p_flag, "L^p exponent for e2e (omit for sup norm)");
  verify_cmd->add_option("--target", verify.target, "Target for e2e and size");

  auto* sweep_cmd = app.add_subcommand("sweep", "Tabulate bound vs measured error over n");
  sweep_cmd->add_option("kind", kind, "product, basis or e2e")
      ->required()
      ->check(CLI::IsMember({"product", "basis", "e2e"}));
  sweep_cmd->add_option("--d", verify.spatial, "Spatial size d");
  sweep_cmd->add_option("--k", verify.half_width, "Kernel half width");
  sweep_cmd->add_option("--n", n_min, "First level");
  sweep_cmd->add_option("--n-max", verify.n_max, "Last level");
  sweep_cmd->add_option("--samples", verify.samples, "Random samples per row");
  sweep_cmd->add_option("--seed", verify.seed, "PRNG seed");
  sweep_cmd->add_option("--p", p_flag, "L^p exponent (omit for sup norm)");
  sweep_cmd->add_option("--target", verify.target, "Target for e2e");
  sweep_cmd->add_option("--out", out_path, "CSV path (stdout if omitted)");
  sweep_cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"csv"}));

  auto* export_cmd = app.add_subcommand("export", "Re-emit a network file, or pick N for accuracy");
  export_cmd->add_option("--in", in_path, "Network file to read");
  export_cmd->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  export_cmd->add_option("--out", out_path, "Output path (stdout if omitted)");
  export_cmd->add_option("--epsilon", epsilon, "Report the N that guarantees this accuracy");
  export_cmd->add_option("--p", p_flag, "L^p exponent for --epsilon (omit for infinity)");
  export_cmd->add_option("--d", verify.spatial, "Spatial size d for --epsilon");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    verify.p = p_flag;
    if (build_cmd->parsed()) {
      const korobov::NetworkFile file = korobov::build_network(kind, build);
      write_text(out_path, korobov::serialize_network(file));
      const korobov::ConvNet net = file.net();
      std::cerr << kind << ": depth " << net.depth() << ", width " << net.width() << ", size "
                << korobov::size_of(net) << "\n";
      return kPass;
    }
    if (verify_cmd->parsed()) {
      const korobov::VerifyReport report = korobov::run_verify(suite, verify);
      korobov::print_report(std::cout, report);
      return report.pass() ? kPass : kViolation;
    }
    if (sweep_cmd->parsed()) {
      const auto rows = korobov::run_sweep(kind, n_min, verify.n_max, verify);
      std::ostringstream csv;
      korobov::write_sweep_csv(csv, rows);
      write_text(out_path, csv.str());
      for (const auto& row : rows) {
        if (row.measured_error > row.bound) return kViolation;
      }
      return kPass;
    }
    if (export_cmd->parsed()) {
      if (epsilon > 0.0) {
        const double p = p_flag == 0.0 ? korobov::kInfinity : p_flag;
        const korobov::NSelection s = korobov::select_N(epsilon, p, verify.spatial);
        std::printf("epsilon=%g p=%g d=%d beta=%.6g log2_N=%.6g N=%s log2_bound_at_N=%.6g "
                    "hypothesis_holds=%s\n",
                    s.epsilon, s.p, s.spatial, s.beta, s.log2_N,
                    s.N ? std::to_string(*s.N).c_str() : "overflow", s.log2_rhs,
                    s.hypothesis_holds ? "yes" : "no");
        return s.log2_rhs <= std::log2(epsilon) ? kPass : kViolation;
      }
      if (in_path.empty()) throw std::invalid_argument("export needs --in or --epsilon");
      const korobov::NetworkFile file = korobov::parse_network(read_file(in_path));
      write_text(out_path, format == "csv" ? export_csv(file) : korobov::serialize_network(file));
      return kPass;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
