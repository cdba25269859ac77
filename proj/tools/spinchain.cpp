// Copyright 2026 The spinchain Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "spinchain/expctl.hpp"

namespace {

struct Flags {
  std::string config;
  std::string case_name;
  std::string backend;
  std::string prep_order;
  std::optional<double> tau_start;
  std::optional<double> tau_stop;
  std::optional<int> tau_points;
  std::string out;
};

void add_common(CLI::App* sub, Flags& f) {
  sub->add_option("--config", f.config, "key = value config file");
  sub->add_option("--case", f.case_name,
                  "classical | reversal | preferential_pumping | local_effects");
  sub->add_option("--backend", f.backend, "exact | circuit");
  sub->add_option("--prep-order", f.prep_order, "bc_first | ab_first");
  sub->add_option("--tau-start", f.tau_start, "first tau of the grid");
  sub->add_option("--tau-stop", f.tau_stop, "last tau of the grid");
  sub->add_option("--tau-points", f.tau_points, "number of grid points");
  sub->add_option("--out", f.out, "output path (default stdout)");
}

// Config file first, then flags on top.
spinchain::RunConfig build_config(const Flags& f) {
  spinchain::RunConfig cfg;
  if (!f.config.empty()) cfg = spinchain::load_config_file(f.config, cfg);
  if (!f.case_name.empty()) {
    cfg.case_name = f.case_name;
    cfg.temps.clear();
    cfg.alphas.clear();
    cfg.base_temps.clear();
    cfg.taus.clear();
  }
  if (!f.backend.empty()) cfg.backend = spinchain::parse_backend(f.backend);
  if (!f.prep_order.empty()) cfg.order = spinchain::parse_prep_order(f.prep_order);
  if (f.tau_start) cfg.tau_start = *f.tau_start;
  if (f.tau_stop) cfg.tau_stop = *f.tau_stop;
  if (f.tau_points) cfg.tau_points = *f.tau_points;
  if (!f.out.empty()) cfg.out = f.out;
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Heat flow in correlated DM qubit chains"};
  app.require_subcommand(1);
  Flags f;
  auto* run = app.add_subcommand("run", "sweep a chain state and write a CSV trajectory");
  auto* cal = app.add_subcommand("calibrate", "fit a case and store it in SPINCHAIN_CALIB_DIR");
  auto* ver = app.add_subcommand("verify-circuits", "check circuit equivalences and CNOT counts");
  auto* two = app.add_subcommand("two-qubit", "correlated vs uncorrelated two-qubit sweep");
  for (auto* s : {run, cal, ver, two}) add_common(s, f);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return spinchain::kExitUsage;
  }

  spinchain::RunConfig cfg;
  try {
    cfg = build_config(f);
  } catch (const spinchain::Error& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return spinchain::kExitUsage;
  }
  // Summaries go to stdout when the CSV has its own file.
  std::ostream& log = cfg.out.empty() ? std::cerr : std::cout;

  if (run->parsed()) return spinchain::cmd_run(cfg, std::cout, log);
  if (cal->parsed()) return spinchain::cmd_calibrate(cfg.case_name, cfg.order, std::cout);
  if (ver->parsed()) return spinchain::cmd_verify_circuits(std::cout);
  return spinchain::cmd_two_qubit(cfg, std::cout, log);
}
