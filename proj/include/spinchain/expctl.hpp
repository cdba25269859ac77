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

/**
 * @file expctl.hpp
 * @brief Experiment commands behind the `spinchain` executable.
 *
 * Each command writes CSV to `out` and a human summary to `log`, and returns
 * the process exit code: 0 ok, 1 verification failure, 2 usage error,
 * 3 calibration or positivity failure.
 */

#pragma once

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "spinchain/calibrate.hpp"

namespace spinchain {

enum ExitCode : int { kExitOk = 0, kExitVerify = 1, kExitUsage = 2, kExitCalibration = 3 };

class UsageError : public Error {
 public:
  using Error::Error;
};

enum class Backend { exact, circuit };

/**
 * Run settings. A state is given by exactly one of: a case name, explicit
 * (temps, alphas), or (base_temps, taus) for the three-qubit preparation.
 */
struct RunConfig {
  std::optional<std::string> case_name;
  std::vector<double> temps;
  std::vector<double> alphas;
  std::vector<double> base_temps;
  std::vector<double> taus;
  Backend backend = Backend::exact;
  double coupling = 1.0;
  std::optional<double> epsilon;
  double tau_start = 0.0;
  double tau_stop = std::numbers::pi;
  int tau_points = 101;
  std::string out;
  PrepOrder order = PrepOrder::bc_first;

  void validate() const {
    const int styles = (case_name ? 1 : 0) + (!temps.empty() || !alphas.empty() ? 1 : 0) +
                       (!base_temps.empty() || !taus.empty() ? 1 : 0);
    if (styles != 1) {
      throw UsageError("give exactly one of: case, temps+alphas, base_temps+taus");
    }
    if (!temps.empty() || !alphas.empty()) {
      if (temps.size() < 2 || alphas.size() + 1 != temps.size()) {
        throw UsageError("temps needs n >= 2 values and alphas n-1 values");
      }
      if (backend == Backend::circuit && temps.size() != 3) {
        throw UsageError("the circuit backend simulates three-qubit chains only");
      }
    }
    if (!base_temps.empty() || !taus.empty()) {
      if (base_temps.size() != 3 || taus.size() != 2) {
        throw UsageError("base_temps needs 3 values and taus 2 values");
      }
    }
    if (tau_points < 2) throw UsageError("tau_points must be at least 2");
    if (!(tau_stop > tau_start)) throw UsageError("tau_stop must exceed tau_start");
    if (!(coupling > 0.0)) throw UsageError("coupling must be positive");
    if (epsilon && !(*epsilon > 0.0)) throw UsageError("epsilon must be positive");
  }
};

namespace detail {

inline std::vector<double> parse_list_or_usage(const std::string& key, const std::string& v) {
  try {
    std::string s = v;
    for (char& c : s) {
      if (c == ',') c = ' ';
    }
    return parse_double_list(s);
  } catch (const ContractError&) {
    throw UsageError("bad number list for '" + key + "': " + v);
  }
}

inline double parse_number_or_usage(const std::string& key, const std::string& v) {
  try {
    return parse_double(v);
  } catch (const ContractError&) {
    throw UsageError("bad number for '" + key + "': " + v);
  }
}

}  // namespace detail

inline Backend parse_backend(const std::string& s) {
  if (s == "exact") return Backend::exact;
  if (s == "circuit") return Backend::circuit;
  throw UsageError("backend must be 'exact' or 'circuit', got '" + s + "'");
}

inline PrepOrder parse_prep_order(const std::string& s) {
  if (s == "bc_first") return PrepOrder::bc_first;
  if (s == "ab_first") return PrepOrder::ab_first;
  throw UsageError("prep_order must be 'bc_first' or 'ab_first', got '" + s + "'");
}

/**
 * Applies "key = value" settings on top of `cfg`. Keys: case, temps, alphas,
 * base_temps, taus, backend, coupling, epsilon, tau_start, tau_stop,
 * tau_points, out, prep_order. Lists are space or comma separated.
 */
inline RunConfig apply_config_text(const std::string& text, RunConfig cfg = {}) {
  std::map<std::string, std::string> kv;
  try {
    kv = parse_key_values(text);
  } catch (const ContractError& e) {
    throw UsageError(e.what());
  }
  for (const auto& [k, v] : kv) {
    if (k == "case") {
      cfg.case_name = v;
    } else if (k == "temps") {
      cfg.temps = detail::parse_list_or_usage(k, v);
    } else if (k == "alphas") {
      cfg.alphas = detail::parse_list_or_usage(k, v);
    } else if (k == "base_temps") {
      cfg.base_temps = detail::parse_list_or_usage(k, v);
    } else if (k == "taus") {
      cfg.taus = detail::parse_list_or_usage(k, v);
    } else if (k == "backend") {
      cfg.backend = parse_backend(v);
    } else if (k == "coupling") {
      cfg.coupling = detail::parse_number_or_usage(k, v);
    } else if (k == "epsilon") {
      cfg.epsilon = detail::parse_number_or_usage(k, v);
    } else if (k == "tau_start") {
      cfg.tau_start = detail::parse_number_or_usage(k, v);
    } else if (k == "tau_stop") {
      cfg.tau_stop = detail::parse_number_or_usage(k, v);
    } else if (k == "tau_points") {
      const double p = detail::parse_number_or_usage(k, v);
      if (p != std::floor(p)) throw UsageError("tau_points must be an integer");
      cfg.tau_points = static_cast<int>(p);
    } else if (k == "out") {
      cfg.out = v;
    } else if (k == "prep_order") {
      cfg.order = parse_prep_order(v);
    } else {
      throw UsageError("unknown config key '" + k + "'");
    }
  }
  return cfg;
}

inline RunConfig load_config_file(const std::string& path, RunConfig cfg = {}) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return apply_config_text(ss.str(), std::move(cfg));
}

// ---------------------------------------------------------------------------
// CSV

/// 17 significant digits, locale independent.
inline std::string csv_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  std::array<char, 64> buf{};
  auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::general, 17);
  return std::string(buf.data(), res.ptr);
}

inline std::string csv_temperature(const Temperature& t) {
  switch (t.kind) {
    case Temperature::Kind::finite: return csv_number(t.kT);
    case Temperature::Kind::infinite: return "inf";
    case Temperature::Kind::zero: return std::signbit(t.kT) ? "-0" : "0";
  }
  return "nan";
}

inline std::string qubit_label(int n, int q) {
  return n == 3 ? std::string(1, static_cast<char>('A' + q)) : std::to_string(q);
}

inline std::string pair_label(int n, std::pair<int, int> p) {
  return n == 3 ? qubit_label(n, p.first) + qubit_label(n, p.second)
                : std::to_string(p.first) + "_" + std::to_string(p.second);
}

inline std::string csv_header(const Trajectory& t) {
  std::string h = "tau";
  for (const char* pre : {"U_", "Q_", "kT_"}) {
    for (int q = 0; q < t.n; ++q) h += "," + std::string(pre) + qubit_label(t.n, q);
  }
  for (const char* pre : {"I_", "D_", "alpha_"}) {
    for (const auto& p : t.pairs) h += "," + std::string(pre) + pair_label(t.n, p);
  }
  return h;
}

inline void write_csv(const Trajectory& t, std::ostream& os) {
  os << csv_header(t) << '\n';
  for (std::size_t k = 0; k < t.rows(); ++k) {
    os << csv_number(t.taus[k]);
    for (double v : t.energies[k]) os << ',' << csv_number(v);
    for (double v : t.heats[k]) os << ',' << csv_number(v);
    for (const Temperature& v : t.temperatures[k]) os << ',' << csv_temperature(v);
    for (double v : t.mutual_info[k]) os << ',' << csv_number(v);
    for (double v : t.discord[k]) os << ',' << csv_number(v);
    for (const Complex& v : t.alphas[k]) os << ',' << csv_number(v.real());
    os << '\n';
  }
}

// ---------------------------------------------------------------------------
// Calibration store

inline std::filesystem::path calibration_dir() {
  const char* env = std::getenv("SPINCHAIN_CALIB_DIR");
  return env && *env ? std::filesystem::path(env) : std::filesystem::path(".");
}

inline std::filesystem::path calibration_path(const std::string& case_name) {
  return calibration_dir() / (case_name + ".calib");
}

/// Stored calibration for the case if SPINCHAIN_CALIB_DIR holds one.
inline std::optional<FitReport> load_calibration(const std::string& case_name) {
  if (!std::getenv("SPINCHAIN_CALIB_DIR")) return std::nullopt;
  const auto path = calibration_path(case_name);
  std::ifstream in(path);
  if (!in) return std::nullopt;
  std::stringstream ss;
  ss << in.rdbuf();
  FitReport r = from_key_values(ss.str());
  if (r.case_name != case_name) {
    throw ContractError("calibration file " + path.string() + " belongs to '" + r.case_name + "'");
  }
  return r;
}

inline FitReport calibrate_from_scratch(const CasePreset& preset, PrepOrder order) {
  TuneOptions opt;
  opt.order = order;
  const FitReport eps = fit_epsilon(kDefaultEpsilonSeed, opt);
  return calibrate_case(preset, eps.epsilon, opt);
}

// ---------------------------------------------------------------------------
// State preparation per backend

/// U_ab and U_bc as exact exponentials on a three-qubit register.
inline DensityMatrix exact_coupled_state(const DensityMatrix& base, double tau_ab, double tau_bc,
                                         PrepOrder order) {
  const CMatrix uab = expm_i(dm_pair_term(3, 0, 1, 1.0), tau_ab);
  const CMatrix ubc = expm_i(dm_pair_term(3, 1, 2, 1.0), tau_bc);
  const CMatrix u = order == PrepOrder::bc_first ? CMatrix(uab * ubc) : CMatrix(ubc * uab);
  const CMatrix out = u * base.mat() * u.adjoint();
  return DensityMatrix(0.5 * (out + out.adjoint()));
}

struct PreparedRun {
  std::string label;
  DensityMatrix rho0;
  EnergyScale scale;
};

inline PreparedRun prepare_run(const RunConfig& cfg, std::ostream& log) {
  cfg.validate();
  if (cfg.case_name) {
    const CasePreset& preset = [&]() -> const CasePreset& {
      try {
        return preset_by_name(*cfg.case_name);
      } catch (const ContractError& e) {
        throw UsageError(e.what());
      }
    }();
    std::optional<FitReport> rep = load_calibration(preset.name);
    if (rep) {
      log << "calibration: " << calibration_path(preset.name).string() << '\n';
    } else {
      rep = calibrate_from_scratch(preset, cfg.order);
      log << "calibration: computed in-process\n";
    }
    if (!rep->ok()) throw CalibrationError("calibration for '" + preset.name + "' did not converge");
    const EnergyScale scale{cfg.epsilon.value_or(rep->epsilon)};
    if (cfg.backend == Backend::exact) {
      return {preset.name,
              exact_coupled_state(product_state(rep->base_p1), rep->tau_ab, rep->tau_bc, cfg.order),
              scale};
    }
    return {preset.name, purified_system_state(rep->angles, rep->tau_ab, rep->tau_bc, cfg.order),
            scale};
  }
  const EnergyScale scale{cfg.epsilon.value_or(1.0)};
  if (!cfg.temps.empty()) {
    ChainSpec spec;
    spec.n = static_cast<int>(cfg.temps.size());
    spec.temps = cfg.temps;
    for (double a : cfg.alphas) spec.alphas.emplace_back(a);
    spec.scale = scale;
    return {"explicit", chain_state(spec), scale};
  }
  std::array<double, 3> p1{};
  for (int q = 0; q < 3; ++q) p1[q] = gibbs_excited_population(cfg.base_temps[q], scale);
  if (cfg.backend == Backend::exact) {
    return {"prepared", exact_coupled_state(product_state(p1), cfg.taus[0], cfg.taus[1], cfg.order),
            scale};
  }
  const AngleFit af = fit_variational_angles(product_state(p1));
  return {"prepared", purified_system_state(af.angles, cfg.taus[0], cfg.taus[1], cfg.order), scale};
}

/// Trajectory of rho0 under the chain Hamiltonian, by exponential or circuit.
inline Trajectory run_trajectory(const DensityMatrix& rho0, Backend backend, double coupling,
                                 const std::vector<double>& taus, const EnergyScale& scale) {
  const DMChainHamiltonian h(rho0.num_qubits(), coupling);
  if (backend == Backend::exact) return sweep(rho0, h, taus, scale);
  if (rho0.num_qubits() != 3) throw UsageError("the circuit backend simulates three qubits only");
  check_grid(taus);
  const CartanConstants k = cartan_constants();
  Trajectory traj;
  traj.n = 3;
  traj.pairs = chain_pairs(3);
  const RVector spec0 = herm_eig(rho0.mat()).eigenvalues;
  for (double tau : taus) {
    const Circuit c = u3_cartan_circuit(coupling * tau, k, CartanVariant::swapped13);
    append_row(traj, tau, apply_density(c, rho0), spec0, scale);
  }
  return traj;
}

// ---------------------------------------------------------------------------
// Summaries

struct FlowSummary {
  std::vector<double> first_step_heat;
  std::string direction;
};

inline FlowSummary summarize_flow(const Trajectory& t) {
  FlowSummary s;
  if (t.rows() < 2) return s;
  s.first_step_heat = t.heats[1];
  const auto& q = s.first_step_heat;
  if (t.n == 3 && q[0] < 0 && q[2] > 0) {
    s.direction = "A->B->C";
  } else if (t.n == 3 && q[0] > 0 && q[2] < 0) {
    s.direction = "C->B->A";
  } else {
    for (int i = 0; i < t.n; ++i) {
      s.direction += (i ? ", " : "") + qubit_label(t.n, i) + (q[i] > 0 ? " gains" : " loses");
    }
  }
  return s;
}

inline std::ostream& open_output(const std::string& path, std::ofstream& file, std::ostream& fallback) {
  if (path.empty()) return fallback;
  file.open(path, std::ios::binary);
  if (!file) throw UsageError("cannot write '" + path + "'");
  return file;
}

namespace detail {

template <typename F>
int guarded(std::ostream& log, F&& body) {
  try {
    return body();
  } catch (const UsageError& e) {
    log << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const PositivityError& e) {
    log << "positivity failure: " << e.what() << '\n';
    return kExitCalibration;
  } catch (const CalibrationError& e) {
    log << "calibration failure: " << e.what() << '\n';
    return kExitCalibration;
  } catch (const Error& e) {
    log << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Commands

inline int cmd_run(const RunConfig& cfg, std::ostream& out, std::ostream& log) {
  return detail::guarded(log, [&] {
    const PreparedRun run = prepare_run(cfg, log);
    const auto taus = uniform_grid(cfg.tau_start, cfg.tau_stop, cfg.tau_points);
    const Trajectory t = run_trajectory(run.rho0, cfg.backend, cfg.coupling, taus, run.scale);
    std::ofstream file;
    write_csv(t, open_output(cfg.out, file, out));
    const FlowSummary s = summarize_flow(t);
    log << "case: " << run.label << '\n';
    log << "backend: " << (cfg.backend == Backend::exact ? "exact" : "circuit") << '\n';
    log << "epsilon: " << csv_number(run.scale.epsilon) << '\n';
    log << "first-step heat:";
    for (int q = 0; q < t.n; ++q) {
      log << " Q_" << qubit_label(t.n, q) << "=" << csv_number(s.first_step_heat[q]);
    }
    log << "\ndirection: " << s.direction << '\n';
    if (t.n == 3) {
      log << "preferred source: "
          << (std::abs(s.first_step_heat[0]) > std::abs(s.first_step_heat[2]) ? "A" : "C") << '\n';
    }
    return int{kExitOk};
  });
}

/// Calibrates one case (or all four when `case_name` is empty).
inline int cmd_calibrate(const std::optional<std::string>& case_name, PrepOrder order,
                         std::ostream& log) {
  return detail::guarded(log, [&] {
    std::vector<const CasePreset*> todo;
    if (case_name) {
      try {
        todo.push_back(&preset_by_name(*case_name));
      } catch (const ContractError& e) {
        throw UsageError(e.what());
      }
    } else {
      for (const CasePreset& p : presets()) todo.push_back(&p);
    }
    TuneOptions opt;
    opt.order = order;
    const FitReport eps = fit_epsilon(kDefaultEpsilonSeed, opt);
    log << "epsilon: " << csv_number(eps.epsilon) << " peV\n";
    int code = kExitOk;
    const auto dir = calibration_dir();
    std::filesystem::create_directories(dir);
    for (const CasePreset* p : todo) {
      FitReport rep;
      try {
        rep = calibrate_case(*p, eps.epsilon, opt);
      } catch (const CalibrationError& e) {
        log << p->name << ": " << e.what() << '\n';
        code = kExitCalibration;
        continue;
      }
      const auto path = calibration_path(p->name);
      std::ofstream f(path, std::ios::binary);
      if (!f) throw UsageError("cannot write '" + path.string() + "'");
      f << to_key_values(rep);
      log << p->name << ": tau = (" << csv_number(rep.tau_ab) << ", " << csv_number(rep.tau_bc)
          << "), " << (rep.ok() ? "converged" : "NOT converged") << ", saved " << path.string()
          << '\n';
      for (const CellCheck& c : verify_preset(*p, rep)) {
        log << "  " << (c.pass ? "PASS" : "FAIL") << ' ' << c.column << " expected "
            << csv_number(c.expected) << " got " << csv_number(c.achieved) << " tol "
            << csv_number(c.tolerance) << '\n';
      }
      if (!rep.ok()) code = kExitCalibration;
    }
    return code;
  });
}

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Circuit equivalence, CNOT-count and layout checks.
inline std::vector<CheckResult> verify_circuits() {
  std::vector<CheckResult> out;
  auto add = [&](std::string name, bool pass, std::string detail) {
    out.push_back({std::move(name), pass, std::move(detail)});
  };
  auto count = [&](const std::string& name, const Circuit& c, int want) {
    const int got = cnot_count(c);
    add("cnot " + name, got == want, std::to_string(got) + " (want " + std::to_string(want) + ")");
  };

  CartanConstants k;
  try {
    k = cartan_constants();
    add("cartan solve", k.residual < 1e-9,
        "alpha=" + csv_number(k.alpha) + " beta=" + csv_number(k.beta) + " c=" + csv_number(k.c) +
            " residual=" + csv_number(k.residual));
  } catch (const CalibrationError& e) {
    add("cartan solve", false, e.what());
    return out;
  }

  count("u2", u2_dm_circuit(0.3), 2);
  count("k_product", k_circuit_product(k), 8);
  count("k_swapped", k_circuit_swapped(k), 10);
  count("cartan18", u3_cartan_circuit(0.3, k, CartanVariant::product18), 18);
  count("cartan13", u3_cartan_circuit(0.3, k, CartanVariant::swapped13), 13);

  const DMChainHamiltonian h2(2, 1.0), h3(3, 1.0);
  const std::vector<double> samples = {0.0, 0.2, 0.5, 1.1, 2.3, -0.7, -2.9};
  for (double tau : samples) {
    const double r = phase_aligned_distance(unitary_of(u2_dm_circuit(tau)), propagator(h2, tau));
    add("u2 tau=" + csv_number(tau), r < 1e-9, "residual " + csv_number(r));
  }
  for (auto [variant, name] : {std::pair{CartanVariant::product18, "cartan18"},
                               std::pair{CartanVariant::swapped13, "cartan13"}}) {
    for (double tau : samples) {
      const double r = phase_aligned_distance(unitary_of(u3_cartan_circuit(tau, k, variant)),
                                              propagator(h3, tau));
      add(std::string(name) + " tau=" + csv_number(tau), r < 1e-9, "residual " + csv_number(r));
    }
  }
  const CMatrix kk = cartan_k(k.alpha, k.beta);
  const double rp = phase_aligned_distance(unitary_of(k_circuit_product(k)), kk);
  const double rs = phase_aligned_distance(unitary_of(k_circuit_swapped(k)), kk);
  add("k_product vs exp", rp < 1e-10, "residual " + csv_number(rp));
  add("k_swapped vs exp", rs < 1e-10, "residual " + csv_number(rs));

  const CouplingMap line = CouplingMap::linear(3);
  for (auto [variant, name] : {std::pair{CartanVariant::product18, "cartan18"},
                               std::pair{CartanVariant::swapped13, "cartan13"}}) {
    const auto bad = check_layout(u3_cartan_circuit(0.3, k, variant), line);
    add(std::string("layout ") + name, bad.empty(), std::to_string(bad.size()) + " violations");
  }
  return out;
}

inline int cmd_verify_circuits(std::ostream& log) {
  return detail::guarded(log, [&] {
    bool all = true;
    for (const CheckResult& c : verify_circuits()) {
      log << (c.pass ? "PASS " : "FAIL ") << c.name << ": " << c.detail << '\n';
      all = all && c.pass;
    }
    return all ? int{kExitOk} : int{kExitVerify};
  });
}

struct TwoQubitSetup {
  double hot_kT = 2.0;
  double cold_kT = 0.8;
  double alpha_fraction = -0.9;  // of alpha_max, for the correlated run
};

struct TwoQubitResult {
  Trajectory uncorrelated;
  Trajectory correlated;
};

inline TwoQubitResult two_qubit_runs(const std::vector<double>& taus, double coupling = 1.0,
                                     const TwoQubitSetup& setup = {}) {
  const EnergyScale scale{1.0};
  const DensityMatrix hot = gibbs_qubit(setup.hot_kT, scale);
  const DensityMatrix cold = gibbs_qubit(setup.cold_kT, scale);
  const double alpha = setup.alpha_fraction * alpha_max(hot, cold);
  const DMChainHamiltonian h(2, coupling);
  return {sweep(pair_state(hot, cold, 0.0), h, taus, scale),
          sweep(pair_state(hot, cold, alpha), h, taus, scale)};
}

inline int cmd_two_qubit(const RunConfig& cfg, std::ostream& out, std::ostream& log) {
  return detail::guarded(log, [&] {
    if (cfg.tau_points < 2 || !(cfg.tau_stop > cfg.tau_start)) throw UsageError("bad tau grid");
    const auto taus = uniform_grid(cfg.tau_start, cfg.tau_stop, cfg.tau_points);
    const TwoQubitResult r = two_qubit_runs(taus, cfg.coupling);
    std::ofstream file;
    std::ostream& os = open_output(cfg.out, file, out);
    os << "tau,U_A_uncorr,U_B_uncorr,Q_A_uncorr,Q_B_uncorr,I_AB_uncorr,"
          "U_A_corr,U_B_corr,Q_A_corr,Q_B_corr,I_AB_corr\n";
    for (std::size_t k = 0; k < taus.size(); ++k) {
      os << csv_number(taus[k]);
      for (const Trajectory* t : {&r.uncorrelated, &r.correlated}) {
        os << ',' << csv_number(t->energies[k][0]) << ',' << csv_number(t->energies[k][1]) << ','
           << csv_number(t->heats[k][0]) << ',' << csv_number(t->heats[k][1]) << ','
           << csv_number(t->mutual_info[k][0]);
      }
      os << '\n';
    }
    for (auto [t, name] : {std::pair{&r.uncorrelated, "uncorrelated"},
                           std::pair{&r.correlated, "correlated"}}) {
      double drift = 0.0;
      const double u0 = t->energies[0][0] + t->energies[0][1];
      for (const auto& e : t->energies) drift = std::max(drift, std::abs(e[0] + e[1] - u0));
      const double q = t->heats[1][0];
      log << name << ": hot qubit U " << (q > 0 ? "increases" : "decreases")
          << " initially (Q_A=" << csv_number(q) << "), max |dSum U|=" << csv_number(drift) << '\n';
    }
    return int{kExitOk};
  });
}

}  // namespace spinchain
