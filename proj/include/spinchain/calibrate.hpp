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
 * @file calibrate.hpp
 * @brief Fits the free parameters of the three-qubit preparation: variational
 *        angles, base populations, coupling times and the energy unit.
 *
 * A case is prepared in three stages. A diagonal product state (the "base")
 * comes out of the purification ansatz, two DM blocks of durations
 * (tau_ab, tau_bc) then turn population differences into chi-type
 * correlations, and the result is read back as temperatures, alphas and
 * discords. Everything here is deterministic: fixed start lists, fixed step
 * schedules, ties broken by start index.
 */

#pragma once

#include <array>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "spinchain/qcircuit.hpp"

namespace spinchain {

/// Per-case readback for a three-qubit chain. Pair order is AB, BC, AC.
struct Observables {
  std::array<double, 3> temps{};
  std::array<double, 3> alphas{};
  std::array<double, 3> discords{};
};

enum class CaseKind { classical, reversal, preferential_pumping, local_effects };

struct CasePreset {
  CaseKind kind = CaseKind::classical;
  std::string name;
  // Reference values. Temperatures in peV.
  Observables table;
  std::array<double, 2> table_taus{};
  // Values the fit aims for. They differ from `table` only where the reference
  // numbers pull in two directions; see presets().
  Observables target;
  std::array<bool, 2> tau_free{true, true};  // (tau_ab, tau_bc)

  /// The qualitative conditions defining the case.
  bool constraints_hold(const Observables& o) const {
    const auto& t = o.temps;
    const auto& a = o.alphas;
    const bool gradient = t[0] > t[1] && t[1] > t[2] && t[2] > 0.0;
    switch (kind) {
      case CaseKind::classical:
        return gradient && std::abs(a[0]) < 1e-12 && std::abs(a[1]) < 1e-12;
      case CaseKind::reversal:
        return gradient && a[0] < 0.0 && a[1] < 0.0;
      case CaseKind::preferential_pumping: {
        if (std::abs(t[0] - t[2]) > 0.05 || a[0] == 0.0) return false;
        const double ratio = a[1] / a[0];
        return ratio > -1.0 && ratio < 0.0;
      }
      case CaseKind::local_effects:
        return gradient && std::abs(a[0]) < 1e-12 && a[1] < 0.0;
    }
    return false;
  }
};

inline constexpr double kTempTol = 0.1;      // peV
inline constexpr double kAlphaTol = 5e-3;
inline constexpr double kDiscordTol = 5e-3;

/**
 * The four cases. The local-effects row carries its correlation on B–C with
 * alpha_AB = 0, as the case definition requires; the reference row lists it
 * on A–B, so the table comparison for that row is expected to disagree.
 */
inline const std::vector<CasePreset>& presets() {
  static const std::vector<CasePreset> all = [] {
    std::vector<CasePreset> v;
    CasePreset c;
    c.kind = CaseKind::classical;
    c.name = "classical";
    c.table = {{9.8, 5.0, 2.0}, {0, 0, 0}, {0, 0, 0}};
    c.table_taus = {0, 0};
    c.target = c.table;
    c.tau_free = {false, false};
    v.push_back(c);

    CasePreset r;
    r.kind = CaseKind::reversal;
    r.name = "reversal";
    r.table = {{5.3, 4.5, 3.2}, {-0.097, -0.071, -0.014}, {0.037, 0.021, 0.001}};
    r.table_taus = {-1.23e-3, -1.05e-3};
    // The prose quotes (-0.097, -0.076, -0.012) for the same state; aim at the
    // middle of the overlap of both windows.
    r.target = {{5.3, 4.5, 3.2}, {-0.097, -0.0735, -0.013}, {0.037, 0.021, 0.001}};
    v.push_back(r);

    CasePreset p;
    p.kind = CaseKind::preferential_pumping;
    p.name = "preferential_pumping";
    p.table = {{4.9, 3.2, 4.9}, {0.13, -0.025, 0}, {0.071, 0.002, 0}};
    p.table_taus = {-8.78e1, 9.33e-4};
    p.target = p.table;
    v.push_back(p);

    CasePreset l;
    l.kind = CaseKind::local_effects;
    l.name = "local_effects";
    l.table = {{9.9, 3.7, 2.6}, {-0.089, 0, 0}, {-0.031, 0, 0}};
    l.table_taus = {-1.01, 0};
    l.target = {{9.9, 3.7, 2.6}, {0, -0.089, 0}, {0, 0.031, 0}};
    l.tau_free = {false, true};
    v.push_back(l);
    return v;
  }();
  return all;
}

inline const CasePreset& preset_by_name(const std::string& name) {
  for (const CasePreset& p : presets()) {
    if (p.name == name) return p;
  }
  throw ContractError("unknown case '" + name + "'");
}

// ---------------------------------------------------------------------------
// Levenberg-Marquardt

struct LmResult {
  Eigen::VectorXd x;
  double cost = 0.0;  // ½‖r‖²
  int iterations = 0;
};

/// Minimizes ½‖r(x)‖² with a central-difference Jacobian.
inline LmResult levenberg_marquardt(
    const std::function<Eigen::VectorXd(const Eigen::VectorXd&)>& residual, Eigen::VectorXd x,
    int max_iters = 200, double fd_step = 1e-6) {
  Eigen::VectorXd r = residual(x);
  double cost = 0.5 * r.squaredNorm();
  double lambda = 1e-3;
  int it = 0;
  bool stalled = false;
  for (; it < max_iters && cost > 1e-20 && !stalled; ++it) {
    Eigen::MatrixXd jac(r.size(), x.size());
    for (Eigen::Index a = 0; a < x.size(); ++a) {
      Eigen::VectorXd xp = x, xm = x;
      xp(a) += fd_step;
      xm(a) -= fd_step;
      jac.col(a) = (residual(xp) - residual(xm)) / (2 * fd_step);
    }
    const Eigen::MatrixXd jtj = jac.transpose() * jac;
    const Eigen::VectorXd g = jac.transpose() * r;
    bool accepted = false;
    while (lambda < 1e12) {
      Eigen::MatrixXd a = jtj;
      a.diagonal() += lambda * (jtj.diagonal().array() + 1e-12).matrix();
      const Eigen::VectorXd step = a.ldlt().solve(-g);
      const Eigen::VectorXd xn = x + step;
      const Eigen::VectorXd rn = residual(xn);
      const double cn = 0.5 * rn.squaredNorm();
      if (std::isfinite(cn) && cn < cost) {
        const double gain = cost - cn;
        x = xn;
        r = rn;
        cost = cn;
        lambda = std::max(lambda / 3, 1e-12);
        accepted = true;
        stalled = gain < 1e-15 * (1 + cost);
        break;
      }
      lambda *= 4;
    }
    if (!accepted) break;
  }
  return {x, cost, it};
}

// ---------------------------------------------------------------------------
// Preparation model

inline std::array<double, 3> logistic(const Eigen::Ref<const Eigen::VectorXd>& x) {
  std::array<double, 3> p{};
  for (int q = 0; q < 3; ++q) p[q] = 1.0 / (1.0 + std::exp(-x(q)));
  return p;
}

/// Diagonal product state with excited populations p1 (qubit q on bit q).
inline DensityMatrix product_state(const std::array<double, 3>& p1) {
  CMatrix rho = CMatrix::Identity(1, 1);
  for (int q = 0; q < 3; ++q) rho = kron(diagonal_qubit(p1[q]).mat(), rho);
  return DensityMatrix(std::move(rho));
}

/// Base product state followed by the coupling circuit.
inline DensityMatrix coupled_state(const std::array<double, 3>& p1, double tau_ab, double tau_bc,
                                   PrepOrder order = PrepOrder::bc_first) {
  return apply_density(coupling_prep(tau_ab, tau_bc, order), product_state(p1));
}

/// Temperatures (peV under epsilon), alphas and discords of a 3-qubit state.
inline Observables observe(const DensityMatrix& rho, double epsilon) {
  const EnergyScale scale{epsilon};
  Observables o;
  for (int q = 0; q < 3; ++q) {
    const Temperature t = temperature(rho, q, scale);
    o.temps[q] = t.is_finite() ? t.kT : std::numeric_limits<double>::quiet_NaN();
  }
  const std::array<std::pair<int, int>, 3> pairs = {{{0, 1}, {1, 2}, {0, 2}}};
  for (int k = 0; k < 3; ++k) {
    const DensityMatrix pair = rho.reduce({pairs[k].first, pairs[k].second});
    o.alphas[k] = pair.mat()(1, 2).real();
    o.discords[k] = gqd(pair);
  }
  return o;
}

/// Residuals normalized by the per-column tolerance.
inline Eigen::VectorXd normalized_residuals(const Observables& got, const Observables& want) {
  Eigen::VectorXd r(9);
  for (int k = 0; k < 3; ++k) {
    r(k) = (got.temps[k] - want.temps[k]) / kTempTol;
    r(3 + k) = (got.alphas[k] - want.alphas[k]) / kAlphaTol;
    r(6 + k) = (got.discords[k] - want.discords[k]) / kDiscordTol;
  }
  for (Eigen::Index k = 0; k < r.size(); ++k) {
    if (!std::isfinite(r(k))) r(k) = 1e6;
  }
  return r;
}

// ---------------------------------------------------------------------------
// Reports

struct FitReport {
  std::string case_name;
  double epsilon = 1.0;
  std::array<double, 3> base_p1{};
  double tau_ab = 0.0;
  double tau_bc = 0.0;
  std::vector<double> angles;  // 12 variational angles, empty until fitted
  double cost = 0.0;           // ½‖normalized residual‖² of the tau fit
  double max_residual = 0.0;   // worst |normalized residual|
  double angle_loss = 0.0;     // Manhattan loss of the variational fit
  int iterations = 0;
  int start_index = -1;
  bool converged = false;   // every column within tolerance of its fit target
  bool constraints = false; // case definition satisfied
  Observables achieved;

  bool ok() const { return converged && constraints; }
};

// ---------------------------------------------------------------------------
// Variational angles

/// 6-qubit purified preparation, ancillas traced out.
inline DensityMatrix purified_system_state(std::span<const double> angles, double tau_ab = 0.0,
                                           double tau_bc = 0.0,
                                           PrepOrder order = PrepOrder::bc_first) {
  Circuit c = variational_prep_circuit(angles);
  c.append(coupling_prep(tau_ab, tau_bc, order, 6));
  CVector psi = CVector::Zero(64);
  psi(0) = 1;
  psi = apply_statevector(c, psi);
  const CMatrix full = psi * psi.adjoint();
  return DensityMatrix(partial_trace(full, 6, {0, 1, 2}));
}

/// Σ over entries of |Re Δ| + |Im Δ|.
inline double manhattan_loss(const CMatrix& a, const CMatrix& b) {
  const CMatrix d = a - b;
  return d.real().cwiseAbs().sum() + d.imag().cwiseAbs().sum();
}

/// Ancilla angle 2 arccos(sqrt(p0)) per qubit, everything else zero.
inline std::vector<double> warm_start_angles(const std::array<double, 3>& p1) {
  std::vector<double> a(kVariationalAngles, 0.0);
  for (int q = 0; q < 3; ++q) a[3 + q] = 2.0 * std::acos(std::sqrt(1.0 - p1[q]));
  return a;
}

struct AngleFitOptions {
  double tolerance = 1e-6;
  int max_iters = 5000;
  double learning_rate = 0.1;
  double fd_step = 1e-7;
  std::optional<std::vector<double>> init;  // defaults to the analytic warm start
};

struct AngleFit {
  std::vector<double> angles;
  double loss = 0.0;
  int iterations = 0;
  std::vector<double> history;  // loss after each accepted step, first entry = initial
};

/**
 * Gradient descent on the Manhattan loss between the traced ancilla-purified
 * state and a diagonal 3-qubit target. Steps start at the learning rate and
 * are halved until the loss drops, so accepted losses never increase.
 */
inline AngleFit fit_variational_angles(const DensityMatrix& target, AngleFitOptions opt = {}) {
  if (target.num_qubits() != 3) throw ContractError("variational target must be 3 qubits");
  for (Eigen::Index r = 0; r < 8; ++r) {
    for (Eigen::Index c = 0; c < 8; ++c) {
      if (r != c && std::abs(target.mat()(r, c)) > kLgcTol) {
        throw ContractError("variational target must be diagonal");
      }
    }
  }
  std::array<double, 3> p1{};
  for (int q = 0; q < 3; ++q) p1[q] = excited_population(target, q);

  AngleFit fit;
  fit.angles = opt.init ? *opt.init : warm_start_angles(p1);
  if (fit.angles.size() != kVariationalAngles) throw ContractError("need 12 initial angles");
  auto loss = [&](const std::vector<double>& a) {
    return manhattan_loss(purified_system_state(a).mat(), target.mat());
  };
  fit.loss = loss(fit.angles);
  fit.history.push_back(fit.loss);
  for (; fit.iterations < opt.max_iters && fit.loss >= opt.tolerance; ++fit.iterations) {
    std::vector<double> grad(kVariationalAngles);
    for (int k = 0; k < kVariationalAngles; ++k) {
      std::vector<double> ap = fit.angles, am = fit.angles;
      ap[k] += opt.fd_step;
      am[k] -= opt.fd_step;
      grad[k] = (loss(ap) - loss(am)) / (2 * opt.fd_step);
    }
    bool accepted = false;
    for (double lr = opt.learning_rate; lr > 1e-14; lr *= 0.5) {
      std::vector<double> next = fit.angles;
      for (int k = 0; k < kVariationalAngles; ++k) next[k] -= lr * grad[k];
      const double l = loss(next);
      if (l < fit.loss) {
        fit.angles = std::move(next);
        fit.loss = l;
        fit.history.push_back(l);
        accepted = true;
        break;
      }
    }
    if (!accepted) break;
  }
  if (fit.loss >= opt.tolerance) {
    throw CalibrationError("variational fit stalled at Manhattan loss " +
                           std::to_string(fit.loss) + " after " +
                           std::to_string(fit.iterations) + " iterations");
  }
  return fit;
}

// ---------------------------------------------------------------------------
// Coupling times and base populations

struct TuneOptions {
  PrepOrder order = PrepOrder::bc_first;
  bool fit_base = true;  // also fit the base populations
  std::vector<double> tau_starts = {-0.6, -0.3, -0.1, 0.1, 0.3, 0.6};
  int max_iters = 200;
};

namespace detail {

struct ParamLayout {
  bool base = true;
  std::array<bool, 2> tau{true, true};
  bool epsilon = false;

  int size() const { return (base ? 3 : 0) + tau[0] + tau[1] + epsilon; }
};

struct Unpacked {
  std::array<double, 3> p1{};
  double tau_ab = 0.0;
  double tau_bc = 0.0;
  double epsilon = 1.0;
};

inline Unpacked unpack(const Eigen::VectorXd& x, const ParamLayout& lay,
                       const std::array<double, 3>& fixed_p1, double fixed_eps) {
  Unpacked u;
  int k = 0;
  if (lay.base) {
    u.p1 = logistic(x.segment(0, 3));
    k = 3;
  } else {
    u.p1 = fixed_p1;
  }
  if (lay.tau[0]) u.tau_ab = x(k++);
  if (lay.tau[1]) u.tau_bc = x(k++);
  u.epsilon = lay.epsilon ? std::exp(x(k)) : fixed_eps;
  return u;
}

inline double logit(double p) { return std::log(p / (1.0 - p)); }

/// Deterministic start list: every tau combination on the start grid.
inline std::vector<Eigen::VectorXd> start_points(const ParamLayout& lay,
                                                 const std::array<double, 3>& base_p1,
                                                 double eps0,
                                                 const std::vector<double>& tau_grid) {
  const std::vector<double> pinned = {0.0};
  const auto& ga = lay.tau[0] ? tau_grid : pinned;
  const auto& gb = lay.tau[1] ? tau_grid : pinned;
  std::vector<Eigen::VectorXd> out;
  for (double ta : ga) {
    for (double tb : gb) {
      Eigen::VectorXd x(lay.size());
      int k = 0;
      if (lay.base) {
        for (int q = 0; q < 3; ++q) x(k++) = logit(base_p1[q]);
      }
      if (lay.tau[0]) x(k++) = ta;
      if (lay.tau[1]) x(k++) = tb;
      if (lay.epsilon) x(k++) = std::log(eps0);
      out.push_back(x);
    }
  }
  return out;
}

inline FitReport run_multistart(const CasePreset& preset, const ParamLayout& lay,
                                const std::array<double, 3>& base_p1, double epsilon,
                                const TuneOptions& opt) {
  auto model = [&](const Unpacked& u) {
    return observe(coupled_state(u.p1, u.tau_ab, u.tau_bc, opt.order), u.epsilon);
  };
  auto residual = [&](const Eigen::VectorXd& x) {
    return normalized_residuals(model(unpack(x, lay, base_p1, epsilon)), preset.target);
  };

  FitReport best;
  best.case_name = preset.name;
  best.cost = std::numeric_limits<double>::infinity();
  bool best_constraints = false;
  const auto starts = start_points(lay, base_p1, epsilon, opt.tau_starts);
  for (std::size_t s = 0; s < starts.size(); ++s) {
    const LmResult lm = levenberg_marquardt(residual, starts[s], opt.max_iters);
    const Unpacked u = unpack(lm.x, lay, base_p1, epsilon);
    const Observables o = model(u);
    const bool cons = preset.constraints_hold(o);
    // Constraint-satisfying fits always beat violating ones; then lower cost;
    // ties keep the earlier start.
    const bool better = (cons && !best_constraints) ||
                        (cons == best_constraints && lm.cost < best.cost);
    if (!better) continue;
    best_constraints = cons;
    best.epsilon = u.epsilon;
    best.base_p1 = u.p1;
    best.tau_ab = u.tau_ab;
    best.tau_bc = u.tau_bc;
    best.cost = lm.cost;
    best.iterations = lm.iterations;
    best.start_index = static_cast<int>(s);
    best.achieved = o;
    best.constraints = cons;
    const Eigen::VectorXd r = normalized_residuals(o, preset.target);
    best.max_residual = r.cwiseAbs().maxCoeff();
    best.converged = best.max_residual <= 1.0;
  }
  return best;
}

/// Excited populations of Gibbs qubits at the target temperatures.
inline std::array<double, 3> target_populations(const CasePreset& preset, double epsilon) {
  std::array<double, 3> p1{};
  for (int q = 0; q < 3; ++q) {
    p1[q] = gibbs_excited_population(preset.target.temps[q], EnergyScale{epsilon});
  }
  return p1;
}

}  // namespace detail

/**
 * Fits (tau_ab, tau_bc), and unless disabled the base populations, so that the
 * coupled state hits the preset's targets. `base_p1` seeds (or, with
 * fit_base = false, fixes) the base populations.
 */
inline FitReport tune_taus(const CasePreset& preset, const std::array<double, 3>& base_p1,
                           double epsilon, const TuneOptions& opt = {}) {
  EnergyScale{epsilon}.validate();
  detail::ParamLayout lay;
  lay.base = opt.fit_base;
  lay.tau = preset.tau_free;
  return detail::run_multistart(preset, lay, base_p1, epsilon, opt);
}

inline FitReport tune_taus(const CasePreset& preset, double epsilon, const TuneOptions& opt = {}) {
  return tune_taus(preset, detail::target_populations(preset, epsilon), epsilon, opt);
}

inline constexpr double kDefaultEpsilonSeed = 4.0;

/**
 * Fits the energy unit (peV per excitation) jointly with the reversal case,
 * where the weak non-adjacent correlation ties it down.
 */
inline FitReport fit_epsilon(double seed = kDefaultEpsilonSeed, const TuneOptions& opt = {}) {
  const CasePreset& rev = preset_by_name("reversal");
  detail::ParamLayout lay;
  lay.epsilon = true;
  return detail::run_multistart(rev, lay, detail::target_populations(rev, seed), seed, opt);
}

/// Full case calibration: tau fit, then variational angles for the base.
inline FitReport calibrate_case(const CasePreset& preset, double epsilon,
                                const TuneOptions& opt = {}) {
  FitReport rep = tune_taus(preset, epsilon, opt);
  const AngleFit af = fit_variational_angles(product_state(rep.base_p1));
  rep.angles = af.angles;
  rep.angle_loss = af.loss;
  // Read back through the circuit preparation.
  rep.achieved = observe(purified_system_state(rep.angles, rep.tau_ab, rep.tau_bc, opt.order),
                         rep.epsilon);
  const Eigen::VectorXd r = normalized_residuals(rep.achieved, preset.target);
  rep.max_residual = r.cwiseAbs().maxCoeff();
  rep.converged = rep.max_residual <= 1.0;
  rep.constraints = preset.constraints_hold(rep.achieved);
  return rep;
}

// ---------------------------------------------------------------------------
// Verification against the reference table

struct CellCheck {
  std::string column;
  double expected = 0.0;
  double achieved = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

/// Compares achieved temperatures, alphas and discords with the table row.
/// Discords are compared by magnitude.
inline std::vector<CellCheck> verify_preset(const CasePreset& preset, const FitReport& rep) {
  static const std::array<const char*, 3> qn = {"T_A", "T_B", "T_C"};
  static const std::array<const char*, 3> an = {"alpha_AB", "alpha_BC", "alpha_AC"};
  static const std::array<const char*, 3> dn = {"D_AB", "D_BC", "D_AC"};
  std::vector<CellCheck> out;
  auto add = [&](const char* name, double want, double got, double tol) {
    out.push_back({name, want, got, tol, std::abs(got - want) <= tol});
  };
  for (int k = 0; k < 3; ++k) add(qn[k], preset.table.temps[k], rep.achieved.temps[k], kTempTol);
  for (int k = 0; k < 3; ++k) add(an[k], preset.table.alphas[k], rep.achieved.alphas[k], kAlphaTol);
  for (int k = 0; k < 3; ++k) {
    add(dn[k], std::abs(preset.table.discords[k]), std::abs(rep.achieved.discords[k]), kDiscordTol);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Persistence: flat "key = value" lines, lists space separated.

inline std::string to_key_values(const FitReport& r) {
  auto list = [](auto begin, auto end) {
    std::string s;
    for (auto it = begin; it != end; ++it) s += (s.empty() ? "" : " ") + format_double(*it);
    return s;
  };
  std::string out;
  out += "case = " + r.case_name + "\n";
  out += "epsilon = " + format_double(r.epsilon) + "\n";
  out += "base_p1 = " + list(r.base_p1.begin(), r.base_p1.end()) + "\n";
  out += "tau_ab = " + format_double(r.tau_ab) + "\n";
  out += "tau_bc = " + format_double(r.tau_bc) + "\n";
  out += "angles = " + list(r.angles.begin(), r.angles.end()) + "\n";
  out += "cost = " + format_double(r.cost) + "\n";
  out += "max_residual = " + format_double(r.max_residual) + "\n";
  out += "angle_loss = " + format_double(r.angle_loss) + "\n";
  out += "iterations = " + std::to_string(r.iterations) + "\n";
  out += "start_index = " + std::to_string(r.start_index) + "\n";
  out += "converged = " + std::string(r.converged ? "true" : "false") + "\n";
  out += "constraints = " + std::string(r.constraints ? "true" : "false") + "\n";
  out += "temps = " + list(r.achieved.temps.begin(), r.achieved.temps.end()) + "\n";
  out += "alphas = " + list(r.achieved.alphas.begin(), r.achieved.alphas.end()) + "\n";
  out += "discords = " + list(r.achieved.discords.begin(), r.achieved.discords.end()) + "\n";
  return out;
}

/// Parses "key = value" lines; '#' starts a comment.
inline std::map<std::string, std::string> parse_key_values(const std::string& text) {
  std::map<std::string, std::string> kv;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  auto trim = [](std::string s) {
    const auto b = s.find_first_not_of(" \t\r");
    const auto e = s.find_last_not_of(" \t\r");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ContractError("line " + std::to_string(lineno) + ": expected 'key = value'");
    }
    kv[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  return kv;
}

inline std::vector<double> parse_double_list(const std::string& s) {
  std::vector<double> out;
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) out.push_back(detail::parse_double(tok));
  return out;
}

inline FitReport from_key_values(const std::string& text) {
  const auto kv = parse_key_values(text);
  auto get = [&](const std::string& k) -> const std::string& {
    const auto it = kv.find(k);
    if (it == kv.end()) throw ContractError("calibration record lacks '" + k + "'");
    return it->second;
  };
  auto get3 = [&](const std::string& k) {
    const auto v = parse_double_list(get(k));
    if (v.size() != 3) throw ContractError("'" + k + "' needs three values");
    return std::array<double, 3>{v[0], v[1], v[2]};
  };
  FitReport r;
  r.case_name = get("case");
  r.epsilon = detail::parse_double(get("epsilon"));
  r.base_p1 = get3("base_p1");
  r.tau_ab = detail::parse_double(get("tau_ab"));
  r.tau_bc = detail::parse_double(get("tau_bc"));
  r.angles = parse_double_list(get("angles"));
  r.cost = detail::parse_double(get("cost"));
  r.max_residual = detail::parse_double(get("max_residual"));
  r.angle_loss = detail::parse_double(get("angle_loss"));
  r.iterations = detail::parse_int(get("iterations"));
  r.start_index = detail::parse_int(get("start_index"));
  r.converged = get("converged") == "true";
  r.constraints = get("constraints") == "true";
  r.achieved.temps = get3("temps");
  r.achieved.alphas = get3("alphas");
  r.achieved.discords = get3("discords");
  return r;
}

}  // namespace spinchain
