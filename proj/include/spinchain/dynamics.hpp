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
 * @file dynamics.hpp
 * @brief Dzyaloshinskii–Moriya chain Hamiltonians, exact propagation and
 *        heat-flow trajectories.
 *
 * hbar = 1 and the DM prefactor is folded into a single `coupling` J, so tau
 * is measured in units of 1/J.
 */

#pragma once

#include <cmath>
#include <numbers>
#include <utility>
#include <vector>

#include "spinchain/thermostate.hpp"

namespace spinchain {

/// J (X_i Y_j - Y_i X_j) on qubits (i, j) of an n-qubit register.
inline CMatrix dm_pair_term(int n, int i, int j, double coupling) {
  const CMatrix xy = kron(pauli::Y(), pauli::X());  // X on bit 0, Y on bit 1
  const CMatrix yx = kron(pauli::X(), pauli::Y());
  return coupling * embed(CMatrix(xy - yx), {i, j}, n);
}

class DMChainHamiltonian {
 public:
  DMChainHamiltonian(int n, double coupling) : n_(n), coupling_(coupling) {
    if (n < 2) throw ContractError("DM chain needs at least two qubits");
    if (n > kMaxQubits) throw CapacityError("DM chain longer than 6 qubits");
    const Eigen::Index dim = Eigen::Index{1} << n;
    mat_ = CMatrix::Zero(dim, dim);
    for (int i = 0; i + 1 < n; ++i) mat_ += dm_pair_term(n, i, i + 1, coupling);
    eig_ = herm_eig(mat_);
  }

  int n() const noexcept { return n_; }
  double coupling() const noexcept { return coupling_; }
  const CMatrix& mat() const noexcept { return mat_; }
  const EigDecomposition& eig() const noexcept { return eig_; }

 private:
  int n_;
  double coupling_;
  CMatrix mat_;
  EigDecomposition eig_;
};

inline DMChainHamiltonian dm_pair_hamiltonian(double coupling) {
  return DMChainHamiltonian(2, coupling);
}

inline DMChainHamiltonian dm_chain_hamiltonian(int n, double coupling) {
  return DMChainHamiltonian(n, coupling);
}

/// Σ_i H^i for an n-qubit register.
inline CMatrix total_local_hamiltonian(int n, const EnergyScale& scale) {
  const CMatrix h = local_hamiltonian(scale);
  const Eigen::Index dim = Eigen::Index{1} << n;
  CMatrix out = CMatrix::Zero(dim, dim);
  for (int q = 0; q < n; ++q) out += embed(h, {q}, n);
  return out;
}

/// exp(-i tau H).
inline CMatrix propagator(const DMChainHamiltonian& h, double tau) {
  return func_herm(h.eig(), [tau](double x) { return std::exp(Complex(0, -tau * x)); });
}

inline DensityMatrix evolve(const DensityMatrix& rho0, const DMChainHamiltonian& h, double tau) {
  if (rho0.num_qubits() != h.n()) throw ContractError("evolve: state and Hamiltonian sizes differ");
  const CMatrix u = propagator(h, tau);
  CMatrix out = u * rho0.mat() * u.adjoint();
  return DensityMatrix(0.5 * (out + out.adjoint()));
}

inline std::vector<double> uniform_grid(double start, double stop, int points) {
  if (points < 2) throw ContractError("tau grid needs at least two points");
  std::vector<double> g(points);
  const double step = (stop - start) / (points - 1);
  for (int k = 0; k < points; ++k) g[k] = start + step * k;
  g.back() = stop;
  return g;
}

/// 101 points on [0, pi].
inline std::vector<double> default_tau_grid() { return uniform_grid(0.0, std::numbers::pi, 101); }

struct Trajectory {
  int n = 0;
  std::vector<double> taus;
  std::vector<std::pair<int, int>> pairs;  // chain_pairs(n)
  // Row-major by tau.
  std::vector<std::vector<double>> energies;
  std::vector<std::vector<double>> heats;
  std::vector<std::vector<Temperature>> temperatures;
  std::vector<std::vector<double>> mutual_info;  // per pair
  std::vector<std::vector<double>> discord;      // per pair
  std::vector<std::vector<Complex>> alphas;      // per pair
  // Diagnostics.
  std::vector<double> max_local_offdiag;  // largest single-qubit coherence
  std::vector<double> max_offchi;         // largest pair coherence off the chi slots
  std::vector<double> spectrum_drift;     // max |λ_k(τ) - λ_k(0)|

  std::size_t rows() const { return taus.size(); }
};

namespace detail {

inline double offchi_coherence(const CMatrix& pair) {
  double m = 0.0;
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      if (r == c || (r == 1 && c == 2) || (r == 2 && c == 1)) continue;
      m = std::max(m, std::abs(pair(r, c)));
    }
  }
  return m;
}

}  // namespace detail

/// Observables of a single state, appended as one trajectory row.
inline void append_row(Trajectory& traj, double tau, const DensityMatrix& rho,
                       const RVector& initial_spectrum, const EnergyScale& scale) {
  const int n = rho.num_qubits();
  std::vector<double> u(n);
  std::vector<Temperature> t(n);
  double lgc = 0.0;
  for (int q = 0; q < n; ++q) {
    u[q] = energy(rho, q, scale);
    lgc = std::max(lgc, local_coherence(rho, q));
    t[q] = temperature(rho, q, scale);
  }
  std::vector<double> mi, dd;
  std::vector<Complex> al;
  double offchi = 0.0;
  for (auto [i, j] : traj.pairs) {
    const DensityMatrix pair = rho.reduce({i, j});
    al.push_back(pair.mat()(1, 2));
    mi.push_back(mutual_information(pair, {0}, {1}));
    dd.push_back(gqd(pair));
    offchi = std::max(offchi, detail::offchi_coherence(pair.mat()));
  }
  std::vector<double> q(n);
  for (int k = 0; k < n; ++k) q[k] = traj.energies.empty() ? 0.0 : u[k] - traj.energies.front()[k];
  const RVector spec = herm_eig(rho.mat()).eigenvalues;

  traj.taus.push_back(tau);
  traj.energies.push_back(std::move(u));
  traj.heats.push_back(std::move(q));
  traj.temperatures.push_back(std::move(t));
  traj.mutual_info.push_back(std::move(mi));
  traj.discord.push_back(std::move(dd));
  traj.alphas.push_back(std::move(al));
  traj.max_local_offdiag.push_back(lgc);
  traj.max_offchi.push_back(offchi);
  traj.spectrum_drift.push_back((spec - initial_spectrum).cwiseAbs().maxCoeff());
}

inline void check_grid(const std::vector<double>& taus) {
  if (taus.empty()) throw ContractError("tau grid is empty");
  for (std::size_t k = 1; k < taus.size(); ++k) {
    if (!(taus[k] > taus[k - 1])) throw ContractError("tau grid must be strictly ascending");
  }
}

/// Evolves rho0 over the grid. Heats are relative to the first grid point.
inline Trajectory sweep(const DensityMatrix& rho0, const DMChainHamiltonian& h,
                        const std::vector<double>& taus, const EnergyScale& scale = {}) {
  check_grid(taus);
  if (rho0.num_qubits() != h.n()) throw ContractError("sweep: state and Hamiltonian sizes differ");
  Trajectory traj;
  traj.n = h.n();
  traj.pairs = chain_pairs(h.n());
  const RVector spec0 = herm_eig(rho0.mat()).eigenvalues;
  for (double tau : taus) append_row(traj, tau, evolve(rho0, h, tau), spec0, scale);
  return traj;
}

/**
 * Initial heat rate (U^i(step) - U^i(0)) / step. A one-sided difference is
 * used on purpose: without correlations U^i(τ) is even in τ, so a central
 * difference would read exactly zero where the flow is quadratic.
 */
inline std::vector<double> initial_heat_rates(const DensityMatrix& rho0,
                                              const DMChainHamiltonian& h, double step,
                                              const EnergyScale& scale = {}) {
  if (!(step > 0.0)) throw ContractError("finite-difference step must be positive");
  const DensityMatrix later = evolve(rho0, h, step);
  std::vector<double> rates(rho0.num_qubits());
  for (int q = 0; q < rho0.num_qubits(); ++q) {
    rates[q] = (energy(later, q, scale) - energy(rho0, q, scale)) / step;
  }
  return rates;
}

struct ClausiusRecord {
  double tau = 0.0;
  double heat_j = 0.0;        // Q_j
  double beta_gap = 0.0;      // β_j - β_i
  double lhs = 0.0;           // Q_j (β_j - β_i)
  double delta_info = 0.0;    // ΔI(i:j)
  double margin = 0.0;        // lhs - ΔI
};

struct ClausiusReport {
  bool advisory = false;  // set for chains longer than two qubits
  std::vector<ClausiusRecord> records;
};

/// Q_j(β_j - β_i) against ΔI(i:j) along a trajectory, β taken at the first row.
inline ClausiusReport clausius_check(const Trajectory& traj, std::pair<int, int> pair) {
  const auto [i, j] = pair;
  if (j != i + 1 || i < 0 || j >= traj.n) throw ContractError("clausius_check: pair must be adjacent");
  if (traj.rows() == 0) throw ContractError("clausius_check: empty trajectory");
  const double bi = traj.temperatures.front()[i].beta();
  const double bj = traj.temperatures.front()[j].beta();
  if (!std::isfinite(bi) || !std::isfinite(bj)) {
    throw DomainError("clausius_check: zero-temperature qubit has no finite beta");
  }
  const std::size_t p = static_cast<std::size_t>(i);  // adjacent pairs come first
  ClausiusReport rep;
  rep.advisory = traj.n > 2;
  for (std::size_t k = 0; k < traj.rows(); ++k) {
    ClausiusRecord r;
    r.tau = traj.taus[k];
    r.heat_j = traj.heats[k][j];
    r.beta_gap = bj - bi;
    r.lhs = r.heat_j * r.beta_gap;
    r.delta_info = traj.mutual_info[k][p] - traj.mutual_info.front()[p];
    r.margin = r.lhs - r.delta_info;
    rep.records.push_back(r);
  }
  return rep;
}

struct NonadjacentRecord {
  double tau = 0.0;
  double alpha_mag = 0.0;  // largest non-adjacent |alpha|
  double offchi = 0.0;
};

inline std::vector<NonadjacentRecord> nonadjacent_growth(const Trajectory& traj) {
  const std::size_t adjacent = static_cast<std::size_t>(traj.n - 1);
  std::vector<NonadjacentRecord> out;
  for (std::size_t k = 0; k < traj.rows(); ++k) {
    NonadjacentRecord r{traj.taus[k], 0.0, traj.max_offchi[k]};
    for (std::size_t p = adjacent; p < traj.pairs.size(); ++p) {
      r.alpha_mag = std::max(r.alpha_mag, std::abs(traj.alphas[k][p]));
    }
    out.push_back(r);
  }
  return out;
}

}  // namespace spinchain
