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
 * @file thermostate.hpp
 * @brief Locally-Gibbs correlated chain states and their thermodynamic
 *        observables.
 *
 * Units: k_B = 1. Temperatures are carried as kT in the same unit as the
 * excitation energy `EnergyScale::epsilon`, so picking epsilon in peV makes
 * every temperature and energy a peV value.
 *
 * Correlation amplitude convention: for a pair (i, j) with i < j, alpha is
 * the coherence <1_i 0_j| rho |0_i 1_j>. In the little-endian two-qubit
 * matrix (qubit i on bit 0) this is entry (1, 2); its conjugate sits at (2, 1).
 */

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "spinchain/densemat.hpp"

namespace spinchain {

inline constexpr double kTraceTol = 1e-10;
inline constexpr double kPositivityTol = 1e-9;
inline constexpr double kLgcTol = 1e-8;
inline constexpr double kEigenClamp = 1e-14;

struct EnergyScale {
  double epsilon = 1.0;  // h*nu0; kT values share its unit

  void validate() const {
    if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
      throw DomainError("energy scale epsilon must be positive and finite");
    }
  }
};

/// A validated qubit-register state: Hermitian, unit trace, PSD.
class DensityMatrix {
 public:
  explicit DensityMatrix(CMatrix mat) : mat_(std::move(mat)) {
    num_qubits_ = qubit_count(mat_.rows());
    if (mat_.rows() != mat_.cols()) throw ContractError("density matrix must be square");
    if (mat_.rows() > kMaxDim) throw CapacityError("density matrix exceeds 64x64");
    if (!is_hermitian(mat_)) throw ContractError("density matrix is not Hermitian within 1e-10");
    const Complex tr = mat_.trace();
    if (std::abs(tr - 1.0) > kTraceTol) {
      throw ContractError("density matrix trace " + std::to_string(tr.real()) + " is not 1");
    }
    const double lo = herm_eig(mat_).eigenvalues(0);
    if (lo < -kPositivityTol) {
      throw PositivityError("density matrix has negative eigenvalue " + std::to_string(lo), lo);
    }
  }

  int num_qubits() const noexcept { return num_qubits_; }
  const CMatrix& mat() const noexcept { return mat_; }

  DensityMatrix reduce(std::span<const int> keep) const {
    return DensityMatrix(partial_trace(mat_, num_qubits_, keep));
  }
  DensityMatrix reduce(std::initializer_list<int> keep) const {
    return reduce(std::span<const int>(keep.begin(), keep.size()));
  }

 private:
  CMatrix mat_;
  int num_qubits_ = 0;
};

/// N temperatures and N-1 nearest-neighbour correlation amplitudes.
struct ChainSpec {
  int n = 0;
  std::vector<double> temps;    // kT per qubit, epsilon units
  std::vector<Complex> alphas;  // alphas[i] correlates qubits (i, i+1)
  EnergyScale scale;

  void validate() const {
    if (n < 2) throw ContractError("chain needs at least two qubits");
    if (n > kMaxQubits) throw CapacityError("chain longer than 6 qubits");
    if (static_cast<int>(temps.size()) != n) throw ContractError("chain needs n temperatures");
    if (static_cast<int>(alphas.size()) != n - 1) {
      throw ContractError("chain needs n-1 correlation amplitudes");
    }
    for (double t : temps) {
      if (!(t > 0.0)) throw DomainError("chain temperatures must be positive");
    }
    scale.validate();
  }
};

struct PairObservables {
  Complex alpha;
  double mutual_info = 0.0;  // nats
  double gqd = 0.0;
};

/// kT readback. Infinite temperature and zero temperature are flagged rather
/// than encoded as inf/0 so callers can't mistake them for fitted values.
struct Temperature {
  enum class Kind { finite, infinite, zero };
  Kind kind = Kind::finite;
  double kT = 0.0;  // signed; negative means population inversion

  bool is_finite() const { return kind == Kind::finite; }
  double beta() const {
    switch (kind) {
      case Kind::finite: return 1.0 / kT;
      case Kind::infinite: return 0.0;
      case Kind::zero: return std::signbit(kT) ? -std::numeric_limits<double>::infinity()
                                               : std::numeric_limits<double>::infinity();
    }
    return 0.0;
  }
};

/// Single-qubit H = (epsilon/2)(1 - sigma_z) = diag(0, epsilon).
inline CMatrix local_hamiltonian(const EnergyScale& scale) {
  scale.validate();
  CMatrix h = CMatrix::Zero(2, 2);
  h(1, 1) = scale.epsilon;
  return h;
}

/// Excited-state population of a Gibbs qubit at temperature kT.
inline double gibbs_excited_population(double kT, const EnergyScale& scale) {
  if (!(kT > 0.0)) throw DomainError("gibbs_qubit: kT must be positive");
  scale.validate();
  const double x = scale.epsilon / kT;
  return 1.0 / (1.0 + std::exp(x));
}

inline DensityMatrix gibbs_qubit(double kT, const EnergyScale& scale) {
  const double p1 = gibbs_excited_population(kT, scale);
  CMatrix m = CMatrix::Zero(2, 2);
  m(0, 0) = 1.0 - p1;
  m(1, 1) = p1;
  return DensityMatrix(std::move(m));
}

/// Diagonal qubit state with the given excited population.
inline DensityMatrix diagonal_qubit(double p1) {
  if (!(p1 >= 0.0 && p1 <= 1.0)) throw DomainError("population outside [0,1]");
  CMatrix m = CMatrix::Zero(2, 2);
  m(0, 0) = 1.0 - p1;
  m(1, 1) = p1;
  return DensityMatrix(std::move(m));
}

namespace detail {

inline std::pair<double, double> diagonal_populations(const DensityMatrix& rho, const char* who) {
  if (rho.num_qubits() != 1) throw ContractError(std::string(who) + ": expected a single qubit");
  if (std::abs(rho.mat()(0, 1)) > kLgcTol) {
    throw ContractError(std::string(who) + ": expected a diagonal qubit state");
  }
  return {rho.mat()(0, 0).real(), rho.mat()(1, 1).real()};
}

}  // namespace detail

/// Largest |alpha| keeping rho_i ⊗ rho_j + chi(alpha) positive semidefinite.
inline double alpha_max(const DensityMatrix& rho_i, const DensityMatrix& rho_j) {
  const auto [p0, p1] = detail::diagonal_populations(rho_i, "alpha_max");
  const auto [q0, q1] = detail::diagonal_populations(rho_j, "alpha_max");
  return std::sqrt(std::max(0.0, p0 * q1 * p1 * q0));
}

/// rho_i ⊗ rho_j + chi without positivity checks (qubit i on bit 0).
inline CMatrix pair_matrix(const CMatrix& rho_i, const CMatrix& rho_j, Complex alpha) {
  CMatrix m = kron(rho_j, rho_i);
  m(1, 2) += alpha;
  m(2, 1) += std::conj(alpha);
  return m;
}

inline DensityMatrix pair_state(const DensityMatrix& rho_i, const DensityMatrix& rho_j,
                                Complex alpha) {
  const double bound = alpha_max(rho_i, rho_j);
  if (std::abs(alpha) > bound * (1.0 + 1e-9) + 1e-15) {
    throw PositivityError("pair_state: |alpha| = " + std::to_string(std::abs(alpha)) +
                              " exceeds admissible bound " + std::to_string(bound),
                          bound);
  }
  return DensityMatrix(pair_matrix(rho_i.mat(), rho_j.mat(), alpha));
}

/**
 * Correlated chain state: the product of local Gibbs states plus one chi term
 * per adjacent pair, each dressed with the Gibbs states of the other qubits.
 * This is the sum-over-pairs construction with the (N-2)-fold product
 * subtracted, written in its collapsed form.
 */
inline DensityMatrix chain_state(const ChainSpec& spec) {
  spec.validate();
  std::vector<CMatrix> local;
  local.reserve(spec.n);
  for (double t : spec.temps) local.push_back(gibbs_qubit(t, spec.scale).mat());

  auto product_except = [&](int skip_lo, const CMatrix& pair_block) {
    CMatrix out = CMatrix::Identity(1, 1);
    for (int q = 0; q < spec.n; ++q) {
      if (q == skip_lo + 1) continue;
      out = kron(q == skip_lo ? pair_block : local[q], out);
    }
    return out;
  };

  CMatrix rho = CMatrix::Identity(1, 1);
  for (int q = 0; q < spec.n; ++q) rho = kron(local[q], rho);

  for (int i = 0; i + 1 < spec.n; ++i) {
    if (spec.alphas[i] == Complex(0.0)) continue;
    CMatrix chi = CMatrix::Zero(4, 4);
    chi(1, 2) = spec.alphas[i];
    chi(2, 1) = std::conj(spec.alphas[i]);
    rho += product_except(i, chi);
  }

  const double lo = herm_eig(rho).eigenvalues(0);
  if (lo < -kPositivityTol) {
    throw PositivityError("chain_state: correlations violate positivity (eigenvalue " +
                              std::to_string(lo) + ")",
                          lo);
  }
  return DensityMatrix(std::move(rho));
}

inline double excited_population(const DensityMatrix& rho, int qubit) {
  if (qubit < 0 || qubit >= rho.num_qubits()) throw IndexError("qubit index out of range");
  const CMatrix r = partial_trace(rho.mat(), rho.num_qubits(), {qubit});
  return r(1, 1).real();
}

/// U^i = Tr[rho_i H^i] = epsilon * p1(i).
inline double energy(const DensityMatrix& rho, int qubit, const EnergyScale& scale) {
  scale.validate();
  return scale.epsilon * excited_population(rho, qubit);
}

/// Largest off-diagonal magnitude of the single-qubit reduction.
inline double local_coherence(const DensityMatrix& rho, int qubit) {
  if (qubit < 0 || qubit >= rho.num_qubits()) throw IndexError("qubit index out of range");
  const CMatrix r = partial_trace(rho.mat(), rho.num_qubits(), {qubit});
  return std::abs(r(0, 1));
}

inline Temperature temperature(const DensityMatrix& rho, int qubit, const EnergyScale& scale) {
  scale.validate();
  if (qubit < 0 || qubit >= rho.num_qubits()) throw IndexError("qubit index out of range");
  const CMatrix r = partial_trace(rho.mat(), rho.num_qubits(), {qubit});
  if (std::abs(r(0, 1)) > kLgcTol) {
    throw LgcError("qubit " + std::to_string(qubit) + " is not in a local Gibbs state (|offdiag| = " +
                   std::to_string(std::abs(r(0, 1))) + ")");
  }
  const double p0 = r(0, 0).real();
  const double p1 = r(1, 1).real();
  if (std::abs(p0 - p1) < 1e-12) return {Temperature::Kind::infinite, 0.0};
  if (p1 <= 0.0) return {Temperature::Kind::zero, 0.0};
  if (p0 <= 0.0) return {Temperature::Kind::zero, -0.0};
  return {Temperature::Kind::finite, scale.epsilon / std::log(p0 / p1)};
}

/// -Σ λ ln λ, eigenvalues clamped at 1e-14.
inline double von_neumann_entropy(const CMatrix& rho) {
  const RVector ev = herm_eig(rho).eigenvalues;
  double s = 0.0;
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    if (ev(i) > kEigenClamp) s -= ev(i) * std::log(ev(i));
  }
  return s;
}

inline double von_neumann_entropy(const DensityMatrix& rho) {
  return von_neumann_entropy(rho.mat());
}

/**
 * S(rho||sigma) = Tr[rho ln rho] - Tr[rho ln sigma]. Returns +infinity when
 * rho has weight on sigma's kernel.
 */
inline double relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.num_qubits() != sigma.num_qubits()) {
    throw ContractError("relative_entropy: dimension mismatch");
  }
  const EigDecomposition es = herm_eig(sigma.mat());
  double cross = 0.0;
  for (Eigen::Index k = 0; k < es.eigenvalues.size(); ++k) {
    const CVector v = es.eigenvectors.col(k);
    const double w = (v.adjoint() * rho.mat() * v)(0, 0).real();
    if (es.eigenvalues(k) <= kEigenClamp) {
      if (w > kEigenClamp) return std::numeric_limits<double>::infinity();
      continue;
    }
    cross += w * std::log(es.eigenvalues(k));
  }
  return -von_neumann_entropy(rho) - cross;
}

/// I(A:B) = S(A) + S(B) - S(AB); the two parts must partition the register.
inline double mutual_information(const DensityMatrix& rho, std::span<const int> part_a,
                                 std::span<const int> part_b) {
  const int n = rho.num_qubits();
  std::vector<int> seen(n, 0);
  for (int q : part_a) {
    if (q < 0 || q >= n) throw IndexError("mutual_information: qubit out of range");
    ++seen[q];
  }
  for (int q : part_b) {
    if (q < 0 || q >= n) throw IndexError("mutual_information: qubit out of range");
    ++seen[q];
  }
  for (int q = 0; q < n; ++q) {
    if (seen[q] != 1) {
      throw ContractError("mutual_information: parts must be disjoint and cover the register");
    }
  }
  std::vector<int> a(part_a.begin(), part_a.end()), b(part_b.begin(), part_b.end());
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  const double sa = von_neumann_entropy(partial_trace(rho.mat(), n, a));
  const double sb = von_neumann_entropy(partial_trace(rho.mat(), n, b));
  return sa + sb - von_neumann_entropy(rho.mat());
}

inline double mutual_information(const DensityMatrix& rho, std::initializer_list<int> part_a,
                                  std::initializer_list<int> part_b) {
  return mutual_information(rho, std::span<const int>(part_a.begin(), part_a.size()),
                            std::span<const int>(part_b.begin(), part_b.size()));
}

/**
 * Geometric quantum discord of a two-qubit state, measured on qubit 0, in the
 * normalization where a Bell state scores 1:
 *   D = ½ (‖x‖² + ‖T‖²_F − k_max),
 * x the Bloch vector of qubit 0, T_ij = Tr[rho σ_i ⊗ σ_j], k_max the largest
 * eigenvalue of x xᵀ + T Tᵀ. For a chi-type pair state D = 4|alpha|² as
 * soon as the populations are polarized enough.
 */
inline double gqd(const DensityMatrix& rho_pair) {
  if (rho_pair.num_qubits() != 2) throw ContractError("gqd: expected a two-qubit state");
  const std::array<const CMatrix*, 3> sig = {&pauli::X(), &pauli::Y(), &pauli::Z()};
  Eigen::Vector3d x;
  Eigen::Matrix3d t;
  for (int a = 0; a < 3; ++a) {
    x(a) = (rho_pair.mat() * kron(pauli::I(), *sig[a])).trace().real();
    for (int b = 0; b < 3; ++b) {
      t(a, b) = (rho_pair.mat() * kron(*sig[b], *sig[a])).trace().real();
    }
  }
  const Eigen::Matrix3d k = x * x.transpose() + t * t.transpose();
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> solver(k, Eigen::EigenvaluesOnly);
  const double kmax = solver.eigenvalues().maxCoeff();
  return 0.5 * (x.squaredNorm() + t.squaredNorm() - kmax);
}

/// alpha of pair (i, j), i < j, read from the reduced two-qubit state.
inline Complex pair_alpha(const DensityMatrix& rho, int i, int j) {
  if (i >= j) throw ContractError("pair_alpha: expected i < j");
  const CMatrix r = partial_trace(rho.mat(), rho.num_qubits(), {i, j});
  return r(1, 2);
}

struct PairAlpha {
  int i = 0;
  int j = 0;
  Complex alpha;
};

struct CorrelationReadback {
  std::vector<Complex> adjacent;       // (0,1), (1,2), ...
  std::vector<PairAlpha> nonadjacent;  // lexicographic (i, j), j > i + 1
};

inline CorrelationReadback extract_alphas(const DensityMatrix& rho) {
  CorrelationReadback out;
  const int n = rho.num_qubits();
  for (int i = 0; i + 1 < n; ++i) out.adjacent.push_back(pair_alpha(rho, i, i + 1));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 2; j < n; ++j) out.nonadjacent.push_back({i, j, pair_alpha(rho, i, j)});
  }
  return out;
}

/// Pair order used by every per-pair table: adjacent first, then the rest.
inline std::vector<std::pair<int, int>> chain_pairs(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i + 1 < n; ++i) pairs.emplace_back(i, i + 1);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 2; j < n; ++j) pairs.emplace_back(i, j);
  }
  return pairs;
}

inline PairObservables pair_observables(const DensityMatrix& rho, int i, int j) {
  const DensityMatrix pair = rho.reduce({i, j});
  return {pair.mat()(1, 2), mutual_information(pair, {0}, {1}), gqd(pair)};
}

}  // namespace spinchain
