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
 * @file densemat.hpp
 * @brief Dense complex linear algebra for qubit registers of up to six qubits.
 *
 * Basis ordering is little-endian throughout the library: qubit q is bit q
 * of the basis index, so qubit 0 is the least significant bit. For a
 * Kronecker product kron(a, b) the right factor therefore occupies the low
 * qubits.
 *
 * Matrix functions are evaluated spectrally (V f(Λ) V†). Every matrix the
 * library exponentiates or logs is Hermitian, so this is exact up to the
 * accuracy of the eigensolver.
 */

#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <span>
#include <string>
#include <vector>

#include "spinchain/errors.hpp"

namespace spinchain {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;

inline constexpr int kMaxDim = 64;
inline constexpr int kMaxQubits = 6;
inline constexpr double kHermitianTol = 1e-10;

inline bool is_power_of_two(Eigen::Index n) { return n > 0 && (n & (n - 1)) == 0; }

/// Number of qubits for a 2^n dimension; throws ContractError otherwise.
inline int qubit_count(Eigen::Index dim) {
  if (!is_power_of_two(dim)) {
    throw ContractError("dimension " + std::to_string(dim) + " is not a power of two");
  }
  int n = 0;
  while ((Eigen::Index{1} << n) < dim) ++n;
  return n;
}

namespace pauli {

inline const CMatrix& I() {
  static const CMatrix m = CMatrix::Identity(2, 2);
  return m;
}
inline const CMatrix& X() {
  static const CMatrix m = (CMatrix(2, 2) << 0, 1, 1, 0).finished();
  return m;
}
inline const CMatrix& Y() {
  static const CMatrix m = (CMatrix(2, 2) << 0, Complex(0, -1), Complex(0, 1), 0).finished();
  return m;
}
inline const CMatrix& Z() {
  static const CMatrix m = (CMatrix(2, 2) << 1, 0, 0, -1).finished();
  return m;
}

/// Single-qubit Pauli from its letter ('I', 'X', 'Y', 'Z').
inline const CMatrix& from_letter(char c) {
  switch (c) {
    case 'I': return I();
    case 'X': return X();
    case 'Y': return Y();
    case 'Z': return Z();
    default: throw ContractError(std::string("unknown Pauli letter '") + c + "'");
  }
}

}  // namespace pauli

/// Kronecker product: entry (i*b.dim + k, j*b.dim + l) = a(i,j) * b(k,l).
inline CMatrix kron(const CMatrix& a, const CMatrix& b) {
  const Eigen::Index rows = a.rows() * b.rows();
  const Eigen::Index cols = a.cols() * b.cols();
  if (rows > kMaxDim || cols > kMaxDim) {
    throw CapacityError("kron result " + std::to_string(rows) + "x" + std::to_string(cols) +
                        " exceeds " + std::to_string(kMaxDim));
  }
  CMatrix out(rows, cols);
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

/// Embeds a k-qubit operator acting on `qubits` (bit t of `op` ↔ qubits[t])
/// into an n-qubit register, identity elsewhere.
inline CMatrix embed(const CMatrix& op, std::span<const int> qubits, int num_qubits) {
  const int k = static_cast<int>(qubits.size());
  if (op.rows() != (Eigen::Index{1} << k) || op.cols() != op.rows()) {
    throw ContractError("embed: operator size does not match qubit list");
  }
  if (num_qubits > kMaxQubits) throw CapacityError("embed: more than 6 qubits");
  for (int t = 0; t < k; ++t) {
    if (qubits[t] < 0 || qubits[t] >= num_qubits) throw IndexError("embed: qubit out of range");
    for (int u = 0; u < t; ++u) {
      if (qubits[u] == qubits[t]) throw ContractError("embed: repeated qubit");
    }
  }
  const Eigen::Index dim = Eigen::Index{1} << num_qubits;
  Eigen::Index mask = 0;
  for (int q : qubits) mask |= Eigen::Index{1} << q;
  auto local = [&](Eigen::Index idx) {
    Eigen::Index s = 0;
    for (int t = 0; t < k; ++t) s |= ((idx >> qubits[t]) & 1) << t;
    return s;
  };
  CMatrix out = CMatrix::Zero(dim, dim);
  for (Eigen::Index r = 0; r < dim; ++r) {
    for (Eigen::Index c = 0; c < dim; ++c) {
      if ((r & ~mask) != (c & ~mask)) continue;
      out(r, c) = op(local(r), local(c));
    }
  }
  return out;
}

inline CMatrix embed(const CMatrix& op, std::initializer_list<int> qubits, int num_qubits) {
  return embed(op, std::span<const int>(qubits.begin(), qubits.size()), num_qubits);
}

/// Tensor product of single-qubit Paulis; letter t of `word` acts on qubit t.
inline CMatrix pauli_string(const std::string& word) {
  CMatrix out = CMatrix::Identity(1, 1);
  for (char c : word) out = kron(pauli::from_letter(c), out);
  return out;
}

/**
 * Reduced state on `keep` (strictly increasing). Kept qubit keep[t] becomes
 * bit t of the result.
 */
inline CMatrix partial_trace(const CMatrix& m, int num_qubits, std::span<const int> keep) {
  const Eigen::Index dim = Eigen::Index{1} << num_qubits;
  if (m.rows() != dim || m.cols() != dim) {
    throw ContractError("partial_trace: matrix is not 2^num_qubits square");
  }
  if (keep.empty()) throw ContractError("partial_trace: keep set is empty");
  for (std::size_t t = 0; t < keep.size(); ++t) {
    if (keep[t] < 0 || keep[t] >= num_qubits) {
      throw IndexError("partial_trace: qubit " + std::to_string(keep[t]) + " out of range");
    }
    if (t > 0 && keep[t] <= keep[t - 1]) {
      throw ContractError("partial_trace: keep set must be strictly increasing");
    }
  }
  const int k = static_cast<int>(keep.size());
  std::vector<int> traced;
  for (int q = 0; q < num_qubits; ++q) {
    if (std::find(keep.begin(), keep.end(), q) == keep.end()) traced.push_back(q);
  }
  const Eigen::Index out_dim = Eigen::Index{1} << k;
  const Eigen::Index env_dim = Eigen::Index{1} << traced.size();
  auto scatter = [](Eigen::Index bits, std::span<const int> where) {
    Eigen::Index idx = 0;
    for (std::size_t t = 0; t < where.size(); ++t) idx |= ((bits >> t) & 1) << where[t];
    return idx;
  };
  std::vector<Eigen::Index> kept_idx(out_dim), env_idx(env_dim);
  for (Eigen::Index s = 0; s < out_dim; ++s) kept_idx[s] = scatter(s, keep);
  for (Eigen::Index e = 0; e < env_dim; ++e) env_idx[e] = scatter(e, traced);

  CMatrix out = CMatrix::Zero(out_dim, out_dim);
  for (Eigen::Index r = 0; r < out_dim; ++r) {
    for (Eigen::Index c = 0; c < out_dim; ++c) {
      Complex acc = 0;
      for (Eigen::Index e = 0; e < env_dim; ++e) {
        acc += m(kept_idx[r] | env_idx[e], kept_idx[c] | env_idx[e]);
      }
      out(r, c) = acc;
    }
  }
  return out;
}

inline CMatrix partial_trace(const CMatrix& m, int num_qubits, std::initializer_list<int> keep) {
  return partial_trace(m, num_qubits, std::span<const int>(keep.begin(), keep.size()));
}

inline bool is_hermitian(const CMatrix& m, double tol = kHermitianTol) {
  if (m.rows() != m.cols()) return false;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = i; j < m.cols(); ++j) {
      if (std::abs(m(i, j) - std::conj(m(j, i))) > tol) return false;
    }
  }
  return true;
}

struct EigDecomposition {
  RVector eigenvalues;   // ascending
  CMatrix eigenvectors;  // unitary, columns are eigenvectors
};

/// Hermitian eigendecomposition. The input is symmetrized before solving.
inline EigDecomposition herm_eig(const CMatrix& m) {
  if (m.rows() != m.cols()) throw ContractError("herm_eig: matrix is not square");
  if (m.rows() > kMaxDim) throw CapacityError("herm_eig: dimension exceeds 64");
  if (!is_hermitian(m)) throw ContractError("herm_eig: matrix is not Hermitian within 1e-10");
  const CMatrix sym = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(sym);
  if (solver.info() != Eigen::Success) throw ContractError("herm_eig: eigensolver failed");
  return {solver.eigenvalues(), solver.eigenvectors()};
}

/// V f(Λ) V† from a precomputed decomposition.
template <typename F>
CMatrix func_herm(const EigDecomposition& eig, F&& f) {
  const Eigen::Index n = eig.eigenvalues.size();
  CVector fv(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const Complex v = f(eig.eigenvalues(i));
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw DomainError("func_herm: function undefined at eigenvalue " +
                        std::to_string(eig.eigenvalues(i)));
    }
    fv(i) = v;
  }
  return eig.eigenvectors * fv.asDiagonal() * eig.eigenvectors.adjoint();
}

/// Spectral matrix function of a Hermitian matrix; f maps double -> Complex.
template <typename F>
CMatrix func_herm(const CMatrix& m, F&& f) {
  return func_herm(herm_eig(m), std::forward<F>(f));
}

/// exp(-i t m) for Hermitian m.
inline CMatrix expm_i(const CMatrix& m, double t) {
  return func_herm(m, [t](double x) { return std::exp(Complex(0, -t * x)); });
}

inline CMatrix commutator(const CMatrix& a, const CMatrix& b) { return a * b - b * a; }

inline double frobenius_distance(const CMatrix& a, const CMatrix& b) { return (a - b).norm(); }

/**
 * ‖a·e^{iφ} − b‖_F with φ chosen so that a and b agree in phase on b's
 * largest-magnitude entry.
 */
inline double phase_aligned_distance(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw ContractError("phase_aligned_distance: shape mismatch");
  }
  Eigen::Index r = 0, c = 0;
  b.cwiseAbs().maxCoeff(&r, &c);
  Complex phase = 1;
  if (std::abs(a(r, c)) > 0 && std::abs(b(r, c)) > 0) {
    phase = (b(r, c) / std::abs(b(r, c))) / (a(r, c) / std::abs(a(r, c)));
  }
  return (a * phase - b).norm();
}

}  // namespace spinchain
