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
 * @file qcircuit.hpp
 * @brief Gate lists, two small simulators, and the circuit constructions for
 *        the DM chain: the two-qubit block, variational preparation, coupling
 *        preparation, the Cartan-factored three-qubit propagator and a Trotter
 *        baseline.
 *
 * Rotations follow R_P(θ) = exp(-iθP/2). CNOT operands are (control, target).
 * Qubit q is bit q of the basis index.
 */

#pragma once

#include <array>
#include <charconv>
#include <cmath>
#include <limits>
#include <numbers>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "spinchain/dynamics.hpp"

namespace spinchain {

enum class GateKind { RX, RY, RZ, H, S, Sdg, X, CNOT, SWAP };

inline bool is_rotation(GateKind k) {
  return k == GateKind::RX || k == GateKind::RY || k == GateKind::RZ;
}
inline bool is_two_qubit(GateKind k) { return k == GateKind::CNOT || k == GateKind::SWAP; }

inline std::string_view gate_name(GateKind k) {
  switch (k) {
    case GateKind::RX: return "RX";
    case GateKind::RY: return "RY";
    case GateKind::RZ: return "RZ";
    case GateKind::H: return "H";
    case GateKind::S: return "S";
    case GateKind::Sdg: return "Sdg";
    case GateKind::X: return "X";
    case GateKind::CNOT: return "CNOT";
    case GateKind::SWAP: return "SWAP";
  }
  return "?";
}

inline GateKind gate_kind_from_name(std::string_view name) {
  for (GateKind k : {GateKind::RX, GateKind::RY, GateKind::RZ, GateKind::H, GateKind::S,
                     GateKind::Sdg, GateKind::X, GateKind::CNOT, GateKind::SWAP}) {
    if (gate_name(k) == name) return k;
  }
  throw ContractError("unknown gate kind '" + std::string(name) + "'");
}

struct Gate {
  GateKind kind = GateKind::X;
  int q0 = 0;
  int q1 = -1;  // target for CNOT, partner for SWAP
  double angle = 0.0;

  bool operator==(const Gate&) const = default;
};

/// 2x2 matrix of a single-qubit gate.
inline CMatrix gate_matrix(const Gate& g) {
  const Complex i(0, 1);
  const double c = std::cos(g.angle / 2), s = std::sin(g.angle / 2);
  CMatrix m(2, 2);
  switch (g.kind) {
    case GateKind::RX: m << c, -i * s, -i * s, c; break;
    case GateKind::RY: m << c, -s, s, c; break;
    case GateKind::RZ: m << std::exp(-i * (g.angle / 2)), 0, 0, std::exp(i * (g.angle / 2)); break;
    case GateKind::H: m << 1, 1, 1, -1; m *= std::numbers::sqrt2 / 2; break;
    case GateKind::S: m << 1, 0, 0, i; break;
    case GateKind::Sdg: m << 1, 0, 0, -i; break;
    case GateKind::X: m << 0, 1, 1, 0; break;
    default: throw ContractError("gate_matrix: not a single-qubit gate");
  }
  return m;
}

class Circuit {
 public:
  explicit Circuit(int num_qubits) : num_qubits_(num_qubits) {
    if (num_qubits < 1) throw ContractError("circuit needs at least one qubit");
    if (num_qubits > kMaxQubits) throw CapacityError("circuit wider than 6 qubits");
    remap_.resize(num_qubits);
    for (int q = 0; q < num_qubits; ++q) remap_[q] = q;
  }

  int num_qubits() const noexcept { return num_qubits_; }
  const std::vector<Gate>& gates() const noexcept { return gates_; }
  const std::vector<int>& readout_remap() const noexcept { return remap_; }

  Circuit& add(const Gate& g) {
    check_qubit(g.q0);
    if (is_two_qubit(g.kind)) {
      check_qubit(g.q1);
      if (g.q0 == g.q1) throw ContractError("two-qubit gate with repeated operand");
    } else if (g.q1 != -1) {
      throw ContractError("single-qubit gate with a second operand");
    }
    if (!std::isfinite(g.angle)) throw DomainError("gate angle is not finite");
    if (!is_rotation(g.kind) && g.angle != 0.0) throw ContractError("fixed gate with an angle");
    gates_.push_back(g);
    return *this;
  }

  Circuit& rx(int q, double a) { return add({GateKind::RX, q, -1, a}); }
  Circuit& ry(int q, double a) { return add({GateKind::RY, q, -1, a}); }
  Circuit& rz(int q, double a) { return add({GateKind::RZ, q, -1, a}); }
  Circuit& h(int q) { return add({GateKind::H, q}); }
  Circuit& s(int q) { return add({GateKind::S, q}); }
  Circuit& sdg(int q) { return add({GateKind::Sdg, q}); }
  Circuit& x(int q) { return add({GateKind::X, q}); }
  Circuit& cnot(int c, int t) { return add({GateKind::CNOT, c, t}); }
  Circuit& swap(int a, int b) { return add({GateKind::SWAP, a, b}); }

  /// Appends `other`, sending its qubit k to wiring[k]. Its remap is ignored.
  Circuit& append(const Circuit& other, std::span<const int> wiring) {
    if (static_cast<int>(wiring.size()) != other.num_qubits()) {
      throw ContractError("append: wiring size differs from circuit width");
    }
    for (Gate g : other.gates()) {
      g.q0 = wiring[g.q0];
      if (g.q1 >= 0) g.q1 = wiring[g.q1];
      add(g);
    }
    return *this;
  }
  Circuit& append(const Circuit& other, std::initializer_list<int> wiring) {
    return append(other, std::span<const int>(wiring.begin(), wiring.size()));
  }
  Circuit& append(const Circuit& other) {
    std::vector<int> wiring(other.num_qubits());
    for (int q = 0; q < other.num_qubits(); ++q) wiring[q] = q;
    return append(other, wiring);
  }

  /// Wire q is read into classical slot remap[q].
  Circuit& set_readout_remap(std::vector<int> remap) {
    if (static_cast<int>(remap.size()) != num_qubits_) {
      throw ContractError("readout remap has the wrong length");
    }
    std::vector<int> seen(num_qubits_, 0);
    for (int r : remap) {
      if (r < 0 || r >= num_qubits_ || seen[r]++) {
        throw ContractError("readout remap is not a permutation");
      }
    }
    remap_ = std::move(remap);
    return *this;
  }

  /// Gate-reversed adjoint. The readout remap is not carried over.
  Circuit inverse() const {
    Circuit out(num_qubits_);
    for (auto it = gates_.rbegin(); it != gates_.rend(); ++it) {
      Gate g = *it;
      if (is_rotation(g.kind)) g.angle = -g.angle;
      if (g.kind == GateKind::S) {
        g.kind = GateKind::Sdg;
      } else if (g.kind == GateKind::Sdg) {
        g.kind = GateKind::S;
      }
      out.add(g);
    }
    return out;
  }

  bool operator==(const Circuit&) const = default;

 private:
  void check_qubit(int q) const {
    if (q < 0 || q >= num_qubits_) {
      throw IndexError("gate operand " + std::to_string(q) + " outside a " +
                       std::to_string(num_qubits_) + "-qubit circuit");
    }
  }

  int num_qubits_;
  std::vector<Gate> gates_;
  std::vector<int> remap_;
};

namespace detail {

inline void apply_gate(const Gate& g, CVector& psi) {
  const Eigen::Index dim = psi.size();
  if (g.kind == GateKind::CNOT) {
    const Eigen::Index cm = Eigen::Index{1} << g.q0, tm = Eigen::Index{1} << g.q1;
    for (Eigen::Index k = 0; k < dim; ++k) {
      if ((k & cm) && !(k & tm)) std::swap(psi(k), psi(k | tm));
    }
    return;
  }
  if (g.kind == GateKind::SWAP) {
    const Eigen::Index am = Eigen::Index{1} << g.q0, bm = Eigen::Index{1} << g.q1;
    for (Eigen::Index k = 0; k < dim; ++k) {
      if ((k & am) && !(k & bm)) std::swap(psi(k), psi((k ^ am) | bm));
    }
    return;
  }
  const CMatrix u = gate_matrix(g);
  const Eigen::Index m = Eigen::Index{1} << g.q0;
  for (Eigen::Index k = 0; k < dim; ++k) {
    if (k & m) continue;
    const Complex a = psi(k), b = psi(k | m);
    psi(k) = u(0, 0) * a + u(0, 1) * b;
    psi(k | m) = u(1, 0) * a + u(1, 1) * b;
  }
}

inline bool is_identity_remap(const std::vector<int>& remap) {
  for (std::size_t q = 0; q < remap.size(); ++q) {
    if (remap[q] != static_cast<int>(q)) return false;
  }
  return true;
}

/// Basis index after moving bit q to bit remap[q].
inline Eigen::Index remap_index(Eigen::Index k, const std::vector<int>& remap) {
  Eigen::Index out = 0;
  for (std::size_t q = 0; q < remap.size(); ++q) out |= ((k >> q) & 1) << remap[q];
  return out;
}

}  // namespace detail

inline CVector apply_statevector(const Circuit& circ, const CVector& psi) {
  if (psi.size() != (Eigen::Index{1} << circ.num_qubits())) {
    throw ContractError("apply_statevector: vector size does not match circuit width");
  }
  CVector out = psi;
  for (const Gate& g : circ.gates()) detail::apply_gate(g, out);
  if (!detail::is_identity_remap(circ.readout_remap())) {
    CVector moved(out.size());
    for (Eigen::Index k = 0; k < out.size(); ++k) {
      moved(detail::remap_index(k, circ.readout_remap())) = out(k);
    }
    out = std::move(moved);
  }
  return out;
}

/// Full unitary, readout remap included as a final wire permutation.
inline CMatrix unitary_of(const Circuit& circ) {
  const Eigen::Index dim = Eigen::Index{1} << circ.num_qubits();
  CMatrix u(dim, dim);
  for (Eigen::Index c = 0; c < dim; ++c) {
    CVector e = CVector::Zero(dim);
    e(c) = 1;
    u.col(c) = apply_statevector(circ, e);
  }
  return u;
}

inline DensityMatrix apply_density(const Circuit& circ, const DensityMatrix& rho) {
  if (rho.num_qubits() != circ.num_qubits()) {
    throw ContractError("apply_density: state and circuit widths differ");
  }
  const CMatrix u = unitary_of(circ);
  const CMatrix out = u * rho.mat() * u.adjoint();
  return DensityMatrix(0.5 * (out + out.adjoint()));
}

/// CNOTs plus three per explicit SWAP.
inline int cnot_count(const Circuit& circ) {
  int n = 0;
  for (const Gate& g : circ.gates()) {
    if (g.kind == GateKind::CNOT) n += 1;
    if (g.kind == GateKind::SWAP) n += 3;
  }
  return n;
}

class CouplingMap {
 public:
  CouplingMap() = default;
  explicit CouplingMap(std::initializer_list<std::pair<int, int>> edges) {
    for (auto [a, b] : edges) allow(a, b);
  }

  CouplingMap& allow(int a, int b) {
    if (a == b) throw ContractError("coupling map edge with repeated qubit");
    edges_.insert({std::min(a, b), std::max(a, b)});
    return *this;
  }
  bool allows(int a, int b) const { return edges_.count({std::min(a, b), std::max(a, b)}) > 0; }
  const std::set<std::pair<int, int>>& edges() const noexcept { return edges_; }

  /// 0-1-2-...-(n-1).
  static CouplingMap linear(int n) {
    CouplingMap m;
    for (int q = 0; q + 1 < n; ++q) m.allow(q, q + 1);
    return m;
  }

  /// Linear system chain 0-1-2 with ancilla 3+i hanging off system qubit i.
  static CouplingMap purified_chain() {
    CouplingMap m = linear(3);
    for (int i = 0; i < 3; ++i) m.allow(i, 3 + i);
    return m;
  }

 private:
  std::set<std::pair<int, int>> edges_;
};

struct LayoutViolation {
  std::size_t gate_index = 0;
  Gate gate;
};

inline std::vector<LayoutViolation> check_layout(const Circuit& circ, const CouplingMap& map) {
  std::vector<LayoutViolation> out;
  for (std::size_t k = 0; k < circ.gates().size(); ++k) {
    const Gate& g = circ.gates()[k];
    if (is_two_qubit(g.kind) && !map.allows(g.q0, g.q1)) out.push_back({k, g});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Text format

inline std::string format_double(double v) {
  std::array<char, 64> buf{};
  auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), res.ptr);
}

inline std::string to_text(const Circuit& circ) {
  std::string out = "qubits " + std::to_string(circ.num_qubits()) + "\n";
  for (const Gate& g : circ.gates()) {
    out += gate_name(g.kind);
    out += ' ';
    out += std::to_string(g.q0);
    if (g.q1 >= 0) out += "," + std::to_string(g.q1);
    if (is_rotation(g.kind)) out += "," + format_double(g.angle);
    out += '\n';
  }
  out += "remap";
  for (int r : circ.readout_remap()) out += " " + std::to_string(r);
  out += '\n';
  return out;
}

namespace detail {

inline double parse_double(std::string_view s) {
  double v = 0.0;
  auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
    throw ContractError("bad number '" + std::string(s) + "'");
  }
  return v;
}

inline int parse_int(std::string_view s) {
  int v = 0;
  auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
    throw ContractError("bad integer '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace detail

inline Circuit from_text(const std::string& text) {
  std::istringstream in(text);
  std::string word;
  int n = 0;
  if (!(in >> word >> n) || word != "qubits") throw ContractError("circuit text lacks 'qubits N'");
  Circuit circ(n);
  std::string line;
  std::getline(in, line);
  bool saw_remap = false;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto sp = line.find(' ');
    if (sp == std::string::npos) throw ContractError("malformed circuit line '" + line + "'");
    const std::string head = line.substr(0, sp);
    if (head == "remap") {
      std::istringstream rs(line.substr(sp + 1));
      std::vector<int> remap;
      int r;
      while (rs >> r) remap.push_back(r);
      circ.set_readout_remap(std::move(remap));
      saw_remap = true;
      continue;
    }
    if (saw_remap) throw ContractError("gate after remap footer");
    std::vector<std::string_view> fields;
    std::string_view rest(line);
    rest.remove_prefix(sp + 1);
    while (true) {
      const auto comma = rest.find(',');
      fields.push_back(rest.substr(0, comma));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    Gate g;
    g.kind = gate_kind_from_name(head);
    const std::size_t want = (is_two_qubit(g.kind) ? 2 : 1) + (is_rotation(g.kind) ? 1 : 0);
    if (fields.size() != want) throw ContractError("wrong operand count in '" + line + "'");
    g.q0 = detail::parse_int(fields[0]);
    if (is_two_qubit(g.kind)) g.q1 = detail::parse_int(fields[1]);
    if (is_rotation(g.kind)) g.angle = detail::parse_double(fields.back());
    circ.add(g);
  }
  return circ;
}

// ---------------------------------------------------------------------------
// Constructions

/**
 * exp(-i tau H) for H = X_i Y_j - Y_i X_j, with two CNOTs. The basis change
 * D = RY_i(-π/2) RZ_i(-π/2) RX_j(π/2) turns H into Z_i Z_j - X_i X_j, whose two
 * commuting terms the CNOT pair reduces to single-qubit rotations.
 */
inline Circuit u2_dm_circuit(double tau, int i = 0, int j = 1, int num_qubits = 2) {
  Circuit c(num_qubits);
  c.ry(i, -std::numbers::pi / 2).rz(i, -std::numbers::pi / 2).rx(j, std::numbers::pi / 2);
  c.cnot(i, j);
  c.rz(j, 2 * tau).rx(i, -2 * tau);
  c.cnot(i, j);
  c.rx(j, -std::numbers::pi / 2).rz(i, std::numbers::pi / 2).ry(i, std::numbers::pi / 2);
  return c;
}

inline constexpr int kVariationalAngles = 12;
inline constexpr int kSystemQubits = 3;

/**
 * Six-qubit purification ansatz: RY on every qubit, CNOT from ancilla 3+i onto
 * system qubit i, RY on every qubit again. angles[q] is the first-layer angle
 * of qubit q and angles[6+q] the second-layer angle.
 */
inline Circuit variational_prep_circuit(std::span<const double> angles) {
  if (angles.size() != kVariationalAngles) {
    throw ContractError("variational prep takes exactly 12 angles");
  }
  Circuit c(2 * kSystemQubits);
  for (int q = 0; q < 2 * kSystemQubits; ++q) c.ry(q, angles[q]);
  for (int i = 0; i < kSystemQubits; ++i) c.cnot(kSystemQubits + i, i);
  for (int q = 0; q < 2 * kSystemQubits; ++q) c.ry(q, angles[2 * kSystemQubits + q]);
  return c;
}

enum class PrepOrder { bc_first, ab_first };

/// Two DM blocks on the system pairs (0,1) and (1,2) of a register.
inline Circuit coupling_prep(double tau_ab, double tau_bc, PrepOrder order = PrepOrder::bc_first,
                             int num_qubits = kSystemQubits) {
  Circuit c(num_qubits);
  const Circuit ab = u2_dm_circuit(tau_ab);
  const Circuit bc = u2_dm_circuit(tau_bc);
  if (order == PrepOrder::ab_first) {
    c.append(ab, {0, 1}).append(bc, {1, 2});
  } else {
    c.append(bc, {1, 2}).append(ab, {0, 1});
  }
  return c;
}

struct CartanConstants {
  double alpha = 0.0;
  double beta = 0.0;
  double c = 0.0;
  double residual = 0.0;  // worst phase-aligned propagator mismatch over the check sample
};

/// The factor K = exp(-(i/2)(alpha XZY + beta YZX)); letter t acts on qubit t.
inline CMatrix cartan_k(double alpha, double beta) {
  const CMatrix gen = alpha * pauli_string("XZY") + beta * pauli_string("YZX");
  return expm_i(gen, 0.5);
}

/// DM generator on qubits (1, 2) of three, i.e. I ⊗ H_2.
inline CMatrix cartan_core_generator() { return dm_pair_term(3, 1, 2, 1.0); }

/// K† (I ⊗ U_2(c tau)) K.
inline CMatrix cartan_unitary(const CartanConstants& k, double tau) {
  const CMatrix kk = cartan_k(k.alpha, k.beta);
  return kk.adjoint() * expm_i(cartan_core_generator(), k.c * tau) * kk;
}

inline constexpr std::array<double, 5> kCartanCheckTaus = {0.0, 0.2, 0.5, 1.1, 2.3};

/**
 * Solves c K†(I ⊗ H_2)K = H_3 for (alpha, beta, c) by damped Gauss-Newton
 * from a fixed list of starting points. Throws CalibrationError when no start
 * gets the propagator mismatch under 1e-6.
 */
inline CartanConstants cartan_constants() {
  const CMatrix h3 = dm_chain_hamiltonian(3, 1.0).mat();
  const CMatrix h2 = cartan_core_generator();
  auto residual = [&](const Eigen::Vector3d& p) {
    const CMatrix kk = cartan_k(p(0), p(1));
    const CMatrix diff = p(2) * (kk.adjoint() * h2 * kk) - h3;
    Eigen::VectorXd r(2 * diff.size());
    for (Eigen::Index k = 0; k < diff.size(); ++k) {
      r(2 * k) = diff(k).real();
      r(2 * k + 1) = diff(k).imag();
    }
    return r;
  };

  const std::array<Eigen::Vector3d, 4> starts = {
      Eigen::Vector3d(0.5, 0.5, 1.0), Eigen::Vector3d(0.5, -0.5, 1.0),
      Eigen::Vector3d(-0.5, 0.5, 1.0), Eigen::Vector3d(-0.5, -0.5, 1.0)};
  CartanConstants best;
  best.residual = std::numeric_limits<double>::infinity();
  for (const Eigen::Vector3d& start : starts) {
    Eigen::Vector3d p = start;
    Eigen::VectorXd r = residual(p);
    double lambda = 1e-3;
    for (int it = 0; it < 200 && r.norm() > 1e-14; ++it) {
      Eigen::MatrixXd jac(r.size(), 3);
      for (int a = 0; a < 3; ++a) {
        Eigen::Vector3d dp = p;
        const double h = 1e-7;
        dp(a) += h;
        Eigen::Vector3d dm = p;
        dm(a) -= h;
        jac.col(a) = (residual(dp) - residual(dm)) / (2 * h);
      }
      const Eigen::Matrix3d jtj = jac.transpose() * jac;
      const Eigen::Vector3d g = jac.transpose() * r;
      bool improved = false;
      for (int tries = 0; tries < 30 && !improved; ++tries) {
        Eigen::Matrix3d a = jtj;
        a.diagonal() *= 1.0 + lambda;
        const Eigen::Vector3d step = a.ldlt().solve(-g);
        const Eigen::VectorXd rn = residual(p + step);
        if (rn.norm() < r.norm()) {
          p += step;
          r = rn;
          lambda = std::max(lambda / 10, 1e-12);
          improved = true;
        } else {
          lambda *= 10;
        }
      }
      if (!improved) break;
    }
    CartanConstants cand{p(0), p(1), p(2), 0.0};
    const DMChainHamiltonian h(3, 1.0);
    for (double tau : kCartanCheckTaus) {
      cand.residual = std::max(
          cand.residual, phase_aligned_distance(cartan_unitary(cand, tau), propagator(h, tau)));
    }
    if (cand.residual < best.residual) best = cand;
    if (best.residual < 1e-9) break;
  }
  if (!(best.residual < 1e-6)) {
    throw CalibrationError("Cartan constant solve stalled at residual " +
                           std::to_string(best.residual));
  }
  return best;
}

namespace detail {

/// Gate pair (before, after) rotating Pauli letter P of qubit q onto Z.
inline void basis_to_z(Circuit& c, char letter, int q, bool undo) {
  switch (letter) {
    case 'X': c.h(q); break;
    case 'Y': c.rx(q, undo ? -std::numbers::pi / 2 : std::numbers::pi / 2); break;
    case 'Z': break;
    default: throw ContractError("basis_to_z: bad Pauli letter");
  }
}

/// exp(-(i/2) theta P) for a three-letter word, CNOT ladder 0->1->2.
inline Circuit pauli_exponential3(const std::string& word, double theta) {
  Circuit c(3);
  for (int q = 0; q < 3; ++q) basis_to_z(c, word[q], q, false);
  c.cnot(0, 1).cnot(1, 2).rz(2, theta).cnot(1, 2).cnot(0, 1);
  for (int q = 0; q < 3; ++q) basis_to_z(c, word[q], q, true);
  return c;
}

/// 4-CNOT circuit for exp(-(i/2)(alpha X0 Y1 Z2 + beta Y0 X1 Z2)).
inline Circuit k_core_swapped(double alpha, double beta) {
  const double h = std::numbers::pi / 2;
  Circuit c(3);
  c.s(1).ry(1, h);
  c.cnot(2, 1);
  c.ry(0, -h).rz(0, -h).rz(1, -h);
  c.cnot(0, 1);
  c.rz(1, alpha).rx(0, beta);
  c.cnot(0, 1);
  c.rz(1, h).rz(0, h).ry(0, h);
  c.cnot(2, 1);
  c.ry(1, -h).sdg(1);
  return c;
}

inline void require_linear(const Circuit& c) {
  const auto bad = check_layout(c, CouplingMap::linear(c.num_qubits()));
  if (!bad.empty()) {
    throw LayoutError("construction places a two-qubit gate on non-adjacent qubits " +
                      std::to_string(bad.front().gate.q0) + "," +
                      std::to_string(bad.front().gate.q1));
  }
}

}  // namespace detail

/// K as two Pauli-word exponentials, 4 CNOTs each.
inline Circuit k_circuit_product(const CartanConstants& k) {
  Circuit c(3);
  c.append(detail::pauli_exponential3("XZY", k.alpha));
  c.append(detail::pauli_exponential3("YZX", k.beta));
  return c;
}

/// K as SWAP(1,2) · core · SWAP(1,2); the core needs 4 CNOTs on a line.
inline Circuit k_circuit_swapped(const CartanConstants& k) {
  Circuit c(3);
  c.swap(1, 2);
  c.append(detail::k_core_swapped(k.alpha, k.beta));
  c.swap(1, 2);
  detail::require_linear(c);
  return c;
}

enum class CartanVariant { product18, swapped13 };

/**
 * exp(-i tau H_3) as K† (I ⊗ U_2(c tau)) K. The swapped variant cancels the
 * inner SWAP pairs and replaces the trailing SWAP with a readout remap, so
 * one SWAP survives.
 */
inline Circuit u3_cartan_circuit(double tau, const CartanConstants& k, CartanVariant variant) {
  Circuit c(3);
  if (variant == CartanVariant::product18) {
    const Circuit kc = k_circuit_product(k);
    c.append(kc);
    c.append(u2_dm_circuit(k.c * tau), {1, 2});
    c.append(kc.inverse());
    return c;
  }
  const Circuit core = detail::k_core_swapped(k.alpha, k.beta);
  c.swap(1, 2);
  c.append(core);
  // Between the SWAPs the core block sees qubits 1 and 2 exchanged.
  c.append(u2_dm_circuit(k.c * tau), {2, 1});
  c.append(core.inverse());
  c.set_readout_remap({0, 2, 1});
  detail::require_linear(c);
  return c;
}

/// First-order Trotter: `steps` rounds of U_2 on (0,1) then (1,2).
inline Circuit u3_trotter_circuit(double tau, int steps) {
  if (steps < 1) throw ContractError("Trotter step count must be positive");
  Circuit c(3);
  const Circuit block = u2_dm_circuit(tau / steps);
  for (int s = 0; s < steps; ++s) c.append(block, {0, 1}).append(block, {1, 2});
  return c;
}

}  // namespace spinchain
