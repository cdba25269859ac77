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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "spinchain/qcircuit.hpp"

namespace spinchain {
namespace {

using std::numbers::pi;

// Gate matrices from Pauli closed forms, embedded by explicit Kronecker chains.
CMatrix oracle_gate(const Gate& g, int n) {
  using namespace oracle;
  const Complex i(0, 1);
  const double c = std::cos(g.angle / 2), s = std::sin(g.angle / 2);
  switch (g.kind) {
    case GateKind::RX: return on(CMatrix(c * I2() - i * s * X()), g.q0, n);
    case GateKind::RY: return on(CMatrix(c * I2() - i * s * Y()), g.q0, n);
    case GateKind::RZ: return on(CMatrix(c * I2() - i * s * Z()), g.q0, n);
    case GateKind::H: return on(CMatrix((X() + Z()) / std::sqrt(2.0)), g.q0, n);
    case GateKind::S: return on(CMatrix(P0() + i * P1()), g.q0, n);
    case GateKind::Sdg: return on(CMatrix(P0() - i * P1()), g.q0, n);
    case GateKind::X: return on(X(), g.q0, n);
    case GateKind::CNOT: return on(P0(), g.q0, n) + on2(P1(), g.q0, X(), g.q1, n);
    case GateKind::SWAP: {
      const int dim = 1 << n;
      return 0.5 * (CMatrix(CMatrix::Identity(dim, dim)) + on2(X(), g.q0, X(), g.q1, n) +
                    on2(Y(), g.q0, Y(), g.q1, n) + on2(Z(), g.q0, Z(), g.q1, n));
    }
  }
  return {};
}

CMatrix oracle_unitary(const Circuit& c) {
  const int dim = 1 << c.num_qubits();
  CMatrix u = CMatrix::Identity(dim, dim);
  for (const Gate& g : c.gates()) u = oracle_gate(g, c.num_qubits()) * u;
  return u;
}

Circuit random_circuit(int n, int length, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> kind(0, 8), qubit(0, n - 1);
  std::uniform_real_distribution<double> angle(-pi, pi);
  Circuit c(n);
  while (static_cast<int>(c.gates().size()) < length) {
    Gate g;
    g.kind = static_cast<GateKind>(kind(rng));
    g.q0 = qubit(rng);
    if (is_two_qubit(g.kind)) {
      if (n < 2) continue;
      do g.q1 = qubit(rng);
      while (g.q1 == g.q0);
    }
    if (is_rotation(g.kind)) g.angle = angle(rng);
    c.add(g);
  }
  return c;
}

CMatrix h3() {
  using namespace oracle;
  return on2(X(), 0, Y(), 1, 3) - on2(Y(), 0, X(), 1, 3) + on2(X(), 1, Y(), 2, 3) -
         on2(Y(), 1, X(), 2, 3);
}

CMatrix h2() {
  using namespace oracle;
  return on2(X(), 0, Y(), 1, 2) - on2(Y(), 0, X(), 1, 2);
}

CMatrix k_oracle(double alpha, double beta) {
  using namespace oracle;
  const CMatrix gen = alpha * tensor({X(), Z(), Y()}) + beta * tensor({Y(), Z(), X()});
  return taylor_expm_i(gen, 0.5);
}

// ---------------------------------------------------------------------------

TEST(Circuit, Validation) {
  EXPECT_THROW(Circuit(0), ContractError);
  EXPECT_THROW(Circuit(7), CapacityError);
  Circuit c(3);
  EXPECT_THROW(c.cnot(1, 1), ContractError);
  EXPECT_THROW(c.x(3), IndexError);
  EXPECT_THROW(c.rx(0, std::nan("")), DomainError);
  EXPECT_THROW(c.add({GateKind::H, 0, -1, 0.3}), ContractError);
  EXPECT_THROW(c.set_readout_remap({0, 0, 1}), ContractError);
  EXPECT_THROW(c.set_readout_remap({0, 1}), ContractError);
  EXPECT_TRUE(c.gates().empty());
}

TEST(Circuit, GateNames) {
  for (int k = 0; k <= 8; ++k) {
    const auto kind = static_cast<GateKind>(k);
    EXPECT_EQ(gate_kind_from_name(gate_name(kind)), kind);
  }
  EXPECT_THROW(gate_kind_from_name("CZ"), ContractError);
}

TEST(UnitaryOf, EmptyIsIdentity) {
  EXPECT_EQ(unitary_of(Circuit(3)), CMatrix::Identity(8, 8));
}

TEST(UnitaryOf, CnotTruthTable) {
  Circuit c(2);
  c.cnot(0, 1);
  CMatrix want = CMatrix::Zero(4, 4);
  want(0, 0) = want(2, 2) = 1;
  want(3, 1) = want(1, 3) = 1;  // control is bit 0
  EXPECT_EQ(unitary_of(c), want);
}

TEST(UnitaryOf, SwapUndoneByRemap) {
  Circuit c(2);
  c.swap(0, 1).set_readout_remap({1, 0});
  EXPECT_EQ(unitary_of(c), CMatrix::Identity(4, 4));
}

TEST(UnitaryOf, MatchesKroneckerOracle) {
  std::mt19937_64 rng(51);
  for (int t = 0; t < 60; ++t) {
    const int n = 1 + t % 6;
    const Circuit c = random_circuit(n, 12, rng);
    EXPECT_LT((unitary_of(c) - oracle_unitary(c)).norm(), 1e-12) << to_text(c);
  }
}

TEST(ApplyStatevector, SingleQubitClosedForms) {
  Circuit x(1);
  x.x(0);
  CVector zero = CVector::Zero(2);
  zero(0) = 1;
  const CVector one = apply_statevector(x, zero);
  EXPECT_EQ(one(0), Complex(0));
  EXPECT_EQ(one(1), Complex(1));
  for (double th : {0.3, 1.7, -2.4}) {
    Circuit r(1);
    r.ry(0, th);
    const CVector out = apply_statevector(r, zero);
    EXPECT_NEAR(std::abs(out(0) - std::cos(th / 2)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(out(1) - std::sin(th / 2)), 0.0, 1e-15);
  }
  EXPECT_THROW(apply_statevector(x, CVector::Zero(4)), ContractError);
}

TEST(ApplyStatevector, SixQubitRandomCircuits) {
  std::mt19937_64 rng(52);
  std::normal_distribution<double> g;
  for (int t = 0; t < 10; ++t) {
    const Circuit c = random_circuit(6, 40, rng);
    CVector psi(64);
    for (auto& a : psi) a = Complex(g(rng), g(rng));
    psi.normalize();
    EXPECT_LT((apply_statevector(c, psi) - oracle_unitary(c) * psi).norm(), 1e-12);
  }
}

TEST(ApplyDensity, IdentityAndDimension) {
  std::mt19937_64 rng(53);
  const DensityMatrix rho(oracle::random_density(8, 3, rng));
  EXPECT_LT((apply_density(Circuit(3), rho).mat() - rho.mat()).norm(), 1e-15);
  EXPECT_THROW(apply_density(Circuit(2), rho), ContractError);
}

TEST(ApplyDensity, CnotPermutesDiagonal) {
  CMatrix d = CMatrix::Zero(4, 4);
  d(0, 0) = 0.4;
  d(1, 1) = 0.3;
  d(2, 2) = 0.2;
  d(3, 3) = 0.1;
  Circuit c(2);
  c.cnot(0, 1);
  const CMatrix out = apply_density(c, DensityMatrix(d)).mat();
  EXPECT_EQ(out(0, 0), Complex(0.4));
  EXPECT_EQ(out(1, 1), Complex(0.1));
  EXPECT_EQ(out(2, 2), Complex(0.2));
  EXPECT_EQ(out(3, 3), Complex(0.3));
  EXPECT_EQ((out - out.diagonal().asDiagonal().toDenseMatrix()).norm(), 0.0);
}

// Density backend against statevector on system + ancilla, then partial trace.
void expect_backends_agree(const Circuit& c, const CMatrix& factor) {
  const int n = c.num_qubits();
  const int anc = static_cast<int>(std::log2(static_cast<double>(factor.cols())));
  const CMatrix rho = factor * factor.adjoint();
  Circuit wide(n + anc);
  wide.append(c);
  const CVector psi = apply_statevector(wide, oracle::purify(factor));
  std::vector<int> keep(n);
  for (int q = 0; q < n; ++q) keep[q] = q;
  const CMatrix reduced = oracle::partial_trace(psi * psi.adjoint(), n + anc, keep);
  EXPECT_LT((apply_density(c, DensityMatrix(rho)).mat() - reduced).norm(), 1e-12);
}

TEST(ApplyDensity, AgreesWithPurifiedBackend) {
  std::mt19937_64 rng(54);
  std::normal_distribution<double> g;
  for (int t = 0; t < 200; ++t) {
    const int n = 1 + t % 4;
    const int anc = std::min(n, 6 - n);
    const int rank = 1 << (t % (anc + 1));
    CMatrix factor(1 << n, rank);
    for (Eigen::Index r = 0; r < factor.rows(); ++r)
      for (Eigen::Index k = 0; k < rank; ++k) factor(r, k) = Complex(g(rng), g(rng));
    factor /= factor.norm();
    expect_backends_agree(random_circuit(n, 15, rng), factor);
  }
}

TEST(ApplyDensity, ReversalPrepBothBackends) {
  const std::array<double, 3> p1 = {0.25, 0.21, 0.13};
  CMatrix factor = CMatrix::Zero(8, 8);
  for (int k = 0; k < 8; ++k) {
    double w = 1;
    for (int q = 0; q < 3; ++q) w *= ((k >> q) & 1) ? p1[q] : 1 - p1[q];
    factor(k, k) = std::sqrt(w);
  }
  expect_backends_agree(coupling_prep(-0.33, -0.27), factor);
}

TEST(Inverse, UndoesTheCircuit) {
  std::mt19937_64 rng(55);
  for (int t = 0; t < 10; ++t) {
    Circuit c = random_circuit(3, 20, rng);
    const Circuit inv = c.inverse();
    c.append(inv);
    EXPECT_LT((unitary_of(c) - CMatrix::Identity(8, 8)).norm(), 1e-12);
  }
}

TEST(U2, MatchesExponential) {
  EXPECT_LT(phase_aligned_distance(unitary_of(u2_dm_circuit(0.0)), CMatrix::Identity(4, 4)), 1e-14);
  EXPECT_LT(phase_aligned_distance(unitary_of(u2_dm_circuit(0.37)), oracle::taylor_expm_i(h2(), 0.37)),
            1e-10);
  EXPECT_EQ(cnot_count(u2_dm_circuit(0.37)), 2);
  EXPECT_TRUE(check_layout(u2_dm_circuit(0.37), CouplingMap::linear(2)).empty());
}

TEST(U2, EmbeddedOnLaterQubits) {
  const Circuit c = u2_dm_circuit(0.8, 1, 2, 3);
  EXPECT_LT(phase_aligned_distance(unitary_of(c),
                                   oracle::taylor_expm_i(oracle::kron(h2(), oracle::I2()), 0.8)),
            1e-10);
}

TEST(VariationalPrep, Layout) {
  EXPECT_THROW(variational_prep_circuit(std::vector<double>(11)), ContractError);
  const Circuit c = variational_prep_circuit(std::vector<double>(12, 0.1));
  EXPECT_EQ(c.num_qubits(), 6);
  EXPECT_EQ(cnot_count(c), 3);
  EXPECT_TRUE(check_layout(c, CouplingMap::purified_chain()).empty());
  int ry = 0;
  for (const Gate& g : c.gates()) ry += g.kind == GateKind::RY;
  EXPECT_EQ(ry, 12);
}

CMatrix system_marginal(const std::vector<double>& angles) {
  CVector zero = CVector::Zero(64);
  zero(0) = 1;
  const CVector psi = apply_statevector(variational_prep_circuit(angles), zero);
  return oracle::partial_trace(psi * psi.adjoint(), 6, {0, 1, 2});
}

TEST(VariationalPrep, ZeroAnglesGiveGroundState) {
  const CMatrix rho = system_marginal(std::vector<double>(12, 0.0));
  EXPECT_NEAR(std::abs(rho(0, 0) - 1.0), 0.0, 1e-15);
  EXPECT_NEAR(rho.norm(), 1.0, 1e-15);
}

TEST(VariationalPrep, AncillaAngleSetsPopulation) {
  for (int i = 0; i < 3; ++i) {
    std::vector<double> angles(12, 0.0);
    angles[3 + i] = 2 * std::acos(std::sqrt(0.731059));
    const CMatrix qubit = oracle::partial_trace(system_marginal(angles), 3, {i});
    EXPECT_NEAR(qubit(0, 0).real(), 0.731059, 1e-12);
    EXPECT_NEAR(qubit(1, 1).real(), 0.268941, 1e-12);
    EXPECT_NEAR(std::abs(qubit(0, 1)), 0.0, 1e-15);
  }
}

TEST(CouplingPrep, ZeroIsIdentityOnDiagonalStates) {
  std::mt19937_64 rng(56);
  std::uniform_real_distribution<double> u(0, 1);
  for (auto order : {PrepOrder::bc_first, PrepOrder::ab_first}) {
    CMatrix d = CMatrix::Zero(8, 8);
    for (int k = 0; k < 8; ++k) d(k, k) = u(rng);
    d /= d.trace();
    const CMatrix out = apply_density(coupling_prep(0.0, 0.0, order), DensityMatrix(d)).mat();
    EXPECT_LT((out - d).norm(), 1e-14);
  }
}

TEST(CouplingPrep, OrdersAreTheTwoProducts) {
  const CMatrix uab = oracle::taylor_expm_i(oracle::kron(oracle::I2(), h2()), 0.3);
  const CMatrix ubc = oracle::taylor_expm_i(oracle::kron(h2(), oracle::I2()), -0.2);
  EXPECT_LT(phase_aligned_distance(unitary_of(coupling_prep(0.3, -0.2, PrepOrder::ab_first)), ubc * uab),
            1e-10);
  EXPECT_LT(phase_aligned_distance(unitary_of(coupling_prep(0.3, -0.2, PrepOrder::bc_first)), uab * ubc),
            1e-10);
}

TEST(CouplingPrep, KeepsAValidState) {
  const DensityMatrix rho(oracle::tensor(
      {(CMatrix(2, 2) << 0.6, 0, 0, 0.4).finished(), (CMatrix(2, 2) << 0.8, 0, 0, 0.2).finished(),
       (CMatrix(2, 2) << 0.9, 0, 0, 0.1).finished()}));
  const DensityMatrix out = apply_density(coupling_prep(0.4, -0.6), rho);
  EXPECT_NEAR(std::abs(out.mat().trace() - 1.0), 0.0, 1e-14);
  EXPECT_GE(herm_eig(out.mat()).eigenvalues(0), -1e-14);
}

TEST(Cartan, PauliWordsCommute) {
  using namespace oracle;
  const CMatrix a = tensor({X(), Z(), Y()}), b = tensor({Y(), Z(), X()});
  EXPECT_LT((a * b - b * a).norm(), 1e-15);
}

TEST(Cartan, ConstantsReproduceThePropagator) {
  const CartanConstants k = cartan_constants();
  EXPECT_LT(k.residual, 1e-9);
  EXPECT_NEAR(std::abs(k.c), std::sqrt(2.0), 1e-9);
  EXPECT_LT(phase_aligned_distance(cartan_unitary(k, 0.0), CMatrix::Identity(8, 8)), 1e-14);
  for (double tau : {0.2, 0.5, 1.1, 2.3}) {
    EXPECT_LT(phase_aligned_distance(cartan_unitary(k, tau), oracle::taylor_expm_i(h3(), tau)), 1e-9)
        << tau;
  }
  const CartanConstants again = cartan_constants();
  EXPECT_EQ(k.alpha, again.alpha);
  EXPECT_EQ(k.beta, again.beta);
  EXPECT_EQ(k.c, again.c);
}

TEST(Cartan, KMatchesOracle) {
  const CartanConstants k = cartan_constants();
  EXPECT_LT((cartan_k(k.alpha, k.beta) - k_oracle(k.alpha, k.beta)).norm(), 1e-12);
}

TEST(KCircuit, ProductForm) {
  const CartanConstants zero{0.0, 0.0, 1.0, 0.0};
  EXPECT_LT(phase_aligned_distance(unitary_of(k_circuit_product(zero)), CMatrix::Identity(8, 8)), 1e-14);
  const CartanConstants k = cartan_constants();
  EXPECT_EQ(cnot_count(k_circuit_product(k)), 8);
  EXPECT_LT(phase_aligned_distance(unitary_of(k_circuit_product(k)), k_oracle(k.alpha, k.beta)), 1e-10);
  for (auto [a, b] : {std::pair{0.3, -1.1}, {2.0, 0.4}}) {
    EXPECT_LT(phase_aligned_distance(unitary_of(k_circuit_product({a, b, 1.0, 0.0})), k_oracle(a, b)),
              1e-10);
  }
}

TEST(KCircuit, SwappedForm) {
  const CartanConstants zero{0.0, 0.0, 1.0, 0.0};
  EXPECT_LT(phase_aligned_distance(unitary_of(k_circuit_swapped(zero)), CMatrix::Identity(8, 8)), 1e-14);
  const CartanConstants k = cartan_constants();
  const Circuit sw = k_circuit_swapped(k);
  EXPECT_EQ(cnot_count(sw), 10);
  EXPECT_TRUE(check_layout(sw, CouplingMap::linear(3)).empty());
  EXPECT_LT(phase_aligned_distance(unitary_of(sw), unitary_of(k_circuit_product(k))), 1e-10);
  for (auto [a, b] : {std::pair{0.3, -1.1}, {2.0, 0.4}}) {
    EXPECT_LT(phase_aligned_distance(unitary_of(k_circuit_swapped({a, b, 1.0, 0.0})), k_oracle(a, b)),
              1e-10);
  }
}

TEST(U3Cartan, CountsAndLayout) {
  const CartanConstants k = cartan_constants();
  const Circuit p = u3_cartan_circuit(0.4, k, CartanVariant::product18);
  const Circuit s = u3_cartan_circuit(0.4, k, CartanVariant::swapped13);
  EXPECT_EQ(cnot_count(p), 18);
  EXPECT_EQ(cnot_count(s), 13);
  EXPECT_TRUE(check_layout(s, CouplingMap::linear(3)).empty());
  int swaps = 0;
  for (const Gate& g : s.gates()) swaps += g.kind == GateKind::SWAP;
  EXPECT_EQ(swaps, 1);
  EXPECT_EQ(s.readout_remap(), (std::vector<int>{0, 2, 1}));
}

TEST(U3Cartan, ZeroTimeIsIdentity) {
  const CartanConstants k = cartan_constants();
  for (auto v : {CartanVariant::product18, CartanVariant::swapped13}) {
    EXPECT_LT(phase_aligned_distance(unitary_of(u3_cartan_circuit(0.0, k, v)), CMatrix::Identity(8, 8)),
              1e-12);
  }
}

TEST(CircuitEquivalence, RandomTimes) {
  const CartanConstants k = cartan_constants();
  std::mt19937_64 rng(57);
  std::uniform_real_distribution<double> u(-pi, pi);
  for (int t = 0; t < 20; ++t) {
    const double tau = u(rng);
    EXPECT_LT(phase_aligned_distance(unitary_of(u2_dm_circuit(tau)), oracle::taylor_expm_i(h2(), tau)),
              1e-9);
    const CMatrix want = oracle::taylor_expm_i(h3(), tau);
    for (auto v : {CartanVariant::product18, CartanVariant::swapped13}) {
      EXPECT_LT(phase_aligned_distance(unitary_of(u3_cartan_circuit(tau, k, v)), want), 1e-9) << tau;
    }
  }
}

double trotter_error(double tau, int steps) {
  return phase_aligned_distance(unitary_of(u3_trotter_circuit(tau, steps)),
                                oracle::taylor_expm_i(h3(), tau));
}

TEST(Trotter, Basics) {
  EXPECT_LT(phase_aligned_distance(unitary_of(u3_trotter_circuit(0.0, 5)), CMatrix::Identity(8, 8)),
            1e-14);
  EXPECT_EQ(cnot_count(u3_trotter_circuit(0.3, 7)), 28);
  EXPECT_THROW(u3_trotter_circuit(0.3, 0), ContractError);
  EXPECT_LT(trotter_error(0.5, 1024), 1e-3);
}

TEST(Trotter, FirstOrderConvergence) {
  double prev = trotter_error(1.0, 1);
  for (int s : {2, 4, 8, 16, 32}) {
    const double e = trotter_error(1.0, s);
    EXPECT_LT(e, prev) << s;
    EXPECT_NEAR(e / prev, 0.5, 0.1) << s;
    prev = e;
  }
}

TEST(CnotCount, Convention) {
  EXPECT_EQ(cnot_count(Circuit(2)), 0);
  Circuit c(2);
  c.swap(0, 1);
  EXPECT_EQ(cnot_count(c), 3);
  c.cnot(1, 0).h(0);
  EXPECT_EQ(cnot_count(c), 4);
}

TEST(Layout, Violations) {
  Circuit c(3);
  c.cnot(0, 1).cnot(0, 2).swap(2, 1).h(2);
  const auto bad = check_layout(c, CouplingMap::linear(3));
  ASSERT_EQ(bad.size(), 1u);
  EXPECT_EQ(bad[0].gate_index, 1u);
  EXPECT_TRUE(CouplingMap::purified_chain().allows(4, 1));
  EXPECT_FALSE(CouplingMap::purified_chain().allows(3, 4));
  EXPECT_THROW(CouplingMap().allow(2, 2), ContractError);
}

TEST(Remap, MatchesExplicitFinalSwap) {
  std::mt19937_64 rng(58);
  std::normal_distribution<double> g;
  for (int t = 0; t < 20; ++t) {
    const Circuit base = random_circuit(3, 15, rng);
    Circuit remapped = base, swapped = base;
    remapped.set_readout_remap({0, 2, 1});
    swapped.swap(1, 2);
    CVector psi(8);
    for (auto& a : psi) a = Complex(g(rng), g(rng));
    psi.normalize();
    const CVector a = apply_statevector(remapped, psi), b = apply_statevector(swapped, psi);
    for (int k = 0; k < 8; ++k) EXPECT_EQ(std::norm(a(k)), std::norm(b(k)));
  }
}

TEST(TextFormat, Golden) {
  Circuit c(3);
  c.ry(0, 0.5).cnot(2, 1).swap(0, 1).sdg(2).rz(1, -1e-3);
  c.set_readout_remap({1, 0, 2});
  EXPECT_EQ(to_text(c),
            "qubits 3\n"
            "RY 0,0.5\n"
            "CNOT 2,1\n"
            "SWAP 0,1\n"
            "Sdg 2\n"
            "RZ 1,-0.001\n"
            "remap 1 0 2\n");
}

TEST(TextFormat, RoundTripIsExact) {
  std::mt19937_64 rng(59);
  for (int t = 0; t < 50; ++t) {
    Circuit c = random_circuit(1 + t % 6, 25, rng);
    if (c.num_qubits() == 3) c.set_readout_remap({2, 0, 1});
    EXPECT_EQ(from_text(to_text(c)), c);
    EXPECT_EQ(to_text(from_text(to_text(c))), to_text(c));
  }
  const CartanConstants k = cartan_constants();
  const Circuit s = u3_cartan_circuit(1.234567890123, k, CartanVariant::swapped13);
  EXPECT_EQ(from_text(to_text(s)), s);
}

TEST(TextFormat, RejectsMalformedInput) {
  EXPECT_THROW(from_text("qbits 2\n"), ContractError);
  EXPECT_THROW(from_text("qubits 2\nRX 0\n"), ContractError);
  EXPECT_THROW(from_text("qubits 2\nRX 0,abc\n"), ContractError);
  EXPECT_THROW(from_text("qubits 2\nCNOT 0\n"), ContractError);
  EXPECT_THROW(from_text("qubits 2\nFOO 0\n"), ContractError);
  EXPECT_THROW(from_text("qubits 2\nX 5\n"), IndexError);
  EXPECT_THROW(from_text("qubits 2\nremap 0 1\nX 0\n"), ContractError);
  EXPECT_THROW(from_text("qubits 2\nremap 0 0\n"), ContractError);
}

}  // namespace
}  // namespace spinchain
