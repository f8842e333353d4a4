// Copyright 2026 The tqpe Authors
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

#include <algorithm>
#include <numeric>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "tqpe/spectral_oracle.hpp"
#include "tqpe/statevector.hpp"
#include "tqpe/trotter.hpp"

namespace tqpe {
namespace {

using testing::kReferenceSeed;

TEST(SuzukiStages, LowOrders) {
  EXPECT_EQ(suzuki_stages(1), std::vector<double>{1.0});
  EXPECT_EQ(suzuki_stages(2), std::vector<double>{1.0});
  const auto s4 = suzuki_stages(4);
  ASSERT_EQ(s4.size(), 5u);
  const double p2 = 1.0 / (4.0 - std::cbrt(4.0));
  EXPECT_NEAR(p2, 0.414490, 1e-6);
  EXPECT_NEAR(s4[0], p2, 1e-15);
  EXPECT_NEAR(s4[2], 1 - 4 * p2, 1e-15);
  EXPECT_LT(s4[2], 0.0);
}

TEST(SuzukiStages, PassCountsSumsAndPalindromes) {
  for (int k : {1, 2, 4, 6, 8, 10}) {
    const auto s = suzuki_stages(k);
    EXPECT_EQ(s.size(), oracle::suzuki_pass_count(k)) << k;
    EXPECT_NEAR(std::accumulate(s.begin(), s.end(), 0.0), 1.0, 1e-12) << k;
    if (k % 2 == 0) EXPECT_TRUE(std::equal(s.begin(), s.end(), s.rbegin())) << k;
  }
}

TEST(SuzukiStages, RejectsUnsupportedOrders) {
  for (int k : {0, 3, 5, 7, 12, -2}) EXPECT_THROW(suzuki_stages(k), InvalidArgument) << k;
  EXPECT_THROW(TrotterPlan::make(2, 0), InvalidArgument);
}

TEST(PauliGadget, ZeroAngleIsIdentity) {
  const Matrix u = circuit_unitary(pauli_gadget(PauliTerm::from_label("XYZ", 1.0), 0.0));
  EXPECT_LE((u - Matrix::Identity(8, 8)).norm(), 1e-12);
}

TEST(PauliGadget, SingleZIsRz) {
  const double theta = 0.37;
  const Matrix u = circuit_unitary(pauli_gadget(PauliTerm::from_label("Z", 1.0), theta));
  EXPECT_NEAR(std::abs(u(0, 0) - std::polar(1.0, -theta)), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(u(1, 1) - std::polar(1.0, theta)), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(u(0, 1)) + std::abs(u(1, 0)), 0.0, 1e-12);
}

TEST(PauliGadget, XXMatchesDenseExponential) {
  const auto term = PauliTerm::from_label("XX", 1.0);
  const Matrix u = circuit_unitary(pauli_gadget(term, 0.3));
  EXPECT_LE((u - oracle::pauli_exponential(term, 0.3)).norm(), 1e-9);
  const Eigen::MatrixXcd viaexp = (Complex(0, -0.3) * oracle::kron_term(term)).exp();
  EXPECT_LE((u - viaexp).norm(), 1e-9);
}

TEST(PauliGadget, RandomStringsMatchOracle) {
  Rng rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + static_cast<int>(rng.below(5));
    const auto h = testing::random_pauli_hamiltonian(n, 1, rng);
    const double theta = rng.uniform(-3, 3);
    const Matrix u = circuit_unitary(pauli_gadget(h.terms[0], theta));
    EXPECT_LE((u - oracle::pauli_exponential(h.terms[0], theta)).norm(), 1e-9) << h.terms[0].label();
  }
}

TEST(PauliGadget, IdentityTermRejected) {
  EXPECT_THROW(pauli_gadget(PauliTerm::from_label("II", 1.0), 0.2), InvalidArgument);
}

TEST(PauliGadget, CensusMatchesClosedForm) {
  for (const char* label : {"XX", "YY", "ZZ", "XYZ", "ZIY", "X"}) {
    const auto term = PauliTerm::from_label(label, 1.0);
    EXPECT_EQ(gate_census(pauli_gadget(term, 0.4)), oracle::gadget_census(term, false)) << label;
    QuantumCircuit c(term.num_sites() + 1);
    std::vector<int> q(static_cast<std::size_t>(term.num_sites()));
    std::iota(q.begin(), q.end(), 0);
    append_pauli_gadget(c, term, 0.4, q, term.num_sites());
    EXPECT_EQ(gate_census(c), oracle::gadget_census(term, true)) << label;
  }
}

/// Independent product formula from dense exponentials in gate order.
Matrix product_formula_oracle(const PauliHamiltonian& h, double t, int order, int steps) {
  const Eigen::Index dim = Eigen::Index{1} << h.num_sites;
  Matrix u = Matrix::Identity(dim, dim);
  const double dt = t / steps;
  auto apply = [&](const PauliTerm& term, double theta) {
    u = (oracle::pauli_exponential(term, theta) * u).eval();
  };
  for (int s = 0; s < steps; ++s)
    for (double stage : suzuki_stages(order)) {
      if (order == 1) {
        for (const auto& term : h.terms) apply(term, term.coefficient * stage * dt);
        continue;
      }
      for (const auto& term : h.terms) apply(term, term.coefficient * stage * dt / 2);
      for (auto it = h.terms.rbegin(); it != h.terms.rend(); ++it)
        apply(*it, it->coefficient * stage * dt / 2);
    }
  return u;
}

TEST(TrotterCircuit, MatchesProductFormulaOracle) {
  const auto h = generate_spin_glass(3, kReferenceSeed);
  const double t = heuristic_time(h);
  for (int k : {1, 2, 4, 6})
    for (int r : {1, 3}) {
      const Matrix got = circuit_unitary(trotter_circuit(h, t, TrotterPlan::make(k, r)));
      EXPECT_LE((got - product_formula_oracle(h, t, k, r)).norm(), 1e-10) << k << "," << r;
    }
}

TEST(TrotterCircuit, SingleTermIsExact) {
  const auto h = testing::single_term("XYZ", 0.8);
  for (int k : {1, 2, 4, 6, 8, 10})
    for (int r : {1, 2, 5}) EXPECT_LE(trotter_error(h, 1.3, TrotterPlan::make(k, r)), 1e-10);
}

TEST(TrotterCircuit, CommutingTermsExactAtFirstOrder) {
  PauliHamiltonian h{3, {}};
  h.terms.push_back(PauliTerm::on_sites(3, {0, 1}, Pauli::Z, 1.0));
  h.terms.push_back(PauliTerm::on_sites(3, {1, 2}, Pauli::Z, -1.0));
  h.terms.push_back(PauliTerm::on_sites(3, {0, 2}, Pauli::Z, 1.0));
  EXPECT_LE(trotter_error(h, 0.9, TrotterPlan::make(1, 1)), 1e-10);
}

TEST(TrotterCircuit, MoreStepsReduceError) {
  const auto h = generate_spin_glass(3, kReferenceSeed);
  const double t = heuristic_time(h);
  EXPECT_LT(trotter_error(h, t, TrotterPlan::make(2, 16)), trotter_error(h, t, TrotterPlan::make(2, 2)));
}

TEST(TrotterCircuit, SecondOrderSlope) {
  const auto h = generate_spin_glass(3, kReferenceSeed);
  const double t = heuristic_time(h);
  const double e8 = trotter_error(h, t, TrotterPlan::make(2, 8));
  const double e32 = trotter_error(h, t, TrotterPlan::make(2, 32));
  EXPECT_NEAR(std::log(e32 / e8) / std::log(4.0), -2.0, 0.5);
}

TEST(TrotterCircuit, LongerTimeLargerError) {
  const auto h = generate_spin_glass(3, kReferenceSeed);
  const double t = heuristic_time(h);
  const auto plan = TrotterPlan::make(2, 4);
  EXPECT_LT(trotter_error(h, t, plan), trotter_error(h, 4 * t, plan));
}

TEST(TrotterCircuit, GadgetCountLaw) {
  const auto h = generate_spin_glass(4, 2);
  const int terms = static_cast<int>(h.terms.size());
  for (int k : {1, 2, 4})
    for (int r : {1, 2, 3}) {
      const auto plan = TrotterPlan::make(k, r);
      const auto expected = oracle::trotter_census(h, k, oracle::suzuki_pass_count(k), r, true);
      EXPECT_EQ(gate_census(controlled_trotter_circuit(h, 0.2, plan, 4)), expected);
      const auto sweeps = static_cast<long long>(k == 1 ? 1 : 2) *
                          static_cast<long long>(oracle::suzuki_pass_count(k)) * r;
      EXPECT_EQ(plan.gadget_count(terms), sweeps * terms);
    }
}

TEST(TrotterCircuit, ErrorGuard) {
  EXPECT_THROW(trotter_error(generate_spin_glass(7, 0), 0.1, TrotterPlan::make(1, 1)), ResourceLimit);
}

TEST(ControlledTrotter, ControlOffIsIdentity) {
  Rng rng(21);
  const auto h = generate_spin_glass(3, kReferenceSeed);
  const auto c = controlled_trotter_circuit(h, 0.7, TrotterPlan::make(2, 3), 3);
  const StateVector sys = testing::random_state(3, rng);
  StateVector full = StateVector::Zero(16);
  full.head(8) = sys;  // control qubit 3 in |0>
  const StateVector out = run_circuit(c, full);
  EXPECT_NEAR(std::norm(sys.dot(out.head(8))), 1.0, 1e-9);
  EXPECT_LE(out.tail(8).norm(), 1e-9);
}

TEST(ControlledTrotter, ControlOnMatchesUncontrolled) {
  Rng rng(22);
  const auto h = generate_spin_glass(3, 5);
  const auto plan = TrotterPlan::make(4, 2);
  const StateVector sys = testing::random_state(3, rng);
  StateVector full = StateVector::Zero(16);
  full.tail(8) = sys;  // control qubit 3 in |1>
  const StateVector out = run_circuit(controlled_trotter_circuit(h, 0.5, plan, 3), full);
  const StateVector ref = run_circuit(trotter_circuit(h, 0.5, plan), sys);
  EXPECT_LE((out.tail(8) - ref).norm(), 1e-9);
  EXPECT_LE(out.head(8).norm(), 1e-9);
}

TEST(ControlledTrotter, PlusControlGivesRelativePhase) {
  const auto h = testing::single_term("ZX", 0.6);
  const double t = 0.9;
  const auto c = controlled_trotter_circuit(h, t, TrotterPlan::make(2, 2), 2);
  // Dense controlled exponential: |0><0| (x) I + |1><1| (x) exp(-i H t).
  const Matrix u = oracle::expm_evolution(h, t);
  Matrix cu = Matrix::Identity(8, 8);
  cu.bottomRightCorner(4, 4) = u;
  Rng rng(23);
  const StateVector sys = testing::random_state(2, rng);
  StateVector in(8);
  in << sys, sys;
  in /= std::sqrt(2.0);
  EXPECT_LE((run_circuit(c, in) - cu * in).norm(), 1e-9);
}

TEST(ControlledTrotter, CollisionRejected) {
  const auto h = generate_spin_glass(3, 0);
  EXPECT_THROW(controlled_trotter_circuit(h, 0.1, TrotterPlan::make(1, 1), 1), InvalidArgument);
  EXPECT_THROW(controlled_trotter_circuit(h, 0.1, TrotterPlan::make(1, 1), -1), InvalidArgument);
  QuantumCircuit c(4);
  EXPECT_THROW(append_trotter_evolution(c, h, 0.1, TrotterPlan::make(1, 1), {0, 1, 2}, 2),
               InvalidArgument);
}

}  // namespace
}  // namespace tqpe
