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

#include "tqpe/initial_states.hpp"

#include <cmath>
#include <numeric>

#include <Eigen/QR>

namespace tqpe {

std::string_view state_kind_name(StateKind kind) {
  switch (kind) {
    case StateKind::all_zero: return "all_zero";
    case StateKind::ghz: return "ghz";
    case StateKind::clique_graph: return "clique_graph";
    case StateKind::quantum_volume_su4: return "quantum_volume_su4";
    case StateKind::random_u3: return "random_u3";
    case StateKind::staggered_x: return "staggered_x";
    case StateKind::ground_eigenstate: return "ground_eigenstate";
  }
  return "?";
}

StateKind parse_state_kind(std::string_view name) {
  for (StateKind k : {StateKind::all_zero, StateKind::ghz, StateKind::clique_graph,
                      StateKind::quantum_volume_su4, StateKind::random_u3, StateKind::staggered_x,
                      StateKind::ground_eigenstate})
    if (state_kind_name(k) == name) return k;
  throw InvalidArgument("unknown initial state kind '" + std::string(name) + "'");
}

const std::vector<StateKind>& preparable_state_kinds() {
  static const std::vector<StateKind> kinds{StateKind::all_zero,           StateKind::ghz,
                                            StateKind::clique_graph,       StateKind::quantum_volume_su4,
                                            StateKind::random_u3,          StateKind::staggered_x};
  return kinds;
}

Matrix4 haar_su4(Rng& rng) {
  Matrix4 z;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) {
      const double re = rng.gaussian();
      const double im = rng.gaussian();
      z(r, c) = Complex(re, im) / std::sqrt(2.0);
    }
  Eigen::HouseholderQR<Matrix4> qr(z);
  Matrix4 q = qr.householderQ();
  const Matrix4 r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int c = 0; c < 4; ++c) {
    const double mag = std::abs(r(c, c));
    if (mag > 0.0) q.col(c) *= r(c, c) / mag;
  }
  const Complex det = q.determinant();
  q /= std::pow(det, 0.25);
  return q;
}

QuantumCircuit build_initial_state(StateKind kind, int n, std::uint64_t seed) {
  if (n < 1) throw InvalidArgument("build_initial_state: n must be at least 1");
  QuantumCircuit c(n);
  switch (kind) {
    case StateKind::all_zero: break;
    case StateKind::ghz:
      c.append(GateOp::h(0));
      for (int q = 0; q + 1 < n; ++q) c.append(GateOp::cx(q, q + 1));
      break;
    case StateKind::clique_graph:
      for (int q = 0; q < n; ++q) c.append(GateOp::h(q));
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) c.append(GateOp::cz(i, j));
      break;
    case StateKind::quantum_volume_su4: {
      Rng rng(seed);
      std::vector<int> perm(static_cast<std::size_t>(n));
      for (int layer = 0; layer < n; ++layer) {
        std::iota(perm.begin(), perm.end(), 0);
        for (int i = n - 1; i > 0; --i)
          std::swap(perm[static_cast<std::size_t>(i)],
                    perm[static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(i) + 1))]);
        for (int p = 0; p + 1 < n; p += 2)
          c.append(GateOp::two_qubit_unitary(perm[static_cast<std::size_t>(p)],
                                             perm[static_cast<std::size_t>(p) + 1], haar_su4(rng)));
      }
      break;
    }
    case StateKind::random_u3: {
      Rng rng(seed);
      for (int q = 0; q < n; ++q) {
        const double theta = rng.uniform(0.0, kPi);
        const double phi = rng.uniform(0.0, 2.0 * kPi);
        const double lambda = rng.uniform(0.0, 2.0 * kPi);
        c.append(GateOp::u3(q, theta, phi, lambda));
      }
      break;
    }
    case StateKind::staggered_x:
      for (int q = 1; q < n; q += 2) c.append(GateOp::x(q));
      break;
    case StateKind::ground_eigenstate:
      throw InvalidArgument("build_initial_state: ground_eigenstate has no preparation circuit");
  }
  return c;
}

}  // namespace tqpe
