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

// Independent reference computations used only by tests. Nothing here calls
// into the library's numerical kernels.

#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <vector>

#include <Eigen/Dense>
#include <unsupported/Eigen/KroneckerProduct>
#include <unsupported/Eigen/MatrixFunctions>

#include "tqpe/circuit.hpp"
#include "tqpe/pauli_model.hpp"

namespace tqpe::oracle {

inline Eigen::Matrix2cd pauli_matrix(Pauli p) {
  using C = std::complex<double>;
  Eigen::Matrix2cd m;
  switch (p) {
    case Pauli::I: m << 1, 0, 0, 1; break;
    case Pauli::X: m << 0, 1, 1, 0; break;
    case Pauli::Y: m << 0, C(0, -1), C(0, 1), 0; break;
    case Pauli::Z: m << 1, 0, 0, -1; break;
  }
  return m;
}

/// P_{n-1} (x) ... (x) P_0, so site 0 acts on the least-significant index bit.
inline Eigen::MatrixXcd kron_term(const PauliTerm& term) {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(1, 1);
  for (int s = term.num_sites() - 1; s >= 0; --s) {
    Eigen::MatrixXcd next = Eigen::kroneckerProduct(m, pauli_matrix(term.axes[s])).eval();
    m = std::move(next);
  }
  return m;
}

inline Eigen::MatrixXcd kron_hamiltonian(const PauliHamiltonian& h) {
  const Eigen::Index dim = Eigen::Index{1} << h.num_sites;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto& t : h.terms) m += t.coefficient * kron_term(t);
  return m;
}

/// exp(-i theta P) = cos(theta) I - i sin(theta) P for a Pauli string P.
inline Eigen::MatrixXcd pauli_exponential(const PauliTerm& term, double theta) {
  const Eigen::MatrixXcd p = kron_term(term);
  return std::cos(theta) * Eigen::MatrixXcd::Identity(p.rows(), p.cols()) -
         std::complex<double>(0, std::sin(theta)) * p;
}

/// exp(-i H t) by the generic matrix exponential.
inline Eigen::MatrixXcd expm_evolution(const PauliHamiltonian& h, double t) {
  const Eigen::MatrixXcd a = std::complex<double>(0, -t) * kron_hamiltonian(h);
  return a.exp();
}

/// Smallest eigenvalue by power iteration on (c I - H), c = sum |coeff|.
/// Converges to E0 even with a degenerate ground space.
inline double power_iteration_e0(const PauliHamiltonian& h, int iterations = 20000) {
  const Eigen::MatrixXcd hm = kron_hamiltonian(h);
  double c = 0.0;
  for (const auto& t : h.terms) c += std::abs(t.coefficient);
  const Eigen::MatrixXcd shifted = c * Eigen::MatrixXcd::Identity(hm.rows(), hm.cols()) - hm;
  Eigen::VectorXcd v(hm.rows());
  for (Eigen::Index i = 0; i < v.size(); ++i)
    v[i] = std::complex<double>(1.0 + 0.01 * static_cast<double>(i % 7), 0.003 * static_cast<double>(i % 5));
  v.normalize();
  double lambda = 0.0;
  for (int it = 0; it < iterations; ++it) {
    Eigen::VectorXcd w = shifted * v;
    const double next = v.dot(w).real();
    v = w.normalized();
    if (it > 50 && std::abs(next - lambda) < 1e-14) {
      lambda = next;
      break;
    }
    lambda = next;
  }
  return c - lambda;
}

/// min_x |E0 - (-(2 pi / t) x / 2^m)| by enumeration.
inline double brute_digitization_error(double e0, double t, int m) {
  const std::uint64_t grid = std::uint64_t{1} << m;
  double best = std::numeric_limits<double>::infinity();
  for (std::uint64_t x = 0; x < grid; ++x) {
    const double e = -(2.0 * M_PI / t) * static_cast<double>(x) / static_cast<double>(grid);
    best = std::min(best, std::abs(e0 - e));
  }
  return best;
}

/// Grid index nearest to phi in circular distance. Ties go to the larger index.
inline std::uint64_t brute_nearest_grid_index(double phi, int m) {
  const std::uint64_t grid = std::uint64_t{1} << m;
  std::uint64_t best = 0;
  double best_d = 2.0;
  for (std::uint64_t x = 0; x < grid; ++x) {
    double d = std::abs(phi - static_cast<double>(x) / static_cast<double>(grid));
    d = std::min(d, 1.0 - d);
    if (d <= best_d + 1e-15) {
      best = x;
      best_d = std::min(d, best_d);
    }
  }
  return best;
}

/// Phase-line probability as |(1/2^m) sum_k exp(2 pi i k (phi - x/2^m))|^2.
inline double phase_line_direct(double phi, std::uint64_t x, int m) {
  const std::uint64_t grid = std::uint64_t{1} << m;
  const double delta = phi - static_cast<double>(x) / static_cast<double>(grid);
  std::complex<double> acc = 0.0;
  for (std::uint64_t k = 0; k < grid; ++k)
    acc += std::polar(1.0, 2.0 * M_PI * static_cast<double>(k) * delta);
  acc /= static_cast<double>(grid);
  return std::norm(acc);
}

/// Gate cost of one Pauli gadget: X costs two H, Y costs two H and two RZ;
/// the ladder adds 2 (w - 1) CX; the pivot is one RZ or one CRZ.
inline GateCensus gadget_census(const PauliTerm& term, bool controlled) {
  std::uint64_t one = 0, two = 0, weight = 0;
  for (Pauli p : term.axes) {
    if (p == Pauli::I) continue;
    ++weight;
    if (p == Pauli::X) one += 2;
    if (p == Pauli::Y) one += 4;
  }
  two += 2 * (weight - 1);
  (controlled ? two : one) += 1;
  return {one, two};
}

/// Closed-form census of a product formula for (order k, r) given the number
/// of second-order passes per step.
inline GateCensus trotter_census(const PauliHamiltonian& h, int order, std::uint64_t passes,
                                 int steps, bool controlled) {
  GateCensus sweep{};
  for (const auto& t : h.terms) sweep += gadget_census(t, controlled);
  const std::uint64_t sweeps_per_pass = order == 1 ? 1 : 2;
  const std::uint64_t reps = sweeps_per_pass * passes * static_cast<std::uint64_t>(steps);
  return {sweep.one_qubit * reps, sweep.two_qubit * reps};
}

/// Number of second-order passes of an order-k Suzuki formula: 5^{k/2 - 1}.
inline std::uint64_t suzuki_pass_count(int order) {
  if (order <= 2) return 1;
  std::uint64_t p = 1;
  for (int i = 2; i < order; i += 2) p *= 5;
  return p;
}

}  // namespace tqpe::oracle
