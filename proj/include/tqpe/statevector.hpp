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

/**
 * @file
 * Gate-by-gate statevector simulation. Every gate is applied as a direct
 * update of amplitude pairs (one-qubit gates) or amplitude quadruples
 * (two-qubit gates); no full-register matrices are formed.
 */

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "tqpe/circuit.hpp"
#include "tqpe/core.hpp"

namespace tqpe {

namespace detail {

/// Inserts a zero bit at position `bit` of `x`.
inline std::uint64_t insert_zero_bit(std::uint64_t x, int bit) {
  const std::uint64_t low = x & ((std::uint64_t{1} << bit) - 1);
  return ((x >> bit) << (bit + 1)) | low;
}

template <typename Real>
void check_qubit(const StateVectorT<Real>& psi, int q) {
  if (q < 0 || (std::uint64_t{1} << q) >= static_cast<std::uint64_t>(psi.size()))
    throw InvalidArgument("statevector: qubit index out of range");
}

}  // namespace detail

template <typename Real>
using Matrix2T = Eigen::Matrix<std::complex<Real>, 2, 2>;
template <typename Real>
using Matrix4T = Eigen::Matrix<std::complex<Real>, 4, 4>;

template <typename Real>
void apply_matrix1(StateVectorT<Real>& psi, int q, const Matrix2T<Real>& u) {
  detail::check_qubit(psi, q);
  const std::uint64_t dim = psi.size();
  const std::uint64_t stride = std::uint64_t{1} << q;
  for (std::uint64_t base = 0; base < dim; base += 2 * stride) {
    for (std::uint64_t i = base; i < base + stride; ++i) {
      const auto a = psi[i];
      const auto b = psi[i + stride];
      psi[i] = u(0, 0) * a + u(0, 1) * b;
      psi[i + stride] = u(1, 0) * a + u(1, 1) * b;
    }
  }
}

/// Applies `u` in the local basis bit(q0) + 2 * bit(q1).
template <typename Real>
void apply_matrix2(StateVectorT<Real>& psi, int q0, int q1, const Matrix4T<Real>& u) {
  detail::check_qubit(psi, q0);
  detail::check_qubit(psi, q1);
  if (q0 == q1) throw InvalidArgument("apply_matrix2: repeated qubit");
  const int lo = std::min(q0, q1);
  const int hi = std::max(q0, q1);
  const std::uint64_t b0 = std::uint64_t{1} << q0;
  const std::uint64_t b1 = std::uint64_t{1} << q1;
  const std::uint64_t quarter = static_cast<std::uint64_t>(psi.size()) >> 2;
  std::complex<Real> in[4];
  for (std::uint64_t k = 0; k < quarter; ++k) {
    const std::uint64_t i = detail::insert_zero_bit(detail::insert_zero_bit(k, lo), hi);
    const std::uint64_t idx[4] = {i, i | b0, i | b1, i | b0 | b1};
    for (int r = 0; r < 4; ++r) in[r] = psi[idx[r]];
    for (int r = 0; r < 4; ++r)
      psi[idx[r]] = u(r, 0) * in[0] + u(r, 1) * in[1] + u(r, 2) * in[2] + u(r, 3) * in[3];
  }
}

template <typename Real>
Matrix2T<Real> u3_matrix(Real theta, Real phi, Real lambda) {
  using C = std::complex<Real>;
  const Real c = std::cos(theta / 2), s = std::sin(theta / 2);
  Matrix2T<Real> u;
  u << C(c, 0), -std::polar(s, lambda), std::polar(s, phi), std::polar(c, phi + lambda);
  return u;
}

template <typename Real>
void apply_gate(StateVectorT<Real>& psi, const GateOp& op) {
  using C = std::complex<Real>;
  const int a = op.qubits[0];
  const int b = op.qubits[1];
  const Real angle = static_cast<Real>(op.params[0]);
  const std::uint64_t dim = psi.size();
  switch (op.kind) {
    case GateKind::H: {
      detail::check_qubit(psi, a);
      const Real s = Real(1) / std::sqrt(Real(2));
      const std::uint64_t stride = std::uint64_t{1} << a;
      for (std::uint64_t base = 0; base < dim; base += 2 * stride)
        for (std::uint64_t i = base; i < base + stride; ++i) {
          const C x = psi[i], y = psi[i + stride];
          psi[i] = s * (x + y);
          psi[i + stride] = s * (x - y);
        }
      return;
    }
    case GateKind::X: {
      detail::check_qubit(psi, a);
      const std::uint64_t stride = std::uint64_t{1} << a;
      for (std::uint64_t base = 0; base < dim; base += 2 * stride)
        for (std::uint64_t i = base; i < base + stride; ++i) std::swap(psi[i], psi[i + stride]);
      return;
    }
    case GateKind::RZ: {
      detail::check_qubit(psi, a);
      const C p0 = std::polar(Real(1), -angle / 2), p1 = std::polar(Real(1), angle / 2);
      const std::uint64_t bit = std::uint64_t{1} << a;
      for (std::uint64_t i = 0; i < dim; ++i) psi[i] *= (i & bit) ? p1 : p0;
      return;
    }
    case GateKind::U3:
      apply_matrix1<Real>(psi, a, u3_matrix<Real>(angle, static_cast<Real>(op.params[1]),
                                                   static_cast<Real>(op.params[2])));
      return;
    case GateKind::CX: {
      detail::check_qubit(psi, a);
      detail::check_qubit(psi, b);
      const std::uint64_t cb = std::uint64_t{1} << a, tb = std::uint64_t{1} << b;
      for (std::uint64_t i = 0; i < dim; ++i)
        if ((i & cb) && !(i & tb)) std::swap(psi[i], psi[i | tb]);
      return;
    }
    case GateKind::CZ: {
      detail::check_qubit(psi, a);
      detail::check_qubit(psi, b);
      const std::uint64_t mask = (std::uint64_t{1} << a) | (std::uint64_t{1} << b);
      for (std::uint64_t i = 0; i < dim; ++i)
        if ((i & mask) == mask) psi[i] = -psi[i];
      return;
    }
    case GateKind::CRZ: {
      detail::check_qubit(psi, a);
      detail::check_qubit(psi, b);
      const C p0 = std::polar(Real(1), -angle / 2), p1 = std::polar(Real(1), angle / 2);
      const std::uint64_t cb = std::uint64_t{1} << a, tb = std::uint64_t{1} << b;
      for (std::uint64_t i = 0; i < dim; ++i)
        if (i & cb) psi[i] *= (i & tb) ? p1 : p0;
      return;
    }
    case GateKind::CP: {
      detail::check_qubit(psi, a);
      detail::check_qubit(psi, b);
      const C p = std::polar(Real(1), angle);
      const std::uint64_t mask = (std::uint64_t{1} << a) | (std::uint64_t{1} << b);
      for (std::uint64_t i = 0; i < dim; ++i)
        if ((i & mask) == mask) psi[i] *= p;
      return;
    }
    case GateKind::TWO_QUBIT_UNITARY:
      apply_matrix2<Real>(psi, a, b, op.unitary->template cast<C>());
      return;
  }
}

template <typename Real>
void run_in_place(const QuantumCircuit& c, StateVectorT<Real>& psi) {
  if (static_cast<std::uint64_t>(psi.size()) != dimension_for(c.num_qubits()))
    throw InvalidArgument("run_circuit: state dimension " + std::to_string(psi.size()) +
                          " does not match a " + std::to_string(c.num_qubits()) +
                          "-qubit circuit");
  for (const GateOp& op : c.ops()) apply_gate<Real>(psi, op);
}

/// Applies the ops of `c` in order to a copy of `initial`.
StateVector run_circuit(const QuantumCircuit& c, const StateVector& initial);

StateVector basis_state(int num_qubits, std::uint64_t index);
StateVector zero_state(int num_qubits);

/// Applies `u` to the qubits `targets` (targets[0] is the least-significant
/// local bit) on the branch where `control` is |1>. `control` < 0 applies
/// `u` unconditionally.
void apply_controlled_dense(StateVector& psi, int control, const std::vector<int>& targets,
                            const Matrix& u);

inline constexpr int kMaxUnitaryQubits = 6;

/// Column j is the circuit applied to basis state j.
Matrix circuit_unitary(const QuantumCircuit& c);

/// Exact outcome distribution over `qubits`. Outcome integer has the first
/// listed qubit as its most significant bit.
std::vector<double> marginal_probabilities(const StateVector& psi, const std::vector<int>& qubits);

/// Counts of measured bitstrings on a declared qubit list. The first listed
/// qubit is the leftmost (most significant) character of every key.
struct ShotHistogram {
  std::vector<int> qubits;
  std::map<std::string, std::uint64_t> counts;
  std::uint64_t total_shots = 0;

  int width() const { return static_cast<int>(qubits.size()); }
  std::uint64_t count(const std::string& key) const;
  double frequency(const std::string& key) const;
};

std::string to_bitstring(std::uint64_t value, int width);
std::uint64_t from_bitstring(const std::string& bits);

/// Born-rule samples of the outcome integer (see marginal_probabilities),
/// in draw order. Deterministic in `seed`.
std::vector<std::uint64_t> sample_outcomes(const StateVector& psi, const std::vector<int>& qubits,
                                           std::uint64_t shots, std::uint64_t seed);

ShotHistogram sample_measurements(const StateVector& psi, const std::vector<int>& qubits,
                                  std::uint64_t shots, std::uint64_t seed);

ShotHistogram make_histogram(const std::vector<int>& qubits,
                             const std::vector<std::uint64_t>& outcomes);

}  // namespace tqpe
