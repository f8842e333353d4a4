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

#pragma once

#include <cstdint>

#include "tqpe/core.hpp"
#include "tqpe/pauli_model.hpp"
#include "tqpe/random.hpp"

namespace tqpe::testing {

/// Spin-glass instance used throughout the suite: n = 3, seed 16. It is the
/// first seed whose all-zero state has ground overlap >= 0.5 (chi = 0.75).
inline constexpr std::uint64_t kReferenceSeed = 16;

inline StateVector random_state(int qubits, Rng& rng) {
  StateVector v(static_cast<Eigen::Index>(dimension_for(qubits)));
  for (Eigen::Index i = 0; i < v.size(); ++i) v[i] = Complex(rng.gaussian(), rng.gaussian());
  return v.normalized();
}

/// Random Pauli strings with at least one active site and real coefficients.
inline PauliHamiltonian random_pauli_hamiltonian(int n, int terms, Rng& rng) {
  PauliHamiltonian h{n, {}};
  for (int k = 0; k < terms; ++k) {
    PauliTerm t;
    t.axes.assign(static_cast<std::size_t>(n), Pauli::I);
    bool any = false;
    for (auto& a : t.axes) {
      a = static_cast<Pauli>(rng.below(4));
      any = any || a != Pauli::I;
    }
    if (!any) t.axes[rng.below(static_cast<std::uint64_t>(n))] = static_cast<Pauli>(1 + rng.below(3));
    t.coefficient = rng.uniform(-1.5, 1.5);
    h.terms.push_back(std::move(t));
  }
  return h;
}

inline PauliHamiltonian single_term(const char* label, double coeff) {
  const PauliTerm t = PauliTerm::from_label(label, coeff);
  return PauliHamiltonian{t.num_sites(), {t}};
}

}  // namespace tqpe::testing
