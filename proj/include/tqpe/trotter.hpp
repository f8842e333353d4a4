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
 * Product-formula circuits for exp(-i H t).
 *
 * Order 1 is a single forward sweep over the terms. Every even order is a
 * sequence of symmetric second-order passes S2(c t) = forward half-sweep at
 * c t / 2 followed by the reversed half-sweep at c t / 2. Orders above two
 * use the fractal recursion
 *
 *   S_{2k}(t) = S_{2k-2}(p t)^2 S_{2k-2}((1 - 4p) t) S_{2k-2}(p t)^2,
 *   p = 1 / (4 - 4^{1/(2k-1)}),
 *
 * flattened into a list of pass coefficients c. Adjacent identical gadgets
 * are never merged, so gate counts follow a closed form.
 */

#pragma once

#include <vector>

#include "tqpe/circuit.hpp"
#include "tqpe/pauli_model.hpp"

namespace tqpe {

/// Fractal coefficient p for building order 2*kappa from order 2*kappa - 2.
double suzuki_fraction(int kappa);

/// Pass coefficients for order k in {1, 2, 4, 6, 8, 10}. Sums to 1.
std::vector<double> suzuki_stages(int order);

bool is_supported_order(int order);

struct TrotterPlan {
  int order = 1;
  int steps = 1;
  std::vector<double> stage_coefficients;

  /// Validates (order, steps) and fills the stage list.
  static TrotterPlan make(int order, int steps);

  int passes_per_step() const { return static_cast<int>(stage_coefficients.size()); }
  /// Gadgets in one pass over `terms` Hamiltonian terms.
  int gadgets_per_pass(int terms) const { return order == 1 ? terms : 2 * terms; }
  long long gadget_count(int terms) const {
    return static_cast<long long>(passes_per_step()) * gadgets_per_pass(terms) * steps;
  }
};

/// exp(-i theta P) on a register of term.num_sites() qubits.
QuantumCircuit pauli_gadget(const PauliTerm& term, double theta);

/// Appends exp(-i theta P) with site s on qubit `qubits[s]`. With
/// `control` >= 0 only the central rotation is controlled, so the gadget is
/// the identity when the control is |0>.
void append_pauli_gadget(QuantumCircuit& c, const PauliTerm& term, double theta,
                         const std::vector<int>& qubits, int control = -1);

/// Appends the full product formula for exp(-i H t).
void append_trotter_evolution(QuantumCircuit& c, const PauliHamiltonian& h, double t,
                              const TrotterPlan& plan, const std::vector<int>& qubits,
                              int control = -1);

/// Product-formula circuit on qubits 0..n-1.
QuantumCircuit trotter_circuit(const PauliHamiltonian& h, double t, const TrotterPlan& plan);

/// Same gadget sequence with every central RZ replaced by CRZ on `control`.
/// System sites sit on qubits 0..n-1; the register has max(n, control + 1)
/// qubits.
QuantumCircuit controlled_trotter_circuit(const PauliHamiltonian& h, double t,
                                          const TrotterPlan& plan, int control);

inline constexpr int kMaxTrotterErrorSites = 6;

/// Frobenius distance between exp(-i H t) and the product-formula unitary.
double trotter_error(const PauliHamiltonian& h, double t, const TrotterPlan& plan);

}  // namespace tqpe
