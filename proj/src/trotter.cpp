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

#include "tqpe/trotter.hpp"

#include <cmath>
#include <numeric>

#include "tqpe/spectral_oracle.hpp"
#include "tqpe/statevector.hpp"

namespace tqpe {

double suzuki_fraction(int kappa) {
  return 1.0 / (4.0 - std::pow(4.0, 1.0 / (2.0 * kappa - 1.0)));
}

bool is_supported_order(int order) {
  return order == 1 || order == 2 || order == 4 || order == 6 || order == 8 || order == 10;
}

std::vector<double> suzuki_stages(int order) {
  if (!is_supported_order(order))
    throw InvalidArgument("suzuki_stages: unsupported order " + std::to_string(order) +
                          " (expected 1, 2, 4, 6, 8 or 10)");
  std::vector<double> stages{1.0};
  for (int kappa = 2; 2 * kappa <= order; ++kappa) {
    const double p = suzuki_fraction(kappa);
    std::vector<double> next;
    next.reserve(5 * stages.size());
    for (double w : {p, p, 1.0 - 4.0 * p, p, p})
      for (double s : stages) next.push_back(w * s);
    stages = std::move(next);
  }
  return stages;
}

TrotterPlan TrotterPlan::make(int order, int steps) {
  if (steps < 1) throw InvalidArgument("TrotterPlan: steps must be at least 1");
  return {order, steps, suzuki_stages(order)};
}

void append_pauli_gadget(QuantumCircuit& c, const PauliTerm& term, double theta,
                         const std::vector<int>& qubits, int control) {
  const std::vector<int> sites = term.active_sites();
  if (sites.empty()) throw InvalidArgument("pauli_gadget: all-identity term");
  std::vector<int> active;
  for (int s : sites) active.push_back(qubits.at(static_cast<std::size_t>(s)));

  for (std::size_t k = 0; k < sites.size(); ++k) {
    switch (term.axes[static_cast<std::size_t>(sites[k])]) {
      case Pauli::X: c.append(GateOp::h(active[k])); break;
      case Pauli::Y:
        c.append(GateOp::rz(active[k], -kPi / 2));
        c.append(GateOp::h(active[k]));
        break;
      default: break;
    }
  }
  for (std::size_t k = 0; k + 1 < active.size(); ++k) c.append(GateOp::cx(active[k], active[k + 1]));
  if (control >= 0)
    c.append(GateOp::crz(control, active.back(), 2.0 * theta));
  else
    c.append(GateOp::rz(active.back(), 2.0 * theta));
  for (std::size_t k = active.size() - 1; k > 0; --k) c.append(GateOp::cx(active[k - 1], active[k]));
  for (std::size_t k = 0; k < sites.size(); ++k) {
    switch (term.axes[static_cast<std::size_t>(sites[k])]) {
      case Pauli::X: c.append(GateOp::h(active[k])); break;
      case Pauli::Y:
        c.append(GateOp::h(active[k]));
        c.append(GateOp::rz(active[k], kPi / 2));
        break;
      default: break;
    }
  }
}

QuantumCircuit pauli_gadget(const PauliTerm& term, double theta) {
  QuantumCircuit c(term.num_sites());
  std::vector<int> qubits(static_cast<std::size_t>(term.num_sites()));
  std::iota(qubits.begin(), qubits.end(), 0);
  append_pauli_gadget(c, term, theta, qubits);
  return c;
}

void append_trotter_evolution(QuantumCircuit& c, const PauliHamiltonian& h, double t,
                              const TrotterPlan& plan, const std::vector<int>& qubits,
                              int control) {
  if (!std::isfinite(t)) throw InvalidArgument("trotter: time must be finite");
  if (static_cast<int>(qubits.size()) < h.num_sites)
    throw InvalidArgument("trotter: qubit map shorter than the site count");
  for (int q : qubits)
    if (q == control) throw InvalidArgument("trotter: control qubit collides with a system qubit");
  const double dt = t / plan.steps;
  for (int step = 0; step < plan.steps; ++step) {
    for (double stage : plan.stage_coefficients) {
      if (plan.order == 1) {
        for (const PauliTerm& term : h.terms)
          append_pauli_gadget(c, term, term.coefficient * stage * dt, qubits, control);
        continue;
      }
      const double half = 0.5 * stage * dt;
      for (const PauliTerm& term : h.terms)
        append_pauli_gadget(c, term, term.coefficient * half, qubits, control);
      for (auto it = h.terms.rbegin(); it != h.terms.rend(); ++it)
        append_pauli_gadget(c, *it, it->coefficient * half, qubits, control);
    }
  }
}

QuantumCircuit trotter_circuit(const PauliHamiltonian& h, double t, const TrotterPlan& plan) {
  QuantumCircuit c(h.num_sites);
  std::vector<int> qubits(static_cast<std::size_t>(h.num_sites));
  std::iota(qubits.begin(), qubits.end(), 0);
  append_trotter_evolution(c, h, t, plan, qubits);
  return c;
}

QuantumCircuit controlled_trotter_circuit(const PauliHamiltonian& h, double t,
                                          const TrotterPlan& plan, int control) {
  if (control < 0) throw InvalidArgument("controlled_trotter_circuit: negative control index");
  if (control < h.num_sites)
    throw InvalidArgument("controlled_trotter_circuit: control qubit " + std::to_string(control) +
                          " collides with a system qubit");
  QuantumCircuit c(std::max(h.num_sites, control + 1));
  std::vector<int> qubits(static_cast<std::size_t>(h.num_sites));
  std::iota(qubits.begin(), qubits.end(), 0);
  append_trotter_evolution(c, h, t, plan, qubits, control);
  return c;
}

double trotter_error(const PauliHamiltonian& h, double t, const TrotterPlan& plan) {
  if (h.num_sites > kMaxTrotterErrorSites)
    throw ResourceLimit("trotter_error: at most " + std::to_string(kMaxTrotterErrorSites) +
                        " sites supported, got " + std::to_string(h.num_sites));
  const Matrix ideal = evolution_operator(exact_diagonalize(h), t);
  const Matrix approx = circuit_unitary(trotter_circuit(h, t, plan));
  return (ideal - approx).norm();
}

}  // namespace tqpe
