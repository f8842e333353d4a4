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

#include "tqpe/qpe.hpp"

#include <cmath>
#include <numeric>

#include "tqpe/spectral_oracle.hpp"

namespace tqpe {

std::string_view qpe_mode_name(QpeMode mode) {
  return mode == QpeMode::trotterized ? "trotterized" : "exact_unitary";
}

QpeMode parse_qpe_mode(std::string_view name) {
  if (name == "trotterized") return QpeMode::trotterized;
  if (name == "exact_unitary") return QpeMode::exact_unitary;
  throw InvalidArgument("unknown QPE mode '" + std::string(name) + "'");
}

void QpeConfig::validate(int num_sites) const {
  if (m_prec < 1 || m_prec > kMaxPhaseBits)
    throw InvalidArgument("QPE: m_prec must be in 1.." + std::to_string(kMaxPhaseBits));
  if (m_prec + num_sites > kMaxQpeQubits)
    throw ResourceLimit("QPE: m_prec + n = " + std::to_string(m_prec + num_sites) +
                        " exceeds the " + std::to_string(kMaxQpeQubits) + "-qubit register guard");
  if (!(t > 0.0) || !std::isfinite(t)) throw InvalidArgument("QPE: t must be positive and finite");
  if (shots < 1) throw InvalidArgument("QPE: shots must be at least 1");
  if (!is_supported_order(plan.order) || plan.steps < 1)
    throw InvalidArgument("QPE: invalid Trotter plan");
  if (mode == QpeMode::exact_unitary && num_sites > kMaxExactUnitarySites)
    throw ResourceLimit("QPE: exact_unitary mode supports at most " +
                        std::to_string(kMaxExactUnitarySites) + " sites");
}

std::vector<int> phase_readout_qubits(int m) {
  std::vector<int> q(static_cast<std::size_t>(m));
  std::iota(q.begin(), q.end(), 0);
  return q;
}

QuantumCircuit inverse_qft_circuit(int m) {
  if (m < 1 || m > kMaxPhaseBits)
    throw InvalidArgument("inverse_qft_circuit: m must be in 1.." + std::to_string(kMaxPhaseBits));
  QuantumCircuit c(m);
  for (int target = m - 1; target >= 0; --target) {
    for (int control = m - 1; control > target; --control)
      c.append(GateOp::cp(control, target, -kPi / std::ldexp(1.0, control - target)));
    c.append(GateOp::h(target));
  }
  return c;
}

QuantumCircuit qft_circuit(int m) { return inverse(inverse_qft_circuit(m)); }

namespace {

std::vector<int> system_qubits(int m, int n) {
  std::vector<int> q(static_cast<std::size_t>(n));
  std::iota(q.begin(), q.end(), m);
  return q;
}

void append_phase_hadamards(QuantumCircuit& c, int m) {
  for (int j = 0; j < m; ++j) c.append(GateOp::h(j));
}

void append_inverse_qft(QuantumCircuit& c, int m) {
  c.append_mapped(inverse_qft_circuit(m), phase_readout_qubits(m));
}

StateVector prepared_register(const PauliHamiltonian& h, const QpeConfig& cfg) {
  const int m = cfg.m_prec;
  const int n = h.num_sites;
  StateVector system;
  if (cfg.initial_state == StateKind::ground_eigenstate) {
    system = exact_diagonalize(h).eigenvectors.col(0);
  } else {
    system = run_circuit(build_initial_state(cfg.initial_state, n, cfg.state_seed), zero_state(n));
  }
  // |system> (x) |0...0>_phase with the phase register in the low bits.
  StateVector psi = StateVector::Zero(static_cast<Eigen::Index>(dimension_for(m + n)));
  for (Eigen::Index s = 0; s < system.size(); ++s) psi[s << m] = system[s];
  return psi;
}

QpeResult sample_phase_register(const StateVector& psi, const QpeConfig& cfg) {
  const auto qubits = phase_readout_qubits(cfg.m_prec);
  QpeResult r;
  r.probabilities = marginal_probabilities(psi, qubits);
  const auto outcomes = sample_outcomes(psi, qubits, cfg.shots, cfg.shot_seed);
  r.histogram = make_histogram(qubits, outcomes);
  r.samples.reserve(outcomes.size());
  for (std::uint64_t o : outcomes) r.samples.push_back(decode_phase(to_bitstring(o, cfg.m_prec), cfg.t));
  return r;
}

}  // namespace

QuantumCircuit build_qpe_circuit(const PauliHamiltonian& h, const QpeConfig& cfg) {
  cfg.validate(h.num_sites);
  if (cfg.mode != QpeMode::trotterized)
    throw InvalidArgument("build_qpe_circuit: only trotterized mode has a gate-level circuit");
  const int m = cfg.m_prec;
  const int n = h.num_sites;
  const auto sys = system_qubits(m, n);
  QuantumCircuit c(m + n);
  c.append_mapped(build_initial_state(cfg.initial_state, n, cfg.state_seed), sys);
  append_phase_hadamards(c, m);
  for (int j = 0; j < m; ++j)
    append_trotter_evolution(c, h, std::ldexp(cfg.t, j), cfg.plan, sys, j);
  append_inverse_qft(c, m);
  return c;
}

StateVector qpe_final_state(const PauliHamiltonian& h, const QpeConfig& cfg) {
  cfg.validate(h.num_sites);
  const int m = cfg.m_prec;
  const int n = h.num_sites;
  const auto sys = system_qubits(m, n);

  if (cfg.mode == QpeMode::trotterized && cfg.initial_state != StateKind::ground_eigenstate)
    return run_circuit(build_qpe_circuit(h, cfg), zero_state(m + n));

  StateVector psi = prepared_register(h, cfg);
  QuantumCircuit hadamards(m + n);
  append_phase_hadamards(hadamards, m);
  run_in_place<double>(hadamards, psi);

  if (cfg.mode == QpeMode::trotterized) {
    QuantumCircuit body(m + n);
    for (int j = 0; j < m; ++j)
      append_trotter_evolution(body, h, std::ldexp(cfg.t, j), cfg.plan, sys, j);
    run_in_place<double>(body, psi);
  } else {
    const SpectralDecomposition s = exact_diagonalize(h);
    for (int j = 0; j < m; ++j)
      apply_controlled_dense(psi, j, sys, evolution_operator(s, std::ldexp(cfg.t, j)));
  }

  QuantumCircuit iqft(m + n);
  append_inverse_qft(iqft, m);
  run_in_place<double>(iqft, psi);
  return psi;
}

QpeResult run_qpe(const PauliHamiltonian& h, const QpeConfig& cfg) {
  return sample_phase_register(qpe_final_state(h, cfg), cfg);
}

QpeResult exact_unitary_qpe(const PauliHamiltonian& h, const QpeConfig& cfg) {
  if (cfg.mode != QpeMode::exact_unitary)
    throw InvalidArgument("exact_unitary_qpe: config mode must be exact_unitary");
  return run_qpe(h, cfg);
}

PhaseSample decode_phase(const std::string& bits, double t) {
  if (bits.empty()) throw InvalidArgument("decode_phase: empty bitstring");
  if (!(t > 0.0)) throw InvalidArgument("decode_phase: t must be positive");
  double phi = 0.0;
  double weight = 0.5;
  for (char ch : bits) {
    if (ch != '0' && ch != '1')
      throw InvalidArgument(std::string("decode_phase: non-binary character '") + ch + "'");
    if (ch == '1') phi += weight;
    weight *= 0.5;
  }
  return {bits, phi, -(2.0 * kPi / t) * phi};
}

double phase_of_energy(double energy, double t) {
  const double y = -energy * t / (2.0 * kPi);
  return y - std::floor(y);
}

std::string optimal_phase_bitstring(double e0, double t, int m) {
  if (m < 1 || m > 62) throw InvalidArgument("optimal_phase_bitstring: bad bit count");
  if (!(t > 0.0)) throw InvalidArgument("optimal_phase_bitstring: t must be positive");
  if (t * std::abs(e0) >= 2.0 * kPi)
    throw PhaseAliasing("optimal_phase_bitstring: t |E0| >= 2 pi, the ground phase wraps");
  const double grid = std::ldexp(1.0, m);
  const auto x = static_cast<std::uint64_t>(std::floor(grid * phase_of_energy(e0, t) + 0.5));
  return to_bitstring(x % dimension_for(m), m);
}

}  // namespace tqpe
