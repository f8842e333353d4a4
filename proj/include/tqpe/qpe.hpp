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
 * Textbook quantum phase estimation for ground-state energies.
 *
 * Register layout: phase qubits 0..m-1, system qubits m..m+n-1. Phase qubit
 * j controls exp(-i H t 2^j). The inverse QFT is emitted without swap gates,
 * so after it phase qubit j holds bit phi_{j+1} of phi = 0.phi_1 phi_2 ...
 * Measuring the phase qubits in the order [0, 1, ..., m-1] therefore yields
 * the string "phi_1 phi_2 ... phi_m", and a string decodes to the energy
 * -(2 pi / t) * 0.phi_1 phi_2 ... phi_m.
 */

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tqpe/circuit.hpp"
#include "tqpe/initial_states.hpp"
#include "tqpe/pauli_model.hpp"
#include "tqpe/statevector.hpp"
#include "tqpe/trotter.hpp"

namespace tqpe {

enum class QpeMode { trotterized, exact_unitary };

std::string_view qpe_mode_name(QpeMode mode);
QpeMode parse_qpe_mode(std::string_view name);

inline constexpr int kMaxPhaseBits = 11;
inline constexpr int kMaxQpeQubits = 14;
inline constexpr int kMaxExactUnitarySites = 6;
inline constexpr std::uint64_t kDefaultShots = 10000;

struct QpeConfig {
  int m_prec = 3;
  double t = 0.0;
  TrotterPlan plan = TrotterPlan::make(2, 1);
  StateKind initial_state = StateKind::all_zero;
  std::uint64_t state_seed = 0;
  std::uint64_t shots = kDefaultShots;
  std::uint64_t shot_seed = 0;
  QpeMode mode = QpeMode::trotterized;

  /// Throws InvalidArgument / ResourceLimit on a bad configuration.
  void validate(int num_sites) const;
};

struct PhaseSample {
  std::string bits;  // phi_1 first
  double phi = 0.0;
  double energy = 0.0;

  bool operator==(const PhaseSample&) const = default;
};

struct QpeResult {
  ShotHistogram histogram;
  std::vector<PhaseSample> samples;
  /// Exact outcome distribution of the phase register, indexed by the
  /// integer value of the bitstring.
  std::vector<double> probabilities;
};

/// Phase-register measurement order [0, 1, ..., m-1].
std::vector<int> phase_readout_qubits(int m);

/// Inverse QFT on qubits 0..m-1 without swaps (see file comment).
QuantumCircuit inverse_qft_circuit(int m);
/// Forward transform, the adjoint of inverse_qft_circuit.
QuantumCircuit qft_circuit(int m);

/// Full circuit: state preparation, Hadamards, controlled evolutions for
/// t 2^j with the same plan, inverse QFT. Trotterized mode only.
QuantumCircuit build_qpe_circuit(const PauliHamiltonian& h, const QpeConfig& cfg);

/// Final statevector before measurement (either mode).
StateVector qpe_final_state(const PauliHamiltonian& h, const QpeConfig& cfg);

QpeResult run_qpe(const PauliHamiltonian& h, const QpeConfig& cfg);

/// Reference mode: controlled blocks are the exact V exp(-i Lambda t 2^j) V^dagger.
QpeResult exact_unitary_qpe(const PauliHamiltonian& h, const QpeConfig& cfg);

PhaseSample decode_phase(const std::string& bits, double t);

/// frac(-E t / (2 pi)), the eigenphase of exp(-i H t) for energy E.
double phase_of_energy(double energy, double t);

/// Nearest grid point to the ground phase, as an m-character string.
/// Exact half-grid ties round up. Throws PhaseAliasing if t |E0| >= 2 pi.
std::string optimal_phase_bitstring(double e0, double t, int m);

}  // namespace tqpe
