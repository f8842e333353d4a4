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
#include <vector>

#include "tqpe/core.hpp"
#include "tqpe/initial_states.hpp"
#include "tqpe/pauli_model.hpp"

namespace tqpe {

inline constexpr int kMaxDiagonalizationSites = 10;
inline constexpr double kDegeneracyTolerance = 1e-12;

/// Full Hermitian eigensystem, eigenvalues ascending.
struct SpectralDecomposition {
  Eigen::VectorXd eigenvalues;
  Matrix eigenvectors;
  double degeneracy_tolerance = kDegeneracyTolerance;

  double ground_energy() const { return eigenvalues[0]; }
  int num_sites() const;
};

SpectralDecomposition exact_diagonalize(const PauliHamiltonian& h);
/// Throws InvariantViolation if `m` is not Hermitian.
SpectralDecomposition exact_diagonalize(const Matrix& m);

/// Smallest eigenvalue only (cheaper than the full eigensystem).
double ground_energy(const PauliHamiltonian& h);

/// Columns are the eigenvectors with |lambda - E0| <= tolerance.
Matrix ground_space(const SpectralDecomposition& s);

/// Sum over ground vectors of |<state|g>|^2, clamped to [0, 1].
double overlap_chi(const StateVector& state, const Matrix& ground);

/// V exp(-i Lambda t) V^dagger.
Matrix evolution_operator(const SpectralDecomposition& s, double t);

struct OverlapReport {
  StateKind state_kind = StateKind::all_zero;
  double chi = 0.0;
  int ground_degeneracy = 1;
  double e0 = 0.0;
};

/// Normalized amplitudes of an initial-state kind on n sites. The oracle
/// kind `ground_eigenstate` is the first ground vector of `s`.
StateVector prepare_state(StateKind kind, const SpectralDecomposition& s, std::uint64_t seed);

OverlapReport overlap_report(const SpectralDecomposition& s, StateKind kind, std::uint64_t seed);

/// pi / (3 |E| |J|) with |J| = 1.
double heuristic_time(const SpinGlassHamiltonian& h);

inline constexpr int kMaxDigitizationBits = 22;

/// Distance from E0 to the nearest decodable energy -(2 pi / t) x / 2^m.
double digitization_error(double e0, double t, int m);

struct AveragedOverlap {
  StateKind state_kind = StateKind::all_zero;
  double mean_chi = 0.0;
  int instances = 0;
};

/// Mean chi per kind over `instances` spin-glass draws. Instance i uses
/// Hamiltonian seed derive_seed(seed, 2i) and state seed derive_seed(seed, 2i+1).
std::vector<AveragedOverlap> averaged_overlap(int n, int instances,
                                              const std::vector<StateKind>& kinds,
                                              std::uint64_t seed, int jobs = 1);

}  // namespace tqpe
