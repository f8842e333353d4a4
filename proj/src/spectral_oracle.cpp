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

#include "tqpe/spectral_oracle.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

#include "tqpe/parallel.hpp"
#include "tqpe/random.hpp"
#include "tqpe/statevector.hpp"

namespace tqpe {

namespace {

void check_sites(int n) {
  if (n > kMaxDiagonalizationSites)
    throw ResourceLimit("exact diagonalization supports at most " +
                        std::to_string(kMaxDiagonalizationSites) + " sites, got " +
                        std::to_string(n));
}

}  // namespace

int SpectralDecomposition::num_sites() const {
  int n = 0;
  while ((Eigen::Index{1} << n) < eigenvalues.size()) ++n;
  return n;
}

SpectralDecomposition exact_diagonalize(const Matrix& m) {
  if (m.rows() != m.cols()) throw InvariantViolation("exact_diagonalize: matrix is not square");
  const double asym = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (asym > 1e-10)
    throw InvariantViolation("exact_diagonalize: matrix is not Hermitian (max |M - M^dagger| = " +
                             std::to_string(asym) + ")");
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m);
  if (solver.info() != Eigen::Success)
    throw InvariantViolation("exact_diagonalize: eigensolver did not converge");
  return {solver.eigenvalues(), solver.eigenvectors(), kDegeneracyTolerance};
}

SpectralDecomposition exact_diagonalize(const PauliHamiltonian& h) {
  check_sites(h.num_sites);
  return exact_diagonalize(to_dense_matrix(h));
}

double ground_energy(const PauliHamiltonian& h) {
  check_sites(h.num_sites);
  Eigen::SelfAdjointEigenSolver<Matrix> solver(to_dense_matrix(h), Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw InvariantViolation("ground_energy: eigensolver did not converge");
  return solver.eigenvalues()[0];
}

Matrix ground_space(const SpectralDecomposition& s) {
  const double e0 = s.ground_energy();
  Eigen::Index count = 0;
  while (count < s.eigenvalues.size() &&
         std::abs(s.eigenvalues[count] - e0) <= s.degeneracy_tolerance)
    ++count;
  return s.eigenvectors.leftCols(count);
}

double overlap_chi(const StateVector& state, const Matrix& ground) {
  if (std::abs(state.norm() - 1.0) > 1e-10)
    throw InvalidArgument("overlap_chi: state is not normalized (norm " +
                          std::to_string(state.norm()) + ")");
  if (ground.rows() != state.size())
    throw InvalidArgument("overlap_chi: dimension mismatch between state and ground space");
  const double chi = (ground.adjoint() * state).squaredNorm();
  return std::clamp(chi, 0.0, 1.0);
}

Matrix evolution_operator(const SpectralDecomposition& s, double t) {
  const Eigen::VectorXcd phases =
      (s.eigenvalues * Complex(0.0, -t)).array().exp().matrix();
  return s.eigenvectors * phases.asDiagonal() * s.eigenvectors.adjoint();
}

StateVector prepare_state(StateKind kind, const SpectralDecomposition& s, std::uint64_t seed) {
  const int n = s.num_sites();
  if (kind == StateKind::ground_eigenstate) return s.eigenvectors.col(0);
  return run_circuit(build_initial_state(kind, n, seed), zero_state(n));
}

OverlapReport overlap_report(const SpectralDecomposition& s, StateKind kind, std::uint64_t seed) {
  const Matrix ground = ground_space(s);
  return {kind, overlap_chi(prepare_state(kind, s, seed), ground),
          static_cast<int>(ground.cols()), s.ground_energy()};
}

double heuristic_time(const SpinGlassHamiltonian& h) {
  return kPi / (3.0 * static_cast<double>(h.edge_count) * 1.0);
}

double digitization_error(double e0, double t, int m) {
  if (m < 1 || m > kMaxDigitizationBits)
    throw InvalidArgument("digitization_error: m must be in 1.." +
                          std::to_string(kMaxDigitizationBits));
  if (!(t > 0.0)) throw InvalidArgument("digitization_error: t must be positive");
  if (t * std::abs(e0) >= 2.0 * kPi)
    throw PhaseAliasing("digitization_error: t |E0| must be below 2 pi");
  const double grid = static_cast<double>(dimension_for(m));
  const double step = (2.0 * kPi / t) / grid;
  const auto top = static_cast<std::int64_t>(grid) - 1;
  const auto nearest = static_cast<std::int64_t>(std::llround(-e0 / step));
  double best = std::abs(e0);
  for (std::int64_t x = nearest - 1; x <= nearest + 1; ++x) {
    const std::int64_t clamped = std::clamp<std::int64_t>(x, 0, top);
    best = std::min(best, std::abs(e0 + step * static_cast<double>(clamped)));
  }
  return best;
}

std::vector<AveragedOverlap> averaged_overlap(int n, int instances,
                                              const std::vector<StateKind>& kinds,
                                              std::uint64_t seed, int jobs) {
  check_sites(n);
  if (instances < 1) throw InvalidArgument("averaged_overlap: instances must be at least 1");
  const std::size_t count = static_cast<std::size_t>(instances);
  std::vector<std::vector<double>> chis(count);
  parallel_for(count, jobs, [&](std::size_t i) {
    const auto h = generate_spin_glass(n, derive_seed(seed, 2 * i));
    const auto s = exact_diagonalize(h);
    const std::uint64_t state_seed = derive_seed(seed, 2 * i + 1);
    for (StateKind k : kinds) chis[i].push_back(overlap_report(s, k, state_seed).chi);
  });
  std::vector<AveragedOverlap> out;
  for (std::size_t k = 0; k < kinds.size(); ++k) {
    double sum = 0.0;
    for (std::size_t i = 0; i < count; ++i) sum += chis[i][k];
    out.push_back({kinds[k], sum / static_cast<double>(instances), instances});
  }
  return out;
}

}  // namespace tqpe
