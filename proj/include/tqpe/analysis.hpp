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

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tqpe/circuit.hpp"
#include "tqpe/qpe.hpp"
#include "tqpe/spectral_oracle.hpp"

namespace tqpe {

/// Probability that ideal QPE with m phase bits reports outcome x for an
/// eigenphase phi:
///
///   p(x) = sin^2(pi (2^m phi - x)) / (2^{2m} sin^2(pi (phi - x / 2^m)))
///
/// The removable singularity at phi = x / 2^m (mod 1) evaluates to 1.
template <typename Real>
Real phase_line_probability(Real phi, std::uint64_t x, int m) {
  if (m < 1 || m > 62) throw InvalidArgument("phase_line_probability: bad bit count");
  const Real grid = std::ldexp(Real(1), m);
  if (static_cast<Real>(x) >= grid) throw InvalidArgument("phase_line_probability: x out of range");
  const Real pi = std::numbers::pi_v<Real>;
  const Real delta = phi - static_cast<Real>(x) / grid;
  const Real den = std::sin(pi * delta);
  if (std::abs(den) < Real(1e-15)) return Real(1);
  const Real num = std::sin(pi * grid * delta);
  return (num * num) / (grid * grid * den * den);
}

/// Converged rate of sampling the optimal bitstring: chi * p(x_opt).
inline double steady_state_rate(double chi, double p_opt) {
  if (chi < 0.0 || chi > 1.0 || p_opt < 0.0 || p_opt > 1.0)
    throw InvalidArgument("steady_state_rate: arguments must lie in [0, 1]");
  return chi * p_opt;
}

/// Reference values for one (instance, state, t, m) point.
struct OptimalPhaseTarget {
  double e0 = 0.0;
  double chi = 0.0;
  int ground_degeneracy = 1;
  std::string optimal_bits;
  double p_opt = 0.0;
  double zeta = 0.0;
};

OptimalPhaseTarget optimal_phase_target(const SpectralDecomposition& s, StateKind kind,
                                        std::uint64_t state_seed, double t, int m);

struct SweepRecord {
  std::string axis;  // "r" | "t" | "m_prec" | "k"
  double value = 0.0;
  double optimal_rate = 0.0;
  double zeta = 0.0;
  double p_opt = 0.0;
  double chi = 0.0;
  std::optional<double> trotter_error;
  GateCensus gates;
  std::string optimal_bits;
};

/// Binomial acceptance band: max(3 sqrt(zeta (1 - zeta) / shots), 0.03).
double rate_tolerance(double zeta, std::uint64_t shots);

/// One QPE run per r. Point i uses shot seed derive_seed(base.shot_seed, i).
/// Trotter error is evaluated at the deepest block time t 2^{m-1} when n <= 6.
std::vector<SweepRecord> sweep_trotter_steps(const PauliHamiltonian& h, const QpeConfig& base,
                                             const std::vector<int>& r_list, int jobs = 1);

/// Uniform grid of `points` times on [t0 - 8 t0 / 2^m, t0] where t0 = base.t.
/// x_opt, p_opt and zeta are recomputed at every t.
std::vector<SweepRecord> sweep_time_grid(const PauliHamiltonian& h, const QpeConfig& base,
                                         int points = 64, int jobs = 1);

/// Same run in exact_unitary mode, reported as a single record with axis "exact".
SweepRecord exact_reference_record(const PauliHamiltonian& h, const QpeConfig& base);

struct TrotterErrorRow {
  int order = 1;
  int steps = 1;
  double time_scale = 1.0;
  double t = 0.0;
  double error = 0.0;
};

/// Frobenius Trotter error on the (k, r, scale) grid at times t_base * scale.
std::vector<TrotterErrorRow> trotter_error_sweep(const PauliHamiltonian& h, double t_base,
                                                 const std::vector<int>& k_list,
                                                 const std::vector<int>& r_list,
                                                 const std::vector<double>& time_scales,
                                                 int jobs = 1);

struct EnergyBin {
  std::string bits;
  double energy = 0.0;
  std::uint64_t count = 0;
};

struct EnergyDistributionReport {
  std::vector<EnergyBin> bins;  // ascending energy
  double e0 = 0.0;
  std::string optimal_bits;
  double digitized_optimum = 0.0;
  /// Share of samples decoding strictly below the digitized optimum.
  double nonphysical_fraction = 0.0;
  double optimum_fraction = 0.0;
  /// Share of samples below `energy_lower_bound` (when one is supplied).
  double below_bound_fraction = 0.0;
  std::optional<double> energy_lower_bound;
};

EnergyDistributionReport energy_distribution_report(
    const std::vector<PhaseSample>& samples, double e0, double t, int m,
    std::optional<double> energy_lower_bound = std::nullopt);

struct GateCountRow {
  int order = 1;
  int steps = 1;
  GateCensus census;
};

/// Census of build_qpe_circuit per (k, r); nothing is simulated.
std::vector<GateCountRow> gate_count_sweep(const PauliHamiltonian& h, const QpeConfig& base,
                                           const std::vector<int>& k_list,
                                           const std::vector<int>& r_list, int jobs = 1);

}  // namespace tqpe
