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

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "tqpe/analysis.hpp"

namespace tqpe {
namespace {

using testing::kReferenceSeed;

QpeConfig base_config(const SpinGlassHamiltonian& h, int m, int k = 2) {
  QpeConfig cfg;
  cfg.m_prec = m;
  cfg.t = heuristic_time(h);
  cfg.plan = TrotterPlan::make(k, 1);
  cfg.shots = 3000;
  cfg.shot_seed = 11;
  return cfg;
}

TEST(PhaseLine, MatchesDirectSum) {
  Rng rng(6);
  for (int m = 1; m <= 12; ++m)
    for (int i = 0; i < 20; ++i) {
      const double phi = rng.uniform();
      const std::uint64_t x = rng.below(std::uint64_t{1} << m);
      EXPECT_NEAR(phase_line_probability(phi, x, m), oracle::phase_line_direct(phi, x, m), 1e-10)
          << m << " " << phi << " " << x;
    }
}

TEST(PhaseLine, SumsToOne) {
  Rng rng(7);
  for (int m = 1; m <= 12; ++m) {
    const double phi = rng.uniform();
    double total = 0.0;
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << m); ++x) total += phase_line_probability(phi, x, m);
    EXPECT_NEAR(total, 1.0, 1e-9) << m;
  }
}

TEST(PhaseLine, SpecialPoints) {
  EXPECT_EQ(phase_line_probability(0.25, 2, 3), 1.0);
  EXPECT_NEAR(phase_line_probability(0.25, 3, 3), 0.0, 1e-15);
  // Half a grid step off: the limit as m grows is 4 / pi^2.
  const int m = 14;
  const double phi = (5.0 + 0.5) / std::ldexp(1.0, m);
  EXPECT_NEAR(phase_line_probability(phi, 5, m), 4 / (kPi * kPi), 1e-6);
  EXPECT_NEAR(phase_line_probability(0.999999, 0, 3), 1.0, 1e-6);  // wraps around
  EXPECT_NEAR(phase_line_probability<float>(0.3f, 2, 3), phase_line_probability(0.3, 2, 3), 1e-5);
  EXPECT_THROW(phase_line_probability(0.1, 8, 3), InvalidArgument);
  EXPECT_THROW(phase_line_probability(0.1, 0, 0), InvalidArgument);
}

TEST(SteadyState, ProductAndRange) {
  EXPECT_DOUBLE_EQ(steady_state_rate(0.75, 0.5), 0.375);
  EXPECT_THROW(steady_state_rate(1.2, 0.5), InvalidArgument);
  EXPECT_THROW(steady_state_rate(0.5, -0.1), InvalidArgument);
}

TEST(RateTolerance, FloorAndSigma) {
  EXPECT_DOUBLE_EQ(rate_tolerance(0.5, 10000), 0.03);
  EXPECT_NEAR(rate_tolerance(0.5, 100), 3 * std::sqrt(0.25 / 100), 1e-15);
  EXPECT_DOUBLE_EQ(rate_tolerance(0.0, 10), 0.03);
}

TEST(OptimalTarget, ReferenceInstance) {
  const auto h = generate_spin_glass(3, kReferenceSeed);
  const auto s = exact_diagonalize(h);
  const double t = heuristic_time(h);
  const auto target = optimal_phase_target(s, StateKind::all_zero, 0, t, 3);
  EXPECT_NEAR(target.e0, s.ground_energy(), 1e-15);
  EXPECT_NEAR(target.chi, 0.75, 1e-10);
  EXPECT_EQ(target.optimal_bits, optimal_phase_bitstring(target.e0, t, 3));
  EXPECT_NEAR(target.p_opt,
              oracle::phase_line_direct(phase_of_energy(target.e0, t), from_bitstring(target.optimal_bits), 3),
              1e-12);
  EXPECT_NEAR(target.zeta, target.chi * target.p_opt, 1e-15);
}

TEST(SweepSteps, OrderedDeterministicAndParallelSafe) {
  const auto h = generate_spin_glass(3, kReferenceSeed);
  const auto cfg = base_config(h, 3);
  const auto a = sweep_trotter_steps(h, cfg, {4, 1, 2}, 1);
  const auto b = sweep_trotter_steps(h, cfg, {1, 2, 4}, 3);
  ASSERT_EQ(a.size(), 3u);
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].value, b[i].value);
    EXPECT_EQ(a[i].optimal_rate, b[i].optimal_rate);
    EXPECT_EQ(a[i].gates, b[i].gates);
    EXPECT_EQ(a[i].axis, "r");
    ASSERT_TRUE(a[i].trotter_error.has_value());
  }
  EXPECT_EQ(a[0].value, 1.0);
  EXPECT_EQ(a[2].value, 4.0);
  EXPECT_GT(*a[0].trotter_error, *a[2].trotter_error);
  EXPECT_LT(a[0].gates.total(), a[2].gates.total());
  EXPECT_EQ(a[0].zeta, a[2].zeta);
}

TEST(SweepSteps, RateMatchesExactDistribution) {
  // With many steps the empirical rate tracks the exact-unitary probability.
  const auto h = generate_spin_glass(3, kReferenceSeed);
  auto cfg = base_config(h, 3);
  cfg.shots = 20000;
  const auto rec = sweep_trotter_steps(h, cfg, {64}).front();
  EXPECT_NEAR(rec.optimal_rate, rec.zeta, rate_tolerance(rec.zeta, cfg.shots));
  const auto ref = exact_reference_record(h, cfg);
  EXPECT_EQ(ref.axis, "exact");
  EXPECT_NEAR(ref.optimal_rate, ref.zeta, rate_tolerance(ref.zeta, cfg.shots));
}

TEST(SweepTime, GridShape) {
  const auto h = generate_spin_glass(3, kReferenceSeed);
  auto cfg = base_config(h, 4);
  cfg.shots = 500;
  const auto recs = sweep_time_grid(h, cfg, 9);
  ASSERT_EQ(recs.size(), 9u);
  const double t0 = cfg.t, lo = t0 - 8 * t0 / 16;
  EXPECT_NEAR(recs.front().value, lo, 1e-15);
  EXPECT_EQ(recs.back().value, t0);
  for (std::size_t i = 1; i < recs.size(); ++i) EXPECT_GT(recs[i].value, recs[i - 1].value);
  for (const auto& r : recs) {
    EXPECT_EQ(r.axis, "t");
    EXPECT_GE(r.p_opt, 0.0);
    EXPECT_LE(r.p_opt, 1.0);
  }
  EXPECT_THROW(sweep_time_grid(h, cfg, 1), InvalidArgument);
  cfg.m_prec = 3;  // t0 - 8 t0 / 8 = 0
  EXPECT_THROW(sweep_time_grid(h, cfg, 4), InvalidArgument);
}

TEST(TrotterErrorSweep, RowsAndValues) {
  const auto h = generate_spin_glass(3, kReferenceSeed);
  const double t = heuristic_time(h);
  const auto rows = trotter_error_sweep(h, t, {1, 2}, {1, 4}, {1.0, 2.0}, 2);
  ASSERT_EQ(rows.size(), 8u);
  for (const auto& row : rows) {
    const Matrix ideal = oracle::expm_evolution(h, row.t);
    const Matrix approx = circuit_unitary(trotter_circuit(h, row.t, TrotterPlan::make(row.order, row.steps)));
    EXPECT_NEAR(row.error, (ideal - approx).norm(), 1e-9);
    EXPECT_NEAR(row.t, t * row.time_scale, 1e-15);
  }
  EXPECT_THROW(trotter_error_sweep(h, t, {3}, {1}, {1.0}), InvalidArgument);
  EXPECT_THROW(trotter_error_sweep(generate_spin_glass(7, 0), t, {1}, {1}, {1.0}), ResourceLimit);
}

TEST(EnergyReport, PerfectEigenstate) {
  const double t = kPi / 9;
  std::vector<PhaseSample> samples(50, decode_phase("100", t));
  const auto rep = energy_distribution_report(samples, -9.0, t, 3);
  EXPECT_EQ(rep.optimal_bits, "100");
  EXPECT_DOUBLE_EQ(rep.optimum_fraction, 1.0);
  EXPECT_DOUBLE_EQ(rep.nonphysical_fraction, 0.0);
  ASSERT_EQ(rep.bins.size(), 1u);
  EXPECT_EQ(rep.bins[0].count, 50u);
}

TEST(EnergyReport, CountsBelowOptimumAndBound) {
  const double t = kPi / 9;
  std::vector<PhaseSample> samples;
  for (const char* b : {"100", "100", "101", "110", "011", "000"}) samples.push_back(decode_phase(b, t));
  const auto rep = energy_distribution_report(samples, -9.0, t, 3, -10.0);
  EXPECT_NEAR(rep.optimum_fraction, 2.0 / 6, 1e-15);
  EXPECT_NEAR(rep.nonphysical_fraction, 2.0 / 6, 1e-15);
  EXPECT_NEAR(rep.below_bound_fraction, 2.0 / 6, 1e-15);
  for (std::size_t i = 1; i < rep.bins.size(); ++i) EXPECT_LT(rep.bins[i - 1].energy, rep.bins[i].energy);
  EXPECT_THROW(energy_distribution_report({}, -9.0, t, 3), InvalidArgument);
}

TEST(GateCountSweep, MonotoneAndOrderRatio) {
  const auto h = generate_spin_glass(3, kReferenceSeed);
  auto cfg = base_config(h, 3);
  const auto rows = gate_count_sweep(h, cfg, {2, 4}, {1, 2, 4});
  ASSERT_EQ(rows.size(), 6u);
  for (std::size_t i = 1; i < 3; ++i) {
    EXPECT_GT(rows[i].census.total(), rows[i - 1].census.total());
    EXPECT_GT(rows[i + 3].census.total(), rows[i + 2].census.total());
  }
  // Block gates scale with the pass count, 5 for k = 4 against 1 for k = 2.
  const double overhead = static_cast<double>(gate_census(inverse_qft_circuit(3)).two_qubit);
  const double ratio = (rows[5].census.two_qubit - overhead) / (rows[2].census.two_qubit - overhead);
  EXPECT_NEAR(ratio, 5.0, 1e-12);
}

}  // namespace
}  // namespace tqpe
