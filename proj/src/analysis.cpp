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

#include "tqpe/analysis.hpp"

#include <algorithm>
#include <map>

#include "tqpe/parallel.hpp"
#include "tqpe/random.hpp"

namespace tqpe {

OptimalPhaseTarget optimal_phase_target(const SpectralDecomposition& s, StateKind kind,
                                        std::uint64_t state_seed, double t, int m) {
  OptimalPhaseTarget target;
  const OverlapReport overlap = overlap_report(s, kind, state_seed);
  target.e0 = overlap.e0;
  target.chi = overlap.chi;
  target.ground_degeneracy = overlap.ground_degeneracy;
  target.optimal_bits = optimal_phase_bitstring(target.e0, t, m);
  target.p_opt = phase_line_probability<double>(phase_of_energy(target.e0, t),
                                                from_bitstring(target.optimal_bits), m);
  target.zeta = steady_state_rate(target.chi, target.p_opt);
  return target;
}

double rate_tolerance(double zeta, std::uint64_t shots) {
  const double sigma = std::sqrt(zeta * (1.0 - zeta) / static_cast<double>(shots));
  return std::max(3.0 * sigma, 0.03);
}

namespace {

bool preparable(StateKind kind) { return kind != StateKind::ground_eigenstate; }

SweepRecord run_point(const PauliHamiltonian& h, const SpectralDecomposition& s,
                      const QpeConfig& cfg, const std::string& axis, double value) {
  const OptimalPhaseTarget target =
      optimal_phase_target(s, cfg.initial_state, cfg.state_seed, cfg.t, cfg.m_prec);
  const QpeResult result = run_qpe(h, cfg);
  SweepRecord rec;
  rec.axis = axis;
  rec.value = value;
  rec.optimal_rate = result.histogram.frequency(target.optimal_bits);
  rec.zeta = target.zeta;
  rec.p_opt = target.p_opt;
  rec.chi = target.chi;
  rec.optimal_bits = target.optimal_bits;
  if (cfg.mode == QpeMode::trotterized && preparable(cfg.initial_state))
    rec.gates = gate_census(build_qpe_circuit(h, cfg));
  return rec;
}

}  // namespace

std::vector<SweepRecord> sweep_trotter_steps(const PauliHamiltonian& h, const QpeConfig& base,
                                             const std::vector<int>& r_list, int jobs) {
  base.validate(h.num_sites);
  std::vector<int> rs = r_list;
  std::sort(rs.begin(), rs.end());
  const SpectralDecomposition s = exact_diagonalize(h);
  std::vector<SweepRecord> out(rs.size());
  parallel_for(rs.size(), jobs, [&](std::size_t i) {
    QpeConfig cfg = base;
    cfg.plan = TrotterPlan::make(base.plan.order, rs[i]);
    cfg.shot_seed = derive_seed(base.shot_seed, i);
    out[i] = run_point(h, s, cfg, "r", rs[i]);
    if (h.num_sites <= kMaxTrotterErrorSites)
      out[i].trotter_error = trotter_error(h, std::ldexp(cfg.t, cfg.m_prec - 1), cfg.plan);
  });
  return out;
}

std::vector<SweepRecord> sweep_time_grid(const PauliHamiltonian& h, const QpeConfig& base,
                                         int points, int jobs) {
  base.validate(h.num_sites);
  if (points < 2) throw InvalidArgument("sweep_time_grid: need at least 2 points");
  const double t0 = base.t;
  const double t_lo = t0 - 8.0 * t0 / std::ldexp(1.0, base.m_prec);
  if (!(t_lo > 0.0)) throw InvalidArgument("sweep_time_grid: grid reaches non-positive times");
  const SpectralDecomposition s = exact_diagonalize(h);
  std::vector<SweepRecord> out(static_cast<std::size_t>(points));
  parallel_for(out.size(), jobs, [&](std::size_t i) {
    QpeConfig cfg = base;
    cfg.t = (i + 1 == out.size()) ? t0
                                  : t_lo + (t0 - t_lo) * static_cast<double>(i) / (points - 1);
    cfg.shot_seed = derive_seed(base.shot_seed, i);
    out[i] = run_point(h, s, cfg, "t", cfg.t);
  });
  return out;
}

SweepRecord exact_reference_record(const PauliHamiltonian& h, const QpeConfig& base) {
  QpeConfig cfg = base;
  cfg.mode = QpeMode::exact_unitary;
  cfg.validate(h.num_sites);
  return run_point(h, exact_diagonalize(h), cfg, "exact", 0.0);
}

std::vector<TrotterErrorRow> trotter_error_sweep(const PauliHamiltonian& h, double t_base,
                                                 const std::vector<int>& k_list,
                                                 const std::vector<int>& r_list,
                                                 const std::vector<double>& time_scales,
                                                 int jobs) {
  if (h.num_sites > kMaxTrotterErrorSites)
    throw ResourceLimit("trotter_error_sweep: at most " + std::to_string(kMaxTrotterErrorSites) +
                        " sites supported");
  std::vector<TrotterErrorRow> rows;
  for (double scale : time_scales)
    for (int k : k_list)
      for (int r : r_list) rows.push_back({k, r, scale, t_base * scale, 0.0});
  for (const auto& row : rows) TrotterPlan::make(row.order, row.steps);  // validate up front

  const SpectralDecomposition s = exact_diagonalize(h);
  std::map<double, Matrix> ideal;
  for (double scale : time_scales) ideal.emplace(scale, evolution_operator(s, t_base * scale));

  parallel_for(rows.size(), jobs, [&](std::size_t i) {
    TrotterErrorRow& row = rows[i];
    const Matrix approx =
        circuit_unitary(trotter_circuit(h, row.t, TrotterPlan::make(row.order, row.steps)));
    row.error = (ideal.at(row.time_scale) - approx).norm();
  });
  return rows;
}

EnergyDistributionReport energy_distribution_report(const std::vector<PhaseSample>& samples,
                                                    double e0, double t, int m,
                                                    std::optional<double> energy_lower_bound) {
  if (samples.empty()) throw InvalidArgument("energy_distribution_report: no samples");
  EnergyDistributionReport rep;
  rep.e0 = e0;
  rep.optimal_bits = optimal_phase_bitstring(e0, t, m);
  rep.digitized_optimum = decode_phase(rep.optimal_bits, t).energy;
  rep.energy_lower_bound = energy_lower_bound;

  std::map<std::string, EnergyBin> by_bits;
  std::uint64_t below = 0, at = 0, under_bound = 0;
  for (const PhaseSample& smp : samples) {
    auto& bin = by_bits[smp.bits];
    bin.bits = smp.bits;
    bin.energy = smp.energy;
    ++bin.count;
    if (smp.bits == rep.optimal_bits)
      ++at;
    else if (smp.energy < rep.digitized_optimum)
      ++below;
    if (energy_lower_bound && smp.energy < *energy_lower_bound) ++under_bound;
  }
  for (auto& [bits, bin] : by_bits) rep.bins.push_back(bin);
  std::sort(rep.bins.begin(), rep.bins.end(), [](const EnergyBin& a, const EnergyBin& b) {
    return a.energy < b.energy || (a.energy == b.energy && a.bits < b.bits);
  });
  const double total = static_cast<double>(samples.size());
  rep.nonphysical_fraction = static_cast<double>(below) / total;
  rep.optimum_fraction = static_cast<double>(at) / total;
  rep.below_bound_fraction = static_cast<double>(under_bound) / total;
  return rep;
}

std::vector<GateCountRow> gate_count_sweep(const PauliHamiltonian& h, const QpeConfig& base,
                                           const std::vector<int>& k_list,
                                           const std::vector<int>& r_list, int jobs) {
  std::vector<GateCountRow> rows;
  for (int k : k_list)
    for (int r : r_list) rows.push_back({k, r, {}});
  parallel_for(rows.size(), jobs, [&](std::size_t i) {
    QpeConfig cfg = base;
    cfg.mode = QpeMode::trotterized;
    cfg.plan = TrotterPlan::make(rows[i].order, rows[i].steps);
    rows[i].census = gate_census(build_qpe_circuit(h, cfg));
  });
  return rows;
}

}  // namespace tqpe
