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

#include "tqpe/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

namespace tqpe {

std::string format_real(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

Json instance_to_json(const SpinGlassHamiltonian& h) {
  Json terms = Json::array();
  for (const PauliTerm& term : h.terms) {
    const auto sites = term.active_sites();
    if (sites.empty()) throw InvalidArgument("instance_to_json: identity term");
    const Pauli axis = term.axes[static_cast<std::size_t>(sites.front())];
    for (int s : sites)
      if (term.axes[static_cast<std::size_t>(s)] != axis)
        throw InvalidArgument("instance_to_json: mixed-axis term " + term.label());
    terms.push_back({{"sites", sites}, {"axis", std::string(1, to_char(axis))},
                     {"coeff", term.coefficient}});
  }
  return Json{{"n", h.num_sites}, {"seed", h.seed}, {"terms", std::move(terms)}};
}

SpinGlassHamiltonian instance_from_json(const Json& j) {
  try {
    SpinGlassHamiltonian h;
    h.num_sites = j.at("n").get<int>();
    h.seed = j.at("seed").get<std::uint64_t>();
    if (h.num_sites < 1) throw InvalidArgument("instance JSON: n must be positive");
    std::set<std::vector<int>> supports;
    for (const Json& t : j.at("terms")) {
      const auto sites = t.at("sites").get<std::vector<int>>();
      const auto axis = t.at("axis").get<std::string>();
      if (axis.size() != 1) throw InvalidArgument("instance JSON: axis must be one character");
      const Pauli p = pauli_from_char(axis[0]);
      if (p == Pauli::I) throw InvalidArgument("instance JSON: axis must be X, Y or Z");
      for (int s : sites)
        if (s < 0 || s >= h.num_sites) throw InvalidArgument("instance JSON: site out of range");
      if (std::set<int>(sites.begin(), sites.end()).size() != sites.size() || sites.empty())
        throw InvalidArgument("instance JSON: sites must be distinct and non-empty");
      h.terms.push_back(PauliTerm::on_sites(h.num_sites, sites, p, t.at("coeff").get<double>()));
      supports.insert(sites);
    }
    h.edge_count = static_cast<int>(supports.size());
    return h;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("instance JSON: ") + e.what());
  }
}

Json qpe_config_to_json(const QpeConfig& cfg) {
  return Json{{"m_prec", cfg.m_prec},
              {"t", cfg.t},
              {"k", cfg.plan.order},
              {"r", cfg.plan.steps},
              {"state", std::string(state_kind_name(cfg.initial_state))},
              {"shots", cfg.shots},
              {"mode", std::string(qpe_mode_name(cfg.mode))},
              {"seeds", {{"state", cfg.state_seed}, {"shot", cfg.shot_seed}}}};
}

Json histogram_to_json(const ShotHistogram& h) {
  Json counts = Json::object();
  for (const auto& [bits, c] : h.counts) counts[bits] = c;
  return counts;
}

Json run_record_json(const SpinGlassHamiltonian& h, const QpeConfig& cfg, const QpeResult& result,
                     const std::optional<RunReference>& ref) {
  const std::string opt_bits =
      ref ? optimal_phase_bitstring(ref->e0, cfg.t, cfg.m_prec) : std::string();
  Json results{{"histogram", histogram_to_json(result.histogram)}};
  if (ref) {
    results["optimal_bits"] = opt_bits;
    results["optimal_rate"] = result.histogram.frequency(opt_bits);
    results["E0_ref"] = ref->e0;
    results["chi_ref"] = ref->chi;
    results["p_opt_ref"] = ref->p_opt;
    results["zeta_ref"] = ref->zeta;
  } else {
    results["optimal_bits"] = nullptr;
    results["optimal_rate"] = nullptr;
    results["E0_ref"] = nullptr;
    results["zeta_ref"] = nullptr;
  }
  return Json{{"hamiltonian", {{"n", h.num_sites}, {"seed", h.seed}}},
              {"config", qpe_config_to_json(cfg)},
              {"results", std::move(results)}};
}

CsvTable digitization_table(const std::vector<DigitizationRow>& rows) {
  CsvTable t{{"n", "m", "t", "error"}, {}};
  for (const auto& r : rows)
    t.rows.push_back({std::to_string(r.n), std::to_string(r.m), format_real(r.t),
                      format_real(r.error)});
  return t;
}

CsvTable averaged_overlap_table(const std::vector<OverlapTableRow>& rows) {
  CsvTable t{{"n", "state_kind", "mean_chi", "instances"}, {}};
  for (const auto& r : rows)
    t.rows.push_back({std::to_string(r.n), std::string(state_kind_name(r.overlap.state_kind)),
                      format_real(r.overlap.mean_chi), std::to_string(r.overlap.instances)});
  return t;
}

CsvTable overlap_table(const std::vector<OverlapReport>& rows) {
  CsvTable t{{"state_kind", "chi", "ground_degeneracy", "e0"}, {}};
  for (const auto& r : rows)
    t.rows.push_back({std::string(state_kind_name(r.state_kind)), format_real(r.chi),
                      std::to_string(r.ground_degeneracy), format_real(r.e0)});
  return t;
}

CsvTable sweep_table(const std::vector<SweepRecord>& rows) {
  CsvTable t{{"axis", "value", "optimal_rate", "zeta", "p_opt", "chi", "trotter_error", "gates_1q",
              "gates_2q"},
             {}};
  for (const auto& r : rows)
    t.rows.push_back({r.axis, format_real(r.value), format_real(r.optimal_rate),
                      format_real(r.zeta), format_real(r.p_opt), format_real(r.chi),
                      r.trotter_error ? format_real(*r.trotter_error) : std::string(),
                      std::to_string(r.gates.one_qubit), std::to_string(r.gates.two_qubit)});
  return t;
}

CsvTable trotter_error_table(const std::vector<TrotterErrorRow>& rows) {
  CsvTable t{{"k", "r", "time_scale", "t", "error"}, {}};
  for (const auto& r : rows)
    t.rows.push_back({std::to_string(r.order), std::to_string(r.steps), format_real(r.time_scale),
                      format_real(r.t), format_real(r.error)});
  return t;
}

CsvTable gate_count_table(const std::vector<GateCountRow>& rows, int m_prec) {
  CsvTable t{{"m_prec", "k", "r", "gates_1q", "gates_2q", "gates_total"}, {}};
  for (const auto& r : rows)
    t.rows.push_back({std::to_string(m_prec), std::to_string(r.order), std::to_string(r.steps),
                      std::to_string(r.census.one_qubit), std::to_string(r.census.two_qubit),
                      std::to_string(r.census.total())});
  return t;
}

CsvTable energy_table(const EnergyDistributionReport& report) {
  CsvTable t{{"bits", "energy", "count", "below_digitized_optimum"}, {}};
  for (const auto& b : report.bins)
    t.rows.push_back({b.bits, format_real(b.energy), std::to_string(b.count),
                      (b.bits != report.optimal_bits && b.energy < report.digitized_optimum) ? "1"
                                                                                            : "0"});
  return t;
}

void write_csv(std::ostream& os, const Json& config, const CsvTable& table) {
  os << "# config: " << config.dump() << '\n';
  auto line = [&os](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << cells[i];
    os << '\n';
  };
  line(table.header);
  for (const auto& row : table.rows) {
    if (row.size() != table.header.size()) throw InvalidArgument("write_csv: ragged row");
    line(row);
  }
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

void write_text_file(const std::filesystem::path& path, const std::string& content) {
  std::error_code ec;
  if (path.has_parent_path()) {
    std::filesystem::create_directories(path.parent_path(), ec);
    if (ec)
      throw IoError("cannot create output directory '" + path.parent_path().string() +
                    "': " + ec.message());
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open output file '" + path.string() + "' for writing");
  out << content;
  out.flush();
  if (!out) throw IoError("write failed for '" + path.string() + "'");
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace tqpe
