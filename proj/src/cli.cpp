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

#include "tqpe/cli.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "tqpe/analysis.hpp"
#include "tqpe/io.hpp"
#include "tqpe/parallel.hpp"
#include "tqpe/random.hpp"

namespace tqpe {

namespace fs = std::filesystem;

namespace {

template <typename T>
T parse_number(std::string_view text, const char* what) {
  T value{};
  const char* first = text.data();
  const char* last = first + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || text.empty())
    throw InvalidArgument(std::string("cannot parse ") + what + " '" + std::string(text) + "'");
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    const std::size_t pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

}  // namespace

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  for (std::string_view tok : split(text, ',')) {
    const std::size_t dots = tok.find("..");
    if (dots == std::string_view::npos) {
      out.push_back(parse_number<int>(tok, "integer"));
      continue;
    }
    const int lo = parse_number<int>(tok.substr(0, dots), "range start");
    const int hi = parse_number<int>(tok.substr(dots + 2), "range end");
    if (hi < lo) throw InvalidArgument("empty range '" + std::string(tok) + "'");
    for (int v = lo; v <= hi; ++v) out.push_back(v);
  }
  return out;
}

std::vector<double> parse_real_list(const std::string& text) {
  std::vector<double> out;
  for (std::string_view tok : split(text, ',')) out.push_back(parse_number<double>(tok, "number"));
  return out;
}

namespace {

struct OptionSpec {
  const char* help;
  const char* fallback;
};

const std::map<std::string, OptionSpec>& option_specs() {
  static const std::map<std::string, OptionSpec> specs = {
      {"n", {"number of sites; a list or range such as 3..10 where supported", "3"}},
      {"seed", {"instance seed", "0"}},
      {"m", {"phase bits; a list or range for digitization", "3"}},
      {"k", {"Trotter-Suzuki order (1, 2, 4, 6, 8, 10); a list for sweeps", "2"}},
      {"r", {"Trotter steps; a list for sweeps", "1"}},
      {"state", {"initial state kind, a comma list, or 'all'", "all_zero"}},
      {"shots", {"measurement shots", "10000"}},
      {"t", {"evolution time or 'auto' for pi / (3 |E|)", "auto"}},
      {"mode", {"trotterized | exact_unitary", "trotterized"}},
      {"jobs", {"worker threads (default: available cores)", ""}},
      {"out", {"output directory (default: $TQPE_OUTPUT_DIR or .)", ""}},
      {"master-seed", {"seed from which state and shot seeds are derived", "0"}},
      {"instances", {"instances per n", "10"}},
      {"points", {"time-grid points", "64"}},
      {"time-scales", {"multiples of t at which to evaluate the error", "1"}},
  };
  return specs;
}

class Context;
using Handler = std::function<void(Context&)>;

struct SubcommandSpec {
  const char* name;
  const char* help;
  std::vector<std::string> options;
  std::map<std::string, std::string> fallbacks;  // overrides of the global defaults
  Handler run;
};

class Context {
 public:
  Context(std::string subcommand, std::map<std::string, std::string> values, fs::path out_dir,
          int jobs, std::vector<std::string> argv, std::ostream& out)
      : subcommand_(std::move(subcommand)),
        values_(std::move(values)),
        out_dir_(std::move(out_dir)),
        jobs_(jobs),
        argv_(std::move(argv)),
        out_(out) {}

  const std::string& subcommand() const { return subcommand_; }
  int jobs() const { return jobs_; }
  std::ostream& out() { return out_; }

  const std::string& raw(const std::string& name) const { return values_.at(name); }

  std::vector<int> ints(const std::string& name) const {
    const auto v = parse_int_list(raw(name));
    if (v.empty()) throw InvalidArgument("--" + name + " is empty");
    return v;
  }
  int single(const std::string& name) const {
    const auto v = ints(name);
    if (v.size() != 1)
      throw InvalidArgument("--" + name + " takes a single value for " + subcommand_);
    return v.front();
  }
  std::uint64_t u64(const std::string& name) const {
    return parse_number<std::uint64_t>(raw(name), ("--" + name).c_str());
  }
  std::vector<StateKind> states() const {
    if (raw("state") == "all") return preparable_state_kinds();
    std::vector<StateKind> kinds;
    for (std::string_view tok : split(raw("state"), ',')) kinds.push_back(parse_state_kind(tok));
    return kinds;
  }
  std::uint64_t master_seed() const { return u64("master-seed"); }
  std::uint64_t state_seed() const { return derive_seed(master_seed(), 0); }
  std::uint64_t shot_seed() const { return derive_seed(master_seed(), 1); }

  bool auto_time() const { return raw("t") == "auto"; }
  double time_for(const SpinGlassHamiltonian& h) const {
    if (auto_time()) return heuristic_time(h);
    const double t = parse_number<double>(raw("t"), "--t");
    if (!(t > 0.0) || !std::isfinite(t)) throw InvalidArgument("--t must be positive");
    return t;
  }

  QpeConfig qpe_config(const SpinGlassHamiltonian& h, int k, int r) const {
    QpeConfig cfg;
    cfg.m_prec = single("m");
    cfg.t = time_for(h);
    cfg.plan = TrotterPlan::make(k, r);
    cfg.initial_state = parse_state_kind(raw("state"));
    cfg.state_seed = state_seed();
    cfg.shots = u64("shots");
    cfg.shot_seed = shot_seed();
    cfg.mode = parse_qpe_mode(raw("mode"));
    cfg.validate(h.num_sites);
    return cfg;
  }

  /// Resolved configuration common to every output of this invocation.
  Json base_config() const {
    return Json{{"subcommand", subcommand_}, {"master_seed", master_seed()}};
  }

  fs::path path(const std::string& file) const { return out_dir_ / file; }

  /// Writes a data file plus its `.meta.json` sidecar.
  fs::path emit(const std::string& file, const std::string& content) const {
    const fs::path p = path(file);
    write_text_file(p, content);
    Json meta{{"created_utc", utc_now()},
              {"argv", argv_},
              {"jobs", jobs_},
              {"output_dir", fs::absolute(out_dir_).string()}};
    write_text_file(fs::path(p.string() + ".meta.json"), dump_json(meta));
    return p;
  }

  fs::path emit_csv(const std::string& file, const Json& config, const CsvTable& table) const {
    std::ostringstream ss;
    write_csv(ss, config, table);
    return emit(file, ss.str());
  }

 private:
  static std::string utc_now() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
  }

  std::string subcommand_;
  std::map<std::string, std::string> values_;
  fs::path out_dir_;
  int jobs_;
  std::vector<std::string> argv_;
  std::ostream& out_;
};

std::string stem(const char* prefix, const SpinGlassHamiltonian& h) {
  return std::string(prefix) + "_n" + std::to_string(h.num_sites) + "_seed" +
         std::to_string(h.seed);
}

Json hamiltonian_json(const SpinGlassHamiltonian& h) {
  return Json{{"n", h.num_sites}, {"seed", h.seed}};
}

std::string range_label(const std::vector<int>& v) {
  if (v.size() == 1) return std::to_string(v.front());
  return std::to_string(v.front()) + ".." + std::to_string(v.back());
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

// ---- subcommands -----------------------------------------------------------

void cmd_generate(Context& ctx) {
  const auto ns = ctx.ints("n");
  const std::uint64_t seed = ctx.u64("seed");
  fs::path last;
  std::size_t terms = 0;
  for (int n : ns) {
    const SpinGlassHamiltonian h = generate_spin_glass(n, seed);
    Json config = ctx.base_config();
    config["hamiltonian"] = hamiltonian_json(h);
    Json doc{{"config", config}};
    const Json instance = instance_to_json(h);
    for (const auto& [key, value] : instance.items()) doc[key] = value;
    last = ctx.emit(stem("instance", h) + ".json", dump_json(doc));
    terms += h.terms.size();
  }
  ctx.out() << "generate n=" << range_label(ns) << " seed=" << seed << " files=" << ns.size()
            << " terms=" << terms << " -> " << last.string() << '\n';
}

void cmd_diag(Context& ctx) {
  const SpinGlassHamiltonian h = generate_spin_glass(ctx.single("n"), ctx.u64("seed"));
  const SpectralDecomposition s = exact_diagonalize(h);
  const int degeneracy = static_cast<int>(ground_space(s).cols());
  std::vector<double> eig(s.eigenvalues.data(), s.eigenvalues.data() + s.eigenvalues.size());
  std::optional<double> gap;
  if (static_cast<std::size_t>(degeneracy) < eig.size())
    gap = eig[static_cast<std::size_t>(degeneracy)] - eig.front();
  Json config = ctx.base_config();
  config["hamiltonian"] = hamiltonian_json(h);
  Json doc{{"config", config},
           {"e0", s.ground_energy()},
           {"ground_degeneracy", degeneracy},
           {"spectral_gap", gap ? Json(*gap) : Json(nullptr)},
           {"coefficient_one_norm", coefficient_one_norm(h)},
           {"eigenvalues", eig}};
  const fs::path p = ctx.emit(stem("diag", h) + ".json", dump_json(doc));
  ctx.out() << "diag n=" << h.num_sites << " seed=" << h.seed << " E0=" << fmt(s.ground_energy())
            << " degeneracy=" << degeneracy << " -> " << p.string() << '\n';
}

void cmd_overlap(Context& ctx) {
  const SpinGlassHamiltonian h = generate_spin_glass(ctx.single("n"), ctx.u64("seed"));
  const SpectralDecomposition s = exact_diagonalize(h);
  const auto kinds = ctx.states();
  std::vector<OverlapReport> rows;
  for (StateKind kind : kinds) rows.push_back(overlap_report(s, kind, ctx.state_seed()));
  Json config = ctx.base_config();
  config["hamiltonian"] = hamiltonian_json(h);
  config["states"] = ctx.raw("state");
  config["state_seed"] = ctx.state_seed();
  const fs::path p = ctx.emit_csv(stem("overlap", h) + ".csv", config, overlap_table(rows));
  const auto best = std::max_element(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
    return a.chi < b.chi;
  });
  ctx.out() << "overlap n=" << h.num_sites << " seed=" << h.seed << " E0=" << fmt(s.ground_energy())
            << " best=" << state_kind_name(best->state_kind) << " chi=" << fmt(best->chi) << " -> "
            << p.string() << '\n';
}

void cmd_overlap_avg(Context& ctx) {
  const auto ns = ctx.ints("n");
  const int instances = ctx.single("instances");
  const auto kinds = ctx.states();
  std::vector<OverlapTableRow> rows;
  for (int n : ns)
    for (const AveragedOverlap& a :
         averaged_overlap(n, instances, kinds, ctx.master_seed(), ctx.jobs()))
      rows.push_back({n, a});
  Json config = ctx.base_config();
  config["n"] = ns;
  config["instances"] = instances;
  config["states"] = ctx.raw("state");
  const fs::path p = ctx.emit_csv("overlap_avg.csv", config, averaged_overlap_table(rows));
  ctx.out() << "overlap-avg n=" << range_label(ns) << " instances=" << instances
            << " rows=" << rows.size() << " -> " << p.string() << '\n';
}

void cmd_digitization(Context& ctx) {
  const auto ns = ctx.ints("n");
  const auto ms = ctx.ints("m");
  const std::uint64_t seed = ctx.u64("seed");
  std::vector<std::vector<DigitizationRow>> per_n(ns.size());
  parallel_for(ns.size(), ctx.jobs(), [&](std::size_t i) {
    const SpinGlassHamiltonian h = generate_spin_glass(ns[i], seed);
    const double e0 = ground_energy(h);
    const double t = ctx.time_for(h);
    for (int m : ms) per_n[i].push_back({ns[i], m, t, digitization_error(e0, t, m)});
  });
  std::vector<DigitizationRow> rows;
  double worst = 0.0;
  for (const auto& block : per_n)
    for (const auto& r : block) {
      rows.push_back(r);
      worst = std::max(worst, r.error);
    }
  Json config = ctx.base_config();
  config["n"] = ns;
  config["m"] = ms;
  config["seed"] = seed;
  config["t"] = ctx.raw("t");
  const fs::path p = ctx.emit_csv("digitization.csv", config, digitization_table(rows));
  ctx.out() << "digitization n=" << range_label(ns) << " m=" << range_label(ms) << " seed=" << seed
            << " rows=" << rows.size() << " max_error=" << fmt(worst) << " -> " << p.string()
            << '\n';
}

void cmd_trotter_error(Context& ctx) {
  const SpinGlassHamiltonian h = generate_spin_glass(ctx.single("n"), ctx.u64("seed"));
  const double t = ctx.time_for(h);
  const auto ks = ctx.ints("k");
  const auto rs = ctx.ints("r");
  const auto scales = parse_real_list(ctx.raw("time-scales"));
  const auto rows = trotter_error_sweep(h, t, ks, rs, scales, ctx.jobs());
  Json config = ctx.base_config();
  config["hamiltonian"] = hamiltonian_json(h);
  config["t"] = t;
  config["t_source"] = ctx.auto_time() ? "auto" : "explicit";
  config["k"] = ks;
  config["r"] = rs;
  config["time_scales"] = scales;
  const fs::path p = ctx.emit_csv(stem("trotter_error", h) + ".csv", config,
                                  trotter_error_table(rows));
  double best = rows.empty() ? 0.0 : rows.front().error;
  for (const auto& r : rows) best = std::min(best, r.error);
  ctx.out() << "trotter-error n=" << h.num_sites << " seed=" << h.seed << " t=" << fmt(t)
            << " rows=" << rows.size() << " min_error=" << fmt(best) << " -> " << p.string()
            << '\n';
}

std::optional<OptimalPhaseTarget> reference_for(const SpectralDecomposition* s,
                                                const QpeConfig& cfg) {
  if (!s) return std::nullopt;
  return optimal_phase_target(*s, cfg.initial_state, cfg.state_seed, cfg.t, cfg.m_prec);
}

Json qpe_run_config(const Context& ctx, const SpinGlassHamiltonian& h, const QpeConfig& cfg) {
  Json config = ctx.base_config();
  config["hamiltonian"] = hamiltonian_json(h);
  config["qpe"] = qpe_config_to_json(cfg);
  config["t_source"] = ctx.auto_time() ? "auto" : "explicit";
  return config;
}

void cmd_qpe_run(Context& ctx) {
  const SpinGlassHamiltonian h = generate_spin_glass(ctx.single("n"), ctx.u64("seed"));
  const QpeConfig cfg = ctx.qpe_config(h, ctx.single("k"), ctx.single("r"));
  std::optional<SpectralDecomposition> s;
  if (h.num_sites <= kMaxDiagonalizationSites) s = exact_diagonalize(h);
  const auto target = reference_for(s ? &*s : nullptr, cfg);
  const QpeResult result = run_qpe(h, cfg);

  std::optional<RunReference> ref;
  if (target) ref = RunReference{target->e0, target->chi, target->p_opt, target->zeta};
  Json doc = run_record_json(h, cfg, result, ref);
  const Json config = qpe_run_config(ctx, h, cfg);
  doc["config"]["t_source"] = config["t_source"];
  doc["config"]["master_seed"] = ctx.master_seed();
  doc["config"]["subcommand"] = ctx.subcommand();
  if (target) {
    const auto dist = energy_distribution_report(result.samples, target->e0, cfg.t, cfg.m_prec);
    doc["results"]["digitized_optimum"] = dist.digitized_optimum;
    doc["results"]["nonphysical_fraction"] = dist.nonphysical_fraction;
    ctx.emit_csv(stem("qpe_energies", h) + ".csv", config, energy_table(dist));
  }
  const fs::path p = ctx.emit(stem("qpe_run", h) + ".json", dump_json(doc));

  ctx.out() << "qpe-run n=" << h.num_sites << " seed=" << h.seed;
  if (target)
    ctx.out() << " E0=" << fmt(target->e0) << " optimal_bits=" << target->optimal_bits
              << " optimal_rate=" << fmt(result.histogram.frequency(target->optimal_bits))
              << " zeta=" << fmt(target->zeta);
  else
    ctx.out() << " outcomes=" << result.histogram.counts.size();
  ctx.out() << " -> " << p.string() << '\n';
}

Json target_json(const OptimalPhaseTarget& t) {
  return Json{{"E0_ref", t.e0},     {"chi_ref", t.chi},     {"ground_degeneracy", t.ground_degeneracy},
              {"optimal_bits", t.optimal_bits}, {"p_opt_ref", t.p_opt}, {"zeta_ref", t.zeta}};
}

Json record_json(const SweepRecord& r) {
  return Json{{"axis", r.axis},   {"value", r.value},           {"optimal_rate", r.optimal_rate},
              {"zeta", r.zeta},   {"p_opt", r.p_opt},           {"chi", r.chi},
              {"optimal_bits", r.optimal_bits}};
}

void cmd_sweep_r(Context& ctx) {
  const SpinGlassHamiltonian h = generate_spin_glass(ctx.single("n"), ctx.u64("seed"));
  const auto rs = ctx.ints("r");
  const QpeConfig base = ctx.qpe_config(h, ctx.single("k"), 1);
  if (base.mode != QpeMode::trotterized)
    throw InvalidArgument("sweep-r needs --mode trotterized");
  const auto records = sweep_trotter_steps(h, base, rs, ctx.jobs());

  Json config = qpe_run_config(ctx, h, base);
  config["qpe"].erase("r");
  config["sweep"] = {{"axis", "r"}, {"grid", rs}, {"shot_seed_rule", "derive_seed(shot, index)"}};
  const std::string name = stem("sweep_r", h) + "_m" + std::to_string(base.m_prec) + "_k" +
                           std::to_string(base.plan.order);
  const fs::path p = ctx.emit_csv(name + ".csv", config, sweep_table(records));

  const SpectralDecomposition s = exact_diagonalize(h);
  const auto target = optimal_phase_target(s, base.initial_state, base.state_seed, base.t,
                                           base.m_prec);
  Json summary{{"config", config}, {"reference", target_json(target)}};
  if (h.num_sites <= kMaxExactUnitarySites)
    summary["exact_unitary"] = record_json(exact_reference_record(h, base));
  Json rows = Json::array();
  for (const auto& r : records) rows.push_back(record_json(r));
  summary["records"] = std::move(rows);
  ctx.emit(name + ".summary.json", dump_json(summary));

  const SweepRecord& last = records.back();
  ctx.out() << "sweep-r n=" << h.num_sites << " seed=" << h.seed << " E0=" << fmt(target.e0)
            << " m=" << base.m_prec << " k=" << base.plan.order << " zeta=" << fmt(target.zeta)
            << " rate[r=" << last.value << "]=" << fmt(last.optimal_rate) << " -> " << p.string()
            << '\n';
}

void cmd_sweep_t(Context& ctx) {
  const SpinGlassHamiltonian h = generate_spin_glass(ctx.single("n"), ctx.u64("seed"));
  const QpeConfig base = ctx.qpe_config(h, ctx.single("k"), ctx.single("r"));
  if (base.mode != QpeMode::trotterized)
    throw InvalidArgument("sweep-t needs --mode trotterized");
  const int points = ctx.single("points");
  const auto records = sweep_time_grid(h, base, points, ctx.jobs());

  Json config = qpe_run_config(ctx, h, base);
  config["sweep"] = {{"axis", "t"},
                     {"points", points},
                     {"t_min", records.front().value},
                     {"t_max", records.back().value},
                     {"shot_seed_rule", "derive_seed(shot, index)"}};
  const std::string name = stem("sweep_t", h) + "_m" + std::to_string(base.m_prec) + "_k" +
                           std::to_string(base.plan.order) + "_r" +
                           std::to_string(base.plan.steps);
  const fs::path p = ctx.emit_csv(name + ".csv", config, sweep_table(records));

  double worst = 0.0, p_lo = 1.0, p_hi = 0.0;
  for (const auto& r : records) {
    worst = std::max(worst, std::abs(r.optimal_rate - r.zeta));
    p_lo = std::min(p_lo, r.p_opt);
    p_hi = std::max(p_hi, r.p_opt);
  }
  Json summary{{"config", config},
               {"E0_ref", ground_energy(h)},
               {"p_opt_min", p_lo},
               {"p_opt_max", p_hi},
               {"max_abs_rate_minus_zeta", worst}};
  ctx.emit(name + ".summary.json", dump_json(summary));
  ctx.out() << "sweep-t n=" << h.num_sites << " seed=" << h.seed << " points=" << points
            << " p_opt=[" << fmt(p_lo) << "," << fmt(p_hi) << "] max|rate-zeta|=" << fmt(worst)
            << " -> " << p.string() << '\n';
}

void cmd_gate_count(Context& ctx) {
  const SpinGlassHamiltonian h = generate_spin_glass(ctx.single("n"), ctx.u64("seed"));
  const auto ks = ctx.ints("k");
  const auto rs = ctx.ints("r");
  const QpeConfig base = ctx.qpe_config(h, ks.front(), rs.front());
  const auto rows = gate_count_sweep(h, base, ks, rs, ctx.jobs());
  Json config = qpe_run_config(ctx, h, base);
  config["qpe"].erase("k");
  config["qpe"].erase("r");
  config["qpe"].erase("shots");
  config["qpe"].erase("mode");
  config["sweep"] = {{"k", ks}, {"r", rs}};
  const fs::path p = ctx.emit_csv(stem("gate_count", h) + "_m" + std::to_string(base.m_prec) +
                                      ".csv",
                                  config, gate_count_table(rows, base.m_prec));
  std::uint64_t largest = 0;
  for (const auto& r : rows) largest = std::max<std::uint64_t>(largest, r.census.total());
  ctx.out() << "gate-count n=" << h.num_sites << " seed=" << h.seed << " m=" << base.m_prec
            << " rows=" << rows.size() << " max_total=" << largest << " -> " << p.string() << '\n';
}

const std::vector<SubcommandSpec>& subcommands() {
  static const std::vector<SubcommandSpec> specs = {
      {"generate", "write spin-glass instance JSON", {"n", "seed"}, {}, cmd_generate},
      {"diag", "exact spectrum of one instance", {"n", "seed"}, {}, cmd_diag},
      {"overlap",
       "ground-space overlap of initial states",
       {"n", "seed", "state", "master-seed"},
       {{"state", "all"}},
       cmd_overlap},
      {"overlap-avg",
       "overlap averaged over random instances",
       {"n", "instances", "state", "master-seed", "jobs"},
       {{"state", "all"}},
       cmd_overlap_avg},
      {"digitization",
       "nearest-grid energy error versus phase bits",
       {"n", "m", "seed", "t", "jobs"},
       {{"n", "3..10"}, {"m", "1..22"}},
       cmd_digitization},
      {"trotter-error",
       "Frobenius product-formula error on a (k, r) grid",
       {"n", "seed", "k", "r", "t", "time-scales", "jobs"},
       {{"k", "1,2,4"}, {"r", "1,2,4,8,16,32,64"}},
       cmd_trotter_error},
      {"qpe-run",
       "one phase-estimation run with reference values",
       {"n", "seed", "m", "k", "r", "state", "shots", "t", "mode", "master-seed"},
       {},
       cmd_qpe_run},
      {"sweep-r",
       "optimal-phase rate versus Trotter steps",
       {"n", "seed", "m", "k", "r", "state", "shots", "t", "mode", "master-seed", "jobs"},
       {{"r", "1,2,4,8,16,32,64"}},
       cmd_sweep_r},
      {"sweep-t",
       "optimal-phase rate over a time grid ending at t",
       {"n", "seed", "m", "k", "r", "state", "shots", "t", "mode", "points", "master-seed", "jobs"},
       {{"r", "128"}},
       cmd_sweep_t},
      {"gate-count",
       "gate census of the full circuit per (k, r)",
       {"n", "seed", "m", "k", "r", "state", "t", "master-seed", "jobs"},
       {{"k", "1,2,4,6"}, {"r", "1,2,4"}},
       cmd_gate_count},
  };
  return specs;
}

std::string json_scalar_text(const Json& v, const std::string& key) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer() || v.is_number_unsigned()) return v.dump();
  if (v.is_number_float()) return format_real(v.get<double>());
  if (v.is_array()) {
    std::string joined;
    for (const Json& item : v) {
      if (item.is_array() || item.is_object())
        throw InvalidArgument("config key '" + key + "' must be a scalar or a flat list");
      joined += (joined.empty() ? "" : ",") + json_scalar_text(item, key);
    }
    return joined;
  }
  throw InvalidArgument("config key '" + key + "' has an unsupported type");
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Trotterized quantum phase estimation toolkit", "tqpe"};
  app.require_subcommand(1);

  std::map<std::string, std::string> raw;
  std::string config_path;
  std::map<std::string, std::map<std::string, CLI::Option*>> bound;
  for (const SubcommandSpec& command : subcommands()) {
    CLI::App* sub = app.add_subcommand(command.name, command.help);
    for (const std::string& name : command.options)
      bound[command.name][name] = sub->add_option("--" + name, raw[name], option_specs().at(name).help);
    if (std::find(command.options.begin(), command.options.end(), "jobs") == command.options.end())
      bound[command.name]["jobs"] = sub->add_option("--jobs", raw["jobs"], option_specs().at("jobs").help);
    bound[command.name]["out"] = sub->add_option("--out", raw["out"], option_specs().at("out").help);
    sub->add_option("--config", config_path, "JSON file of option values; flags take precedence");
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const CLI::App* chosen = app.get_subcommands().front();
  const SubcommandSpec& command = *std::find_if(
      subcommands().begin(), subcommands().end(),
      [&](const SubcommandSpec& s) { return chosen->get_name() == s.name; });
  auto& options = bound[command.name];

  Json file_config = Json::object();
  if (!config_path.empty()) {
    try {
      file_config = Json::parse(read_text_file(config_path));
    } catch (const Json::parse_error& e) {
      throw InvalidArgument("config file '" + config_path + "' is not valid JSON: " + e.what());
    }
    if (!file_config.is_object())
      throw InvalidArgument("config file '" + config_path + "' must hold a JSON object");
  }
  for (const auto& [key, value] : file_config.items()) {
    if (key == "subcommand") {
      if (!value.is_string() || value.get<std::string>() != command.name)
        throw InvalidArgument("config file is for subcommand '" + value.dump() + "', not '" +
                              command.name + "'");
      continue;
    }
    if (!options.count(key))
      throw InvalidArgument("config key '" + key + "' is not an option of " + command.name);
  }

  std::map<std::string, std::string> values;
  for (const auto& [name, opt] : options) {
    if (opt->count() > 0)
      values[name] = raw[name];
    else if (file_config.contains(name))
      values[name] = json_scalar_text(file_config[name], name);
    else if (command.fallbacks.count(name))
      values[name] = command.fallbacks.at(name);
    else
      values[name] = option_specs().at(name).fallback;
  }
  // Options a subcommand does not expose still resolve to their defaults so
  // shared helpers can read them.
  for (const auto& [name, o] : option_specs())
    if (!values.count(name)) values[name] = o.fallback;

  int jobs = default_jobs();
  if (!values["jobs"].empty()) {
    jobs = parse_number<int>(values["jobs"], "--jobs");
    if (jobs < 1) throw InvalidArgument("--jobs must be at least 1");
  }
  fs::path out_dir = values["out"];
  if (out_dir.empty()) {
    const char* env = std::getenv(kOutputDirEnv);
    out_dir = (env && *env) ? fs::path(env) : fs::path(".");
  }

  std::vector<std::string> argv{"tqpe"};
  argv.insert(argv.end(), args.begin(), args.end());
  Context ctx(command.name, std::move(values), std::move(out_dir), jobs, std::move(argv), out);
  command.run(ctx);
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    return dispatch(args, out, err);
  } catch (const PhaseAliasing& e) {
    err << "tqpe: phase aliasing: " << e.what() << '\n';
    return kExitPhaseAliasing;
  } catch (const InvalidArgument& e) {
    err << "tqpe: invalid argument: " << e.what() << '\n';
    return kExitInvalidArgument;
  } catch (const ResourceLimit& e) {
    err << "tqpe: resource limit: " << e.what() << '\n';
    return kExitResourceLimit;
  } catch (const IoError& e) {
    err << "tqpe: output error: " << e.what() << '\n';
    return kExitIo;
  } catch (const InvariantViolation& e) {
    err << "tqpe: internal invariant violated: " << e.what() << '\n';
    return kExitInternal;
  } catch (const std::exception& e) {
    err << "tqpe: error: " << e.what() << '\n';
    return kExitFailure;
  }
}

int run_cli(const std::vector<std::string>& args) { return run_cli(args, std::cout, std::cerr); }

}  // namespace tqpe
