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
 * Persistence: instance JSON, run records and CSV tables.
 *
 * Every data file carries the resolved configuration that produced it. CSV
 * files start with a single `# config: {...}` comment line. Wall-clock
 * metadata is kept out of data files and goes to `<file>.meta.json`.
 */

#pragma once

#include <filesystem>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "tqpe/analysis.hpp"
#include "tqpe/pauli_model.hpp"
#include "tqpe/qpe.hpp"
#include "tqpe/spectral_oracle.hpp"

namespace tqpe {

using Json = nlohmann::ordered_json;

/// Output path could not be created or written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// %.17g, which round-trips every finite double.
std::string format_real(double x);

/// {n, seed, terms: [{sites: [i, j], axis: "X", coeff: 1}, ...]}
Json instance_to_json(const SpinGlassHamiltonian& h);
/// Inverse of instance_to_json. Throws InvalidArgument on malformed input.
SpinGlassHamiltonian instance_from_json(const Json& j);

Json qpe_config_to_json(const QpeConfig& cfg);
Json histogram_to_json(const ShotHistogram& h);

/// Reference values for a run record, available when n is small enough for
/// exact diagonalization.
struct RunReference {
  double e0 = 0.0;
  double chi = 0.0;
  double p_opt = 0.0;
  double zeta = 0.0;
};

/// {hamiltonian: {n, seed}, config: {...}, results: {histogram, optimal_bits,
/// optimal_rate, E0_ref, zeta_ref, ...}}
Json run_record_json(const SpinGlassHamiltonian& h, const QpeConfig& cfg, const QpeResult& result,
                     const std::optional<RunReference>& ref);

/// Rectangular string table.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

struct DigitizationRow {
  int n = 0;
  int m = 0;
  double t = 0.0;
  double error = 0.0;
};

struct OverlapTableRow {
  int n = 0;
  AveragedOverlap overlap;
};

CsvTable digitization_table(const std::vector<DigitizationRow>& rows);
CsvTable averaged_overlap_table(const std::vector<OverlapTableRow>& rows);
CsvTable overlap_table(const std::vector<OverlapReport>& rows);
CsvTable sweep_table(const std::vector<SweepRecord>& rows);
CsvTable trotter_error_table(const std::vector<TrotterErrorRow>& rows);
CsvTable gate_count_table(const std::vector<GateCountRow>& rows, int m_prec);
CsvTable energy_table(const EnergyDistributionReport& report);

/// Header comment, column line, then rows. Cells are written verbatim.
void write_csv(std::ostream& os, const Json& config, const CsvTable& table);

/// Two-space indented dump with a trailing newline.
std::string dump_json(const Json& j);

/// Writes `content` to `path`, creating parent directories. Throws IoError.
void write_text_file(const std::filesystem::path& path, const std::string& content);
std::string read_text_file(const std::filesystem::path& path);

}  // namespace tqpe
