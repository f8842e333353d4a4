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

#include "tqpe/statevector.hpp"

#include <algorithm>

#include "tqpe/random.hpp"

namespace tqpe {

StateVector run_circuit(const QuantumCircuit& c, const StateVector& initial) {
  StateVector psi = initial;
  run_in_place<double>(c, psi);
  return psi;
}

StateVector basis_state(int num_qubits, std::uint64_t index) {
  const std::uint64_t dim = dimension_for(num_qubits);
  if (index >= dim) throw InvalidArgument("basis_state: index out of range");
  StateVector psi = StateVector::Zero(static_cast<Eigen::Index>(dim));
  psi[static_cast<Eigen::Index>(index)] = 1.0;
  return psi;
}

StateVector zero_state(int num_qubits) { return basis_state(num_qubits, 0); }

void apply_controlled_dense(StateVector& psi, int control, const std::vector<int>& targets,
                            const Matrix& u) {
  const auto local_dim = static_cast<Eigen::Index>(dimension_for(static_cast<int>(targets.size())));
  if (u.rows() != local_dim || u.cols() != local_dim)
    throw InvalidArgument("apply_controlled_dense: operator size does not match target count");
  std::uint64_t target_mask = 0;
  for (int q : targets) {
    detail::check_qubit(psi, q);
    target_mask |= std::uint64_t{1} << q;
  }
  std::uint64_t control_bit = 0;
  if (control >= 0) {
    detail::check_qubit(psi, control);
    control_bit = std::uint64_t{1} << control;
    if (control_bit & target_mask)
      throw InvalidArgument("apply_controlled_dense: control overlaps targets");
  }
  std::vector<std::uint64_t> offsets(static_cast<std::size_t>(local_dim));
  for (Eigen::Index l = 0; l < local_dim; ++l) {
    std::uint64_t off = 0;
    for (std::size_t b = 0; b < targets.size(); ++b)
      if ((static_cast<std::uint64_t>(l) >> b) & 1U) off |= std::uint64_t{1} << targets[b];
    offsets[static_cast<std::size_t>(l)] = off;
  }
  StateVector local(local_dim);
  const std::uint64_t dim = psi.size();
  for (std::uint64_t i = 0; i < dim; ++i) {
    if (i & target_mask) continue;
    if ((i & control_bit) != control_bit) continue;
    for (Eigen::Index l = 0; l < local_dim; ++l) local[l] = psi[i | offsets[l]];
    const StateVector out = u * local;
    for (Eigen::Index l = 0; l < local_dim; ++l) psi[i | offsets[l]] = out[l];
  }
}

Matrix circuit_unitary(const QuantumCircuit& c) {
  if (c.num_qubits() > kMaxUnitaryQubits)
    throw ResourceLimit("circuit_unitary: at most " + std::to_string(kMaxUnitaryQubits) +
                        " qubits supported, got " + std::to_string(c.num_qubits()));
  const auto dim = static_cast<Eigen::Index>(dimension_for(c.num_qubits()));
  Matrix u(dim, dim);
  for (Eigen::Index j = 0; j < dim; ++j) {
    StateVector col = basis_state(c.num_qubits(), static_cast<std::uint64_t>(j));
    run_in_place<double>(c, col);
    u.col(j) = col;
  }
  return u;
}

std::vector<double> marginal_probabilities(const StateVector& psi,
                                           const std::vector<int>& qubits) {
  if (qubits.empty()) throw InvalidArgument("marginal_probabilities: empty qubit list");
  for (int q : qubits) detail::check_qubit(psi, q);
  const int width = static_cast<int>(qubits.size());
  std::vector<double> probs(dimension_for(width), 0.0);
  const std::uint64_t dim = psi.size();
  for (std::uint64_t i = 0; i < dim; ++i) {
    std::uint64_t outcome = 0;
    for (int k = 0; k < width; ++k) outcome = (outcome << 1) | ((i >> qubits[k]) & 1U);
    probs[outcome] += std::norm(psi[static_cast<Eigen::Index>(i)]);
  }
  return probs;
}

std::uint64_t ShotHistogram::count(const std::string& key) const {
  const auto it = counts.find(key);
  return it == counts.end() ? 0 : it->second;
}

double ShotHistogram::frequency(const std::string& key) const {
  return total_shots == 0 ? 0.0 : static_cast<double>(count(key)) / static_cast<double>(total_shots);
}

std::string to_bitstring(std::uint64_t value, int width) {
  std::string s(static_cast<std::size_t>(width), '0');
  for (int k = 0; k < width; ++k)
    if ((value >> (width - 1 - k)) & 1U) s[static_cast<std::size_t>(k)] = '1';
  return s;
}

std::uint64_t from_bitstring(const std::string& bits) {
  if (bits.empty() || bits.size() > 63) throw InvalidArgument("bitstring: bad width");
  std::uint64_t v = 0;
  for (char ch : bits) {
    if (ch != '0' && ch != '1')
      throw InvalidArgument(std::string("bitstring: non-binary character '") + ch + "'");
    v = (v << 1) | static_cast<std::uint64_t>(ch == '1');
  }
  return v;
}

std::vector<std::uint64_t> sample_outcomes(const StateVector& psi, const std::vector<int>& qubits,
                                           std::uint64_t shots, std::uint64_t seed) {
  if (shots < 1) throw InvalidArgument("sample_measurements: shots must be at least 1");
  const std::vector<double> probs = marginal_probabilities(psi, qubits);
  std::vector<double> cumulative(probs.size());
  double acc = 0.0;
  for (std::size_t k = 0; k < probs.size(); ++k) cumulative[k] = (acc += probs[k]);
  Rng rng(seed);
  std::vector<std::uint64_t> out;
  out.reserve(shots);
  for (std::uint64_t s = 0; s < shots; ++s) {
    const double u = rng.uniform() * acc;
    auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
    if (it == cumulative.end()) --it;
    // skip zero-probability outcomes that share the same cumulative value
    while (probs[static_cast<std::size_t>(it - cumulative.begin())] == 0.0 && it != cumulative.begin())
      --it;
    out.push_back(static_cast<std::uint64_t>(it - cumulative.begin()));
  }
  return out;
}

ShotHistogram make_histogram(const std::vector<int>& qubits,
                             const std::vector<std::uint64_t>& outcomes) {
  ShotHistogram h;
  h.qubits = qubits;
  h.total_shots = outcomes.size();
  for (std::uint64_t o : outcomes) ++h.counts[to_bitstring(o, h.width())];
  return h;
}

ShotHistogram sample_measurements(const StateVector& psi, const std::vector<int>& qubits,
                                  std::uint64_t shots, std::uint64_t seed) {
  return make_histogram(qubits, sample_outcomes(psi, qubits, shots, seed));
}

}  // namespace tqpe
