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

#include "tqpe/pauli_model.hpp"

#include <cmath>

#include "tqpe/random.hpp"

namespace tqpe {

char to_char(Pauli p) {
  switch (p) {
    case Pauli::I: return 'I';
    case Pauli::X: return 'X';
    case Pauli::Y: return 'Y';
    case Pauli::Z: return 'Z';
  }
  return '?';
}

Pauli pauli_from_char(char c) {
  switch (c) {
    case 'I': return Pauli::I;
    case 'X': return Pauli::X;
    case 'Y': return Pauli::Y;
    case 'Z': return Pauli::Z;
    default: throw InvalidArgument(std::string("unknown Pauli label '") + c + "'");
  }
}

std::vector<int> PauliTerm::active_sites() const {
  std::vector<int> out;
  for (int i = 0; i < num_sites(); ++i)
    if (axes[i] != Pauli::I) out.push_back(i);
  return out;
}

bool PauliTerm::is_identity() const {
  for (Pauli p : axes)
    if (p != Pauli::I) return false;
  return true;
}

PauliTerm PauliTerm::on_sites(int num_sites, const std::vector<int>& sites, Pauli axis,
                              double coefficient) {
  if (!std::isfinite(coefficient)) throw InvalidArgument("PauliTerm: non-finite coefficient");
  PauliTerm t{std::vector<Pauli>(num_sites, Pauli::I), coefficient};
  for (int s : sites) {
    if (s < 0 || s >= num_sites) throw InvalidArgument("PauliTerm: site index out of range");
    if (t.axes[s] != Pauli::I) throw InvalidArgument("PauliTerm: repeated site index");
    t.axes[s] = axis;
  }
  return t;
}

PauliTerm PauliTerm::from_label(const std::string& label, double coefficient) {
  if (!std::isfinite(coefficient)) throw InvalidArgument("PauliTerm: non-finite coefficient");
  PauliTerm t{{}, coefficient};
  t.axes.reserve(label.size());
  for (char c : label) t.axes.push_back(pauli_from_char(c));
  return t;
}

std::string PauliTerm::label() const {
  std::string s;
  for (Pauli p : axes) s.push_back(to_char(p));
  return s;
}

SpinGlassHamiltonian generate_spin_glass(int n, std::uint64_t seed) {
  if (n < 2) throw InvalidArgument("generate_spin_glass: n must be at least 2");
  SpinGlassHamiltonian h;
  h.num_sites = n;
  h.seed = seed;
  h.edge_count = n * (n - 1) / 2;
  h.terms.reserve(3 * static_cast<std::size_t>(h.edge_count));
  std::uint64_t index = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (Pauli axis : {Pauli::X, Pauli::Y, Pauli::Z}) {
        // One sub-stream per coefficient index keeps each draw independent of
        // the instance size.
        const double sign = (derive_seed(seed, index++) >> 63) ? 1.0 : -1.0;
        h.terms.push_back(PauliTerm::on_sites(n, {i, j}, axis, sign));
      }
    }
  }
  return h;
}

Matrix to_dense_matrix(const PauliHamiltonian& h) {
  if (h.num_sites > kMaxDenseSites)
    throw ResourceLimit("to_dense_matrix: at most " + std::to_string(kMaxDenseSites) +
                        " sites supported, got " + std::to_string(h.num_sites));
  const auto dim = static_cast<Eigen::Index>(dimension_for(h.num_sites));
  Matrix m = Matrix::Zero(dim, dim);
  const Complex i_unit(0.0, 1.0);
  for (const PauliTerm& term : h.terms) {
    if (term.num_sites() != h.num_sites)
      throw InvalidArgument("to_dense_matrix: term width does not match site count");
    // P|b> = phase(b) |b ^ flip>
    std::uint64_t flip = 0;
    for (int s = 0; s < h.num_sites; ++s)
      if (term.axes[s] == Pauli::X || term.axes[s] == Pauli::Y) flip |= std::uint64_t{1} << s;
    for (Eigen::Index col = 0; col < dim; ++col) {
      Complex phase = term.coefficient;
      for (int s = 0; s < h.num_sites; ++s) {
        const bool bit = (static_cast<std::uint64_t>(col) >> s) & 1U;
        switch (term.axes[s]) {
          case Pauli::Y: phase *= bit ? -i_unit : i_unit; break;
          case Pauli::Z: if (bit) phase = -phase; break;
          default: break;
        }
      }
      m(static_cast<Eigen::Index>(static_cast<std::uint64_t>(col) ^ flip), col) += phase;
    }
  }
  return m;
}

double coefficient_one_norm(const PauliHamiltonian& h) {
  double sum = 0.0;
  for (const PauliTerm& t : h.terms) sum += std::abs(t.coefficient);
  return sum;
}

}  // namespace tqpe
