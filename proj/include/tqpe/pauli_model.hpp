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
#include <string>
#include <vector>

#include "tqpe/core.hpp"

namespace tqpe {

enum class Pauli : std::uint8_t { I, X, Y, Z };

char to_char(Pauli p);
Pauli pauli_from_char(char c);

/// One weighted Pauli string. `axes[i]` is the operator on site i.
struct PauliTerm {
  std::vector<Pauli> axes;
  double coefficient = 0.0;

  int num_sites() const { return static_cast<int>(axes.size()); }
  std::vector<int> active_sites() const;
  bool is_identity() const;

  /// Builds a term acting with `axis` on each of `sites` and I elsewhere.
  static PauliTerm on_sites(int num_sites, const std::vector<int>& sites, Pauli axis,
                            double coefficient);
  /// Parses a dense label such as "ZZI" (site 0 first).
  static PauliTerm from_label(const std::string& label, double coefficient);
  std::string label() const;

  bool operator==(const PauliTerm&) const = default;
};

/// A Hermitian operator given as a real-weighted sum of Pauli strings.
struct PauliHamiltonian {
  int num_sites = 0;
  std::vector<PauliTerm> terms;

  bool operator==(const PauliHamiltonian&) const = default;
};

/// All-to-all XX + YY + ZZ model with independent +/-1 couplings.
/// Terms are ordered by pair (i, j) lexicographically, then X, Y, Z.
struct SpinGlassHamiltonian : PauliHamiltonian {
  std::uint64_t seed = 0;
  int edge_count = 0;

  bool operator==(const SpinGlassHamiltonian&) const = default;
};

SpinGlassHamiltonian generate_spin_glass(int n, std::uint64_t seed);

inline constexpr int kMaxDenseSites = 12;

/// Dense 2^n matrix; qubit 0 is the least-significant index bit.
Matrix to_dense_matrix(const PauliHamiltonian& h);

/// Sum of |coefficient|; an upper bound on the spectral norm.
double coefficient_one_norm(const PauliHamiltonian& h);

}  // namespace tqpe
