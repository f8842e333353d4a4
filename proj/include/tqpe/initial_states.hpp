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
#include <string_view>
#include <vector>

#include "tqpe/circuit.hpp"
#include "tqpe/random.hpp"

namespace tqpe {

/// Candidate QPE input states. `ground_eigenstate` is an oracle state taken
/// from exact diagonalization; it has no circuit and is only understood by
/// the overlap routines.
enum class StateKind {
  all_zero,
  ghz,
  clique_graph,
  quantum_volume_su4,
  random_u3,
  staggered_x,
  ground_eigenstate,
};

std::string_view state_kind_name(StateKind kind);
StateKind parse_state_kind(std::string_view name);

/// The six circuit-preparable kinds, in a fixed order.
const std::vector<StateKind>& preparable_state_kinds();

/// Preparation circuit on n qubits:
///   all_zero           empty
///   ghz                H(0), CX(0,1), CX(1,2), ...
///   clique_graph       H on all, CZ on every pair i<j
///   quantum_volume_su4 n layers of seeded permutation + Haar SU(4) per pair
///   random_u3          U3 per qubit, theta in [0,pi], phi, lambda in [0,2pi)
///   staggered_x        X on every odd-indexed qubit
QuantumCircuit build_initial_state(StateKind kind, int n, std::uint64_t seed);

/// Haar-distributed SU(4): QR of a complex Gaussian matrix with the phases of
/// R's diagonal folded back into Q, then divided by det^(1/4).
Matrix4 haar_su4(Rng& rng);

}  // namespace tqpe
