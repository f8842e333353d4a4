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

#include <array>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include "tqpe/core.hpp"

namespace tqpe {

enum class GateKind : std::uint8_t { H, X, CX, CZ, RZ, U3, CRZ, CP, TWO_QUBIT_UNITARY };

std::string_view gate_name(GateKind kind);
int gate_arity(GateKind kind);

/// One gate application.
///
/// Angles follow the usual conventions:
///   RZ(a)        = diag(e^{-ia/2}, e^{ia/2})
///   U3(t, p, l)  = [[cos t/2, -e^{il} sin t/2], [e^{ip} sin t/2, e^{i(p+l)} cos t/2]]
///   CRZ(a)       = RZ(a) on qubits[1] controlled by qubits[0]
///   CP(a)        = diag(1, 1, 1, e^{ia})
///   CX / CX      : qubits[0] is the control
/// TWO_QUBIT_UNITARY acts on the local index bit(qubits[0]) + 2 * bit(qubits[1]).
struct GateOp {
  GateKind kind = GateKind::H;
  std::array<int, 2> qubits{0, -1};
  std::array<double, 3> params{0.0, 0.0, 0.0};
  std::shared_ptr<const Matrix4> unitary;

  int arity() const { return gate_arity(kind); }

  static GateOp h(int q) { return {GateKind::H, {q, -1}, {}, nullptr}; }
  static GateOp x(int q) { return {GateKind::X, {q, -1}, {}, nullptr}; }
  static GateOp cx(int c, int t) { return {GateKind::CX, {c, t}, {}, nullptr}; }
  static GateOp cz(int a, int b) { return {GateKind::CZ, {a, b}, {}, nullptr}; }
  static GateOp rz(int q, double angle) { return {GateKind::RZ, {q, -1}, {angle, 0, 0}, nullptr}; }
  static GateOp u3(int q, double theta, double phi, double lambda) {
    return {GateKind::U3, {q, -1}, {theta, phi, lambda}, nullptr};
  }
  static GateOp crz(int c, int t, double angle) {
    return {GateKind::CRZ, {c, t}, {angle, 0, 0}, nullptr};
  }
  static GateOp cp(int c, int t, double angle) {
    return {GateKind::CP, {c, t}, {angle, 0, 0}, nullptr};
  }
  static GateOp two_qubit_unitary(int q0, int q1, const Matrix4& u) {
    return {GateKind::TWO_QUBIT_UNITARY, {q0, q1}, {}, std::make_shared<const Matrix4>(u)};
  }
};

struct GateCensus {
  std::uint64_t one_qubit = 0;
  std::uint64_t two_qubit = 0;
  std::uint64_t total() const { return one_qubit + two_qubit; }

  GateCensus& operator+=(const GateCensus& o) {
    one_qubit += o.one_qubit;
    two_qubit += o.two_qubit;
    return *this;
  }
  friend GateCensus operator+(GateCensus a, const GateCensus& b) { return a += b; }
  bool operator==(const GateCensus&) const = default;
};

class QuantumCircuit {
 public:
  QuantumCircuit() = default;
  explicit QuantumCircuit(int num_qubits);

  int num_qubits() const { return num_qubits_; }
  const std::vector<GateOp>& ops() const { return ops_; }
  std::size_t size() const { return ops_.size(); }
  bool empty() const { return ops_.empty(); }

  /// Validates qubit indices and parameters before appending.
  QuantumCircuit& append(GateOp op);
  /// Appends every op of `other` (which must fit in this register).
  QuantumCircuit& append(const QuantumCircuit& other);
  /// Appends `other` with its qubit i relabelled to `mapping[i]`.
  QuantumCircuit& append_mapped(const QuantumCircuit& other, const std::vector<int>& mapping);

  void reserve(std::size_t n) { ops_.reserve(n); }

 private:
  int num_qubits_ = 0;
  std::vector<GateOp> ops_;
};

GateCensus gate_census(const QuantumCircuit& c);

/// Adjoint circuit: reversed order, each gate replaced by its inverse.
QuantumCircuit inverse(const QuantumCircuit& c);

/// Line-oriented text export, one gate per line: `KIND q0[,q1][;p0,p1,...]`.
/// TWO_QUBIT_UNITARY lines carry 32 numbers (row-major real, imag pairs).
void write_circuit_text(std::ostream& os, const QuantumCircuit& c);
std::string circuit_to_text(const QuantumCircuit& c);

}  // namespace tqpe
