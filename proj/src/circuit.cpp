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

#include "tqpe/circuit.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>

namespace tqpe {

std::string_view gate_name(GateKind kind) {
  switch (kind) {
    case GateKind::H: return "H";
    case GateKind::X: return "X";
    case GateKind::CX: return "CX";
    case GateKind::CZ: return "CZ";
    case GateKind::RZ: return "RZ";
    case GateKind::U3: return "U3";
    case GateKind::CRZ: return "CRZ";
    case GateKind::CP: return "CP";
    case GateKind::TWO_QUBIT_UNITARY: return "TWO_QUBIT_UNITARY";
  }
  return "?";
}

int gate_arity(GateKind kind) {
  switch (kind) {
    case GateKind::H:
    case GateKind::X:
    case GateKind::RZ:
    case GateKind::U3: return 1;
    default: return 2;
  }
}

QuantumCircuit::QuantumCircuit(int num_qubits) : num_qubits_(num_qubits) {
  if (num_qubits < 0) throw InvalidArgument("QuantumCircuit: negative qubit count");
}

QuantumCircuit& QuantumCircuit::append(GateOp op) {
  const int arity = op.arity();
  for (int k = 0; k < arity; ++k) {
    if (op.qubits[k] < 0 || op.qubits[k] >= num_qubits_)
      throw InvalidArgument("QuantumCircuit: qubit index " + std::to_string(op.qubits[k]) +
                            " outside register of " + std::to_string(num_qubits_));
  }
  if (arity == 2 && op.qubits[0] == op.qubits[1])
    throw InvalidArgument("QuantumCircuit: two-qubit gate on a repeated qubit");
  if (arity == 1) op.qubits[1] = -1;
  for (double p : op.params)
    if (!std::isfinite(p)) throw InvalidArgument("QuantumCircuit: non-finite gate parameter");
  if (op.kind == GateKind::TWO_QUBIT_UNITARY && !op.unitary)
    throw InvalidArgument("QuantumCircuit: TWO_QUBIT_UNITARY without a matrix");
  ops_.push_back(std::move(op));
  return *this;
}

QuantumCircuit& QuantumCircuit::append(const QuantumCircuit& other) {
  if (other.num_qubits_ > num_qubits_)
    throw InvalidArgument("QuantumCircuit: appended circuit is wider than the register");
  ops_.insert(ops_.end(), other.ops_.begin(), other.ops_.end());
  return *this;
}

QuantumCircuit& QuantumCircuit::append_mapped(const QuantumCircuit& other,
                                              const std::vector<int>& mapping) {
  if (static_cast<int>(mapping.size()) < other.num_qubits_)
    throw InvalidArgument("QuantumCircuit: qubit mapping too short");
  reserve(ops_.size() + other.ops_.size());
  for (GateOp op : other.ops_) {
    for (int k = 0; k < op.arity(); ++k) op.qubits[k] = mapping[op.qubits[k]];
    append(std::move(op));
  }
  return *this;
}

GateCensus gate_census(const QuantumCircuit& c) {
  GateCensus census;
  for (const GateOp& op : c.ops()) {
    if (op.arity() == 1)
      ++census.one_qubit;
    else
      ++census.two_qubit;
  }
  return census;
}

QuantumCircuit inverse(const QuantumCircuit& c) {
  QuantumCircuit out(c.num_qubits());
  out.reserve(c.size());
  for (auto it = c.ops().rbegin(); it != c.ops().rend(); ++it) {
    GateOp op = *it;
    switch (op.kind) {
      case GateKind::RZ:
      case GateKind::CRZ:
      case GateKind::CP: op.params[0] = -op.params[0]; break;
      case GateKind::U3:
        // U3(t, p, l)^dagger = U3(-t, -l, -p)
        op.params = {-it->params[0], -it->params[2], -it->params[1]};
        break;
      case GateKind::TWO_QUBIT_UNITARY:
        op.unitary = std::make_shared<const Matrix4>(it->unitary->adjoint());
        break;
      default: break;
    }
    out.append(std::move(op));
  }
  return out;
}

namespace {

void put_number(std::ostream& os, double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  os << buf;
}

}  // namespace

void write_circuit_text(std::ostream& os, const QuantumCircuit& c) {
  for (const GateOp& op : c.ops()) {
    os << gate_name(op.kind) << ' ' << op.qubits[0];
    if (op.arity() == 2) os << ',' << op.qubits[1];
    switch (op.kind) {
      case GateKind::RZ:
      case GateKind::CRZ:
      case GateKind::CP:
        os << ';';
        put_number(os, op.params[0]);
        break;
      case GateKind::U3:
        os << ';';
        for (int k = 0; k < 3; ++k) {
          if (k) os << ',';
          put_number(os, op.params[k]);
        }
        break;
      case GateKind::TWO_QUBIT_UNITARY: {
        os << ';';
        bool first = true;
        for (int r = 0; r < 4; ++r)
          for (int col = 0; col < 4; ++col)
            for (double part : {(*op.unitary)(r, col).real(), (*op.unitary)(r, col).imag()}) {
              if (!first) os << ',';
              first = false;
              put_number(os, part);
            }
        break;
      }
      default: break;
    }
    os << '\n';
  }
}

std::string circuit_to_text(const QuantumCircuit& c) {
  std::ostringstream os;
  write_circuit_text(os, c);
  return os.str();
}

}  // namespace tqpe
