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

#include <complex>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace tqpe {

template <typename Real>
using ComplexT = std::complex<Real>;

/// Amplitude vector; qubit 0 is the least-significant bit of the index.
template <typename Real>
using StateVectorT = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, 1>;

template <typename Real>
using MatrixT = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, Eigen::Dynamic>;

using Complex = ComplexT<double>;
using StateVector = StateVectorT<double>;
using Matrix = MatrixT<double>;
using Matrix4 = Eigen::Matrix4cd;

inline constexpr double kPi = std::numbers::pi;

/// Precondition failure on a caller-supplied value.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Request exceeds a dense-construction or register-size guard.
class ResourceLimit : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Internal consistency check failed (e.g. a non-Hermitian matrix reached
/// the eigensolver).
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Phase would wrap past the decodable window.
class PhaseAliasing : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

inline std::uint64_t dimension_for(int qubits) { return std::uint64_t{1} << qubits; }

}  // namespace tqpe
