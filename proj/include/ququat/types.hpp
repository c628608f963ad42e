// Copyright 2026 The ququat Authors
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

#ifndef QUQUAT_TYPES_HPP_
#define QUQUAT_TYPES_HPP_

#include <complex>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace ququat {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;

/// Largest supported ququat count. Dense 4^n x 4^n matrices beyond this are
/// impractical.
inline constexpr int kMaxQuquats = 5;

namespace tol {
/// Structural equalities: Hermiticity, trace preservation, orthogonality.
inline constexpr double kStructural = 1e-10;
/// Round-trip identities (density <-> Pauli vector).
inline constexpr double kRoundTrip = 1e-12;
/// Minimum eigenvalue accepted as positive semidefinite.
inline constexpr double kPsd = -1e-9;
/// Denominator cutoff for normalised (nonlinear) gates and measurement.
inline constexpr double kZeroProbability = 1e-12;
/// Choi eigenvalues below this are dropped when extracting Kraus operators.
inline constexpr double kKrausDrop = 1e-12;
/// Slack on the trace-decreasing row-0 bound.
inline constexpr double kTraceBound = 1e-12;
}  // namespace tol

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Shapes or ququat counts do not match.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Input violates a structural invariant (Hermiticity, unit trace, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A quantity that must be real carries an imaginary residue.
class NumericError : public Error {
 public:
  using Error::Error;
};

/// P_0 != 1 where a normalised Pauli vector is required.
class NormalizationError : public Error {
 public:
  using Error::Error;
};

class NotCompletelyPositiveError : public Error {
 public:
  using Error::Error;
};

class ZeroProbabilityError : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input (logic expressions, circuit files).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Internal-consistency failure between the Liouville pipeline and the dense
/// oracle.
class VerificationError : public Error {
 public:
  using Error::Error;
};

/// Number of basis operators / Liouville dimension for n ququats.
constexpr std::size_t liouville_dim(int n) { return std::size_t{1} << (2 * n); }

/// Hilbert-space dimension for n qubits.
constexpr std::size_t hilbert_dim(int n) { return std::size_t{1} << n; }

/// Max-absolute-entry norm; every "‖·‖∞" in this library means this.
template <typename Derived>
double max_abs(const Eigen::MatrixBase<Derived>& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

/// Returns n such that dim == 2^n, or -1.
int qubits_for_hilbert_dim(std::size_t dim);

/// Returns n such that dim == 4^n, or -1.
int ququats_for_liouville_dim(std::size_t dim);

}  // namespace ququat

#endif  // QUQUAT_TYPES_HPP_
