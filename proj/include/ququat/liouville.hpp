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

// Liouville-space state representation.
//
// A mixed state of n qubits (an n-ququat) is stored as its real Pauli
// coefficient vector P_mu = Tr(sigma_mu rho), so that
//
//   rho = 2^-n sum_mu P_mu sigma_mu,   P_0 = 1.
//
// This is the "square bracket" normalisation; gate matrices act on it
// unchanged (P' = E P).

#ifndef QUQUAT_LIOUVILLE_HPP_
#define QUQUAT_LIOUVILLE_HPP_

#include <array>

#include "ququat/pauli.hpp"
#include "ququat/types.hpp"

namespace ququat {

/// Complex 2^n x 2^n Hermitian, unit-trace, positive semidefinite matrix.
class DensityMatrix {
 public:
  /// Validates Hermiticity, unit trace and positivity; throws ValidationError.
  explicit DensityMatrix(CMatrix m);

  /// Validates Hermiticity and unit trace only. Used for reconstructions
  /// that may legitimately be non-positive.
  static DensityMatrix unchecked_positivity(CMatrix m);

  int qubits() const { return n_; }
  const CMatrix& matrix() const { return m_; }
  double min_eigenvalue() const;

 private:
  struct NoPsdCheck {};
  DensityMatrix(CMatrix m, NoPsdCheck);

  int n_;
  CMatrix m_;
};

/// Real coefficient vector in the P_mu convention. P_0 = 1 for a normalised
/// state; trace-decreasing maps produce vectors with P_0 < 1.
class PauliVector {
 public:
  PauliVector(int n, RVector coeffs);

  static PauliVector maximally_mixed(int n);

  int ququats() const { return n_; }
  const RVector& coeffs() const { return coeffs_; }
  double operator[](std::size_t mu) const { return coeffs_[static_cast<Eigen::Index>(mu)]; }

  /// |P_0 - 1| <= tol.
  bool is_normalized(double tol = tol::kStructural) const;
  /// Throws NormalizationError unless is_normalized().
  void require_normalized(const char* what) const;

  /// Sum of P_mu^2.
  double squared_norm() const { return coeffs_.squaredNorm(); }

 private:
  int n_;
  RVector coeffs_;
};

/// Tensor product of per-ququat coefficient vectors (first argument leftmost).
PauliVector tensor(const PauliVector& a, const PauliVector& b);

/// Arbitrary element |A) of Liouville space.
class OperatorKet {
 public:
  explicit OperatorKet(CMatrix m);

  int qubits() const { return n_; }
  const CMatrix& matrix() const { return m_; }

 private:
  int n_;
  CMatrix m_;
};

PauliVector density_to_pauli(const DensityMatrix& rho);

/// Result of reconstructing a matrix from a Pauli vector. `physical` is false
/// when the matrix has a negative eigenvalue below tol::kPsd; the matrix is
/// still returned (Hermitian, unit trace).
struct DensityReconstruction {
  DensityMatrix rho;
  bool physical;
  double min_eigenvalue;
};

DensityReconstruction pauli_to_density(const PauliVector& p);

/// 2^-n sum_mu P_mu sigma_mu for any coefficient vector (no normalisation
/// requirement).
CMatrix pauli_to_matrix(const PauliVector& p);

/// Generalised computational state |mu]: P_0 = 1, P_mu = 1 (mu != 0).
PauliVector comp_state(const PauliIndex& mu);

/// Product of single-ququat generalised computational states, one digit per
/// ququat (leftmost first).
PauliVector product_comp_state(std::span<const int> digits);

/// Tr(rho^2) = 2^-n sum_mu P_mu^2.
double purity(const PauliVector& p);

/// (A|B) = Tr(A^dagger B).
Complex liouville_inner(const OperatorKet& a, const OperatorKet& b);

/// Complex coefficients c_mu = (sigma_mu|A) = Tr(sigma_mu A).
CVector operator_coefficients(const CMatrix& a);

/// Inverse of operator_coefficients: A = 2^-n sum_mu c_mu sigma_mu.
CMatrix operator_from_coefficients(const CVector& c);

/// Weights (1 - P_1 - P_2 - P_3, P_1, P_2, P_3) with |rho] = sum_mu w_mu |mu].
std::array<double, 4> decompose_single_ququat(const PauliVector& p);

/// Recombines weights from decompose_single_ququat.
PauliVector recombine_single_ququat(const std::array<double, 4>& weights);

}  // namespace ququat

#endif  // QUQUAT_LIOUVILLE_HPP_
