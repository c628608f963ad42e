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

// Gate and channel representations.
//
// A gate on n ququats is the real 4^n x 4^n matrix
//
//   E_{mu nu} = 2^-n Tr(sigma_mu E(sigma_nu)),
//
// acting on Pauli vectors by P' = E P. Row 0 holds the trace functional,
// column 0 below row 0 holds the translation T, and the remaining block is
// the linear part R.

#ifndef QUQUAT_SUPEROP_HPP_
#define QUQUAT_SUPEROP_HPP_

#include <span>
#include <vector>

#include "ququat/liouville.hpp"
#include "ququat/types.hpp"

namespace ququat {

class GateMatrix {
 public:
  /// Throws DimensionError unless m is 4^n x 4^n for some 1 <= n <= 5.
  explicit GateMatrix(RMatrix m);

  static GateMatrix identity(int n);

  int ququats() const { return n_; }
  Eigen::Index dim() const { return m_.rows(); }
  const RMatrix& matrix() const { return m_; }
  double operator()(Eigen::Index mu, Eigen::Index nu) const { return m_(mu, nu); }

 private:
  int n_;
  RMatrix m_;
};

/// Operator-sum representation rho -> sum_j A_j rho A_j^dagger.
class KrausSet {
 public:
  /// Requires equal square 2^n shapes and sum A^dagger A <= I (trace-decreasing
  /// at worst); throws ValidationError otherwise.
  explicit KrausSet(std::vector<CMatrix> operators);

  int qubits() const { return n_; }
  const std::vector<CMatrix>& operators() const { return ops_; }
  std::size_t size() const { return ops_.size(); }

  /// || sum A^dagger A - I ||_inf < tol.
  bool is_trace_preserving(double tol = tol::kStructural) const;

 private:
  int n_;
  std::vector<CMatrix> ops_;
};

/// Unnormalised Choi matrix sum_{k,l} |k><l| (x) E(|k><l|).
class ChoiMatrix {
 public:
  /// Throws ValidationError unless Hermitian to tol::kStructural.
  explicit ChoiMatrix(CMatrix m);

  int qubits() const { return n_; }
  const CMatrix& matrix() const { return m_; }

 private:
  int n_;
  CMatrix m_;
};

/// P' = E P. When E is trace-preserving and P normalised, P'_0 is set to
/// exactly 1.
PauliVector apply(const GateMatrix& e, const PauliVector& p);

/// E_{mu nu} = 2^-n Tr(sigma_mu U sigma_nu U^dagger). Throws ValidationError
/// for non-unitary U.
GateMatrix ptm_from_unitary(const CMatrix& u);

/// E_{mu nu} = 2^-n sum_j Tr(sigma_mu A_j sigma_nu A_j^dagger). Throws
/// NumericError if any entry carries an imaginary residue >= 1e-10.
GateMatrix ptm_from_kraus(const KrausSet& k);

bool is_trace_preserving(const GateMatrix& e, double tol = tol::kStructural);
bool is_unital(const GateMatrix& e, double tol = tol::kStructural);

ChoiMatrix choi_from_kraus(const KrausSet& k);
ChoiMatrix choi_from_ptm(const GateMatrix& e);

/// Min eigenvalue of choi_from_ptm(e) >= tol::kPsd.
bool is_completely_positive(const GateMatrix& e);

/// Eigendecomposition C = sum lambda_j v_j v_j^dagger, A_j = sqrt(lambda_j)
/// unvec(v_j) with column-major unvec. Throws NotCompletelyPositiveError if
/// an eigenvalue is below tol::kPsd.
KrausSet kraus_from_choi(const ChoiMatrix& c);

/// Matrix product first * second: `second` is applied first.
GateMatrix compose(const GateMatrix& first, const GateMatrix& second);

/// Kronecker product; the combined index digits are a's digits followed by
/// b's digits.
GateMatrix tensor(const GateMatrix& a, const GateMatrix& b);

/// Transpose, the matrix of the adjoint superoperator.
GateMatrix adjoint(const GateMatrix& e);

/// || E E^T - I ||_inf < tol.
bool is_orthogonal(const GateMatrix& e, double tol = tol::kStructural);

/// Tr E(rho) = sum_mu E_{0 mu} P_mu.
double trace_functional(const GateMatrix& e, const PauliVector& p);

/// sum_mu E_{0 mu}^2 <= 1 (+ tol::kTraceBound).
bool satisfies_trace_decreasing_bound(const GateMatrix& e);

/// (E P) / Tr E(rho); the result has P_0 = 1 exactly. Throws
/// ZeroProbabilityError when the trace is below tol::kZeroProbability.
PauliVector nonlinear_apply(const GateMatrix& e, const PauliVector& p);

/// Permutation of ququat factors on Liouville indices: (M v) puts old
/// ququat order[i] at position i. `order` must be a permutation of 0..n-1.
RMatrix ququat_permutation(int n, std::span<const int> order);

/// Embeds a gate acting on `targets` (its leftmost ququat on targets[0])
/// into n ququats: permute targets to the front, tensor with identity,
/// permute back.
GateMatrix embed(const GateMatrix& local, std::span<const int> targets, int n);

}  // namespace ququat

#endif  // QUQUAT_SUPEROP_HPP_
