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

// Pseudo-gates: the left and right multiplication superoperators
//
//   L_A |B) = |AB),   R_A |B) = |BA),
//
// in the Pauli basis, plus the Weyl generators |mu)(nu| and numeric checks
// of the product formulas built from them.

#ifndef QUQUAT_PSEUDOGATE_HPP_
#define QUQUAT_PSEUDOGATE_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "ququat/liouville.hpp"
#include "ququat/superop.hpp"

namespace ququat {

/// Complex 4^n x 4^n matrix acting on operator coefficients c_mu = Tr(sigma_mu B).
class PseudoGateMatrix {
 public:
  explicit PseudoGateMatrix(CMatrix m);

  int ququats() const { return n_; }
  const CMatrix& matrix() const { return m_; }

  /// Coefficients of the image of the operator with coefficients c.
  CVector act(const CVector& c) const { return m_ * c; }

 private:
  int n_;
  CMatrix m_;
};

/// L_{mu nu} = 2^-n Tr(sigma_mu A sigma_nu): the matrix of B -> A B.
PseudoGateMatrix left_matrix(const CMatrix& a);

/// R_{mu nu} = 2^-n Tr(sigma_mu sigma_nu A^dagger): the matrix of
/// B -> B A^dagger. Entrywise equal to conj(left_matrix(a)).
PseudoGateMatrix right_matrix(const CMatrix& a);

/// Single-ququat dyad expansion with a_mu = Tr(sigma_mu A) / 2:
///
///   L = a_0 I + sum_k a_k (|0)(k| + |k)(0|)
///       + i a_1 (|3)(2| - |2)(3|) + i a_2 (|1)(3| - |3)(1|)
///       + i a_3 (|2)(1| - |1)(2|).
PseudoGateMatrix single_ququat_left_closed_form(const CMatrix& a);

/// sum_j left_matrix(A_j) * right_matrix(A_j). Throws NumericError if the
/// product carries an imaginary residue >= 1e-10.
GateMatrix ptm_via_pseudogates(const KrausSet& k);

struct WeylGenerator {
  int n;
  std::size_t mu;
  std::size_t nu;

  /// 4^n x 4^n with a single 1 at (mu, nu).
  RMatrix matrix() const;
};

WeylGenerator weyl_generator(int n, std::size_t mu, std::size_t nu);

/// Matrix commutator [H1, H2].
RMatrix weyl_bracket(const WeylGenerator& g1, const WeylGenerator& g2);

/// delta_{nu alpha} H_{mu beta} - delta_{beta mu} H_{alpha nu} for
/// g1 = H_{mu nu}, g2 = H_{alpha beta}.
RMatrix weyl_bracket_formula(const WeylGenerator& g1, const WeylGenerator& g2);

struct HermitianBasis {
  /// H_aa, then H^r_ab = |a)(b| + |b)(a| and H^i_ab = i(|a)(b| - |b)(a|) for a < b.
  std::vector<CMatrix> generators;
  int rank = 0;
  bool all_hermitian = false;
};

/// n <= 2.
HermitianBasis hermitian_basis(int n);

/// Errors ||exp(t[H1,H2]) - (e^{-s H2} e^{s H1} e^{s H2} e^{-s H1})^m||
/// with s = sqrt(t/m), one per entry of `steps`.
std::vector<double> commutator_limit_check(const CMatrix& h1, const CMatrix& h2, double t,
                                           const std::vector<int>& steps);

/// Errors ||exp(i(a H1 + b H2)) - (e^{i a H1 / m} e^{i b H2 / m})^m||.
std::vector<double> linear_combination_limit_check(const CMatrix& h1, const CMatrix& h2,
                                                   Complex a, Complex b,
                                                   const std::vector<int>& steps);

/// 16 x 16 permutation (mu1, mu2) -> (mu2, mu1).
PseudoGateMatrix swap_pseudogate();

struct ImprimitivityWitness {
  PauliVector first;
  PauliVector second;
  /// Second singular value of the 4 x 4 reshaped output.
  double sigma2;
};

/// Applies a two-ququat gate to product states and looks for a non-product
/// output (reshaped coefficient matrix of rank > 1 at tolerance 1e-8). The
/// nine states |mu] x |nu], mu, nu in 1..3, are tried first, then `samples`
/// random product states. One-sided: nullopt proves nothing.
std::optional<ImprimitivityWitness> imprimitivity_witness(const GateMatrix& e, int samples,
                                                          std::uint64_t seed);

}  // namespace ququat

#endif  // QUQUAT_PSEUDOGATE_HPP_
