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

// Brute-force dense reference. Everything here works on 2^n x 2^n density
// matrices with its own Kronecker-built Pauli strings; nothing calls into
// the Pauli-basis or gate-matrix code, so agreement with that pipeline is
// evidence rather than tautology.

#ifndef QUQUAT_ORACLE_HPP_
#define QUQUAT_ORACLE_HPP_

#include <span>
#include <vector>

#include "ququat/types.hpp"

namespace ququat::oracle {

/// sum_j A_j rho A_j^dagger.
CMatrix evolve_dense(std::span<const CMatrix> kraus, const CMatrix& rho);

struct DenseMeasurement {
  std::vector<double> probabilities;
  CMatrix post_state;  // sum_k P_k rho P_k / sum_k p(k)
};

/// p(k) = Tr(P_k rho P_k). Throws ZeroProbabilityError when the total is
/// below 1e-12.
DenseMeasurement measure_dense(std::span<const CMatrix> projectors, const CMatrix& rho);

/// Ascending spectrum of a Hermitian matrix. Throws ValidationError for
/// non-Hermitian input and NumericError if some ||C v - lambda v|| >= 1e-9.
RVector choi_eigenvalues(const CMatrix& c);

/// Pauli string sigma_{mu_1} (x) ... (x) sigma_{mu_n} by explicit Kronecker
/// products, digit mu_1 leftmost.
CMatrix pauli_string(int n, std::size_t mu);

/// Tr(sigma_mu rho) for every mu, computed with dense products.
RVector pauli_coefficients(const CMatrix& rho);

/// 2^-n sum_mu p_mu sigma_mu.
CMatrix density_from_coefficients(const RVector& p);

/// X -> 2^-n sum_{mu nu} E_{mu nu} Tr(sigma_nu X) sigma_mu for a real
/// 4^n x 4^n gate matrix.
CMatrix apply_gate_matrix(const RMatrix& e, const CMatrix& x);

/// 2^-n sum_j Tr(sigma_mu A_j sigma_nu A_j^dagger) with dense products.
RMatrix gate_matrix_from_kraus(std::span<const CMatrix> kraus);

/// Choi matrix sum_{k,l} |k><l| (x) E(|k><l|) of a real gate matrix.
CMatrix choi_from_gate_matrix(const RMatrix& e);

/// Choi matrix of a Kraus set, sum_{k,l} |k><l| (x) sum_j A_j |k><l| A_j^dagger.
CMatrix choi_from_kraus(std::span<const CMatrix> kraus);

/// Lifts an operator on `targets` (targets[0] is its most significant
/// qubit) to n qubits, qubit 0 most significant, acting as identity
/// elsewhere.
CMatrix embed_operator(const CMatrix& op, std::span<const int> targets, int n);

/// Lifts a gate matrix on `targets` to n ququats by conjugating the dense
/// action with qubit permutations. Returns the action on a dense operator.
CMatrix apply_embedded_gate_matrix(const RMatrix& e, std::span<const int> targets, int n,
                                   const CMatrix& x);

}  // namespace ququat::oracle

#endif  // QUQUAT_ORACLE_HPP_
