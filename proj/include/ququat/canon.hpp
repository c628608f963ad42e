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

// Affine structure of trace-preserving gates.
//
// A trace-preserving gate has the block form
//
//   E(T, R) = [ 1  0 ]
//             [ T  R ]
//
// with E(T,R) E(T',R') = E(T + R T', R R'). The canonical decomposition
// writes E = E(T,I) U1 D U2 with U1, U2 orthogonal and D diagonal.

#ifndef QUQUAT_CANON_HPP_
#define QUQUAT_CANON_HPP_

#include <utility>

#include "ququat/superop.hpp"

namespace ququat {

struct AffineForm {
  RVector t;
  RMatrix r;

  int ququats() const;
};

/// Throws ValidationError unless E is trace-preserving.
AffineForm to_affine(const GateMatrix& e);
GateMatrix from_affine(const AffineForm& a);

struct CanonicalDecomposition {
  GateMatrix translation;  // E(T, I)
  GateMatrix u1;           // E(0, U1)
  GateMatrix diag;         // E(0, D)
  GateMatrix u2;           // E(0, U2^T)
  RVector singular_values;  // descending, >= 0
  RVector t;

  /// translation * u1 * diag * u2.
  GateMatrix reconstruct() const;
};

/// SVD of the R block. det U1 = +1; any reflection lands in U2. A zero
/// block yields U1 = U2 = I.
CanonicalDecomposition svd_decompose(const GateMatrix& e);

/// E(T,R) = E(T,I) E(0,R). Returns (E(T,I), E(0,R)).
std::pair<GateMatrix, GateMatrix> split_unital(const GateMatrix& e);

/// E(T,R) = E(0,R) E(R^-1 T, I). Returns (E(0,R), E(R^-1 T, I)); throws
/// NumericError when R is singular.
std::pair<GateMatrix, GateMatrix> split_unital_right(const GateMatrix& e);

}  // namespace ququat

#endif  // QUQUAT_CANON_HPP_
