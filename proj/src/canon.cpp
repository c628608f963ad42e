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

#include "ququat/canon.hpp"

#include <Eigen/LU>
#include <Eigen/SVD>

namespace ququat {

namespace {

constexpr double kZeroBlock = 1e-14;

GateMatrix unital_block(const RMatrix& r) {
  const auto m = r.rows();
  RMatrix e = RMatrix::Zero(m + 1, m + 1);
  e(0, 0) = 1.0;
  e.bottomRightCorner(m, m) = r;
  return GateMatrix(std::move(e));
}

GateMatrix translation_block(const RVector& t) {
  const auto m = t.size();
  return from_affine(AffineForm{t, RMatrix::Identity(m, m)});
}

}  // namespace

int AffineForm::ququats() const {
  return ququats_for_liouville_dim(static_cast<std::size_t>(t.size() + 1));
}

AffineForm to_affine(const GateMatrix& e) {
  if (!is_trace_preserving(e)) throw ValidationError("to_affine: gate is not trace-preserving");
  const auto m = e.dim() - 1;
  return AffineForm{e.matrix().col(0).tail(m), e.matrix().bottomRightCorner(m, m)};
}

GateMatrix from_affine(const AffineForm& a) {
  const auto m = a.t.size();
  if (a.r.rows() != m || a.r.cols() != m) {
    throw DimensionError("from_affine: R must be square with the size of T");
  }
  RMatrix e = RMatrix::Zero(m + 1, m + 1);
  e(0, 0) = 1.0;
  e.col(0).tail(m) = a.t;
  e.bottomRightCorner(m, m) = a.r;
  return GateMatrix(std::move(e));
}

GateMatrix CanonicalDecomposition::reconstruct() const {
  return GateMatrix(translation.matrix() * u1.matrix() * diag.matrix() * u2.matrix());
}

CanonicalDecomposition svd_decompose(const GateMatrix& e) {
  const AffineForm a = to_affine(e);
  const auto m = a.r.rows();
  RMatrix u = RMatrix::Identity(m, m);
  RMatrix v = RMatrix::Identity(m, m);
  RVector s = RVector::Zero(m);
  if (max_abs(a.r) >= kZeroBlock) {
    Eigen::JacobiSVD<RMatrix> svd(a.r, Eigen::ComputeFullU | Eigen::ComputeFullV);
    u = svd.matrixU();
    v = svd.matrixV();
    s = svd.singularValues();
    // Flipping column j of both U and V leaves U D V^T unchanged.
    if (u.determinant() < 0.0) {
      u.col(m - 1) *= -1.0;
      v.col(m - 1) *= -1.0;
    }
  }
  return CanonicalDecomposition{translation_block(a.t),
                                unital_block(u),
                                unital_block(s.asDiagonal().toDenseMatrix()),
                                unital_block(v.transpose()),
                                s,
                                a.t};
}

std::pair<GateMatrix, GateMatrix> split_unital(const GateMatrix& e) {
  const AffineForm a = to_affine(e);
  return {translation_block(a.t), unital_block(a.r)};
}

std::pair<GateMatrix, GateMatrix> split_unital_right(const GateMatrix& e) {
  const AffineForm a = to_affine(e);
  Eigen::FullPivLU<RMatrix> lu(a.r);
  if (!lu.isInvertible()) throw NumericError("split_unital_right: R block is singular");
  return {unital_block(a.r), translation_block(lu.solve(a.t))};
}

}  // namespace ququat
