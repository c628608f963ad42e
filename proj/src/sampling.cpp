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

#include "ququat/sampling.hpp"

#include <cmath>

#include <Eigen/QR>

namespace ququat {

double Sampler::uniform(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng_);
}

Complex Sampler::gaussian() {
  std::normal_distribution<double> g(0.0, 1.0);
  const double re = g(rng_);
  return {re, g(rng_)};
}

CMatrix Sampler::ginibre(Eigen::Index rows, Eigen::Index cols) {
  CMatrix m(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j) {
    for (Eigen::Index i = 0; i < rows; ++i) m(i, j) = gaussian();
  }
  return m;
}

DensityMatrix Sampler::random_density(int n) {
  const auto d = static_cast<Eigen::Index>(hilbert_dim(n));
  const CMatrix g = ginibre(d, d);
  CMatrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  rho = 0.5 * (rho + rho.adjoint()).eval();
  return DensityMatrix(std::move(rho));
}

DensityMatrix Sampler::random_pure(int n) {
  const auto d = static_cast<Eigen::Index>(hilbert_dim(n));
  CVector psi = ginibre(d, 1).col(0);
  psi.normalize();
  CMatrix rho = psi * psi.adjoint();
  rho = 0.5 * (rho + rho.adjoint()).eval();
  return DensityMatrix(std::move(rho));
}

CMatrix Sampler::random_unitary(Eigen::Index d) {
  Eigen::HouseholderQR<CMatrix> qr(ginibre(d, d));
  CMatrix q = qr.householderQ();
  const CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index j = 0; j < d; ++j) {
    const double mag = std::abs(r(j, j));
    if (mag > 0.0) q.col(j) *= r(j, j) / mag;
  }
  return q;
}

KrausSet Sampler::random_channel(int n, int terms) {
  const auto d = static_cast<Eigen::Index>(hilbert_dim(n));
  const CMatrix v = random_unitary(d * terms).leftCols(d);
  std::vector<CMatrix> ops;
  ops.reserve(static_cast<std::size_t>(terms));
  for (int j = 0; j < terms; ++j) ops.emplace_back(v.middleRows(j * d, d));
  return KrausSet(std::move(ops));
}

KrausSet Sampler::random_subchannel(int n, int terms, double shrink) {
  std::vector<CMatrix> ops = random_channel(n, terms).operators();
  for (auto& a : ops) a *= std::sqrt(shrink);
  return KrausSet(std::move(ops));
}

CMatrix Sampler::random_operator(int n) {
  const auto d = static_cast<Eigen::Index>(hilbert_dim(n));
  return ginibre(d, d);
}

}  // namespace ququat
