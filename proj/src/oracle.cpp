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

#include "ququat/oracle.hpp"

#include <algorithm>
#include <string>

#include <Eigen/Eigenvalues>

namespace ququat::oracle {

namespace {

int qubit_count(Eigen::Index dim, const char* what) {
  int n = 0;
  while ((Eigen::Index{1} << n) < dim) ++n;
  if ((Eigen::Index{1} << n) != dim || n < 1) {
    throw DimensionError(std::string(what) + ": dimension is not a power of two");
  }
  return n;
}

int ququat_count(Eigen::Index dim, const char* what) {
  int n = 0;
  while ((Eigen::Index{1} << (2 * n)) < dim) ++n;
  if ((Eigen::Index{1} << (2 * n)) != dim || n < 1) {
    throw DimensionError(std::string(what) + ": dimension is not a power of four");
  }
  return n;
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

CMatrix single_pauli(int k) {
  const Complex i{0.0, 1.0};
  CMatrix s(2, 2);
  switch (k) {
    case 0: s << 1.0, 0.0, 0.0, 1.0; break;
    case 1: s << 0.0, 1.0, 1.0, 0.0; break;
    case 2: s << 0.0, -i, i, 0.0; break;
    default: s << 1.0, 0.0, 0.0, -1.0; break;
  }
  return s;
}

// Permutation matrix Q with Q|b> = |b'>, where bit position i of b' (qubit
// 0 most significant) holds bit order[i] of b.
CMatrix qubit_permutation(std::span<const int> order, int n) {
  const Eigen::Index d = Eigen::Index{1} << n;
  CMatrix q = CMatrix::Zero(d, d);
  for (Eigen::Index b = 0; b < d; ++b) {
    Eigen::Index nb = 0;
    for (int i = 0; i < n; ++i) {
      const Eigen::Index bit = (b >> (n - 1 - order[static_cast<std::size_t>(i)])) & 1;
      nb |= bit << (n - 1 - i);
    }
    q(nb, b) = 1.0;
  }
  return q;
}

std::vector<int> targets_first(std::span<const int> targets, int n) {
  std::vector<int> order;
  for (int t : targets) {
    if (t < 0 || t >= n) throw DimensionError("oracle: target index out of range");
    if (std::find(order.begin(), order.end(), t) != order.end()) {
      throw DimensionError("oracle: repeated target index");
    }
    order.push_back(t);
  }
  for (int q = 0; q < n; ++q) {
    if (std::find(targets.begin(), targets.end(), q) == targets.end()) order.push_back(q);
  }
  return order;
}

}  // namespace

CMatrix evolve_dense(std::span<const CMatrix> kraus, const CMatrix& rho) {
  if (kraus.empty()) throw DimensionError("evolve_dense: empty Kraus list");
  CMatrix out = CMatrix::Zero(rho.rows(), rho.cols());
  for (const auto& a : kraus) {
    if (a.cols() != rho.rows() || a.rows() != rho.rows()) {
      throw DimensionError("evolve_dense: Kraus operator shape does not match rho");
    }
    out += a * rho * a.adjoint();
  }
  return out;
}

DenseMeasurement measure_dense(std::span<const CMatrix> projectors, const CMatrix& rho) {
  DenseMeasurement m;
  m.post_state = CMatrix::Zero(rho.rows(), rho.cols());
  double total = 0.0;
  for (const auto& p : projectors) {
    if (p.rows() != rho.rows() || p.cols() != rho.cols()) {
      throw DimensionError("measure_dense: projector shape does not match rho");
    }
    const CMatrix branch = p * rho * p;
    const double pk = branch.trace().real();
    m.probabilities.push_back(pk);
    m.post_state += branch;
    total += pk;
  }
  if (total < 1e-12) throw ZeroProbabilityError("measure_dense: total probability vanishes");
  m.post_state /= total;
  return m;
}

RVector choi_eigenvalues(const CMatrix& c) {
  if (c.rows() != c.cols()) throw DimensionError("choi_eigenvalues: matrix is not square");
  if ((c - c.adjoint()).cwiseAbs().maxCoeff() > 1e-10) {
    throw ValidationError("choi_eigenvalues: matrix is not Hermitian");
  }
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(c);
  const CMatrix& v = solver.eigenvectors();
  const RVector& w = solver.eigenvalues();
  for (Eigen::Index j = 0; j < w.size(); ++j) {
    const double residual = (c * v.col(j) - w[j] * v.col(j)).norm();
    if (residual >= 1e-9) {
      throw NumericError("choi_eigenvalues: eigen residual " + std::to_string(residual));
    }
  }
  return w;
}

CMatrix pauli_string(int n, std::size_t mu) {
  CMatrix out = CMatrix::Identity(1, 1);
  for (int q = 0; q < n; ++q) {
    const int digit = static_cast<int>((mu >> (2 * (n - 1 - q))) & 3U);
    out = kron(out, single_pauli(digit));
  }
  return out;
}

RVector pauli_coefficients(const CMatrix& rho) {
  const int n = qubit_count(rho.rows(), "pauli_coefficients");
  const Eigen::Index dim = Eigen::Index{1} << (2 * n);
  RVector p(dim);
  for (Eigen::Index mu = 0; mu < dim; ++mu) {
    p[mu] = (pauli_string(n, static_cast<std::size_t>(mu)) * rho).trace().real();
  }
  return p;
}

CMatrix density_from_coefficients(const RVector& p) {
  const int n = ququat_count(p.size(), "density_from_coefficients");
  const Eigen::Index d = Eigen::Index{1} << n;
  CMatrix rho = CMatrix::Zero(d, d);
  for (Eigen::Index mu = 0; mu < p.size(); ++mu) {
    if (p[mu] != 0.0) rho += p[mu] * pauli_string(n, static_cast<std::size_t>(mu));
  }
  return rho / static_cast<double>(d);
}

CMatrix apply_gate_matrix(const RMatrix& e, const CMatrix& x) {
  const int n = qubit_count(x.rows(), "apply_gate_matrix");
  const Eigen::Index dim = Eigen::Index{1} << (2 * n);
  if (e.rows() != dim || e.cols() != dim) {
    throw DimensionError("apply_gate_matrix: gate matrix does not match the operator");
  }
  std::vector<CMatrix> strings;
  strings.reserve(static_cast<std::size_t>(dim));
  for (Eigen::Index mu = 0; mu < dim; ++mu) strings.push_back(pauli_string(n, static_cast<std::size_t>(mu)));
  CMatrix out = CMatrix::Zero(x.rows(), x.cols());
  for (Eigen::Index nu = 0; nu < dim; ++nu) {
    const Complex c = (strings[static_cast<std::size_t>(nu)] * x).trace();
    if (c == Complex{0.0, 0.0}) continue;
    for (Eigen::Index mu = 0; mu < dim; ++mu) {
      if (e(mu, nu) != 0.0) out += (e(mu, nu) * c) * strings[static_cast<std::size_t>(mu)];
    }
  }
  return out / static_cast<double>(x.rows());
}

RMatrix gate_matrix_from_kraus(std::span<const CMatrix> kraus) {
  if (kraus.empty()) throw DimensionError("gate_matrix_from_kraus: empty Kraus list");
  const int n = qubit_count(kraus.front().rows(), "gate_matrix_from_kraus");
  const Eigen::Index dim = Eigen::Index{1} << (2 * n);
  RMatrix e(dim, dim);
  for (Eigen::Index nu = 0; nu < dim; ++nu) {
    const CMatrix image = evolve_dense(kraus, pauli_string(n, static_cast<std::size_t>(nu)));
    for (Eigen::Index mu = 0; mu < dim; ++mu) {
      e(mu, nu) = (pauli_string(n, static_cast<std::size_t>(mu)) * image).trace().real() /
                  static_cast<double>(Eigen::Index{1} << n);
    }
  }
  return e;
}

CMatrix choi_from_gate_matrix(const RMatrix& e) {
  const int n = ququat_count(e.rows(), "choi_from_gate_matrix");
  const Eigen::Index d = Eigen::Index{1} << n;
  CMatrix c = CMatrix::Zero(d * d, d * d);
  for (Eigen::Index k = 0; k < d; ++k) {
    for (Eigen::Index l = 0; l < d; ++l) {
      CMatrix unit = CMatrix::Zero(d, d);
      unit(k, l) = 1.0;
      c.block(k * d, l * d, d, d) = apply_gate_matrix(e, unit);
    }
  }
  return c;
}

CMatrix choi_from_kraus(std::span<const CMatrix> kraus) {
  if (kraus.empty()) throw DimensionError("choi_from_kraus: empty Kraus list");
  const Eigen::Index d = kraus.front().rows();
  CMatrix c = CMatrix::Zero(d * d, d * d);
  for (Eigen::Index k = 0; k < d; ++k) {
    for (Eigen::Index l = 0; l < d; ++l) {
      CMatrix unit = CMatrix::Zero(d, d);
      unit(k, l) = 1.0;
      c.block(k * d, l * d, d, d) = evolve_dense(kraus, unit);
    }
  }
  return c;
}

CMatrix embed_operator(const CMatrix& op, std::span<const int> targets, int n) {
  const int k = qubit_count(op.rows(), "embed_operator");
  if (k != static_cast<int>(targets.size())) {
    throw DimensionError("embed_operator: operator size does not match the target count");
  }
  const std::vector<int> order = targets_first(targets, n);
  const CMatrix q = qubit_permutation(order, n);
  const CMatrix wide = kron(op, CMatrix::Identity(Eigen::Index{1} << (n - k), Eigen::Index{1} << (n - k)));
  return q.adjoint() * wide * q;
}

CMatrix apply_embedded_gate_matrix(const RMatrix& e, std::span<const int> targets, int n,
                                   const CMatrix& x) {
  const int k = ququat_count(e.rows(), "apply_embedded_gate_matrix");
  if (k != static_cast<int>(targets.size())) {
    throw DimensionError("apply_embedded_gate_matrix: gate size does not match the target count");
  }
  const std::vector<int> order = targets_first(targets, n);
  const CMatrix q = qubit_permutation(order, n);
  const CMatrix xp = q * x * q.adjoint();
  const int rest = n - k;
  const Eigen::Index dt = Eigen::Index{1} << k;
  const Eigen::Index dim_t = Eigen::Index{1} << (2 * k);
  const Eigen::Index dim_r = Eigen::Index{1} << (2 * rest);

  // Images E(sigma_nu) = sum_mu E_{mu nu} sigma_mu on the target block.
  std::vector<CMatrix> images;
  for (Eigen::Index nu = 0; nu < dim_t; ++nu) {
    CMatrix img = CMatrix::Zero(dt, dt);
    for (Eigen::Index mu = 0; mu < dim_t; ++mu) {
      if (e(mu, nu) != 0.0) img += e(mu, nu) * pauli_string(k, static_cast<std::size_t>(mu));
    }
    images.push_back(std::move(img));
  }
  CMatrix out = CMatrix::Zero(x.rows(), x.cols());
  for (Eigen::Index r = 0; r < dim_r; ++r) {
    const CMatrix sr = rest > 0 ? pauli_string(rest, static_cast<std::size_t>(r)) : CMatrix::Identity(1, 1);
    for (Eigen::Index nu = 0; nu < dim_t; ++nu) {
      const CMatrix s = kron(pauli_string(k, static_cast<std::size_t>(nu)), sr);
      const Complex c = (s * xp).trace();
      if (std::abs(c) == 0.0) continue;
      out += c * kron(images[static_cast<std::size_t>(nu)], sr);
    }
  }
  out /= static_cast<double>(x.rows());
  return q.adjoint() * out * q;
}

}  // namespace ququat::oracle
