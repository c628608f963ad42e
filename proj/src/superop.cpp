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

#include "ququat/superop.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/KroneckerProduct>

#include "ququat/pauli.hpp"

namespace ququat {

namespace {

void require_same_ququats(int a, int b, const char* what) {
  if (a != b) {
    throw DimensionError(std::string(what) + ": ququat counts differ (" + std::to_string(a) +
                         " vs " + std::to_string(b) + ")");
  }
}

// 2^-n sum_j Tr(sigma_mu A_j sigma_nu A_j^dagger) with the maximal imaginary
// residue tracked.
RMatrix kraus_to_ptm(int n, const std::vector<CMatrix>& ops, double* max_imag) {
  const auto& basis = PauliBasis::get(n);
  const auto dim = static_cast<Eigen::Index>(basis.size());
  const double scale = 1.0 / static_cast<double>(hilbert_dim(n));
  RMatrix e(dim, dim);
  double residue = 0.0;
  for (Eigen::Index nu = 0; nu < dim; ++nu) {
    const auto& snu = basis[static_cast<std::size_t>(nu)];
    CMatrix image = CMatrix::Zero(ops.front().rows(), ops.front().cols());
    for (const auto& a : ops) image.noalias() += snu.right_multiply(a) * a.adjoint();
    for (Eigen::Index mu = 0; mu < dim; ++mu) {
      const Complex v = basis[static_cast<std::size_t>(mu)].trace_with(image) * scale;
      e(mu, nu) = v.real();
      residue = std::max(residue, std::abs(v.imag()));
    }
  }
  *max_imag = residue;
  return e;
}

CMatrix to_hermitian_part(const CMatrix& m) { return 0.5 * (m + m.adjoint()); }

}  // namespace

GateMatrix::GateMatrix(RMatrix m) : n_(-1), m_(std::move(m)) {
  if (m_.rows() != m_.cols()) throw DimensionError("GateMatrix: matrix is not square");
  n_ = ququats_for_liouville_dim(static_cast<std::size_t>(m_.rows()));
  if (n_ < 1) {
    throw DimensionError("GateMatrix: dimension " + std::to_string(m_.rows()) +
                         " is not 4^n with 1 <= n <= " + std::to_string(kMaxQuquats));
  }
}

GateMatrix GateMatrix::identity(int n) {
  const auto d = static_cast<Eigen::Index>(liouville_dim(n));
  return GateMatrix(RMatrix::Identity(d, d));
}

KrausSet::KrausSet(std::vector<CMatrix> operators) : n_(-1), ops_(std::move(operators)) {
  if (ops_.empty()) throw ValidationError("KrausSet: no operators");
  const auto rows = ops_.front().rows();
  for (const auto& a : ops_) {
    if (a.rows() != rows || a.cols() != rows) {
      throw DimensionError("KrausSet: operators must share one square shape");
    }
  }
  n_ = qubits_for_hilbert_dim(static_cast<std::size_t>(rows));
  if (n_ < 1 || n_ > kMaxQuquats) {
    throw DimensionError("KrausSet: dimension " + std::to_string(rows) + " is not 2^n");
  }
  CMatrix gram = CMatrix::Zero(rows, rows);
  for (const auto& a : ops_) gram.noalias() += a.adjoint() * a;
  const CMatrix slack = CMatrix::Identity(rows, rows) - gram;
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(to_hermitian_part(slack), Eigen::EigenvaluesOnly);
  if (solver.eigenvalues().minCoeff() < tol::kPsd) {
    throw ValidationError("KrausSet: sum A^dagger A exceeds the identity (not trace-decreasing)");
  }
}

bool KrausSet::is_trace_preserving(double tol) const {
  const auto rows = ops_.front().rows();
  CMatrix gram = CMatrix::Zero(rows, rows);
  for (const auto& a : ops_) gram.noalias() += a.adjoint() * a;
  return max_abs(gram - CMatrix::Identity(rows, rows)) < tol;
}

ChoiMatrix::ChoiMatrix(CMatrix m) : n_(-1), m_(std::move(m)) {
  if (m_.rows() != m_.cols()) throw DimensionError("ChoiMatrix: matrix is not square");
  n_ = ququats_for_liouville_dim(static_cast<std::size_t>(m_.rows()));
  if (n_ < 1) throw DimensionError("ChoiMatrix: dimension is not 4^n");
  const double herm = max_abs(m_ - m_.adjoint());
  if (herm > tol::kStructural) {
    throw ValidationError("ChoiMatrix: not Hermitian (residual " + std::to_string(herm) + ")");
  }
}

PauliVector apply(const GateMatrix& e, const PauliVector& p) {
  require_same_ququats(e.ququats(), p.ququats(), "apply");
  RVector out = e.matrix() * p.coeffs();
  if (p.is_normalized() && is_trace_preserving(e)) out[0] = 1.0;
  return PauliVector(p.ququats(), std::move(out));
}

GateMatrix ptm_from_unitary(const CMatrix& u) {
  if (u.rows() != u.cols()) throw DimensionError("ptm_from_unitary: matrix is not square");
  const double defect = max_abs(u * u.adjoint() - CMatrix::Identity(u.rows(), u.cols()));
  if (defect >= tol::kStructural) {
    throw ValidationError("ptm_from_unitary: matrix is not unitary (residual " +
                          std::to_string(defect) + ")");
  }
  const int n = qubits_for_hilbert_dim(static_cast<std::size_t>(u.rows()));
  if (n < 1 || n > kMaxQuquats) throw DimensionError("ptm_from_unitary: dimension is not 2^n");
  double residue = 0.0;
  RMatrix e = kraus_to_ptm(n, {u}, &residue);
  if (residue >= tol::kStructural) {
    throw NumericError("ptm_from_unitary: imaginary residue " + std::to_string(residue));
  }
  return GateMatrix(std::move(e));
}

GateMatrix ptm_from_kraus(const KrausSet& k) {
  double residue = 0.0;
  RMatrix e = kraus_to_ptm(k.qubits(), k.operators(), &residue);
  if (residue >= tol::kStructural) {
    throw NumericError("ptm_from_kraus: imaginary residue " + std::to_string(residue));
  }
  return GateMatrix(std::move(e));
}

bool is_trace_preserving(const GateMatrix& e, double tol) {
  RVector row = e.matrix().row(0).transpose();
  row[0] -= 1.0;
  return max_abs(row) < tol;
}

bool is_unital(const GateMatrix& e, double tol) {
  RVector col = e.matrix().col(0);
  col[0] -= 1.0;
  return max_abs(col) < tol;
}

ChoiMatrix choi_from_kraus(const KrausSet& k) {
  const auto d = k.operators().front().rows();
  CMatrix c = CMatrix::Zero(d * d, d * d);
  for (const auto& a : k.operators()) {
    // Column-major vec: entry k*d + i holds A(i, k).
    const CVector v = Eigen::Map<const CVector>(a.data(), d * d);
    c.noalias() += v * v.adjoint();
  }
  return ChoiMatrix(to_hermitian_part(c));
}

ChoiMatrix choi_from_ptm(const GateMatrix& e) {
  const int n = e.ququats();
  const auto d = static_cast<Eigen::Index>(hilbert_dim(n));
  const auto& basis = PauliBasis::get(n);
  const CMatrix ec = e.matrix().cast<Complex>();
  CMatrix c = CMatrix::Zero(d * d, d * d);
  for (Eigen::Index k = 0; k < d; ++k) {
    for (Eigen::Index l = 0; l < d; ++l) {
      // Coefficients of |k><l|: Tr(sigma_nu |k><l|) = sigma_nu(l, k).
      CVector coeffs = CVector::Zero(e.dim());
      for (std::size_t nu = 0; nu < basis.size(); ++nu) {
        const auto& s = basis[nu];
        if (static_cast<Eigen::Index>(s.col[static_cast<std::size_t>(l)]) == k) {
          coeffs[static_cast<Eigen::Index>(nu)] = s.val[static_cast<std::size_t>(l)];
        }
      }
      c.block(k * d, l * d, d, d) = operator_from_coefficients(ec * coeffs);
    }
  }
  return ChoiMatrix(to_hermitian_part(c));
}

bool is_completely_positive(const GateMatrix& e) {
  const ChoiMatrix c = choi_from_ptm(e);
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(c.matrix(), Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff() >= tol::kPsd;
}

KrausSet kraus_from_choi(const ChoiMatrix& c) {
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(c.matrix());
  const RVector& lambda = solver.eigenvalues();
  if (lambda.minCoeff() < tol::kPsd) {
    throw NotCompletelyPositiveError("kraus_from_choi: Choi matrix has eigenvalue " +
                                     std::to_string(lambda.minCoeff()));
  }
  const auto d = static_cast<Eigen::Index>(hilbert_dim(c.qubits()));
  std::vector<CMatrix> ops;
  // Eigenvalues come back ascending; emit the dominant operators first.
  for (Eigen::Index j = lambda.size() - 1; j >= 0; --j) {
    if (lambda[j] < tol::kKrausDrop) continue;
    const CVector v = solver.eigenvectors().col(j) * std::sqrt(lambda[j]);
    ops.emplace_back(Eigen::Map<const CMatrix>(v.data(), d, d));
  }
  if (ops.empty()) ops.emplace_back(CMatrix::Zero(d, d));
  return KrausSet(std::move(ops));
}

GateMatrix compose(const GateMatrix& first, const GateMatrix& second) {
  require_same_ququats(first.ququats(), second.ququats(), "compose");
  return GateMatrix(first.matrix() * second.matrix());
}

GateMatrix tensor(const GateMatrix& a, const GateMatrix& b) {
  if (a.ququats() + b.ququats() > kMaxQuquats) {
    throw DimensionError("tensor: result exceeds " + std::to_string(kMaxQuquats) + " ququats");
  }
  return GateMatrix(Eigen::kroneckerProduct(a.matrix(), b.matrix()).eval());
}

GateMatrix adjoint(const GateMatrix& e) { return GateMatrix(e.matrix().transpose()); }

bool is_orthogonal(const GateMatrix& e, double tol) {
  const RMatrix& m = e.matrix();
  const RMatrix id = RMatrix::Identity(m.rows(), m.cols());
  return max_abs(m * m.transpose() - id) < tol && max_abs(m.transpose() * m - id) < tol;
}

double trace_functional(const GateMatrix& e, const PauliVector& p) {
  require_same_ququats(e.ququats(), p.ququats(), "trace_functional");
  return e.matrix().row(0).dot(p.coeffs());
}

bool satisfies_trace_decreasing_bound(const GateMatrix& e) {
  return e.matrix().row(0).squaredNorm() <= 1.0 + tol::kTraceBound;
}

PauliVector nonlinear_apply(const GateMatrix& e, const PauliVector& p) {
  const double tr = trace_functional(e, p);
  if (tr <= tol::kZeroProbability) {
    throw ZeroProbabilityError("nonlinear_apply: Tr E(rho) = " + std::to_string(tr));
  }
  RVector out = (e.matrix() * p.coeffs()) / tr;
  out[0] = 1.0;
  return PauliVector(p.ququats(), std::move(out));
}

RMatrix ququat_permutation(int n, std::span<const int> order) {
  if (static_cast<int>(order.size()) != n) {
    throw DimensionError("ququat_permutation: order length must equal n");
  }
  std::vector<int> seen(static_cast<std::size_t>(n), 0);
  for (int q : order) {
    if (q < 0 || q >= n || seen[static_cast<std::size_t>(q)]++) {
      throw DimensionError("ququat_permutation: order is not a permutation of 0..n-1");
    }
  }
  const auto dim = static_cast<Eigen::Index>(liouville_dim(n));
  RMatrix m = RMatrix::Zero(dim, dim);
  for (Eigen::Index old_index = 0; old_index < dim; ++old_index) {
    const PauliIndex mu(n, static_cast<std::size_t>(old_index));
    std::vector<int> digits(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) digits[static_cast<std::size_t>(i)] = mu.digit(order[static_cast<std::size_t>(i)]);
    const auto new_index = static_cast<Eigen::Index>(PauliIndex::from_digits(digits).value());
    m(new_index, old_index) = 1.0;
  }
  return m;
}

GateMatrix embed(const GateMatrix& local, std::span<const int> targets, int n) {
  const int k = local.ququats();
  if (static_cast<int>(targets.size()) != k) {
    throw DimensionError("embed: gate acts on " + std::to_string(k) + " ququats but " +
                         std::to_string(targets.size()) + " targets given");
  }
  if (k > n) throw DimensionError("embed: more targets than ququats");
  std::vector<int> order(targets.begin(), targets.end());
  for (int q = 0; q < n; ++q) {
    if (std::find(targets.begin(), targets.end(), q) == targets.end()) order.push_back(q);
  }
  const RMatrix perm = ququat_permutation(n, order);
  RMatrix wide = local.matrix();
  if (k < n) {
    const auto rest = static_cast<Eigen::Index>(liouville_dim(n - k));
    wide = Eigen::kroneckerProduct(local.matrix(), RMatrix::Identity(rest, rest)).eval();
  }
  return GateMatrix(perm.transpose() * wide * perm);
}

}  // namespace ququat
