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

#include "ququat/liouville.hpp"

#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

namespace ququat {

namespace {

int require_square_power_of_two(const CMatrix& m, const char* what) {
  if (m.rows() != m.cols()) {
    throw DimensionError(std::string(what) + ": matrix is not square");
  }
  const int n = qubits_for_hilbert_dim(static_cast<std::size_t>(m.rows()));
  if (n < 1 || n > kMaxQuquats) {
    throw DimensionError(std::string(what) + ": dimension " + std::to_string(m.rows()) +
                         " is not 2^n with 1 <= n <= " + std::to_string(kMaxQuquats));
  }
  return n;
}

void validate_hermitian_unit_trace(const CMatrix& m) {
  const double herm = max_abs(m - m.adjoint());
  if (herm > tol::kStructural) {
    throw ValidationError("density matrix is not Hermitian (residual " + std::to_string(herm) +
                          ")");
  }
  const Complex tr = m.trace();
  if (std::abs(tr - Complex{1.0, 0.0}) > tol::kStructural) {
    throw ValidationError("density matrix trace is not 1 (got " + std::to_string(tr.real()) +
                          (tr.imag() != 0.0 ? " + " + std::to_string(tr.imag()) + "i" : "") +
                          ")");
  }
}

double hermitian_min_eigenvalue(const CMatrix& m) {
  const CMatrix h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(h, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

}  // namespace

DensityMatrix::DensityMatrix(CMatrix m) : DensityMatrix(std::move(m), NoPsdCheck{}) {
  const double lmin = min_eigenvalue();
  if (lmin < tol::kPsd) {
    throw ValidationError("density matrix is not positive semidefinite (min eigenvalue " +
                          std::to_string(lmin) + ")");
  }
}

DensityMatrix::DensityMatrix(CMatrix m, NoPsdCheck)
    : n_(require_square_power_of_two(m, "DensityMatrix")), m_(std::move(m)) {
  validate_hermitian_unit_trace(m_);
}

DensityMatrix DensityMatrix::unchecked_positivity(CMatrix m) {
  return DensityMatrix(std::move(m), NoPsdCheck{});
}

double DensityMatrix::min_eigenvalue() const { return hermitian_min_eigenvalue(m_); }

PauliVector::PauliVector(int n, RVector coeffs) : n_(n), coeffs_(std::move(coeffs)) {
  if (n < 1 || n > kMaxQuquats) {
    throw DimensionError("PauliVector: ququat count " + std::to_string(n) + " out of range");
  }
  if (static_cast<std::size_t>(coeffs_.size()) != liouville_dim(n)) {
    throw DimensionError("PauliVector: expected " + std::to_string(liouville_dim(n)) +
                         " coefficients, got " + std::to_string(coeffs_.size()));
  }
}

PauliVector PauliVector::maximally_mixed(int n) {
  RVector c = RVector::Zero(static_cast<Eigen::Index>(liouville_dim(n)));
  c[0] = 1.0;
  return PauliVector(n, std::move(c));
}

bool PauliVector::is_normalized(double tol) const { return std::abs(coeffs_[0] - 1.0) <= tol; }

void PauliVector::require_normalized(const char* what) const {
  if (!is_normalized()) {
    throw NormalizationError(std::string(what) + ": P_0 = " + std::to_string(coeffs_[0]) +
                             ", expected 1");
  }
}

PauliVector tensor(const PauliVector& a, const PauliVector& b) {
  const auto& ca = a.coeffs();
  const auto& cb = b.coeffs();
  RVector out(ca.size() * cb.size());
  for (Eigen::Index i = 0; i < ca.size(); ++i) {
    out.segment(i * cb.size(), cb.size()) = ca[i] * cb;
  }
  return PauliVector(a.ququats() + b.ququats(), std::move(out));
}

OperatorKet::OperatorKet(CMatrix m) : n_(require_square_power_of_two(m, "OperatorKet")), m_(std::move(m)) {}

CVector operator_coefficients(const CMatrix& a) {
  const int n = require_square_power_of_two(a, "operator_coefficients");
  const auto& basis = PauliBasis::get(n);
  CVector c(static_cast<Eigen::Index>(basis.size()));
  for (std::size_t mu = 0; mu < basis.size(); ++mu) {
    c[static_cast<Eigen::Index>(mu)] = basis[mu].trace_with(a);
  }
  return c;
}

CMatrix operator_from_coefficients(const CVector& c) {
  const int n = ququats_for_liouville_dim(static_cast<std::size_t>(c.size()));
  if (n < 1) throw DimensionError("operator_from_coefficients: length is not 4^n");
  const auto& basis = PauliBasis::get(n);
  const auto d = static_cast<Eigen::Index>(hilbert_dim(n));
  CMatrix m = CMatrix::Zero(d, d);
  for (std::size_t mu = 0; mu < basis.size(); ++mu) {
    const Complex coeff = c[static_cast<Eigen::Index>(mu)];
    if (coeff == Complex{0.0, 0.0}) continue;
    const auto& s = basis[mu];
    for (Eigen::Index r = 0; r < d; ++r) {
      m(r, static_cast<Eigen::Index>(s.col[r])) += coeff * s.val[r];
    }
  }
  return m / static_cast<double>(d);
}

PauliVector density_to_pauli(const DensityMatrix& rho) {
  const CVector c = operator_coefficients(rho.matrix());
  const double residue = max_abs(c.imag());
  if (residue >= tol::kStructural) {
    throw NumericError("density_to_pauli: imaginary residue " + std::to_string(residue));
  }
  RVector p = c.real();
  p[0] = 1.0;
  return PauliVector(rho.qubits(), std::move(p));
}

CMatrix pauli_to_matrix(const PauliVector& p) {
  return operator_from_coefficients(p.coeffs().cast<Complex>());
}

DensityReconstruction pauli_to_density(const PauliVector& p) {
  p.require_normalized("pauli_to_density");
  auto rho = DensityMatrix::unchecked_positivity(pauli_to_matrix(p));
  const double lmin = rho.min_eigenvalue();
  return DensityReconstruction{std::move(rho), lmin >= tol::kPsd, lmin};
}

PauliVector comp_state(const PauliIndex& mu) {
  PauliVector base = PauliVector::maximally_mixed(mu.ququats());
  RVector c = base.coeffs();
  if (mu.value() != 0) c[static_cast<Eigen::Index>(mu.value())] = 1.0;
  return PauliVector(mu.ququats(), std::move(c));
}

PauliVector product_comp_state(std::span<const int> digits) {
  if (digits.empty()) throw DimensionError("product_comp_state: no digits");
  PauliVector out = comp_state(PauliIndex(1, static_cast<std::size_t>(digits[0])));
  for (std::size_t i = 1; i < digits.size(); ++i) {
    if (digits[i] < 0 || digits[i] > 3) {
      throw DimensionError("product_comp_state: digit not in {0,1,2,3}");
    }
    out = tensor(out, comp_state(PauliIndex(1, static_cast<std::size_t>(digits[i]))));
  }
  return out;
}

double purity(const PauliVector& p) {
  p.require_normalized("purity");
  return p.squared_norm() / static_cast<double>(hilbert_dim(p.ququats()));
}

Complex liouville_inner(const OperatorKet& a, const OperatorKet& b) {
  if (a.qubits() != b.qubits()) {
    throw DimensionError("liouville_inner: operands act on different qubit counts");
  }
  // Tr(A^dagger B) = sum_ij conj(A_ij) B_ij
  return (a.matrix().conjugate().cwiseProduct(b.matrix())).sum();
}

std::array<double, 4> decompose_single_ququat(const PauliVector& p) {
  if (p.ququats() != 1) throw DimensionError("decompose_single_ququat: requires n = 1");
  p.require_normalized("decompose_single_ququat");
  const auto& c = p.coeffs();
  return {1.0 - c[1] - c[2] - c[3], c[1], c[2], c[3]};
}

PauliVector recombine_single_ququat(const std::array<double, 4>& weights) {
  RVector out = RVector::Zero(4);
  for (int mu = 0; mu < 4; ++mu) {
    out += weights[static_cast<std::size_t>(mu)] *
           comp_state(PauliIndex(1, static_cast<std::size_t>(mu))).coeffs();
  }
  return PauliVector(1, std::move(out));
}

}  // namespace ququat
