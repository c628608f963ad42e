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

#include "ququat/pseudogate.hpp"

#include <cmath>
#include <map>
#include <string>

#include <Eigen/LU>
#include <Eigen/SVD>
#include <unsupported/Eigen/MatrixFunctions>

#include "ququat/pauli.hpp"
#include "ququat/sampling.hpp"

namespace ququat {

namespace {

constexpr Complex kI{0.0, 1.0};
constexpr double kRankTolerance = 1e-8;

int require_operator(const CMatrix& a, const char* what) {
  if (a.rows() != a.cols()) throw DimensionError(std::string(what) + ": matrix is not square");
  const int n = qubits_for_hilbert_dim(static_cast<std::size_t>(a.rows()));
  if (n < 1 || n > kMaxQuquats) {
    throw DimensionError(std::string(what) + ": dimension is not 2^n");
  }
  return n;
}

CMatrix matrix_power(CMatrix base, int m) {
  CMatrix out = CMatrix::Identity(base.rows(), base.cols());
  while (m > 0) {
    if (m & 1) out = out * base;
    base = base * base;
    m >>= 1;
  }
  return out;
}

void require_square_pair(const CMatrix& h1, const CMatrix& h2, const char* what) {
  if (h1.rows() != h1.cols() || h2.rows() != h2.cols() || h1.rows() != h2.rows()) {
    throw DimensionError(std::string(what) + ": generators must be square and equal-sized");
  }
}

}  // namespace

PseudoGateMatrix::PseudoGateMatrix(CMatrix m) : n_(-1), m_(std::move(m)) {
  if (m_.rows() != m_.cols()) throw DimensionError("PseudoGateMatrix: matrix is not square");
  n_ = ququats_for_liouville_dim(static_cast<std::size_t>(m_.rows()));
  if (n_ < 1) throw DimensionError("PseudoGateMatrix: dimension is not 4^n");
}

PseudoGateMatrix left_matrix(const CMatrix& a) {
  const int n = require_operator(a, "left_matrix");
  const auto& basis = PauliBasis::get(n);
  const auto dim = static_cast<Eigen::Index>(basis.size());
  const double scale = 1.0 / static_cast<double>(hilbert_dim(n));
  CMatrix l(dim, dim);
  for (Eigen::Index nu = 0; nu < dim; ++nu) {
    const CMatrix x = basis[static_cast<std::size_t>(nu)].right_multiply(a);  // A sigma_nu
    for (Eigen::Index mu = 0; mu < dim; ++mu) {
      l(mu, nu) = basis[static_cast<std::size_t>(mu)].trace_with(x) * scale;
    }
  }
  return PseudoGateMatrix(std::move(l));
}

PseudoGateMatrix right_matrix(const CMatrix& a) {
  const int n = require_operator(a, "right_matrix");
  const auto& basis = PauliBasis::get(n);
  const auto dim = static_cast<Eigen::Index>(basis.size());
  const double scale = 1.0 / static_cast<double>(hilbert_dim(n));
  const CMatrix adj = a.adjoint();
  CMatrix r(dim, dim);
  for (Eigen::Index nu = 0; nu < dim; ++nu) {
    const CMatrix x = basis[static_cast<std::size_t>(nu)].left_multiply(adj);  // sigma_nu A^dagger
    for (Eigen::Index mu = 0; mu < dim; ++mu) {
      r(mu, nu) = basis[static_cast<std::size_t>(mu)].trace_with(x) * scale;
    }
  }
  return PseudoGateMatrix(std::move(r));
}

PseudoGateMatrix single_ququat_left_closed_form(const CMatrix& a) {
  if (a.rows() != 2 || a.cols() != 2) {
    throw DimensionError("single_ququat_left_closed_form: requires a 2x2 operator");
  }
  std::array<Complex, 4> c{};
  for (int mu = 0; mu < 4; ++mu) {
    c[static_cast<std::size_t>(mu)] = (pauli_matrix(mu) * a).trace() / 2.0;
  }
  CMatrix l = c[0] * CMatrix::Identity(4, 4);
  for (int k = 1; k <= 3; ++k) {
    l(0, k) += c[static_cast<std::size_t>(k)];
    l(k, 0) += c[static_cast<std::size_t>(k)];
  }
  l(3, 2) += kI * c[1];
  l(2, 3) -= kI * c[1];
  l(1, 3) += kI * c[2];
  l(3, 1) -= kI * c[2];
  l(2, 1) += kI * c[3];
  l(1, 2) -= kI * c[3];
  return PseudoGateMatrix(std::move(l));
}

GateMatrix ptm_via_pseudogates(const KrausSet& k) {
  const auto dim = static_cast<Eigen::Index>(liouville_dim(k.qubits()));
  CMatrix e = CMatrix::Zero(dim, dim);
  for (const auto& a : k.operators()) e.noalias() += left_matrix(a).matrix() * right_matrix(a).matrix();
  const double residue = max_abs(e.imag());
  if (residue >= tol::kStructural) {
    throw NumericError("ptm_via_pseudogates: imaginary residue " + std::to_string(residue));
  }
  return GateMatrix(e.real());
}

RMatrix WeylGenerator::matrix() const {
  const auto d = static_cast<Eigen::Index>(liouville_dim(n));
  RMatrix h = RMatrix::Zero(d, d);
  h(static_cast<Eigen::Index>(mu), static_cast<Eigen::Index>(nu)) = 1.0;
  return h;
}

WeylGenerator weyl_generator(int n, std::size_t mu, std::size_t nu) {
  if (n < 1 || n > kMaxQuquats) throw DimensionError("weyl_generator: ququat count out of range");
  if (mu >= liouville_dim(n) || nu >= liouville_dim(n)) {
    throw DimensionError("weyl_generator: index out of range");
  }
  return WeylGenerator{n, mu, nu};
}

RMatrix weyl_bracket(const WeylGenerator& g1, const WeylGenerator& g2) {
  if (g1.n != g2.n) throw DimensionError("weyl_bracket: generators act on different n");
  const RMatrix a = g1.matrix(), b = g2.matrix();
  return a * b - b * a;
}

RMatrix weyl_bracket_formula(const WeylGenerator& g1, const WeylGenerator& g2) {
  if (g1.n != g2.n) throw DimensionError("weyl_bracket_formula: generators act on different n");
  const auto d = static_cast<Eigen::Index>(liouville_dim(g1.n));
  RMatrix out = RMatrix::Zero(d, d);
  if (g1.nu == g2.mu) out(static_cast<Eigen::Index>(g1.mu), static_cast<Eigen::Index>(g2.nu)) += 1.0;
  if (g2.nu == g1.mu) out(static_cast<Eigen::Index>(g2.mu), static_cast<Eigen::Index>(g1.nu)) -= 1.0;
  return out;
}

HermitianBasis hermitian_basis(int n) {
  if (n < 1 || n > 2) throw DimensionError("hermitian_basis: n must be 1 or 2");
  const auto d = static_cast<Eigen::Index>(liouville_dim(n));
  HermitianBasis out;
  // Sparse copies (flat index -> value) for the Gram matrix.
  std::vector<std::map<Eigen::Index, Complex>> sparse;
  const auto push = [&](std::map<Eigen::Index, Complex> entries) {
    CMatrix m = CMatrix::Zero(d, d);
    for (const auto& [flat, v] : entries) m(flat / d, flat % d) = v;
    out.generators.push_back(std::move(m));
    sparse.push_back(std::move(entries));
  };
  for (Eigen::Index a = 0; a < d; ++a) push({{a * d + a, 1.0}});
  for (Eigen::Index a = 0; a < d; ++a) {
    for (Eigen::Index b = a + 1; b < d; ++b) {
      push({{a * d + b, 1.0}, {b * d + a, 1.0}});
      push({{a * d + b, kI}, {b * d + a, -kI}});
    }
  }
  out.all_hermitian = true;
  for (const auto& g : out.generators) {
    if (max_abs(g - g.adjoint()) > tol::kStructural) out.all_hermitian = false;
  }
  const auto count = static_cast<Eigen::Index>(sparse.size());
  CMatrix gram = CMatrix::Zero(count, count);
  for (Eigen::Index i = 0; i < count; ++i) {
    for (Eigen::Index j = i; j < count; ++j) {
      Complex acc{0.0, 0.0};
      for (const auto& [flat, v] : sparse[static_cast<std::size_t>(i)]) {
        const auto it = sparse[static_cast<std::size_t>(j)].find(flat);
        if (it != sparse[static_cast<std::size_t>(j)].end()) acc += std::conj(v) * it->second;
      }
      gram(i, j) = acc;
      gram(j, i) = std::conj(acc);
    }
  }
  Eigen::FullPivLU<CMatrix> lu(gram);
  lu.setThreshold(kRankTolerance);
  out.rank = static_cast<int>(lu.rank());
  return out;
}

std::vector<double> commutator_limit_check(const CMatrix& h1, const CMatrix& h2, double t,
                                           const std::vector<int>& steps) {
  require_square_pair(h1, h2, "commutator_limit_check");
  const CMatrix target = (t * (h1 * h2 - h2 * h1)).exp();
  std::vector<double> errors;
  errors.reserve(steps.size());
  for (int m : steps) {
    if (m < 1) throw DimensionError("commutator_limit_check: step counts must be positive");
    const double s = std::sqrt(t / m);
    const CMatrix cycle = (-s * h2).exp() * (s * h1).exp() * (s * h2).exp() * (-s * h1).exp();
    errors.push_back(max_abs(target - matrix_power(cycle, m)));
  }
  return errors;
}

std::vector<double> linear_combination_limit_check(const CMatrix& h1, const CMatrix& h2,
                                                   Complex a, Complex b,
                                                   const std::vector<int>& steps) {
  require_square_pair(h1, h2, "linear_combination_limit_check");
  const CMatrix target = (kI * (a * h1 + b * h2)).exp();
  std::vector<double> errors;
  errors.reserve(steps.size());
  for (int m : steps) {
    if (m < 1) throw DimensionError("linear_combination_limit_check: step counts must be positive");
    const double inv = 1.0 / m;
    const CMatrix step = (kI * a * inv * h1).exp() * (kI * b * inv * h2).exp();
    errors.push_back(max_abs(target - matrix_power(step, m)));
  }
  return errors;
}

PseudoGateMatrix swap_pseudogate() {
  CMatrix t = CMatrix::Zero(16, 16);
  for (Eigen::Index a = 0; a < 4; ++a) {
    for (Eigen::Index b = 0; b < 4; ++b) t(4 * b + a, 4 * a + b) = 1.0;
  }
  return PseudoGateMatrix(std::move(t));
}

namespace {

double second_singular_value(const GateMatrix& e, const PauliVector& first,
                             const PauliVector& second) {
  const RVector out = e.matrix() * tensor(first, second).coeffs();
  const RMatrix m = Eigen::Map<const Eigen::Matrix<double, 4, 4, Eigen::RowMajor>>(out.data());
  Eigen::JacobiSVD<RMatrix> svd(m);
  return svd.singularValues()[1];
}

}  // namespace

std::optional<ImprimitivityWitness> imprimitivity_witness(const GateMatrix& e, int samples,
                                                          std::uint64_t seed) {
  if (e.ququats() != 2) throw DimensionError("imprimitivity_witness: requires a two-ququat gate");
  for (std::size_t mu = 1; mu <= 3; ++mu) {
    for (std::size_t nu = 1; nu <= 3; ++nu) {
      PauliVector a = comp_state(PauliIndex(1, mu));
      PauliVector b = comp_state(PauliIndex(1, nu));
      const double s2 = second_singular_value(e, a, b);
      if (s2 > kRankTolerance) return ImprimitivityWitness{std::move(a), std::move(b), s2};
    }
  }
  Sampler sampler(seed);
  for (int i = 0; i < samples; ++i) {
    PauliVector a = density_to_pauli(sampler.random_density(1));
    PauliVector b = density_to_pauli(sampler.random_density(1));
    const double s2 = second_singular_value(e, a, b);
    if (s2 > kRankTolerance) return ImprimitivityWitness{std::move(a), std::move(b), s2};
  }
  return std::nullopt;
}

}  // namespace ququat
