#include "doctest.h"

#include <cmath>
#include <numbers>

#include "ququat/liouville.hpp"
#include "ququat/oracle.hpp"
#include "ququat/sampling.hpp"
#include "test_util.hpp"

using namespace ququat;
using test::diff;
using test::vec;

TEST_CASE("pauli index digits round trip") {
  const PauliIndex mu(3, 2 * 16 + 1 * 4 + 3);
  CHECK(mu.digits() == std::vector<int>{2, 1, 3});
  CHECK(mu.digit(0) == 2);
  const std::vector<int> d = {2, 1, 3};
  CHECK(PauliIndex::from_digits(d) == mu);
  for (std::size_t v = 0; v < 64; ++v) {
    const PauliIndex p(3, v);
    CHECK(PauliIndex::from_digits(p.digits()).value() == v);
  }
  CHECK_THROWS_AS(PauliIndex(1, 4), DimensionError);
}

TEST_CASE("density matrix validation") {
  CMatrix m = CMatrix::Identity(2, 2) / 2.0;
  CHECK_NOTHROW(DensityMatrix{m});
  CHECK_THROWS_AS(DensityMatrix(CMatrix::Identity(2, 2)), ValidationError);
  CMatrix nh = m;
  nh(0, 1) = 0.3;
  CHECK_THROWS_AS(DensityMatrix{nh}, ValidationError);
  CMatrix neg(2, 2);
  neg << 1.5, 0.0, 0.0, -0.5;
  CHECK_THROWS_AS(DensityMatrix{neg}, ValidationError);
  CHECK_NOTHROW(DensityMatrix::unchecked_positivity(neg));
  CHECK_THROWS_AS(DensityMatrix(CMatrix::Identity(3, 3) / 3.0), DimensionError);
}

TEST_CASE("density_to_pauli examples") {
  CHECK(diff(density_to_pauli(DensityMatrix(CMatrix::Identity(2, 2) / 2.0)).coeffs(), vec({1, 0, 0, 0})) < 1e-15);
  CMatrix zero = CMatrix::Zero(2, 2);
  zero(0, 0) = 1.0;
  CHECK(diff(density_to_pauli(DensityMatrix(zero)).coeffs(), vec({1, 0, 0, 1})) < 1e-15);
}

TEST_CASE("density round trip for random two-ququat states") {
  Sampler rng(7);
  for (int i = 0; i < 20; ++i) {
    const DensityMatrix rho = rng.random_density(2);
    const DensityReconstruction back = pauli_to_density(density_to_pauli(rho));
    CHECK(back.physical);
    CHECK(diff(back.rho.matrix(), rho.matrix()) < 1e-12);
  }
}

TEST_CASE("pauli_to_density examples") {
  CHECK(diff(pauli_to_density(PauliVector(1, vec({1, 0, 0, 0}))).rho.matrix(), CMatrix(CMatrix::Identity(2, 2) / 2.0)) <
        1e-15);
  const CMatrix plus = pauli_to_density(PauliVector(1, vec({1, 1, 0, 0}))).rho.matrix();
  CHECK(diff(plus * plus, plus) < 1e-15);
  CHECK(std::abs(plus(0, 1) - Complex(0.5, 0.0)) < 1e-15);
  const DensityReconstruction bad = pauli_to_density(PauliVector(1, vec({1, 2, 0, 0})));
  CHECK_FALSE(bad.physical);
  CHECK(bad.min_eigenvalue == doctest::Approx(-0.5).epsilon(1e-12));
  CHECK_THROWS_AS(pauli_to_density(PauliVector(1, vec({0.5, 0, 0, 0}))), NormalizationError);
}

TEST_CASE("computational states") {
  CHECK(diff(comp_state(PauliIndex(1, 0)).coeffs(), vec({1, 0, 0, 0})) == 0.0);
  CHECK(diff(comp_state(PauliIndex(1, 3)).coeffs(), vec({1, 0, 0, 1})) == 0.0);
  for (std::size_t mu = 1; mu < 4; ++mu) {
    const CMatrix r = pauli_to_density(comp_state(PauliIndex(1, mu))).rho.matrix();
    CHECK(diff(r * r, r) < 1e-15);
  }
  // P_0 = P_mu = 1 gives Tr rho^2 = 2^(1-n): pure only for a single ququat.
  for (int n = 1; n <= 3; ++n) {
    for (std::size_t mu = 1; mu < liouville_dim(n); ++mu) {
      const PauliVector p = comp_state(PauliIndex(n, mu));
      const CMatrix rho = oracle::density_from_coefficients(p.coeffs());
      const double dense = (rho * rho).trace().real();
      CHECK(purity(p) == doctest::Approx(dense).epsilon(1e-12));
      CHECK(purity(p) == doctest::Approx(std::pow(2.0, 1 - n)).epsilon(1e-12));
    }
    CHECK(purity(comp_state(PauliIndex(n, 0))) == doctest::Approx(std::pow(2.0, -n)));
  }
  const std::array<int, 2> d = {1, 3};
  CHECK(diff(product_comp_state(d).coeffs(),
             tensor(comp_state(PauliIndex(1, 1)), comp_state(PauliIndex(1, 3))).coeffs()) == 0.0);
}

TEST_CASE("purity examples") {
  CHECK(purity(PauliVector(1, vec({1, 0, 0, 0}))) == doctest::Approx(0.5));
  CHECK(purity(PauliVector(1, vec({1, 0, 0, 1}))) == doctest::Approx(1.0));
}

TEST_CASE("purity agrees with the dense trace of rho squared") {
  Sampler rng(11);
  for (int n = 1; n <= 3; ++n) {
    const DensityMatrix rho = rng.random_density(n);
    const double dense = (rho.matrix() * rho.matrix()).trace().real();
    CHECK(purity(density_to_pauli(rho)) == doctest::Approx(dense).epsilon(1e-12));
  }
}

TEST_CASE("liouville inner product") {
  const OperatorKet s1(pauli_matrix(1)), s2(pauli_matrix(2));
  CHECK(std::abs(liouville_inner(s1, s1) - Complex(2.0, 0.0)) < 1e-15);
  CHECK(std::abs(liouville_inner(s1, s2)) < 1e-15);
  Sampler rng(3);
  const CMatrix a = rng.random_operator(2);
  const Complex aa = liouville_inner(OperatorKet(a), OperatorKet(a));
  CHECK(aa.real() >= 0.0);
  CHECK(std::abs(aa.imag()) < 1e-12);
  CHECK(aa.real() == doctest::Approx(a.squaredNorm()));
}

TEST_CASE("single-ququat decomposition") {
  auto w = decompose_single_ququat(PauliVector(1, vec({1, 0, 0, 0})));
  CHECK(w == std::array<double, 4>{1, 0, 0, 0});
  w = decompose_single_ququat(PauliVector(1, vec({1, 1, 0, 0})));
  CHECK(w == std::array<double, 4>{0, 1, 0, 0});
  const PauliVector p(1, vec({1, 0.2, 0.3, 0.1}));
  w = decompose_single_ququat(p);
  CHECK(w[0] == doctest::Approx(0.4));
  CHECK(w[1] == doctest::Approx(0.2));
  CHECK(diff(recombine_single_ququat(w).coeffs(), p.coeffs()) < 1e-15);
}

TEST_CASE("operator coefficients invert") {
  Sampler rng(5);
  const CMatrix a = rng.random_operator(2);
  CHECK(diff(operator_from_coefficients(operator_coefficients(a)), a) < 1e-13);
}

TEST_CASE("purity bounds on random states") {
  Sampler rng(13);
  for (int n = 1; n <= 3; ++n) {
    for (int i = 0; i < 50; ++i) {
      const double s = density_to_pauli(i % 2 ? rng.random_pure(n) : rng.random_density(n)).squared_norm();
      CHECK(s >= 1.0 - 1e-10);
      CHECK(s <= std::pow(2.0, n) + 1e-10);
    }
  }
}

TEST_CASE("pauli basis orthonormality and completeness") {
  for (int n = 1; n <= 2; ++n) {
    const auto dim = liouville_dim(n);
    const double scale = 1.0 / static_cast<double>(hilbert_dim(n));
    for (std::size_t mu = 0; mu < dim; ++mu) {
      for (std::size_t nu = 0; nu < dim; ++nu) {
        const Complex ip = liouville_inner(OperatorKet(pauli_matrix(PauliIndex(n, mu))),
                                           OperatorKet(pauli_matrix(PauliIndex(n, nu)))) * scale;
        CHECK(std::abs(ip - Complex(mu == nu ? 1.0 : 0.0)) < 1e-15);
      }
    }
  }
  Sampler rng(17);
  const CMatrix a = rng.random_operator(2);
  CMatrix sum = CMatrix::Zero(4, 4);
  for (std::size_t mu = 0; mu < 16; ++mu) {
    const CMatrix s = pauli_matrix(PauliIndex(2, mu));
    sum += liouville_inner(OperatorKet(s), OperatorKet(a)) / 4.0 * s;
  }
  CHECK(diff(sum, a) < 1e-12);
}

TEST_CASE("basis matrices agree with dense kronecker products") {
  for (std::size_t mu = 0; mu < 64; ++mu) CHECK(diff(pauli_matrix(PauliIndex(3, mu)), oracle::pauli_string(3, mu)) == 0.0);
}
