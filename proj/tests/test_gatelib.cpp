#include "doctest.h"

#include <cmath>
#include <numbers>

#include "ququat/gatelib.hpp"
#include "ququat/oracle.hpp"
#include "ququat/sampling.hpp"
#include "test_util.hpp"

using namespace ququat;
using test::diag;
using test::diff;
using test::dyads;
using test::vec;

namespace {

constexpr double kPi = std::numbers::pi;

CMatrix projector(int k) {
  CMatrix p = CMatrix::Zero(2, 2);
  p(k, k) = 1.0;
  return p;
}

std::vector<CMatrix> zbasis() { return {projector(0), projector(1)}; }

}  // namespace

TEST_CASE("pauli gates") {
  CHECK(diff(pauli_gate(1).matrix(), diag({1, 1, -1, -1})) == 0.0);
  CHECK(diff(pauli_gate(2).matrix(), diag({1, -1, 1, -1})) == 0.0);
  CHECK(diff(pauli_gate(3).matrix(), diag({1, -1, -1, 1})) == 0.0);
  for (int k = 1; k <= 3; ++k) CHECK(diff(pauli_gate(k).matrix(), ptm_from_unitary(pauli_matrix(k)).matrix()) < 1e-15);
  CHECK_THROWS_AS(pauli_gate(0), DimensionError);
}

TEST_CASE("hadamard gate dyads") {
  CHECK(diff(hadamard_gate().matrix(), dyads(4, {{1, 0, 0}, {-1, 2, 2}, {1, 3, 1}, {1, 1, 3}})) == 0.0);
}

TEST_CASE("rotations") {
  CHECK(diff(rotation1(0.0).matrix(), RMatrix::Identity(4, 4)) < 1e-15);
  CHECK(diff(rotation1(kPi).matrix(), pauli_gate(3).matrix()) < 1e-15);
  for (double t : {0.1, 1.0, 2.5}) {
    CMatrix u(2, 2);
    u << std::cos(t / 2), -std::sin(t / 2), std::sin(t / 2), std::cos(t / 2);
    CHECK(diff(rotation2(t).matrix(), ptm_from_unitary(u).matrix()) < 1e-12);
  }
}

TEST_CASE("euler gates") {
  CHECK(diff(euler_gate({0, 0, 0}).matrix(), RMatrix::Identity(4, 4)) < 1e-15);
  Sampler rng(1);
  for (int i = 0; i < 50; ++i) {
    const EulerAngles a{rng.uniform(0, 2 * kPi), rng.uniform(0, kPi), rng.uniform(0, 2 * kPi)};
    CHECK(a.in_canonical_range());
    const GateMatrix e = euler_gate(a);
    CHECK(is_orthogonal(e));
    CHECK(diff(e.matrix(), ptm_from_unitary(euler_unitary(a)).matrix()) < 1e-12);
    const EulerAngles inv = euler_inverse(a);
    CHECK(inv.in_canonical_range());
    CHECK(diff(compose(euler_gate(inv), e).matrix(), RMatrix::Identity(4, 4)) < 1e-12);
    CHECK(diff(compose(e, euler_gate(inv)).matrix(), RMatrix::Identity(4, 4)) < 1e-12);
  }
}

TEST_CASE("reflections and inversion") {
  CHECK(diff(reflection(1).matrix(), diag({1, -1, 1, 1})) == 0.0);
  CHECK(diff(inversion().matrix(), diag({1, -1, -1, -1})) == 0.0);
  CHECK(diff(compose(rotation1(kPi), inversion()).matrix(), reflection(3).matrix()) < 1e-15);
  CHECK(is_orthogonal(inversion()));
  CHECK_FALSE(is_completely_positive(inversion()));
  CHECK(oracle::choi_eigenvalues(oracle::choi_from_gate_matrix(inversion().matrix())).minCoeff() < -0.5);
  for (int k = 1; k <= 3; ++k) CHECK_FALSE(is_completely_positive(reflection(k)));
}

TEST_CASE("measurement gates") {
  const RMatrix e0 = dyads(4, {{0.5, 0, 0}, {0.5, 3, 3}, {0.5, 0, 3}, {0.5, 3, 0}});
  const RMatrix e1 = dyads(4, {{0.5, 0, 0}, {0.5, 3, 3}, {-0.5, 0, 3}, {-0.5, 3, 0}});
  CHECK(measurement_gate(0).matrix() == e0);
  CHECK(measurement_gate(1).matrix() == e1);
  CHECK(diff(measurement_gate(projector(0)).matrix(), e0) < 1e-15);
  CHECK(diff(measurement_gate(projector(1)).matrix(), e1) < 1e-15);
  const GateMatrix sum(measurement_gate(0).matrix() + measurement_gate(1).matrix());
  CHECK(diff(sum.matrix(), diag({1, 0, 0, 1})) == 0.0);
  CHECK(is_trace_preserving(sum));
  CMatrix bad = CMatrix::Identity(2, 2) * 0.5;
  CHECK_THROWS_AS(measurement_gate(bad), ValidationError);
}

TEST_CASE("projector validation") {
  CHECK_NOTHROW(validate_projectors(zbasis()));
  const std::vector<CMatrix> overlap = {projector(0), projector(0)};
  CHECK_THROWS_AS(validate_projectors(overlap), ValidationError);
}

TEST_CASE("computational projectors") {
  const std::array<int, 2> t = {2, 0};
  const auto ps = computational_projectors(3, t);
  REQUIRE(ps.size() == 4);
  CMatrix sum = CMatrix::Zero(8, 8);
  for (const auto& p : ps) sum += p;
  CHECK(diff(sum, CMatrix(CMatrix::Identity(8, 8))) == 0.0);
  // outcome 1 means qubit 2 = 0, qubit 0 = 1: basis states 100 and 110.
  CHECK(ps[1](4, 4) == Complex(1.0));
  CHECK(ps[1](6, 6) == Complex(1.0));
  CHECK(ps[1].trace() == Complex(2.0));
}

TEST_CASE("von neumann measurement examples") {
  auto r = von_neumann_measure(zbasis(), PauliVector(1, vec({1, 0, 0, 0})));
  CHECK(r.probabilities[0] == doctest::Approx(0.5));
  CHECK(r.probabilities[1] == doctest::Approx(0.5));
  r = von_neumann_measure(zbasis(), PauliVector(1, vec({1, 0, 0, 1})));
  CHECK(r.probabilities[0] == doctest::Approx(1.0));
  CHECK(std::abs(r.probabilities[1]) < 1e-15);
  CHECK_FALSE(r.conditional_states[1].has_value());
  r = von_neumann_measure(zbasis(), PauliVector(1, vec({1, 1, 0, 0})));
  CHECK(r.probabilities[0] == doctest::Approx(0.5));
  CHECK(diff(r.post_state.coeffs(), vec({1, 0, 0, 0})) < 1e-15);
  REQUIRE(r.conditional_states[0].has_value());
  CHECK(diff(r.conditional_states[0]->coeffs(), vec({1, 0, 0, 1})) < 1e-15);
}

TEST_CASE("von neumann measurement agrees with the dense oracle") {
  Sampler rng(2);
  for (int n = 1; n <= 3; ++n) {
    std::vector<int> all;
    for (int q = 0; q < n; ++q) all.push_back(q);
    auto ps = computational_projectors(n, all);
    const CMatrix v = rng.random_unitary(static_cast<Eigen::Index>(hilbert_dim(n)));
    for (auto& p : ps) p = (v * p * v.adjoint()).eval();
    for (auto& p : ps) p = (0.5 * (p + p.adjoint())).eval();
    const DensityMatrix rho = rng.random_density(n);
    const auto r = von_neumann_measure(ps, density_to_pauli(rho));
    const auto d = oracle::measure_dense(ps, rho.matrix());
    for (std::size_t k = 0; k < ps.size(); ++k) CHECK(std::abs(r.probabilities[k] - d.probabilities[k]) < 1e-10);
    CHECK(diff(r.post_state.coeffs(), oracle::pauli_coefficients(d.post_state)) < 1e-10);
  }
}

TEST_CASE("projection superoperators") {
  CHECK(diff(projection_superoperator(PauliIndex(1, 0)).matrix(), diag({1, 0, 0, 0})) == 0.0);
  CHECK(diff(apply(projection_superoperator(PauliIndex(1, 3)), PauliVector(1, vec({1, 0, 0, 1}))).coeffs(),
             vec({0, 0, 0, 1})) == 0.0);
  RMatrix sum = RMatrix::Zero(16, 16);
  for (std::size_t mu = 0; mu < 16; ++mu) sum += projection_superoperator(PauliIndex(2, mu)).matrix();
  CHECK(diff(sum, RMatrix::Identity(16, 16)) == 0.0);
}

TEST_CASE("the mirrored-angle rotation is not an inverse") {
  const EulerAngles a{0.7, 1.2, 2.9};
  const GateMatrix mirrored = euler_gate({2 * kPi - a.alpha, kPi - a.theta, 2 * kPi - a.beta});
  CHECK(diff(compose(mirrored, euler_gate(a)).matrix(), RMatrix::Identity(4, 4)) > 0.5);
}

TEST_CASE("reflections as rotations of the inversion") {
  CHECK(diff(compose(rotation2(kPi), inversion()).matrix(), reflection(2).matrix()) < 1e-15);
  CHECK(diff(compose(compose(rotation1(kPi), rotation2(kPi)), inversion()).matrix(), reflection(1).matrix()) < 1e-15);
  Sampler rng(3);
  for (int i = 0; i < 10; ++i) {
    const RMatrix m = compose(rotation1(rng.uniform(0, 2 * kPi)), inversion()).matrix();
    CHECK(m(3, 3) == doctest::Approx(-1.0));
  }
}
