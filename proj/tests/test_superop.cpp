#include "doctest.h"

#include <numbers>

#include <unsupported/Eigen/KroneckerProduct>

#include "ququat/gatelib.hpp"
#include "ququat/oracle.hpp"
#include "ququat/sampling.hpp"
#include "ququat/superop.hpp"
#include "test_util.hpp"

using namespace ququat;
using test::diag;
using test::diff;
using test::vec;

namespace {

std::vector<CMatrix> depolarizing_kraus() {
  std::vector<CMatrix> k;
  for (int mu = 0; mu < 4; ++mu) k.push_back(pauli_matrix(mu) / 2.0);
  return k;
}

CMatrix projector(int k) {
  CMatrix p = CMatrix::Zero(2, 2);
  p(k, k) = 1.0;
  return p;
}

}  // namespace

TEST_CASE("gate matrix shape validation") {
  CHECK_THROWS_AS(GateMatrix(RMatrix::Identity(3, 3)), DimensionError);
  CHECK_THROWS_AS(GateMatrix(RMatrix::Identity(8, 8)), DimensionError);
  CHECK(GateMatrix::identity(2).ququats() == 2);
}

TEST_CASE("kraus set validation") {
  CHECK_THROWS_AS(KrausSet({CMatrix::Identity(2, 2) * 1.1}), ValidationError);
  CHECK_THROWS_AS(KrausSet({CMatrix::Identity(2, 2), CMatrix::Identity(4, 4)}), Error);
  CHECK(KrausSet({CMatrix::Identity(2, 2)}).is_trace_preserving());
  CHECK_FALSE(KrausSet({projector(0)}).is_trace_preserving());
}

TEST_CASE("apply examples") {
  Sampler rng(1);
  const PauliVector p = density_to_pauli(rng.random_density(2));
  CHECK(diff(apply(GateMatrix::identity(2), p).coeffs(), p.coeffs()) == 0.0);
  const GateMatrix x(diag({1, 1, -1, -1}));
  CHECK(diff(apply(x, PauliVector(1, vec({1, 0, 0, 1}))).coeffs(), vec({1, 0, 0, -1})) == 0.0);
  const GateMatrix dep(diag({1, 0, 0, 0}));
  CHECK(diff(apply(dep, density_to_pauli(rng.random_density(1))).coeffs(), vec({1, 0, 0, 0})) == 0.0);
}

TEST_CASE("ptm_from_unitary examples") {
  CHECK(diff(ptm_from_unitary(CMatrix::Identity(2, 2)).matrix(), RMatrix::Identity(4, 4)) < 1e-15);
  CHECK(diff(ptm_from_unitary(pauli_matrix(1)).matrix(), diag({1, 1, -1, -1})) < 1e-15);
  const CMatrix h = (pauli_matrix(1) + pauli_matrix(3)) / std::numbers::sqrt2;
  CHECK(diff(ptm_from_unitary(h).matrix(), test::dyads(4, {{1, 0, 0}, {-1, 2, 2}, {1, 3, 1}, {1, 1, 3}})) < 1e-12);
  CHECK_THROWS_AS(ptm_from_unitary(CMatrix::Identity(2, 2) * 2.0), ValidationError);
}

TEST_CASE("ptm_from_kraus examples") {
  CHECK(diff(ptm_from_kraus(KrausSet({CMatrix::Identity(2, 2)})).matrix(), RMatrix::Identity(4, 4)) < 1e-15);
  CHECK(diff(ptm_from_kraus(KrausSet(depolarizing_kraus())).matrix(), diag({1, 0, 0, 0})) < 1e-15);
  const GateMatrix deph = ptm_from_kraus(KrausSet({projector(0), projector(1)}));
  CHECK(diff(deph.matrix(), diag({1, 0, 0, 1})) < 1e-15);
  CHECK(diff(deph.matrix(), RMatrix(measurement_gate(0).matrix() + measurement_gate(1).matrix())) < 1e-15);
}

TEST_CASE("ptm_from_kraus agrees with the dense gate matrix") {
  Sampler rng(2);
  for (int n = 1; n <= 3; ++n) {
    const KrausSet k = rng.random_channel(n, 3);
    CHECK(diff(ptm_from_kraus(k).matrix(), oracle::gate_matrix_from_kraus(k.operators())) < 1e-12);
  }
}

TEST_CASE("trace preservation and unitality") {
  Sampler rng(3);
  const GateMatrix u = ptm_from_unitary(rng.random_unitary(4));
  CHECK(is_trace_preserving(u));
  CHECK(is_unital(u));
  CHECK_FALSE(is_trace_preserving(measurement_gate(0)));
  RMatrix t = RMatrix::Identity(4, 4);
  t(1, 0) = 0.3;
  CHECK(is_trace_preserving(GateMatrix(t)));
  CHECK_FALSE(is_unital(GateMatrix(t)));
}

TEST_CASE("choi examples") {
  const ChoiMatrix id = choi_from_ptm(GateMatrix::identity(1));
  const RVector w = oracle::choi_eigenvalues(id.matrix());
  CHECK(w[3] == doctest::Approx(2.0));
  CHECK(std::abs(w[0]) < 1e-12);
  CHECK(std::abs(w[2]) < 1e-12);
  const ChoiMatrix dep = choi_from_kraus(KrausSet(depolarizing_kraus()));
  CHECK(diff(dep.matrix(), CMatrix(CMatrix::Identity(4, 4) / 2.0)) < 1e-15);
  const RVector inv = oracle::choi_eigenvalues(choi_from_ptm(inversion()).matrix());
  CHECK(inv.minCoeff() < -0.5);
}

TEST_CASE("choi from ptm agrees with choi from kraus and the oracle") {
  Sampler rng(4);
  for (int n = 1; n <= 2; ++n) {
    const KrausSet k = rng.random_channel(n, 2);
    const CMatrix dense = oracle::choi_from_kraus(k.operators());
    CHECK(diff(choi_from_kraus(k).matrix(), dense) < 1e-12);
    CHECK(diff(choi_from_ptm(ptm_from_kraus(k)).matrix(), dense) < 1e-12);
    CHECK(diff(oracle::choi_from_gate_matrix(ptm_from_kraus(k).matrix()), dense) < 1e-12);
  }
}

TEST_CASE("complete positivity classification") {
  Sampler rng(5);
  for (int i = 0; i < 20; ++i) CHECK(is_completely_positive(ptm_from_kraus(rng.random_channel(1 + i % 2, 1 + i % 3))));
  CHECK_FALSE(is_completely_positive(inversion()));
  CHECK_FALSE(is_completely_positive(reflection(2)));
  CHECK(oracle::choi_eigenvalues(oracle::choi_from_gate_matrix(reflection(2).matrix())).minCoeff() < -0.5);
}

TEST_CASE("kraus_from_choi") {
  const KrausSet id = kraus_from_choi(choi_from_ptm(GateMatrix::identity(1)));
  REQUIRE(id.size() == 1);
  const CMatrix a = id.operators()[0];
  CHECK(diff(CMatrix(a * a.adjoint()), CMatrix(CMatrix::Identity(2, 2))) < 1e-12);
  CHECK(std::abs(a(0, 1)) < 1e-12);
  CHECK(std::abs(a(0, 0) - a(1, 1)) < 1e-12);

  const GateMatrix deph(diag({1, 0, 0, 1}));
  const KrausSet dk = kraus_from_choi(choi_from_ptm(deph));
  CHECK(dk.size() == 2);
  CHECK(diff(ptm_from_kraus(dk).matrix(), deph.matrix()) < 1e-10);

  Sampler rng(6);
  for (int i = 0; i < 100; ++i) {
    const GateMatrix e = ptm_from_kraus(rng.random_channel(1, 1 + i % 4));
    CHECK(diff(ptm_from_kraus(kraus_from_choi(choi_from_ptm(e))).matrix(), e.matrix()) < 1e-9);
  }
  CHECK_THROWS_AS(kraus_from_choi(choi_from_ptm(inversion())), NotCompletelyPositiveError);
}

TEST_CASE("compose, tensor and adjoint") {
  const GateMatrix x = ptm_from_unitary(pauli_matrix(1));
  CHECK(diff(compose(x, x).matrix(), RMatrix::Identity(4, 4)) < 1e-15);
  CHECK(diff(tensor(GateMatrix::identity(1), GateMatrix::identity(1)).matrix(), RMatrix::Identity(16, 16)) == 0.0);

  Sampler rng(7);
  const KrausSet ka = rng.random_channel(1, 2), kb = rng.random_channel(1, 3);
  const GateMatrix ea = ptm_from_kraus(ka), eb = ptm_from_kraus(kb);
  const DensityMatrix ra = rng.random_density(1), rb = rng.random_density(1);
  const PauliVector joint = apply(tensor(ea, eb), tensor(density_to_pauli(ra), density_to_pauli(rb)));
  CHECK(diff(joint.coeffs(),
             tensor(apply(ea, density_to_pauli(ra)), apply(eb, density_to_pauli(rb))).coeffs()) < 1e-12);
  std::vector<CMatrix> kron;
  for (const auto& a : ka.operators()) {
    for (const auto& b : kb.operators()) kron.push_back(Eigen::kroneckerProduct(a, b).eval());
  }
  const CMatrix rho = Eigen::kroneckerProduct(ra.matrix(), rb.matrix()).eval();
  CHECK(diff(joint.coeffs(), oracle::pauli_coefficients(oracle::evolve_dense(kron, rho))) < 1e-12);

  const CMatrix u = rng.random_unitary(2);
  CHECK(diff(adjoint(ptm_from_unitary(u)).matrix(), ptm_from_unitary(u.adjoint()).matrix()) < 1e-12);
  CHECK(diff(adjoint(adjoint(ea)).matrix(), ea.matrix()) == 0.0);
  CHECK(is_unital(adjoint(ea)));
}

TEST_CASE("orthogonality") {
  Sampler rng(8);
  for (int i = 0; i < 100; ++i) {
    CHECK(is_orthogonal(ptm_from_unitary(rng.random_unitary(2))));
    CHECK(is_orthogonal(ptm_from_unitary(rng.random_unitary(4))));
  }
  CHECK_FALSE(is_orthogonal(GateMatrix(diag({1, 0, 0, 0}))));
}

TEST_CASE("trace functional and bound") {
  Sampler rng(9);
  const GateMatrix u = ptm_from_unitary(rng.random_unitary(2));
  CHECK(trace_functional(u, density_to_pauli(rng.random_density(1))) == doctest::Approx(1.0));
  CHECK(trace_functional(measurement_gate(0), PauliVector(1, vec({1, 0, 0, 0}))) == doctest::Approx(0.5));
  CHECK(trace_functional(measurement_gate(0), PauliVector(1, vec({1, 0, 0, 1}))) == doctest::Approx(1.0));
  CHECK(satisfies_trace_decreasing_bound(u));
  CHECK(satisfies_trace_decreasing_bound(measurement_gate(0)));
  for (int i = 0; i < 100; ++i) {
    const GateMatrix e = ptm_from_kraus(rng.random_subchannel(1, 1 + i % 3, rng.uniform(0.0, 1.0)));
    REQUIRE(satisfies_trace_decreasing_bound(e));
    const double t = trace_functional(e, density_to_pauli(rng.random_density(1)));
    CHECK(t >= -1e-12);
    CHECK(t <= 1.0 + 1e-12);
  }
}

TEST_CASE("nonlinear apply") {
  Sampler rng(10);
  const GateMatrix u = ptm_from_unitary(rng.random_unitary(2));
  const PauliVector p = density_to_pauli(rng.random_density(1));
  CHECK(diff(nonlinear_apply(u, p).coeffs(), apply(u, p).coeffs()) < 1e-15);
  CHECK(diff(nonlinear_apply(measurement_gate(0), PauliVector(1, vec({1, 0, 0, 1}))).coeffs(), vec({1, 0, 0, 1})) <
        1e-15);
  CHECK(diff(nonlinear_apply(measurement_gate(0), PauliVector(1, vec({1, 0, 0, 0}))).coeffs(), vec({1, 0, 0, 1})) <
        1e-15);
  CHECK_THROWS_AS(nonlinear_apply(measurement_gate(1), PauliVector(1, vec({1, 0, 0, 1}))), ZeroProbabilityError);
}

TEST_CASE("embedding matches the dense oracle") {
  Sampler rng(11);
  const int n = 3;
  const std::vector<std::vector<int>> target_sets = {{0}, {2}, {1, 0}, {0, 2}, {2, 1}};
  for (const auto& targets : target_sets) {
    const int k = static_cast<int>(targets.size());
    const KrausSet local = rng.random_channel(k, 2);
    std::vector<CMatrix> lifted;
    for (const auto& a : local.operators()) lifted.push_back(oracle::embed_operator(a, targets, n));
    const DensityMatrix rho = rng.random_density(n);
    const PauliVector out = apply(embed(ptm_from_kraus(local), targets, n), density_to_pauli(rho));
    CHECK(diff(out.coeffs(), oracle::pauli_coefficients(oracle::evolve_dense(lifted, rho.matrix()))) < 1e-12);
  }
  const std::array<int, 2> dup = {1, 1};
  CHECK_THROWS(embed(GateMatrix::identity(2), dup, 3));
}

TEST_CASE("ququat permutation") {
  const std::array<int, 2> swap = {1, 0};
  const RMatrix p = ququat_permutation(2, swap);
  const PauliVector a = comp_state(PauliIndex(1, 1)), b = comp_state(PauliIndex(1, 3));
  CHECK(diff(RVector(p * tensor(a, b).coeffs()), tensor(b, a).coeffs()) == 0.0);
}
