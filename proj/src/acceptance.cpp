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

#include "ququat/acceptance.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <numbers>
#include <tuple>

#include <fmt/format.h>

#include "ququat/canon.hpp"
#include "ququat/fourlogic.hpp"
#include "ququat/gatelib.hpp"
#include "ququat/oracle.hpp"
#include "ququat/pauli.hpp"
#include "ququat/pseudogate.hpp"
#include "ququat/sampling.hpp"

namespace ququat {

namespace {

class Checks {
 public:
  void expect(bool ok, const std::string& what) {
    ++count_;
    if (!ok) failures_.push_back(what);
  }
  void below(double err, double limit, const std::string& what) {
    expect(err < limit, fmt::format("{}: error {:.3e} >= {:.0e}", what, err, limit));
  }
  bool ok() const { return failures_.empty(); }
  std::string detail() const {
    if (ok()) return fmt::format("{} checks passed", count_);
    std::string s = fmt::format("{} of {} checks failed", failures_.size(), count_);
    for (const auto& f : failures_) s += "\n  - " + f;
    return s;
  }

 private:
  int count_ = 0;
  std::vector<std::string> failures_;
};

using Dyad = std::tuple<double, int, int>;  // coefficient, ket, bra

RMatrix dyads(int dim, std::initializer_list<Dyad> terms) {
  RMatrix m = RMatrix::Zero(dim, dim);
  for (const auto& [c, ket, bra] : terms) m(ket, bra) += c;
  return m;
}

double gap(const RMatrix& a, const RMatrix& b) { return max_abs(a - b); }

CMatrix u1(double alpha) {
  CMatrix u = CMatrix::Zero(2, 2);
  u(0, 0) = std::polar(1.0, -alpha / 2.0);
  u(1, 1) = std::polar(1.0, alpha / 2.0);
  return u;
}

CMatrix u2(double theta) {
  CMatrix u(2, 2);
  u << std::cos(theta / 2.0), -std::sin(theta / 2.0), std::sin(theta / 2.0), std::cos(theta / 2.0);
  return u;
}

bool within_bounds(const PauliVector& p) {
  const double s = p.squared_norm();
  return s >= 1.0 - 1e-10 && s <= static_cast<double>(hilbert_dim(p.ququats())) + 1e-10;
}

// 1. Reference matrices.
void reference_matrices(Checks& c, Sampler& rng) {
  for (int k = 1; k <= 3; ++k) {
    RMatrix formula(4, 4);
    for (int mu = 0; mu < 4; ++mu) {
      for (int nu = 0; nu < 4; ++nu) {
        formula(mu, nu) = 2.0 * (mu == 0 && nu == 0) + 2.0 * (mu == k && nu == k) - (mu == nu);
      }
    }
    c.below(gap(pauli_gate(k).matrix(), formula), 1e-15, fmt::format("pauli_gate({}) vs diagonal formula", k));
    c.below(gap(ptm_from_unitary(pauli_matrix(k)).matrix(), formula), 1e-12,
            fmt::format("sigma_{} PTM vs diagonal formula", k));
  }
  const RMatrix h = dyads(4, {{1, 0, 0}, {-1, 2, 2}, {1, 3, 1}, {1, 1, 3}});
  CMatrix hu(2, 2);
  hu << 1.0, 1.0, 1.0, -1.0;
  hu /= std::numbers::sqrt2;
  c.below(gap(ptm_from_unitary(hu).matrix(), h), 1e-12, "Hadamard PTM vs reference dyads");
  c.below(gap(hadamard_gate().matrix(), h), 1e-15, "hadamard_gate vs reference dyads");
  for (int i = 0; i < 20; ++i) {
    const double a = rng.uniform(0.0, 2.0 * std::numbers::pi);
    const double t = rng.uniform(0.0, std::numbers::pi);
    c.below(gap(rotation1(a).matrix(), ptm_from_unitary(u1(a)).matrix()), 1e-12,
            fmt::format("rotation1({:.4f}) vs unitary PTM", a));
    c.below(gap(rotation2(t).matrix(), ptm_from_unitary(u2(t)).matrix()), 1e-12,
            fmt::format("rotation2({:.4f}) vs unitary PTM", t));
  }
  const RMatrix e0 = dyads(4, {{0.5, 0, 0}, {0.5, 3, 3}, {0.5, 0, 3}, {0.5, 3, 0}});
  const RMatrix e1 = dyads(4, {{0.5, 0, 0}, {0.5, 3, 3}, {-0.5, 0, 3}, {-0.5, 3, 0}});
  c.expect(measurement_gate(0).matrix() == e0, "measurement_gate(0) equals reference E^(0) exactly");
  c.expect(measurement_gate(1).matrix() == e1, "measurement_gate(1) equals reference E^(1) exactly");
  for (int k = 0; k <= 1; ++k) {
    CMatrix p = CMatrix::Zero(2, 2);
    p(k, k) = 1.0;
    c.below(gap(measurement_gate(p).matrix(), k == 0 ? e0 : e1), 1e-15,
            fmt::format("projector formula E^({}) vs reference", k));
  }
}

// 2. Oracle equivalence for evolution and measurement.
void oracle_equivalence(Checks& c, Sampler& rng) {
  for (int n = 1; n <= 3; ++n) {
    double evo = 0.0, prob = 0.0, post = 0.0;
    for (int i = 0; i < 200; ++i) {
      const int terms = 1 + i % 4;
      const KrausSet k = (i % 5 == 4) ? rng.random_subchannel(n, terms, rng.uniform(0.2, 1.0))
                                      : rng.random_channel(n, terms);
      const DensityMatrix rho = (i % 7 == 0) ? rng.random_pure(n) : rng.random_density(n);
      const PauliVector p = density_to_pauli(rho);
      const PauliVector out = apply(ptm_from_kraus(k), p);
      const RVector ref = oracle::pauli_coefficients(oracle::evolve_dense(k.operators(), rho.matrix()));
      evo = std::max(evo, max_abs(out.coeffs() - ref));

      const CMatrix v = rng.random_unitary(static_cast<Eigen::Index>(hilbert_dim(n)));
      std::vector<int> all(static_cast<std::size_t>(n));
      for (int q = 0; q < n; ++q) all[static_cast<std::size_t>(q)] = q;
      std::vector<CMatrix> projectors = computational_projectors(n, all);
      if (i % 3 != 0) {
        for (auto& pr : projectors) pr = (v * pr * v.adjoint()).eval();
      }
      if (i % 4 == 1 && projectors.size() > 2) {
        // Coarse-grained outcome: merge the first two projectors.
        projectors[0] += projectors[1];
        projectors.erase(projectors.begin() + 1);
      }
      for (auto& pr : projectors) pr = (0.5 * (pr + pr.adjoint())).eval();
      const MeasurementResult m = von_neumann_measure(projectors, p);
      const auto dm = oracle::measure_dense(projectors, rho.matrix());
      for (std::size_t j = 0; j < projectors.size(); ++j) {
        prob = std::max(prob, std::abs(m.probabilities[j] - dm.probabilities[j]));
      }
      post = std::max(post, max_abs(m.post_state.coeffs() - oracle::pauli_coefficients(dm.post_state)));
    }
    c.below(evo, 1e-10, fmt::format("n={} evolution vs dense oracle", n));
    c.below(prob, 1e-10, fmt::format("n={} measurement probabilities vs dense oracle", n));
    c.below(post, 1e-10, fmt::format("n={} post-measurement state vs dense oracle", n));
  }
}

// 3. Orthogonality of unitary gate matrices.
void orthogonality(Checks& c, Sampler& rng) {
  for (int n = 1; n <= 2; ++n) {
    double worst = 0.0;
    int flagged = 0;
    for (int i = 0; i < 100; ++i) {
      const GateMatrix e = ptm_from_unitary(rng.random_unitary(static_cast<Eigen::Index>(hilbert_dim(n))));
      const RMatrix id = RMatrix::Identity(e.dim(), e.dim());
      worst = std::max({worst, max_abs(e.matrix() * e.matrix().transpose() - id),
                        max_abs(e.matrix().transpose() * e.matrix() - id)});
      flagged += is_orthogonal(e) ? 1 : 0;
    }
    c.below(worst, 1e-10, fmt::format("dimension {} E E^T = I", hilbert_dim(n)));
    c.expect(flagged == 100, fmt::format("dimension {}: is_orthogonal true for {}/100", hilbert_dim(n), flagged));
  }
}

// 4. Purity bounds 1 <= sum P^2 <= 2^n, before and after channels.
void purity_bounds(Checks& c, Sampler& rng) {
  for (int n = 1; n <= 3; ++n) {
    std::vector<GateMatrix> channels;
    for (int j = 0; j < 16; ++j) channels.push_back(ptm_from_kraus(rng.random_channel(n, 1 + j % 4)));
    int bad_states = 0, bad_images = 0;
    for (int i = 0; i < 1000; ++i) {
      const DensityMatrix rho = (i % 10 == 0) ? rng.random_pure(n) : rng.random_density(n);
      const PauliVector p = density_to_pauli(rho);
      bad_states += within_bounds(p) ? 0 : 1;
      bad_images += within_bounds(apply(channels[static_cast<std::size_t>(i) % channels.size()], p)) ? 0 : 1;
    }
    c.expect(bad_states == 0, fmt::format("n={}: {} of 1000 states violate the bounds", n, bad_states));
    c.expect(bad_images == 0, fmt::format("n={}: {} of 1000 channel outputs violate the bounds", n, bad_images));
  }
}

// 5. Classical-logic compilation.
void classical_logic(Checks& c, Sampler&) {
  double worst = 0.0;
  for (int code = 0; code < 256; ++code) {
    const ClassicalGate g = ClassicalGate::unary_from_code(code);
    const GateMatrix e = compile_single(g);
    for (std::size_t a = 0; a < 4; ++a) {
      const PauliVector out = apply(e, comp_state(PauliIndex(1, a)));
      const PauliVector want = comp_state(PauliIndex(1, static_cast<std::size_t>(g.at(a))));
      worst = std::max(worst, max_abs(out.coeffs() - want.coeffs()));
    }
  }
  c.below(worst, 1e-12, "all 256 single-argument gates map |a] to |g(a)]");

  struct Expected {
    std::string name;
    ClassicalGate g;
    RMatrix dyad_sum;
  };
  const std::vector<Expected> expected = {
      {"negation ~", ClassicalGate::unary({3, 2, 1, 0}),
       dyads(4, {{1, 0, 0}, {1, 1, 2}, {1, 2, 1}, {1, 3, 0}, {-1, 3, 3}})},
      {"I_0", ClassicalGate::unary({3, 0, 0, 0}), dyads(4, {{1, 0, 0}, {1, 3, 0}, {-1, 3, 1}, {-1, 3, 2}, {-1, 3, 3}})},
      {"I_1", ClassicalGate::unary({0, 3, 0, 0}), dyads(4, {{1, 0, 0}, {1, 3, 1}})},
      {"I_2", ClassicalGate::unary({0, 0, 3, 0}), dyads(4, {{1, 0, 0}, {1, 3, 2}})},
      {"I_3", ClassicalGate::unary({0, 0, 0, 3}), dyads(4, {{1, 0, 0}, {1, 3, 3}})},
      {"cyclic shift", ClassicalGate::unary({1, 2, 3, 0}),
       dyads(4, {{1, 0, 0}, {1, 1, 0}, {1, 2, 1}, {1, 3, 2}, {-1, 1, 1}, {-1, 1, 2}, {-1, 1, 3}})},
      {"constant 0", ClassicalGate::unary({0, 0, 0, 0}), dyads(4, {{1, 0, 0}})},
      {"constant 1", ClassicalGate::unary({1, 1, 1, 1}), dyads(4, {{1, 0, 0}, {1, 1, 0}})},
      {"constant 2", ClassicalGate::unary({2, 2, 2, 2}), dyads(4, {{1, 0, 0}, {1, 2, 0}})},
      {"constant 3", ClassicalGate::unary({3, 3, 3, 3}), dyads(4, {{1, 0, 0}, {1, 3, 0}})},
      {"possibility", ClassicalGate::unary({0, 3, 3, 3}), dyads(4, {{1, 0, 0}, {1, 3, 1}, {1, 3, 2}, {1, 3, 3}})},
      {"necessity", ClassicalGate::unary({0, 0, 0, 3}), dyads(4, {{1, 0, 0}, {1, 3, 3}})},
  };
  for (const auto& p : expected) {
    const double d = gap(compile_single(p.g).matrix(), p.dyad_sum);
    c.expect(d < 1e-15, fmt::format("compiled {} differs from the reference dyad sum (max entry gap {:.3g})", p.name, d));
  }

  int min_max_bad = 0, sw_bad = 0;
  const GateMatrix mm = min_max_gate();
  const GateMatrix sw = sheffer_webb_gate();
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      const std::array<int, 2> ab = {a, b};
      const PauliVector in = comp_state(PauliIndex(2, static_cast<std::size_t>(4 * a + b)));
      const auto target = [](int x, int y) { return comp_state(PauliIndex(2, static_cast<std::size_t>(4 * x + y))); };
      const int hi = eval_builtin("or", ab), lo = eval_builtin("and", ab);
      const int v = eval_builtin("v4", ab);
      const int nv = eval_builtin("neg", std::array<int, 1>{v});
      if (max_abs(apply(mm, in).coeffs() - target(hi, lo).coeffs()) >= 1e-12) ++min_max_bad;
      if (max_abs(apply(sw, in).coeffs() - target(v, nv).coeffs()) >= 1e-12) ++sw_bad;
    }
  }
  c.expect(min_max_bad == 0, fmt::format("min/max gate wrong on {} of 16 inputs", min_max_bad));
  c.expect(sw_bad == 0, fmt::format("Sheffer-Webb gate wrong on {} of 16 inputs", sw_bad));
  c.expect(is_unital(mm), "min/max gate is unital");
  c.expect(!is_unital(sw), "Sheffer-Webb gate is not unital");
}

// 6. Lattice and negation laws, cyclic-shift non-laws.
void logic_laws(Checks& c, Sampler& rng) {
  const LawReport r = check_laws();
  for (const auto& l : r.checks) {
    c.expect(l.holds == l.expected,
             fmt::format("{} expected to {} but {}", l.law, l.expected ? "hold" : "fail",
                         l.holds ? "holds" : "fails at " + l.witness));
  }
  const std::array<int, 1> zero = {0};
  const int once = eval_builtin("shift", zero);
  c.expect(eval_builtin("shift", std::array<int, 1>{once}) == 2, "shift(shift(0)) = 2");
  c.expect(eval_builtin("neg", std::array<int, 1>{eval_builtin("neg", std::array<int, 1>{2})}) == 2, "~~2 = 2");
  for (int code = 0; code < 256; ++code) {
    const ClassicalGate g = ClassicalGate::unary_from_code(code);
    if (dnf(g).to_gate(1) != g) c.expect(false, fmt::format("dnf mismatch for unary gate {}", code));
  }
  for (int i = 0; i < 50; ++i) {
    std::vector<int> t(16);
    for (auto& x : t) x = static_cast<int>(rng.uniform(0.0, 4.0)) % 4;
    const ClassicalGate g(2, t);
    if (dnf(g).to_gate(2) != g) c.expect(false, "dnf mismatch for a random binary gate");
  }
  c.expect(true, "dnf exhaustive");
}

// 7. Canonical decomposition and the affine group law.
void canonical_form(Checks& c, Sampler& rng) {
  for (int n = 1; n <= 2; ++n) {
    double recon = 0.0, orth = 0.0;
    int structural = 0;
    for (int i = 0; i < 100; ++i) {
      const GateMatrix e = ptm_from_kraus(rng.random_channel(n, 1 + i % 4));
      const CanonicalDecomposition d = svd_decompose(e);
      recon = std::max(recon, max_abs(e.matrix() - d.reconstruct().matrix()));
      for (const GateMatrix* u : {&d.u1, &d.u2}) {
        const RMatrix id = RMatrix::Identity(u->dim(), u->dim());
        orth = std::max(orth, max_abs(u->matrix() * u->matrix().transpose() - id));
        if (!is_unital(*u) || !is_trace_preserving(*u)) ++structural;
      }
      const RMatrix& dm = d.diag.matrix();
      if (max_abs(RMatrix(dm - RMatrix(dm.diagonal().asDiagonal()))) != 0.0) ++structural;
      for (Eigen::Index j = 0; j < d.singular_values.size(); ++j) {
        if (d.singular_values[j] < 0.0) ++structural;
        if (j > 0 && d.singular_values[j] > d.singular_values[j - 1]) ++structural;
      }
      const AffineForm t = to_affine(d.translation);
      if (max_abs(RMatrix(t.r - RMatrix::Identity(t.r.rows(), t.r.cols()))) != 0.0) ++structural;
    }
    c.below(recon, 1e-10, fmt::format("n={} reconstruction E = E(T) U1 D U2", n));
    c.below(orth, 1e-10, fmt::format("n={} U1, U2 orthogonal", n));
    c.expect(structural == 0, fmt::format("n={}: {} structural defects in the factors", n, structural));
  }
  double law = 0.0;
  for (int i = 0; i < 100; ++i) {
    const int n = 1 + i % 2;
    const auto m = static_cast<Eigen::Index>(liouville_dim(n) - 1);
    const AffineForm a{rng.ginibre(m, 1).real().col(0), rng.ginibre(m, m).real()};
    const AffineForm b{rng.ginibre(m, 1).real().col(0), rng.ginibre(m, m).real()};
    const GateMatrix product = compose(from_affine(a), from_affine(b));
    const GateMatrix law_form = from_affine(AffineForm{a.t + a.r * b.t, a.r * b.r});
    law = std::max(law, max_abs(product.matrix() - law_form.matrix()));
  }
  c.below(law, 1e-12, "affine group law on 100 random pairs");
}

// 8. Pseudo-gate identities.
void pseudogate_identities(Checks& c, Sampler& rng) {
  double product = 0.0, conj = 0.0, closed = 0.0;
  for (int i = 0; i < 100; ++i) {
    const int n = 1 + i % 2;
    const KrausSet k = rng.random_channel(n, 1 + i % 3);
    product = std::max(product, max_abs(ptm_via_pseudogates(k).matrix() - ptm_from_kraus(k).matrix()));
    const CMatrix a = rng.random_operator(n);
    conj = std::max(conj, max_abs(CMatrix(left_matrix(a).matrix().conjugate() - right_matrix(a).matrix())));
    const CMatrix a1 = rng.random_operator(1);
    closed = std::max(closed, max_abs(CMatrix(single_ququat_left_closed_form(a1).matrix() - left_matrix(a1).matrix())));
  }
  c.below(product, 1e-10, "sum_j L(A_j) R(A_j^dagger) vs Kraus PTM");
  c.below(conj, 1e-14, "conj(L(A)) = R(A^dagger)");
  c.below(closed, 1e-12, "single-ququat closed form vs trace formula");
  int bracket_bad = 0;
  for (std::size_t mu = 0; mu < 4; ++mu) {
    for (std::size_t nu = 0; nu < 4; ++nu) {
      for (std::size_t al = 0; al < 4; ++al) {
        for (std::size_t be = 0; be < 4; ++be) {
          const auto g1 = weyl_generator(1, mu, nu), g2 = weyl_generator(1, al, be);
          if (weyl_bracket(g1, g2) != weyl_bracket_formula(g1, g2)) ++bracket_bad;
        }
      }
    }
  }
  c.expect(bracket_bad == 0, fmt::format("Weyl bracket identity fails on {} of 256 pairs", bracket_bad));
}

bool decreasing(const std::vector<double>& e) {
  for (std::size_t i = 1; i < e.size(); ++i) {
    if (e[i] > e[i - 1] && e[i] > 1e-12) return false;
  }
  return true;
}

// 9. Commutator and Trotter limits.
void limit_constructions(Checks& c, Sampler&) {
  const std::vector<int> steps = {16, 64, 256, 1024};
  const CMatrix h01 = weyl_generator(1, 0, 1).matrix().cast<Complex>();
  const CMatrix h10 = weyl_generator(1, 1, 0).matrix().cast<Complex>();
  const CMatrix h23 = weyl_generator(1, 2, 3).matrix().cast<Complex>();

  const auto comm = commutator_limit_check(h01, h10, 0.5, steps);
  c.expect(decreasing(comm), fmt::format("commutator errors decrease ({:.3e} {:.3e} {:.3e} {:.3e})", comm[0],
                                         comm[1], comm[2], comm[3]));
  c.below(comm.back(), 0.05, "commutator limit at m = 1024");
  for (std::size_t i = 1; i < comm.size(); ++i) {
    const double ratio = comm[i - 1] / comm[i];
    c.expect(ratio > 2.0 / 3.0 && ratio < 6.0, fmt::format("commutator ratio {:.3f} not within factor 3 of 2", ratio));
  }
  const auto same = commutator_limit_check(h01, h01, 0.5, steps);
  c.below(*std::max_element(same.begin(), same.end()), 1e-12, "commutator limit with H1 = H2");

  const auto commuting = linear_combination_limit_check(h01, h23, 1.0, 1.0, steps);
  c.below(*std::max_element(commuting.begin(), commuting.end()), 1e-12, "Trotter with commuting generators");
  const auto single = linear_combination_limit_check(h01, h10, 1.0, 0.0, steps);
  c.below(*std::max_element(single.begin(), single.end()), 1e-12, "Trotter with b = 0");
  const auto trotter = linear_combination_limit_check(h01, h10, 1.0, Complex{0.0, 1.0}, steps);
  c.expect(decreasing(trotter), "Trotter errors decrease");
  c.below(trotter.back(), 1e-3, "Trotter limit at m = 1024");
}

// 10. Complete positivity classification and Kraus/Choi round trips.
void cp_classification(Checks& c, Sampler& rng) {
  for (const auto& [name, e] : {std::pair{std::string("inversion"), inversion()},
                                std::pair{std::string("reflection(2)"), reflection(2)}}) {
    c.expect(!is_completely_positive(e), name + " flagged non-CP");
    const RVector w = oracle::choi_eigenvalues(oracle::choi_from_gate_matrix(e.matrix()));
    c.expect(w.minCoeff() < -1e-9, name + " has a negative dense Choi eigenvalue");
  }
  int not_cp = 0;
  double round_trip = 0.0;
  for (int i = 0; i < 100; ++i) {
    const int n = 1 + i % 2;
    const KrausSet k = (i % 4 == 3) ? rng.random_subchannel(n, 1 + i % 4, 0.7) : rng.random_channel(n, 1 + i % 4);
    const GateMatrix e = ptm_from_kraus(k);
    not_cp += is_completely_positive(e) ? 0 : 1;
    const GateMatrix back = ptm_from_kraus(kraus_from_choi(choi_from_ptm(e)));
    round_trip = std::max(round_trip, max_abs(back.matrix() - e.matrix()));
  }
  c.expect(not_cp == 0, fmt::format("{} of 100 Kraus channels flagged non-CP", not_cp));
  c.below(round_trip, 1e-9, "Kraus -> Choi -> Kraus -> PTM round trip");
}

struct Suite {
  const char* title;
  double limit;
  void (*body)(Checks&, Sampler&);
};

constexpr std::array<Suite, kSuiteCount> kSuites = {{
    {"reference gate matrices", 1.0, reference_matrices},
    {"oracle equivalence", 30.0, oracle_equivalence},
    {"orthogonality of unitary gates", 5.0, orthogonality},
    {"purity bounds", 10.0, purity_bounds},
    {"classical logic compilation", 5.0, classical_logic},
    {"logic laws", 1.0, logic_laws},
    {"canonical decomposition", 20.0, canonical_form},
    {"pseudo-gate identities", 10.0, pseudogate_identities},
    {"limit constructions", 10.0, limit_constructions},
    {"complete positivity", 10.0, cp_classification},
}};

}  // namespace

CriterionResult run_suite(int id, std::uint64_t seed) {
  if (id < 1 || id > kSuiteCount) throw DimensionError("run_suite: id out of range");
  const Suite& s = kSuites[static_cast<std::size_t>(id - 1)];
  Checks checks;
  Sampler rng(seed + static_cast<std::uint64_t>(id));
  const auto start = std::chrono::steady_clock::now();
  try {
    s.body(checks, rng);
  } catch (const std::exception& e) {
    checks.expect(false, std::string("unexpected exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return CriterionResult{id, s.title, checks.ok(), secs, s.limit, checks.detail()};
}

std::vector<CriterionResult> run_all_suites(std::uint64_t seed) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kSuiteCount; ++id) out.push_back(run_suite(id, seed));
  return out;
}

std::string format_result(const CriterionResult& r) {
  std::string s = fmt::format("[{}] {:>2} {:<34} ({:.3f} s / {:g} s)", r.passed() ? "PASS" : "FAIL", r.id,
                              r.title, r.seconds, r.limit_seconds);
  if (!r.passed()) {
    std::string detail = r.detail;
    for (std::size_t pos = 0; (pos = detail.find('\n', pos)) != std::string::npos; pos += 5) detail.insert(pos + 1, "    ");
    s += "\n    " + detail;
    if (r.checks_passed) s += "\n    runtime limit exceeded";
  }
  return s;
}

}  // namespace ququat
