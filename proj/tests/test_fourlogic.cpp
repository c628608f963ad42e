#include "doctest.h"

#include "ququat/fourlogic.hpp"
#include "test_util.hpp"

using namespace ququat;
using test::diff;
using test::dyads;

namespace {

int ev(std::string_view name, std::initializer_list<int> args) {
  const std::vector<int> v(args);
  return eval_builtin(name, v);
}

PauliVector comp(int n, int mu) { return comp_state(PauliIndex(n, static_cast<std::size_t>(mu))); }

}  // namespace

TEST_CASE("builtin connectives") {
  CHECK(ev("neg", {0}) == 3);
  CHECK(ev("~", {1}) == 2);
  CHECK(ev("v4", {2, 3}) == 0);
  CHECK(ev("V4", {0, 0}) == 1);
  CHECK(ev("min", {1, 2}) == 1);
  CHECK(ev("max", {1, 2}) == 2);
  CHECK(ev("shift", {3}) == 0);
  CHECK(ev("I2", {2}) == 3);
  CHECK(ev("I2", {1}) == 0);
  CHECK(ev("dia", {1}) == 3);
  CHECK(ev("dia", {0}) == 0);
  CHECK(ev("box", {2}) == 0);
  CHECK(ev("box", {3}) == 3);
  CHECK_THROWS_AS(ev("nand", {1, 1}), ParseError);
  CHECK_THROWS_AS(ev("neg", {4}), DimensionError);
  CHECK_THROWS_AS(ev("and", {1}), DimensionError);
}

TEST_CASE("classical gate indexing") {
  const ClassicalGate g = ClassicalGate::unary_from_code(0b11100100);
  CHECK(g.table() == std::vector<int>{0, 1, 2, 3});
  std::vector<int> t(16);
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) t[static_cast<std::size_t>(4 * a + b)] = a;
  }
  const ClassicalGate first(2, t);
  CHECK(first(std::vector<int>{2, 1}) == 2);
  CHECK_THROWS(ClassicalGate(2, {0, 1, 2, 3}));
}

TEST_CASE("expression parsing") {
  const LogicExpr e = LogicExpr::parse("(or (neg x1) (and x2 2))");
  CHECK(e.max_var() == 2);
  CHECK(e.depth() == 2);
  CHECK(e.evaluate(std::vector<int>{0, 3}) == 3);
  CHECK(e.evaluate(std::vector<int>{3, 3}) == 2);
  CHECK(LogicExpr::parse(e.to_string()).to_gate(2) == e.to_gate(2));
  CHECK(LogicExpr::parse("(~ (max x1 x1))").to_gate(1) == ClassicalGate::unary({3, 2, 1, 0}));
  CHECK_THROWS_AS(LogicExpr::parse("(neg x1"), ParseError);
  CHECK_THROWS_AS(LogicExpr::parse("(frob x1)"), ParseError);
  CHECK_THROWS_AS(LogicExpr::parse("(neg x1 x2)"), ParseError);
  CHECK_THROWS_AS(LogicExpr::parse("x0"), ParseError);
  CHECK_THROWS_AS(LogicExpr::parse("(neg x1) x2"), ParseError);
}

TEST_CASE("disjunctive normal form") {
  CHECK(dnf(ClassicalGate::unary({0, 0, 0, 0})).to_gate(1) == ClassicalGate::unary({0, 0, 0, 0}));
  CHECK(dnf(ClassicalGate::unary({3, 2, 1, 0})).to_gate(1) == ClassicalGate::unary({3, 2, 1, 0}));
  unsigned state = 12345;
  for (int i = 0; i < 20; ++i) {
    std::vector<int> t(16);
    for (auto& x : t) {
      state = state * 1103515245u + 12345u;
      x = static_cast<int>((state >> 16) % 4);
    }
    const ClassicalGate g(2, t);
    CHECK(dnf(g).to_gate(2) == g);
  }
}

TEST_CASE("logic laws") {
  const LawReport r = check_laws();
  CHECK(r.all_as_expected());
  int non_laws = 0;
  for (const auto& l : r.checks) {
    CHECK_MESSAGE(l.holds == l.expected, l.law);
    if (!l.expected) {
      ++non_laws;
      CHECK_FALSE(l.witness.empty());
    }
  }
  CHECK(non_laws == 2);
  CHECK(ev("neg", {ev("neg", {2})}) == 2);
  CHECK(ev("shift", {ev("shift", {0})}) == 2);
}

TEST_CASE("compiled single-argument gates map every input") {
  for (int code = 0; code < 256; ++code) {
    const ClassicalGate g = ClassicalGate::unary_from_code(code);
    const GateMatrix e = compile_single(g);
    CHECK(is_trace_preserving(e));
    for (int a = 0; a < 4; ++a) {
      CHECK(diff(apply(e, comp(1, a)).coeffs(), comp(1, g.at(static_cast<std::size_t>(a))).coeffs()) < 1e-12);
    }
  }
}

TEST_CASE("compiled gates match the closed-form dyads") {
  // negation carries the extra -|3)(1| - |3)(2| terms; without them |1] and
  // |2] are not mapped to |2] and |1].
  CHECK(diff(compile_single(ClassicalGate::unary({3, 2, 1, 0})).matrix(),
             dyads(4, {{1, 0, 0}, {1, 1, 2}, {1, 2, 1}, {1, 3, 0}, {-1, 3, 1}, {-1, 3, 2}, {-1, 3, 3}})) == 0.0);
  const RMatrix without = dyads(4, {{1, 0, 0}, {1, 1, 2}, {1, 2, 1}, {1, 3, 0}, {-1, 3, 3}});
  CHECK(diff(RVector(without * comp(1, 1).coeffs()), comp(1, 2).coeffs()) == 1.0);

  CHECK(diff(compile_single(ClassicalGate::unary({3, 0, 0, 0})).matrix(),
             dyads(4, {{1, 0, 0}, {1, 3, 0}, {-1, 3, 1}, {-1, 3, 2}, {-1, 3, 3}})) == 0.0);
  for (int k = 1; k <= 3; ++k) {
    std::array<int, 4> t = {0, 0, 0, 0};
    t[static_cast<std::size_t>(k)] = 3;
    CHECK(diff(compile_single(ClassicalGate::unary(t)).matrix(), dyads(4, {{1, 0, 0}, {1, 3, k}})) == 0.0);
  }
  CHECK(diff(compile_single(ClassicalGate::unary({1, 2, 3, 0})).matrix(),
             dyads(4, {{1, 0, 0}, {1, 1, 0}, {1, 2, 1}, {1, 3, 2}, {-1, 1, 1}, {-1, 1, 2}, {-1, 1, 3}})) == 0.0);
  CHECK(diff(compile_single(ClassicalGate::unary({0, 0, 0, 0})).matrix(), dyads(4, {{1, 0, 0}})) == 0.0);
  for (int k = 1; k <= 3; ++k) {
    CHECK(diff(compile_single(ClassicalGate::unary({k, k, k, k})).matrix(), dyads(4, {{1, 0, 0}, {1, k, 0}})) == 0.0);
  }
  CHECK(diff(compile_single(ClassicalGate::unary({0, 3, 3, 3})).matrix(),
             dyads(4, {{1, 0, 0}, {1, 3, 1}, {1, 3, 2}, {1, 3, 3}})) == 0.0);
  CHECK(diff(compile_single(ClassicalGate::unary({0, 0, 0, 3})).matrix(), dyads(4, {{1, 0, 0}, {1, 3, 3}})) == 0.0);
}

TEST_CASE("two-argument gates") {
  const GateMatrix mm = min_max_gate();
  const GateMatrix sw = sheffer_webb_gate();
  CHECK(diff(apply(mm, comp(2, 4 * 1 + 2)).coeffs(), comp(2, 4 * 2 + 1).coeffs()) < 1e-15);
  CHECK(diff(apply(mm, comp(2, 15)).coeffs(), comp(2, 15).coeffs()) < 1e-15);
  CHECK(diff(apply(sw, comp(2, 0)).coeffs(), comp(2, 4 * 1 + 2).coeffs()) < 1e-15);
  CHECK(diff(apply(sw, comp(2, 4 * 2 + 3)).coeffs(), comp(2, 3).coeffs()) < 1e-15);
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      const int hi = ev("or", {a, b}), lo = ev("and", {a, b}), v = ev("v4", {a, b});
      CHECK(diff(apply(mm, comp(2, 4 * a + b)).coeffs(), comp(2, 4 * hi + lo).coeffs()) < 1e-12);
      CHECK(diff(apply(sw, comp(2, 4 * a + b)).coeffs(), comp(2, 4 * v + ev("neg", {v})).coeffs()) < 1e-12);
    }
  }
  CHECK(is_unital(mm));
  CHECK_FALSE(is_unital(sw));
}

TEST_CASE("compile_map generalises compile_single") {
  const ClassicalGate g = ClassicalGate::unary({2, 0, 3, 1});
  const std::vector<ClassicalGate> one = {g};
  CHECK(diff(compile_map(one).matrix(), compile_single(g).matrix()) == 0.0);
  const std::vector<ClassicalGate> swap = {LogicExpr::parse("x2").to_gate(2), LogicExpr::parse("x1").to_gate(2)};
  const GateMatrix e = compile_map(swap);
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) CHECK(diff(apply(e, comp(2, 4 * a + b)).coeffs(), comp(2, 4 * b + a).coeffs()) == 0.0);
  }
}

TEST_CASE("synthesis") {
  const std::array<Connective, 2> shift_or = {Connective::kShift, Connective::kOr};
  const ClassicalGate orr = LogicExpr::parse("(or x1 x2)").to_gate(2);
  const LogicExpr hit = synthesize(orr, shift_or);
  CHECK(hit.depth() == 1);
  CHECK(hit.to_gate(2) == orr);

  const std::array<Connective, 1> v4 = {Connective::kV4};
  const ClassicalGate shift = ClassicalGate::unary({1, 2, 3, 0});
  const LogicExpr s = synthesize(shift, v4);
  CHECK(s.depth() == 1);
  CHECK(s.to_gate(1) == shift);

  const ClassicalGate neg = ClassicalGate::unary({3, 2, 1, 0});
  SynthesisOptions shallow;
  shallow.max_depth = 6;
  CHECK_THROWS_AS(synthesize(neg, shift_or, shallow), SynthesisNotFound);
  const LogicExpr deep = synthesize(neg, shift_or);
  CHECK(deep.to_gate(1) == neg);
  CHECK(deep.depth() <= 8);
}
