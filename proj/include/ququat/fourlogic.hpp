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

// Classical four-valued logic and its compilation to gate matrices.
//
// Values are 0..3. Connectives:
//
//   neg   ~x    = 3 - x              and  x1 ^ x2 = min
//   shift x'    = x + 1 mod 4        or   x1 v x2 = max
//   I0..I3      = 3 if x == i else 0 v4   V4    = max + 1 mod 4
//   dia   <>x   = 3 if x > 0 else 0
//   box   []x   = 3 if x == 3 else 0
//
// A classical gate g is realised on generalized computational states:
// E |a] = |g(a)].

#ifndef QUQUAT_FOURLOGIC_HPP_
#define QUQUAT_FOURLOGIC_HPP_

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ququat/superop.hpp"

namespace ququat {

enum class Connective { kNeg, kShift, kI0, kI1, kI2, kI3, kDia, kBox, kAnd, kOr, kV4 };

int arity(Connective c);
std::string_view name(Connective c);

/// Accepts the canonical names above plus the aliases ~, min, max.
std::optional<Connective> connective_from_name(std::string_view s);

/// Throws DimensionError on a bad argument count or value outside 0..3.
int evaluate(Connective c, std::span<const int> args);

/// Throws ParseError for an unknown name.
int eval_builtin(std::string_view name, std::span<const int> args);

/// Truth table over {0,1,2,3}^k. Entry index is x1 * 4^(k-1) + ... + xk.
class ClassicalGate {
 public:
  ClassicalGate(int arity, std::vector<int> table);

  static ClassicalGate unary(const std::array<int, 4>& table);
  /// The unary gate number `code` in 0..255, digits base 4 with g(0) least
  /// significant.
  static ClassicalGate unary_from_code(int code);

  int arity() const { return arity_; }
  const std::vector<int>& table() const { return table_; }
  int operator()(std::span<const int> args) const;
  int at(std::size_t index) const { return table_[index]; }

  bool operator==(const ClassicalGate&) const = default;

 private:
  int arity_;
  std::vector<int> table_;
};

/// Immutable expression tree; copies share structure.
class LogicExpr {
 public:
  /// Variable x_i, 1-based.
  static LogicExpr var(int i);
  static LogicExpr constant(int v);
  static LogicExpr apply(Connective c, std::vector<LogicExpr> args);

  /// Prefix syntax: atom | "(" connective expr+ ")". Atoms are x1, x2, ...
  /// and the constants 0..3. Throws ParseError with the offending position.
  static LogicExpr parse(std::string_view text);

  /// `assignment[i]` is the value of x_{i+1}.
  int evaluate(std::span<const int> assignment) const;
  std::string to_string() const;

  /// Largest variable index used (0 when none).
  int max_var() const;
  int depth() const;

  /// Tabulates over `arity` variables; arity must cover max_var().
  ClassicalGate to_gate(int arity) const;

 private:
  struct Node;
  explicit LogicExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// OR over every input tuple k with g(k) != 0 of I_k1(x1) ^ ... ^ I_kn(xn) ^ g(k).
/// Constant 0 when g is identically zero.
LogicExpr dnf(const ClassicalGate& g);

struct LawCheck {
  std::string law;
  bool expected;  // whether the identity is supposed to hold
  bool holds;
  std::string witness;  // first counterexample, empty when none
};

struct LawReport {
  std::vector<LawCheck> checks;
  bool all_as_expected() const;
};

/// Exhaustive check of the lattice laws, negation laws and the cyclic-shift
/// non-laws.
LawReport check_laws();

/// E = |0)(0| + sum_{k>=1, g(k)!=0} |g(k))(k|
///       + [g(0)!=0] (|g(0))(0| - sum_{k>=1} |g(0))(k|).
GateMatrix compile_single(const ClassicalGate& g);

/// Joint-index generalisation of compile_single for a map
/// {0..3}^k -> {0..3}^k given as one table per output ququat. Maps
/// comp_state(mu) to comp_state(f(mu)) for every joint index mu.
GateMatrix compile_map(std::span<const ClassicalGate> outputs);

/// |x1, x2] -> |x1 v x2, x1 ^ x2].
GateMatrix min_max_gate();

/// |x1, x2] -> |V4(x1,x2), ~V4(x1,x2)]. Not unital.
GateMatrix sheffer_webb_gate();

class SynthesisNotFound : public Error {
 public:
  using Error::Error;
};

struct SynthesisOptions {
  int max_depth = 8;
  std::size_t node_cap = 20000;  // distinct truth tables kept
};

/// Breadth-first search over expressions built from `basis` and the
/// variables of g, deduplicated by truth table. Arity of g must be 1 or 2
/// and max_depth at most 8. Throws SynthesisNotFound when the search
/// exhausts depth or the node cap; that is not a proof of impossibility.
LogicExpr synthesize(const ClassicalGate& g, std::span<const Connective> basis,
                     const SynthesisOptions& options = {});

}  // namespace ququat

#endif  // QUQUAT_FOURLOGIC_HPP_
