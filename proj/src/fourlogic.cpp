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

#include "ququat/fourlogic.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>
#include <unordered_map>

namespace ququat {

namespace {

struct ConnectiveInfo {
  Connective c;
  std::string_view name;
  int arity;
};

constexpr std::array<ConnectiveInfo, 11> kConnectives = {{
    {Connective::kNeg, "neg", 1},
    {Connective::kShift, "shift", 1},
    {Connective::kI0, "I0", 1},
    {Connective::kI1, "I1", 1},
    {Connective::kI2, "I2", 1},
    {Connective::kI3, "I3", 1},
    {Connective::kDia, "dia", 1},
    {Connective::kBox, "box", 1},
    {Connective::kAnd, "and", 2},
    {Connective::kOr, "or", 2},
    {Connective::kV4, "v4", 2},
}};

const ConnectiveInfo& info(Connective c) {
  return kConnectives[static_cast<std::size_t>(c)];
}

void require_value(int v, const char* what) {
  if (v < 0 || v > 3) {
    throw DimensionError(std::string(what) + ": value " + std::to_string(v) + " not in 0..3");
  }
}

std::size_t pow4(int k) { return std::size_t{1} << (2 * k); }

// Digits of a table index, x1 first.
std::vector<int> index_digits(std::size_t index, int k) {
  std::vector<int> d(static_cast<std::size_t>(k));
  for (int i = k - 1; i >= 0; --i) {
    d[static_cast<std::size_t>(i)] = static_cast<int>(index & 3U);
    index >>= 2;
  }
  return d;
}

}  // namespace

int arity(Connective c) { return info(c).arity; }

std::string_view name(Connective c) { return info(c).name; }

std::optional<Connective> connective_from_name(std::string_view s) {
  for (const auto& ci : kConnectives) {
    if (ci.name == s) return ci.c;
  }
  if (s == "~") return Connective::kNeg;
  if (s == "min") return Connective::kAnd;
  if (s == "max") return Connective::kOr;
  if (s == "V4") return Connective::kV4;
  return std::nullopt;
}

int evaluate(Connective c, std::span<const int> args) {
  if (static_cast<int>(args.size()) != arity(c)) {
    throw DimensionError(std::string(name(c)) + ": expected " + std::to_string(arity(c)) +
                         " arguments, got " + std::to_string(args.size()));
  }
  for (int a : args) require_value(a, name(c).data());
  const int x = args[0];
  switch (c) {
    case Connective::kNeg: return 3 - x;
    case Connective::kShift: return (x + 1) % 4;
    case Connective::kI0: return x == 0 ? 3 : 0;
    case Connective::kI1: return x == 1 ? 3 : 0;
    case Connective::kI2: return x == 2 ? 3 : 0;
    case Connective::kI3: return x == 3 ? 3 : 0;
    case Connective::kDia: return x > 0 ? 3 : 0;
    case Connective::kBox: return x == 3 ? 3 : 0;
    case Connective::kAnd: return std::min(x, args[1]);
    case Connective::kOr: return std::max(x, args[1]);
    case Connective::kV4: return (std::max(x, args[1]) + 1) % 4;
  }
  return 0;
}

int eval_builtin(std::string_view nm, std::span<const int> args) {
  const auto c = connective_from_name(nm);
  if (!c) throw ParseError("unknown connective '" + std::string(nm) + "'");
  return evaluate(*c, args);
}

ClassicalGate::ClassicalGate(int arity, std::vector<int> table)
    : arity_(arity), table_(std::move(table)) {
  if (arity < 1 || arity > kMaxQuquats) {
    throw DimensionError("ClassicalGate: arity " + std::to_string(arity) + " out of range");
  }
  if (table_.size() != pow4(arity)) {
    throw DimensionError("ClassicalGate: table needs " + std::to_string(pow4(arity)) +
                         " entries, got " + std::to_string(table_.size()));
  }
  for (int v : table_) require_value(v, "ClassicalGate");
}

ClassicalGate ClassicalGate::unary(const std::array<int, 4>& table) {
  return ClassicalGate(1, std::vector<int>(table.begin(), table.end()));
}

ClassicalGate ClassicalGate::unary_from_code(int code) {
  if (code < 0 || code > 255) throw DimensionError("unary_from_code: code not in 0..255");
  std::array<int, 4> t{};
  for (int a = 0; a < 4; ++a) t[static_cast<std::size_t>(a)] = (code >> (2 * a)) & 3;
  return unary(t);
}

int ClassicalGate::operator()(std::span<const int> args) const {
  if (static_cast<int>(args.size()) != arity_) {
    throw DimensionError("ClassicalGate: wrong argument count");
  }
  std::size_t index = 0;
  for (int a : args) {
    require_value(a, "ClassicalGate");
    index = 4 * index + static_cast<std::size_t>(a);
  }
  return table_[index];
}

struct LogicExpr::Node {
  enum class Kind { kVar, kConst, kApply } kind;
  int value = 0;  // variable index or constant
  Connective op = Connective::kNeg;
  std::vector<LogicExpr> args;
};

LogicExpr LogicExpr::var(int i) {
  if (i < 1) throw DimensionError("LogicExpr: variable index must be >= 1");
  return LogicExpr(std::make_shared<const Node>(Node{Node::Kind::kVar, i, Connective::kNeg, {}}));
}

LogicExpr LogicExpr::constant(int v) {
  require_value(v, "LogicExpr");
  return LogicExpr(std::make_shared<const Node>(Node{Node::Kind::kConst, v, Connective::kNeg, {}}));
}

LogicExpr LogicExpr::apply(Connective c, std::vector<LogicExpr> args) {
  if (static_cast<int>(args.size()) != arity(c)) {
    throw DimensionError(std::string(name(c)) + ": expected " + std::to_string(arity(c)) +
                         " arguments, got " + std::to_string(args.size()));
  }
  return LogicExpr(std::make_shared<const Node>(Node{Node::Kind::kApply, 0, c, std::move(args)}));
}

int LogicExpr::evaluate(std::span<const int> assignment) const {
  switch (node_->kind) {
    case Node::Kind::kConst: return node_->value;
    case Node::Kind::kVar: {
      const auto i = static_cast<std::size_t>(node_->value - 1);
      if (i >= assignment.size()) {
        throw DimensionError("LogicExpr: x" + std::to_string(node_->value) + " is unassigned");
      }
      require_value(assignment[i], "LogicExpr");
      return assignment[i];
    }
    case Node::Kind::kApply: {
      std::array<int, 2> vals{};
      for (std::size_t j = 0; j < node_->args.size(); ++j) {
        vals[j] = node_->args[j].evaluate(assignment);
      }
      return ququat::evaluate(node_->op, std::span<const int>(vals.data(), node_->args.size()));
    }
  }
  return 0;
}

std::string LogicExpr::to_string() const {
  switch (node_->kind) {
    case Node::Kind::kConst: return std::to_string(node_->value);
    case Node::Kind::kVar: return "x" + std::to_string(node_->value);
    case Node::Kind::kApply: {
      std::string s = "(" + std::string(name(node_->op));
      for (const auto& a : node_->args) s += " " + a.to_string();
      return s + ")";
    }
  }
  return {};
}

int LogicExpr::max_var() const {
  if (node_->kind == Node::Kind::kVar) return node_->value;
  int m = 0;
  for (const auto& a : node_->args) m = std::max(m, a.max_var());
  return m;
}

int LogicExpr::depth() const {
  int d = 0;
  for (const auto& a : node_->args) d = std::max(d, a.depth() + 1);
  return d;
}

ClassicalGate LogicExpr::to_gate(int k) const {
  if (max_var() > k) {
    throw DimensionError("LogicExpr: expression uses x" + std::to_string(max_var()) +
                         " but arity is " + std::to_string(k));
  }
  std::vector<int> table(pow4(k));
  for (std::size_t i = 0; i < table.size(); ++i) table[i] = evaluate(index_digits(i, k));
  return ClassicalGate(k, std::move(table));
}

namespace {

class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : text_(text) {}

  LogicExpr parse_all() {
    LogicExpr e = parse_expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("logic expression, column " + std::to_string(pos_ + 1) + ": " + msg);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string_view atom() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && text_[pos_] != '(' && text_[pos_] != ')' &&
           !std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    if (start == pos_) fail(pos_ == text_.size() ? "unexpected end of input" : "expected an atom");
    return text_.substr(start, pos_ - start);
  }

  LogicExpr parse_expr() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    if (text_[pos_] == ')') fail("unexpected ')'");
    if (text_[pos_] != '(') return leaf(atom());
    ++pos_;
    const std::size_t head_pos = pos_;
    const std::string_view head = atom();
    const auto c = connective_from_name(head);
    if (!c) {
      pos_ = head_pos;
      fail("unknown connective '" + std::string(head) + "'");
    }
    std::vector<LogicExpr> args;
    for (;;) {
      skip_space();
      if (pos_ >= text_.size()) fail("missing ')'");
      if (text_[pos_] == ')') break;
      args.push_back(parse_expr());
    }
    if (static_cast<int>(args.size()) != arity(*c)) {
      fail(std::string(name(*c)) + " takes " + std::to_string(arity(*c)) + " argument(s), got " +
           std::to_string(args.size()));
    }
    ++pos_;
    return LogicExpr::apply(*c, std::move(args));
  }

  LogicExpr leaf(std::string_view a) {
    if (a.size() == 1 && a[0] >= '0' && a[0] <= '3') return LogicExpr::constant(a[0] - '0');
    if (a.size() >= 2 && a[0] == 'x' &&
        std::all_of(a.begin() + 1, a.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); })) {
      const int i = std::stoi(std::string(a.substr(1)));
      if (i >= 1 && i <= kMaxQuquats) return LogicExpr::var(i);
    }
    pos_ -= a.size();
    fail("bad atom '" + std::string(a) + "' (expected x1..x" + std::to_string(kMaxQuquats) +
         " or a constant 0..3)");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

LogicExpr LogicExpr::parse(std::string_view text) { return ExprParser(text).parse_all(); }

LogicExpr dnf(const ClassicalGate& g) {
  const int k = g.arity();
  static constexpr std::array<Connective, 4> kIndicators = {Connective::kI0, Connective::kI1,
                                                            Connective::kI2, Connective::kI3};
  std::optional<LogicExpr> acc;
  for (std::size_t i = 0; i < g.table().size(); ++i) {
    if (g.at(i) == 0) continue;
    const auto digits = index_digits(i, k);
    LogicExpr term = LogicExpr::apply(kIndicators[static_cast<std::size_t>(digits[0])], {LogicExpr::var(1)});
    for (int v = 1; v < k; ++v) {
      term = LogicExpr::apply(
          Connective::kAnd,
          {term, LogicExpr::apply(kIndicators[static_cast<std::size_t>(digits[static_cast<std::size_t>(v)])],
                                  {LogicExpr::var(v + 1)})});
    }
    term = LogicExpr::apply(Connective::kAnd, {term, LogicExpr::constant(g.at(i))});
    acc = acc ? LogicExpr::apply(Connective::kOr, {*acc, term}) : term;
  }
  return acc ? *acc : LogicExpr::constant(0);
}

bool LawReport::all_as_expected() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const LawCheck& c) { return c.holds == c.expected; });
}

LawReport check_laws() {
  const auto neg = [](int x) { return 3 - x; };
  const auto shift = [](int x) { return (x + 1) % 4; };
  const auto mn = [](int a, int b) { return std::min(a, b); };
  const auto mx = [](int a, int b) { return std::max(a, b); };
  const auto dia = [](int x) { return x > 0 ? 3 : 0; };
  const auto box = [](int x) { return x == 3 ? 3 : 0; };

  LawReport report;
  const auto check = [&report](std::string law, bool expected, int vars,
                               const std::function<bool(int, int, int)>& identity) {
    LawCheck c{std::move(law), expected, true, {}};
    const int n1 = 4, n2 = vars >= 2 ? 4 : 1, n3 = vars >= 3 ? 4 : 1;
    for (int a = 0; a < n1 && c.holds; ++a) {
      for (int b = 0; b < n2 && c.holds; ++b) {
        for (int d = 0; d < n3 && c.holds; ++d) {
          if (!identity(a, b, d)) {
            c.holds = false;
            std::ostringstream w;
            w << "x1=" << a;
            if (vars >= 2) w << " x2=" << b;
            if (vars >= 3) w << " x3=" << d;
            c.witness = w.str();
          }
        }
      }
    }
    report.checks.push_back(std::move(c));
  };

  check("x1 ^ x2 = x2 ^ x1", true, 2, [&](int a, int b, int) { return mn(a, b) == mn(b, a); });
  check("x1 v x2 = x2 v x1", true, 2, [&](int a, int b, int) { return mx(a, b) == mx(b, a); });
  check("(x1 ^ x2) ^ x3 = x1 ^ (x2 ^ x3)", true, 3,
        [&](int a, int b, int c) { return mn(mn(a, b), c) == mn(a, mn(b, c)); });
  check("(x1 v x2) v x3 = x1 v (x2 v x3)", true, 3,
        [&](int a, int b, int c) { return mx(mx(a, b), c) == mx(a, mx(b, c)); });
  check("x1 ^ (x2 v x3) = (x1 ^ x2) v (x1 ^ x3)", true, 3,
        [&](int a, int b, int c) { return mn(a, mx(b, c)) == mx(mn(a, b), mn(a, c)); });
  check("x1 v (x2 ^ x3) = (x1 v x2) ^ (x1 v x3)", true, 3,
        [&](int a, int b, int c) { return mx(a, mn(b, c)) == mn(mx(a, b), mx(a, c)); });
  check("~~x = x", true, 1, [&](int a, int, int) { return neg(neg(a)) == a; });
  check("~(x1 ^ x2) = ~x1 v ~x2", true, 2,
        [&](int a, int b, int) { return neg(mn(a, b)) == mx(neg(a), neg(b)); });
  check("~(x1 v x2) = ~x1 ^ ~x2", true, 2,
        [&](int a, int b, int) { return neg(mx(a, b)) == mn(neg(a), neg(b)); });
  check("[]x = ~<>~x", true, 1, [&](int a, int, int) { return box(a) == neg(dia(neg(a))); });
  check("shift(shift x) = x", false, 1, [&](int a, int, int) { return shift(shift(a)) == a; });
  check("shift(x1 ^ x2) = shift x1 v shift x2", false, 2,
        [&](int a, int b, int) { return shift(mn(a, b)) == mx(shift(a), shift(b)); });
  return report;
}

namespace {

// Shared closed form over a joint index space of size dim: f maps each basis
// index to its image index.
GateMatrix compile_indices(const std::vector<std::size_t>& f) {
  const auto dim = static_cast<Eigen::Index>(f.size());
  RMatrix e = RMatrix::Zero(dim, dim);
  e(0, 0) = 1.0;
  for (Eigen::Index k = 1; k < dim; ++k) {
    const auto g = static_cast<Eigen::Index>(f[static_cast<std::size_t>(k)]);
    if (g != 0) e(g, k) += 1.0;
  }
  const auto g0 = static_cast<Eigen::Index>(f[0]);
  if (g0 != 0) {
    e(g0, 0) += 1.0;
    for (Eigen::Index k = 1; k < dim; ++k) e(g0, k) -= 1.0;
  }
  return GateMatrix(std::move(e));
}

}  // namespace

GateMatrix compile_single(const ClassicalGate& g) {
  if (g.arity() != 1) throw DimensionError("compile_single: gate must have arity 1");
  std::vector<std::size_t> f(4);
  for (std::size_t a = 0; a < 4; ++a) f[a] = static_cast<std::size_t>(g.at(a));
  return compile_indices(f);
}

GateMatrix compile_map(std::span<const ClassicalGate> outputs) {
  const int k = static_cast<int>(outputs.size());
  if (k < 1 || k > kMaxQuquats) throw DimensionError("compile_map: bad output count");
  for (const auto& g : outputs) {
    if (g.arity() != k) {
      throw DimensionError("compile_map: each output must take exactly " + std::to_string(k) +
                           " arguments");
    }
  }
  std::vector<std::size_t> f(pow4(k));
  for (std::size_t mu = 0; mu < f.size(); ++mu) {
    std::size_t image = 0;
    for (const auto& g : outputs) image = 4 * image + static_cast<std::size_t>(g.at(mu));
    f[mu] = image;
  }
  return compile_indices(f);
}

GateMatrix min_max_gate() {
  // Dyad labels (a b) address index a + 4b here.
  const auto idx = [](int a, int b) { return static_cast<Eigen::Index>(a + 4 * b); };
  RMatrix e = RMatrix::Identity(16, 16);
  for (int k = 1; k <= 3; ++k) {
    e(idx(0, k), idx(k, 0)) += 1.0;
    e(idx(k, 0), idx(k, 0)) -= 1.0;
  }
  for (int k = 2; k <= 3; ++k) {
    e(idx(1, k), idx(k, 1)) += 1.0;
    e(idx(k, 1), idx(k, 1)) -= 1.0;
  }
  e(idx(2, 3), idx(3, 2)) += 1.0;
  e(idx(3, 2), idx(3, 2)) -= 1.0;
  return GateMatrix(std::move(e));
}

GateMatrix sheffer_webb_gate() {
  const auto idx = [](int a, int b) { return static_cast<Eigen::Index>(4 * a + b); };
  RMatrix e = RMatrix::Zero(16, 16);
  const auto add = [&](int a, int b, int c, int d, double v) { e(idx(a, b), idx(c, d)) += v; };
  add(0, 0, 0, 0, 1.0);
  add(1, 2, 0, 0, 1.0);
  for (int mu = 0; mu < 4; ++mu) {
    for (int nu = 0; nu < 4; ++nu) {
      if (mu != 0 || nu != 0) add(1, 2, mu, nu, -1.0);
    }
  }
  add(2, 1, 0, 1, 1.0);
  add(2, 1, 1, 0, 1.0);
  add(2, 1, 1, 1, 1.0);
  for (auto [c, d] : {std::pair{0, 2}, {2, 0}, {1, 2}, {2, 1}, {2, 2}}) add(3, 0, c, d, 1.0);
  for (auto [c, d] : {std::pair{0, 3}, {1, 3}, {2, 3}}) add(0, 3, c, d, 1.0);
  for (int mu = 0; mu < 4; ++mu) add(0, 3, 3, mu, 1.0);
  return GateMatrix(std::move(e));
}

LogicExpr synthesize(const ClassicalGate& g, std::span<const Connective> basis,
                     const SynthesisOptions& options) {
  const int k = g.arity();
  if (k < 1 || k > 2) throw DimensionError("synthesize: only arity 1 or 2 is supported");
  if (options.max_depth < 0 || options.max_depth > 8) {
    throw DimensionError("synthesize: max_depth must lie in 0..8");
  }
  if (basis.empty()) throw DimensionError("synthesize: empty basis");
  const std::size_t points = pow4(k);

  // Truth tables packed two bits per input point.
  using Table = std::uint32_t;
  const auto entry = [](Table t, std::size_t i) { return static_cast<int>((t >> (2 * i)) & 3U); };
  Table goal = 0;
  for (std::size_t i = 0; i < points; ++i) goal |= static_cast<Table>(g.at(i)) << (2 * i);

  std::unordered_map<Table, LogicExpr> known;
  std::vector<std::vector<Table>> levels(1);
  for (int v = 1; v <= k; ++v) {
    Table t = 0;
    for (std::size_t i = 0; i < points; ++i) {
      t |= static_cast<Table>(index_digits(i, k)[static_cast<std::size_t>(v - 1)]) << (2 * i);
    }
    if (known.emplace(t, LogicExpr::var(v)).second) levels[0].push_back(t);
  }
  if (auto it = known.find(goal); it != known.end()) return it->second;

  std::vector<Table> older;  // every table of depth < d - 1
  for (int d = 1; d <= options.max_depth; ++d) {
    const std::vector<Table>& prev = levels.back();
    std::vector<Table> fresh;
    bool capped = false;
    const auto consider = [&](Table t, const std::function<LogicExpr()>& make) {
      if (known.size() >= options.node_cap) {
        capped = true;
        return false;
      }
      if (known.emplace(t, make()).second) {
        fresh.push_back(t);
        if (t == goal) return true;
      }
      return false;
    };
    for (Connective c : basis) {
      if (arity(c) == 1) {
        for (Table a : prev) {
          Table t = 0;
          for (std::size_t i = 0; i < points; ++i) {
            const int x = entry(a, i);
            t |= static_cast<Table>(evaluate(c, std::span<const int>(&x, 1))) << (2 * i);
          }
          if (consider(t, [&] { return LogicExpr::apply(c, {known.at(a)}); })) return known.at(goal);
          if (capped) break;
        }
      } else {
        // Pairs with at least one operand at depth d - 1.
        std::vector<Table> all = older;
        all.insert(all.end(), prev.begin(), prev.end());
        const auto combine = [&](Table a, Table b) {
          Table t = 0;
          for (std::size_t i = 0; i < points; ++i) {
            const std::array<int, 2> xy = {entry(a, i), entry(b, i)};
            t |= static_cast<Table>(evaluate(c, xy)) << (2 * i);
          }
          return consider(t, [&] { return LogicExpr::apply(c, {known.at(a), known.at(b)}); });
        };
        for (Table a : prev) {
          for (Table b : all) {
            if (combine(a, b)) return known.at(goal);
            if (capped) break;
          }
          if (capped) break;
        }
        for (Table a : older) {
          if (capped) break;
          for (Table b : prev) {
            if (combine(a, b)) return known.at(goal);
            if (capped) break;
          }
        }
      }
      if (capped) break;
    }
    if (capped) {
      throw SynthesisNotFound("synthesize: node cap of " + std::to_string(options.node_cap) +
                              " distinct tables reached at depth " + std::to_string(d));
    }
    older.insert(older.end(), prev.begin(), prev.end());
    levels.push_back(std::move(fresh));
  }
  throw SynthesisNotFound("synthesize: no expression within depth " +
                          std::to_string(options.max_depth));
}

}  // namespace ququat
