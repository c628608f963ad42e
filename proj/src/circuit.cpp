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

#include "ququat/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>

#include <Eigen/Eigenvalues>
#include <fmt/format.h>
#include <fmt/ranges.h>

#include "json.hpp"
#include "ququat/canon.hpp"
#include "ququat/fourlogic.hpp"
#include "ququat/gatelib.hpp"
#include "ququat/oracle.hpp"
#include "ququat/pauli.hpp"

namespace ququat {

using nlohmann::json;

namespace {

constexpr double kDisplayZero = 1e-14;

[[noreturn]] void fail(const std::string& path, const std::string& msg) {
  throw ParseError(path + ": " + msg);
}

Complex parse_complex(const json& j, const std::string& path) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
    return {j[0].get<double>(), j[1].get<double>()};
  }
  fail(path, "expected a number or a [re, im] pair");
}

CMatrix parse_matrix(const json& j, const std::string& path) {
  if (!j.is_array() || j.empty()) fail(path, "expected a non-empty array of rows");
  const auto rows = static_cast<Eigen::Index>(j.size());
  if (!j[0].is_array() || j[0].empty()) fail(path + "[0]", "expected a non-empty row");
  const auto cols = static_cast<Eigen::Index>(j[0].size());
  CMatrix m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const json& row = j[static_cast<std::size_t>(r)];
    const std::string rp = path + "[" + std::to_string(r) + "]";
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols) {
      fail(rp, "rows must all have " + std::to_string(cols) + " entries");
    }
    for (Eigen::Index c = 0; c < cols; ++c) {
      m(r, c) = parse_complex(row[static_cast<std::size_t>(c)], rp + "[" + std::to_string(c) + "]");
    }
  }
  return m;
}

RMatrix parse_real_matrix(const json& j, const std::string& path) {
  const CMatrix m = parse_matrix(j, path);
  if (max_abs(m.imag()) != 0.0) fail(path, "gate matrix entries must be real");
  return m.real();
}

int parse_int(const json& j, const std::string& path) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  return j.get<int>();
}

std::vector<double> parse_params(const json& step, const std::string& path) {
  std::vector<double> out;
  if (!step.contains("params")) return out;
  const json& p = step["params"];
  if (!p.is_array()) fail(path + ".params", "expected an array of numbers");
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!p[i].is_number()) fail(path + ".params[" + std::to_string(i) + "]", "expected a number");
    out.push_back(p[i].get<double>());
  }
  return out;
}

CMatrix unitary_from(std::initializer_list<Complex> entries) {
  CMatrix u(2, 2);
  auto it = entries.begin();
  u << it[0], it[1], it[2], it[3];
  return u;
}

void require_params(std::string_view name, const std::vector<double>& params, std::size_t count) {
  if (params.size() != count) {
    throw ParseError("gate '" + std::string(name) + "' takes " + std::to_string(count) +
                     " parameter(s), got " + std::to_string(params.size()));
  }
}

void require_range(std::string_view name, double v, double lo, double hi) {
  if (!(v >= lo && v <= hi)) {
    throw ParseError(fmt::format("gate '{}': parameter {} outside [{}, {}]", name, v, lo, hi));
  }
}

NamedGate from_unitary(const CMatrix& u) { return NamedGate{ptm_from_unitary(u), {u}, 1}; }

NamedGate from_kraus(std::vector<CMatrix> ops) {
  GateMatrix e = ptm_from_kraus(KrausSet(ops));
  return NamedGate{std::move(e), std::move(ops), 1};
}

using GateFactory = std::function<NamedGate(std::string_view, const std::vector<double>&)>;

const std::map<std::string, GateFactory, std::less<>>& gate_table() {
  static const std::map<std::string, GateFactory, std::less<>> table = [] {
    const Complex i{0.0, 1.0};
    const double r2 = 1.0 / std::numbers::sqrt2;
    std::map<std::string, GateFactory, std::less<>> t;
    const auto fixed = [](CMatrix u) {
      return [u](std::string_view nm, const std::vector<double>& p) {
        require_params(nm, p, 0);
        return from_unitary(u);
      };
    };
    t["I"] = fixed(CMatrix::Identity(2, 2));
    t["X"] = fixed(unitary_from({0.0, 1.0, 1.0, 0.0}));
    t["Y"] = fixed(unitary_from({0.0, -i, i, 0.0}));
    t["Z"] = fixed(unitary_from({1.0, 0.0, 0.0, -1.0}));
    t["H"] = fixed(unitary_from({r2, r2, r2, -r2}));
    t["S"] = fixed(unitary_from({1.0, 0.0, 0.0, i}));
    t["T"] = fixed(unitary_from({1.0, 0.0, 0.0, std::polar(1.0, std::numbers::pi / 4.0)}));
    t["rot1"] = [](std::string_view nm, const std::vector<double>& p) {
      require_params(nm, p, 1);
      return NamedGate{rotation1(p[0]), {euler_unitary({p[0], 0.0, 0.0})}, 1};
    };
    t["rot2"] = [](std::string_view nm, const std::vector<double>& p) {
      require_params(nm, p, 1);
      return NamedGate{rotation2(p[0]), {euler_unitary({0.0, p[0], 0.0})}, 1};
    };
    t["euler"] = [](std::string_view nm, const std::vector<double>& p) {
      require_params(nm, p, 3);
      const EulerAngles a{p[0], p[1], p[2]};
      return NamedGate{euler_gate(a), {euler_unitary(a)}, 1};
    };
    for (int k = 1; k <= 3; ++k) {
      t["R" + std::to_string(k)] = [k](std::string_view nm, const std::vector<double>& p) {
        require_params(nm, p, 0);
        return NamedGate{reflection(k), {}, 1};
      };
    }
    t["inversion"] = [](std::string_view nm, const std::vector<double>& p) {
      require_params(nm, p, 0);
      return NamedGate{inversion(), {}, 1};
    };
    t["dephase"] = [](std::string_view nm, const std::vector<double>& p) {
      require_params(nm, p, 1);
      require_range(nm, p[0], 0.0, 1.0);
      return from_kraus({std::sqrt(1.0 - p[0] / 2.0) * CMatrix::Identity(2, 2),
                         std::sqrt(p[0] / 2.0) * pauli_matrix(3)});
    };
    t["depolarize"] = [](std::string_view nm, const std::vector<double>& p) {
      require_params(nm, p, 1);
      require_range(nm, p[0], 0.0, 4.0 / 3.0);
      std::vector<CMatrix> ops = {std::sqrt(1.0 - 3.0 * p[0] / 4.0) * CMatrix::Identity(2, 2)};
      for (int k = 1; k <= 3; ++k) ops.push_back(std::sqrt(p[0] / 4.0) * pauli_matrix(k));
      return from_kraus(std::move(ops));
    };
    t["amplitude_damp"] = [](std::string_view nm, const std::vector<double>& p) {
      require_params(nm, p, 1);
      require_range(nm, p[0], 0.0, 1.0);
      return from_kraus({unitary_from({1.0, 0.0, 0.0, std::sqrt(1.0 - p[0])}),
                         unitary_from({0.0, std::sqrt(p[0]), 0.0, 0.0})});
    };
    for (int k = 0; k <= 1; ++k) {
      t["meas" + std::to_string(k)] = [k](std::string_view nm, const std::vector<double>& p) {
        require_params(nm, p, 0);
        CMatrix proj = CMatrix::Zero(2, 2);
        proj(k, k) = 1.0;
        return NamedGate{measurement_gate(k), {proj}, 1};
      };
    }
    t["proj"] = [](std::string_view nm, const std::vector<double>& p) {
      require_params(nm, p, 1);
      if (p[0] != std::floor(p[0]) || p[0] < 0.0 || p[0] > 3.0) {
        throw ParseError("gate 'proj': parameter must be an integer index 0..3");
      }
      return NamedGate{projection_superoperator(PauliIndex(1, static_cast<std::size_t>(p[0]))), {}, 1};
    };
    t["min_max"] = [](std::string_view nm, const std::vector<double>& p) {
      require_params(nm, p, 0);
      return NamedGate{min_max_gate(), {}, 2};
    };
    t["sheffer_webb"] = [](std::string_view nm, const std::vector<double>& p) {
      require_params(nm, p, 0);
      return NamedGate{sheffer_webb_gate(), {}, 2};
    };
    return t;
  }();
  return table;
}

std::vector<int> parse_targets(const json& step, int n, const std::string& path) {
  if (!step.contains("targets")) fail(path, "missing \"targets\"");
  const json& t = step["targets"];
  if (!t.is_array() || t.empty()) fail(path + ".targets", "expected a non-empty array");
  std::vector<int> out;
  for (std::size_t i = 0; i < t.size(); ++i) {
    const std::string tp = path + ".targets[" + std::to_string(i) + "]";
    const int q = parse_int(t[i], tp);
    if (q < 0 || q >= n) fail(tp, "index " + std::to_string(q) + " out of range for n = " + std::to_string(n));
    if (std::find(out.begin(), out.end(), q) != out.end()) fail(tp, "repeated target " + std::to_string(q));
    out.push_back(q);
  }
  return out;
}

void require_operator_size(const CMatrix& m, std::size_t k, const std::string& path) {
  const auto d = static_cast<Eigen::Index>(hilbert_dim(static_cast<int>(k)));
  if (m.rows() != d || m.cols() != d) {
    fail(path, fmt::format("expected a {}x{} matrix for {} target(s), got {}x{}", d, d, k, m.rows(),
                           m.cols()));
  }
}

Step parse_step(const json& j, int n, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  static constexpr std::array<const char*, 6> kKinds = {"gate", "unitary", "kraus", "ptm", "measure", "logic"};
  int found = 0;
  for (const char* k : kKinds) found += j.contains(k) ? 1 : 0;
  if (found != 1) {
    fail(path, "exactly one of \"gate\", \"unitary\", \"kraus\", \"ptm\", \"measure\", \"logic\" is required");
  }
  Step s;
  s.targets = parse_targets(j, n, path);
  const std::size_t k = s.targets.size();
  if (j.contains("branch") && !j.contains("measure")) fail(path + ".branch", "only measurement steps take a branch");

  try {
    if (j.contains("gate")) {
      s.kind = StepKind::kGate;
      if (!j["gate"].is_string()) fail(path + ".gate", "expected a gate name");
      s.label = j["gate"].get<std::string>();
      const auto& table = gate_table();
      const auto it = table.find(s.label);
      if (it == table.end()) fail(path + ".gate", "unknown gate '" + s.label + "'");
      NamedGate g = it->second(s.label, parse_params(j, path));
      if (static_cast<std::size_t>(g.targets) != k) {
        fail(path + ".targets", fmt::format("gate '{}' acts on {} ququat(s), got {} target(s)", s.label,
                                            g.targets, k));
      }
      s.local = std::move(g.ptm);
      s.kraus = std::move(g.kraus);
    } else if (j.contains("unitary")) {
      s.kind = StepKind::kUnitary;
      s.label = "unitary";
      CMatrix u = parse_matrix(j["unitary"], path + ".unitary");
      require_operator_size(u, k, path + ".unitary");
      s.local = ptm_from_unitary(u);
      s.kraus = {std::move(u)};
    } else if (j.contains("kraus")) {
      s.kind = StepKind::kKraus;
      s.label = "kraus";
      const json& list = j["kraus"];
      if (!list.is_array() || list.empty()) fail(path + ".kraus", "expected a non-empty list of matrices");
      std::vector<CMatrix> ops;
      for (std::size_t i = 0; i < list.size(); ++i) {
        const std::string kp = path + ".kraus[" + std::to_string(i) + "]";
        ops.push_back(parse_matrix(list[i], kp));
        require_operator_size(ops.back(), k, kp);
      }
      s.local = ptm_from_kraus(KrausSet(ops));
      s.kraus = std::move(ops);
    } else if (j.contains("ptm")) {
      s.kind = StepKind::kPtm;
      s.label = "ptm";
      RMatrix e = parse_real_matrix(j["ptm"], path + ".ptm");
      const auto d = static_cast<Eigen::Index>(liouville_dim(static_cast<int>(k)));
      if (e.rows() != d || e.cols() != d) {
        fail(path + ".ptm", fmt::format("expected a {}x{} matrix for {} target(s)", d, d, k));
      }
      s.local = GateMatrix(std::move(e));
    } else if (j.contains("measure")) {
      s.kind = StepKind::kMeasure;
      s.label = "measure";
      const json& m = j["measure"];
      if (m.is_string()) {
        if (m.get<std::string>() != "computational") {
          fail(path + ".measure", "expected \"computational\" or a list of projectors");
        }
        std::vector<int> local(k);
        for (std::size_t q = 0; q < k; ++q) local[q] = static_cast<int>(q);
        s.projectors = computational_projectors(static_cast<int>(k), local);
      } else if (m.is_array() && !m.empty()) {
        for (std::size_t i = 0; i < m.size(); ++i) {
          const std::string mp = path + ".measure[" + std::to_string(i) + "]";
          s.projectors.push_back(parse_matrix(m[i], mp));
          require_operator_size(s.projectors.back(), k, mp);
        }
        validate_projectors(s.projectors);
      } else {
        fail(path + ".measure", "expected \"computational\" or a list of projectors");
      }
      if (j.contains("branch")) {
        const int b = parse_int(j["branch"], path + ".branch");
        if (b < 0 || static_cast<std::size_t>(b) >= s.projectors.size()) {
          fail(path + ".branch", "outcome " + std::to_string(b) + " out of range");
        }
        s.branch = b;
      }
    } else {
      s.kind = StepKind::kLogic;
      const json& l = j["logic"];
      std::vector<std::string> texts;
      if (l.is_string()) {
        texts.push_back(l.get<std::string>());
      } else if (l.is_array()) {
        for (std::size_t i = 0; i < l.size(); ++i) {
          if (!l[i].is_string()) fail(path + ".logic[" + std::to_string(i) + "]", "expected an expression string");
          texts.push_back(l[i].get<std::string>());
        }
      } else {
        fail(path + ".logic", "expected an expression or a list of expressions");
      }
      if (texts.size() != k) {
        fail(path + ".logic", fmt::format("{} expression(s) for {} target(s); one per target is required",
                                          texts.size(), k));
      }
      std::vector<ClassicalGate> tables;
      std::vector<std::string> shown;
      for (std::size_t i = 0; i < texts.size(); ++i) {
        const std::string lp = path + ".logic[" + std::to_string(i) + "]";
        LogicExpr e = LogicExpr::parse(texts[i]);
        if (e.max_var() > static_cast<int>(k)) {
          fail(lp, fmt::format("uses x{} but the step has only {} target(s)", e.max_var(), k));
        }
        tables.push_back(e.to_gate(static_cast<int>(k)));
        shown.push_back(e.to_string());
      }
      s.label = fmt::format("logic {}", fmt::join(shown, ", "));
      s.local = compile_map(tables);
    }
  } catch (const ParseError& e) {
    const std::string what = e.what();
    if (what.rfind(path, 0) == 0) throw;
    fail(path, what);
  } catch (const Error& e) {
    fail(path, e.what());
  }
  return s;
}

PauliVector parse_initial(const json& root, int n) {
  if (!root.contains("initial")) {
    return product_comp_state(std::vector<int>(static_cast<std::size_t>(n), 3));
  }
  const json& init = root["initial"];
  try {
    if (init.is_array()) {
      if (static_cast<int>(init.size()) != n) fail("initial", fmt::format("expected {} digits", n));
      std::vector<int> digits;
      for (std::size_t i = 0; i < init.size(); ++i) {
        const int d = parse_int(init[i], "initial[" + std::to_string(i) + "]");
        if (d < 0 || d > 3) fail("initial[" + std::to_string(i) + "]", "digit must be 0..3");
        digits.push_back(d);
      }
      return product_comp_state(digits);
    }
    if (init.is_object() && init.contains("comp")) {
      const int mu = parse_int(init["comp"], "initial.comp");
      if (mu < 0 || static_cast<std::size_t>(mu) >= liouville_dim(n)) fail("initial.comp", "index out of range");
      return comp_state(PauliIndex(n, static_cast<std::size_t>(mu)));
    }
    if (init.is_object() && init.contains("pauli")) {
      const json& v = init["pauli"];
      if (!v.is_array() || v.size() != liouville_dim(n)) {
        fail("initial.pauli", fmt::format("expected {} coefficients", liouville_dim(n)));
      }
      RVector c(static_cast<Eigen::Index>(v.size()));
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (!v[i].is_number()) fail("initial.pauli[" + std::to_string(i) + "]", "expected a number");
        c[static_cast<Eigen::Index>(i)] = v[i].get<double>();
      }
      PauliVector p(n, std::move(c));
      if (!p.is_normalized()) fail("initial.pauli", "P_0 must be 1");
      return p;
    }
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    fail("initial", e.what());
  }
  fail("initial", "expected a digit list, {\"comp\": mu} or {\"pauli\": [...]}");
}

json clean(double x) { return std::abs(x) < kDisplayZero ? 0.0 : x; }

json vector_json(const RVector& v) {
  json a = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(clean(v[i]));
  return a;
}

json flags_json(const GateFlags& f) {
  return json{{"trace_preserving", f.trace_preserving},
              {"unital", f.unital},
              {"completely_positive", f.completely_positive},
              {"orthogonal", f.orthogonal},
              {"trace_bound", f.trace_bound}};
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string digits_of(std::size_t mu, int n) {
  std::string s;
  for (int q = n - 1; q >= 0; --q) s += static_cast<char>('0' + ((mu >> (2 * q)) & 3U));
  return s;
}

}  // namespace

NamedGate named_gate(std::string_view name, const std::vector<double>& params) {
  const auto& table = gate_table();
  const auto it = table.find(name);
  if (it == table.end()) throw ParseError("unknown gate '" + std::string(name) + "'");
  return it->second(name, params);
}

std::vector<std::string> named_gate_names() {
  std::vector<std::string> out;
  for (const auto& [k, v] : gate_table()) out.push_back(k);
  return out;
}

CircuitDescription parse_circuit(std::string_view text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!root.is_object()) throw ParseError("circuit: top level must be an object");
  if (!root.contains("n")) throw ParseError("n: missing ququat count");
  const int n = parse_int(root["n"], "n");
  if (n < 1 || n > kMaxQuquats) fail("n", fmt::format("must lie in 1..{}", kMaxQuquats));
  for (const auto& [key, value] : root.items()) {
    if (key != "n" && key != "initial" && key != "ops" && key != "name" && key != "description") {
      fail(key, "unknown top-level field");
    }
  }
  CircuitDescription d;
  d.n = n;
  d.initial = parse_initial(root, n);
  if (root.contains("ops")) {
    const json& ops = root["ops"];
    if (!ops.is_array()) fail("ops", "expected an array of steps");
    for (std::size_t i = 0; i < ops.size(); ++i) {
      d.ops.push_back(parse_step(ops[i], n, "ops[" + std::to_string(i) + "]"));
    }
  }
  return d;
}

GateFlags classify(const GateMatrix& e) {
  return GateFlags{is_trace_preserving(e), is_unital(e), is_completely_positive(e), is_orthogonal(e),
                   satisfies_trace_decreasing_bound(e)};
}

RunReport run(const CircuitDescription& desc, const RunOptions& options) {
  const int n = desc.n;
  RunReport report;
  report.n = n;
  report.tolerance = options.tolerance;
  PauliVector p = desc.initial;
  CMatrix rho;
  double residual = 0.0;
  if (options.verify) rho = oracle::density_from_coefficients(desc.initial.coeffs());

  for (std::size_t i = 0; i < desc.ops.size(); ++i) {
    const Step& s = desc.ops[i];
    if (s.kind == StepKind::kMeasure) {
      if (p[0] <= tol::kZeroProbability) {
        throw ZeroProbabilityError(fmt::format("ops[{}]: state has vanishing trace", i));
      }
      std::vector<GateMatrix> branches;
      MeasurementRecord rec{i, s.targets, {}, s.branch};
      RMatrix total = RMatrix::Zero(static_cast<Eigen::Index>(liouville_dim(n)),
                                    static_cast<Eigen::Index>(liouville_dim(n)));
      for (const auto& proj : s.projectors) {
        branches.push_back(embed(measurement_gate(proj), s.targets, n));
        total += branches.back().matrix();
        rec.probabilities.push_back(trace_functional(branches.back(), p) / p[0]);
      }
      if (s.branch) {
        const double pb = rec.probabilities[static_cast<std::size_t>(*s.branch)];
        if (pb < tol::kZeroProbability) {
          throw ZeroProbabilityError(
              fmt::format("ops[{}]: branch {} has probability {:.3g}", i, *s.branch, pb));
        }
        p = nonlinear_apply(branches[static_cast<std::size_t>(*s.branch)], p);
      } else {
        p = nonlinear_apply(GateMatrix(std::move(total)), p);
      }
      if (options.verify) {
        std::vector<CMatrix> full;
        for (const auto& proj : s.projectors) full.push_back(oracle::embed_operator(proj, s.targets, n));
        const auto m = oracle::measure_dense(full, rho);
        const double tr = rho.trace().real();
        for (std::size_t k = 0; k < full.size(); ++k) {
          residual = std::max(residual, std::abs(m.probabilities[k] / tr - rec.probabilities[k]));
        }
        if (s.branch) {
          const CMatrix& pb = full[static_cast<std::size_t>(*s.branch)];
          rho = pb * rho * pb;
          rho /= rho.trace().real();
        } else {
          rho = m.post_state;
        }
      }
      report.steps.push_back(StepRecord{s.label, s.targets, std::nullopt});
      report.measurements.push_back(std::move(rec));
    } else {
      p = apply(embed(*s.local, s.targets, n), p);
      report.steps.push_back(StepRecord{s.label, s.targets, classify(*s.local)});
      if (options.verify) {
        if (!s.kraus.empty()) {
          std::vector<CMatrix> full;
          for (const auto& a : s.kraus) full.push_back(oracle::embed_operator(a, s.targets, n));
          rho = oracle::evolve_dense(full, rho);
        } else {
          rho = oracle::apply_embedded_gate_matrix(s.local->matrix(), s.targets, n, rho);
        }
      }
    }
    if (options.verify) {
      residual = std::max(residual, max_abs(oracle::pauli_coefficients(rho) - p.coeffs()));
    }
  }
  if (options.verify) report.residual = residual;
  report.final_state = p;
  const CMatrix m = pauli_to_matrix(p);
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(0.5 * (m + m.adjoint()), Eigen::EigenvaluesOnly);
  report.min_eigenvalue = solver.eigenvalues().minCoeff();
  report.physical = report.min_eigenvalue >= tol::kPsd;
  return report;
}

std::string report_json(const RunReport& r) {
  json out;
  out["n"] = r.n;
  out["final_state"] = vector_json(r.final_state.coeffs());
  out["trace"] = clean(r.final_state[0]);
  if (r.final_state.is_normalized()) out["purity"] = clean(purity(r.final_state));
  out["physical"] = r.physical;
  out["min_eigenvalue"] = clean(r.min_eigenvalue);
  json steps = json::array();
  for (const auto& s : r.steps) {
    json js{{"label", s.label}, {"targets", s.targets}};
    js["flags"] = s.flags ? flags_json(*s.flags) : json(nullptr);
    steps.push_back(std::move(js));
  }
  out["steps"] = std::move(steps);
  json meas = json::array();
  for (const auto& m : r.measurements) {
    json probs = json::array();
    for (double x : m.probabilities) probs.push_back(clean(x));
    json jm{{"step", m.step}, {"targets", m.targets}, {"probabilities", probs}};
    jm["branch"] = m.branch ? json(*m.branch) : json(nullptr);
    meas.push_back(std::move(jm));
  }
  out["measurements"] = std::move(meas);
  if (r.residual) {
    out["residual"] = *r.residual;
    out["verified"] = r.verified();
  } else {
    out["residual"] = nullptr;
  }
  return out.dump(2);
}

std::string report_table(const RunReport& r) {
  std::string s = fmt::format("ququats: {}\n\nfinal state (nonzero coefficients)\n", r.n);
  s += fmt::format("  {:>6}  {:>{}}  {:>12}\n", "mu", "digits", std::max(6, r.n), "P_mu");
  const RVector& c = r.final_state.coeffs();
  for (Eigen::Index mu = 0; mu < c.size(); ++mu) {
    if (std::abs(c[mu]) < kDisplayZero) continue;
    s += fmt::format("  {:>6}  {:>{}}  {:>12.6f}\n", mu, digits_of(static_cast<std::size_t>(mu), r.n),
                     std::max(6, r.n), c[mu]);
  }
  if (r.final_state.is_normalized()) s += fmt::format("purity: {:.6f}\n", purity(r.final_state));
  s += fmt::format("physical: {} (min eigenvalue {:.3e})\n", yes_no(r.physical), r.min_eigenvalue);
  if (!r.steps.empty()) {
    s += fmt::format("\nsteps\n  {:>3}  {:<24} {:<10} {:>3} {:>6} {:>3} {:>5} {:>5}\n", "#", "label", "targets",
                     "TP", "unital", "CP", "orth", "bound");
    for (std::size_t i = 0; i < r.steps.size(); ++i) {
      const auto& st = r.steps[i];
      const std::string targets = fmt::format("{}", fmt::join(st.targets, ","));
      if (st.flags) {
        const auto& f = *st.flags;
        s += fmt::format("  {:>3}  {:<24} {:<10} {:>3} {:>6} {:>3} {:>5} {:>5}\n", i, st.label, targets,
                         yes_no(f.trace_preserving), yes_no(f.unital), yes_no(f.completely_positive),
                         yes_no(f.orthogonal), yes_no(f.trace_bound));
      } else {
        s += fmt::format("  {:>3}  {:<24} {:<10}\n", i, st.label, targets);
      }
    }
  }
  if (!r.measurements.empty()) {
    s += "\nmeasurements\n";
    for (const auto& m : r.measurements) {
      s += fmt::format("  step {} on [{}]{}\n", m.step, fmt::join(m.targets, ","),
                       m.branch ? fmt::format(", branch {}", *m.branch) : std::string());
      for (std::size_t k = 0; k < m.probabilities.size(); ++k) {
        const double pk = std::abs(m.probabilities[k]) < kDisplayZero ? 0.0 : m.probabilities[k];
        s += fmt::format("    outcome {:>2}  p = {:.10f}\n", k, pk);
      }
    }
  }
  if (r.residual) {
    s += fmt::format("\nverification residual: {:.3e} ({})\n", *r.residual,
                     r.verified() ? "ok" : "FAILED");
  }
  return s;
}

GateAnalysis analyze_gate(const GateMatrix& e) {
  GateAnalysis a;
  a.n = e.ququats();
  a.flags = classify(e);
  a.translation = e.matrix().col(0).tail(e.dim() - 1);
  if (a.flags.trace_preserving) a.singular_values = svd_decompose(e).singular_values;
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(choi_from_ptm(e).matrix(), Eigen::EigenvaluesOnly);
  a.choi_min_eigenvalue = solver.eigenvalues().minCoeff();
  return a;
}

GateAnalysis analyze_gate(std::string_view payload) {
  json root;
  try {
    root = json::parse(payload);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!root.is_object()) throw ParseError("payload: top level must be an object");
  try {
    if (root.contains("unitary")) return analyze_gate(ptm_from_unitary(parse_matrix(root["unitary"], "unitary")));
    if (root.contains("kraus")) {
      const json& list = root["kraus"];
      if (!list.is_array() || list.empty()) fail("kraus", "expected a non-empty list of matrices");
      std::vector<CMatrix> ops;
      for (std::size_t i = 0; i < list.size(); ++i) {
        ops.push_back(parse_matrix(list[i], "kraus[" + std::to_string(i) + "]"));
      }
      return analyze_gate(ptm_from_kraus(KrausSet(std::move(ops))));
    }
    if (root.contains("ptm")) return analyze_gate(GateMatrix(parse_real_matrix(root["ptm"], "ptm")));
    if (root.contains("gate")) {
      if (!root["gate"].is_string()) fail("gate", "expected a gate name");
      return analyze_gate(named_gate(root["gate"].get<std::string>(), parse_params(root, "payload")).ptm);
    }
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(std::string("payload: ") + e.what());
  }
  throw ParseError("payload: expected one of \"unitary\", \"kraus\", \"ptm\", \"gate\"");
}

std::string analysis_json(const GateAnalysis& a) {
  json out;
  out["n"] = a.n;
  out["flags"] = flags_json(a.flags);
  out["translation"] = vector_json(a.translation);
  out["singular_values"] = a.singular_values ? vector_json(*a.singular_values) : json(nullptr);
  out["choi_min_eigenvalue"] = clean(a.choi_min_eigenvalue);
  return out.dump(2);
}

std::string analysis_table(const GateAnalysis& a) {
  std::string s = fmt::format("ququats: {}\n", a.n);
  s += fmt::format("  trace-preserving      {}\n", yes_no(a.flags.trace_preserving));
  s += fmt::format("  unital                {}\n", yes_no(a.flags.unital));
  s += fmt::format("  completely positive   {}  (min Choi eigenvalue {:.3e})\n",
                   yes_no(a.flags.completely_positive), a.choi_min_eigenvalue);
  s += fmt::format("  orthogonal            {}\n", yes_no(a.flags.orthogonal));
  s += fmt::format("  trace bound           {}\n", yes_no(a.flags.trace_bound));
  std::vector<double> t(a.translation.data(), a.translation.data() + a.translation.size());
  for (auto& x : t) x = std::abs(x) < kDisplayZero ? 0.0 : x;
  s += fmt::format("  T = ({:.6g})\n", fmt::join(t, ", "));
  if (a.singular_values) {
    std::vector<double> l(a.singular_values->data(), a.singular_values->data() + a.singular_values->size());
    for (auto& x : l) x = std::abs(x) < kDisplayZero ? 0.0 : x;
    s += fmt::format("  singular values = ({:.6g})\n", fmt::join(l, ", "));
  } else {
    s += "  singular values: n/a (not trace-preserving)\n";
  }
  return s;
}

}  // namespace ququat
