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

// Command-line front end.
//
// Exit codes: 0 success, 1 other errors, 2 parse errors, 3 verification
// failure.

#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "CLI11.hpp"
#include "ququat/acceptance.hpp"
#include "ququat/circuit.hpp"
#include "ququat/fourlogic.hpp"

namespace {

using namespace ququat;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitParse = 2;
constexpr int kExitVerify = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// QUQUAT_TOLERANCE overrides the verification tolerance. Loosening it hides
// real discrepancies, so prefer the default.
double default_tolerance() {
  const char* env = std::getenv("QUQUAT_TOLERANCE");
  if (env == nullptr || *env == '\0') return RunOptions{}.tolerance;
  char* end = nullptr;
  const double v = std::strtod(env, &end);
  if (end == env || *end != '\0' || !(v > 0.0)) {
    throw ParseError(fmt::format("QUQUAT_TOLERANCE: '{}' is not a positive number", env));
  }
  return v;
}

struct FileOutcome {
  std::string text;
  int code = kExitOk;
};

FileOutcome run_file(const std::string& path, const RunOptions& options, bool table) {
  try {
    const RunReport r = run(parse_circuit(read_file(path)), options);
    FileOutcome out{table ? report_table(r) : report_json(r), kExitOk};
    if (!r.verified()) {
      out.code = kExitVerify;
      out.text += fmt::format("\nverification failed: residual {:.3e} >= {:.0e}\n", *r.residual, r.tolerance);
    }
    return out;
  } catch (const ParseError& e) {
    return {fmt::format("{}: parse error: {}\n", path, e.what()), kExitParse};
  } catch (const Error& e) {
    return {fmt::format("{}: error: {}\n", path, e.what()), kExitError};
  }
}

int cmd_run(const std::vector<std::string>& files, bool suite, bool verify, const std::string& format) {
  RunOptions options;
  options.verify = verify;
  options.tolerance = default_tolerance();
  const bool table = format == "table";
  if (!suite) {
    if (files.size() != 1) throw ParseError("run: exactly one file expected (use --suite for several)");
    const FileOutcome o = run_file(files[0], options, table);
    (o.code == kExitOk || o.code == kExitVerify ? std::cout : std::cerr) << o.text;
    if (!o.text.empty() && o.text.back() != '\n') std::cout << '\n';
    return o.code;
  }
  std::vector<std::future<FileOutcome>> jobs;
  for (const auto& f : files) {
    jobs.push_back(std::async(std::launch::async, run_file, f, options, table));
  }
  int code = kExitOk;
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    const FileOutcome o = jobs[i].get();
    std::cout << "== " << files[i] << '\n' << o.text;
    if (!o.text.empty() && o.text.back() != '\n') std::cout << '\n';
    if (o.code != kExitOk && (code == kExitOk || o.code > code)) code = o.code;
  }
  return code;
}

int cmd_analyze(const std::string& file, const std::string& format) {
  const GateAnalysis a = analyze_gate(read_file(file));
  std::cout << (format == "table" ? analysis_table(a) : analysis_json(a));
  std::cout << '\n';
  return kExitOk;
}

std::string matrix_text(const RMatrix& m) {
  std::string s;
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      const double v = m(r, c) == 0.0 ? 0.0 : m(r, c);
      s += fmt::format("{:>6g}", v);
    }
    s += '\n';
  }
  return s;
}

int cmd_logic_compile(const std::vector<std::string>& exprs) {
  const int k = static_cast<int>(exprs.size());
  std::vector<ClassicalGate> outputs;
  for (const auto& text : exprs) {
    const LogicExpr e = LogicExpr::parse(text);
    if (e.max_var() > k) {
      throw ParseError(fmt::format("'{}' uses x{} but only {} output(s) are given", text, e.max_var(), k));
    }
    outputs.push_back(e.to_gate(k));
  }
  const GateMatrix g = k == 1 ? compile_single(outputs[0]) : compile_map(outputs);
  const GateFlags f = classify(g);
  std::cout << matrix_text(g.matrix());
  std::cout << fmt::format("trace_preserving={} unital={} completely_positive={} orthogonal={}\n",
                           f.trace_preserving, f.unital, f.completely_positive, f.orthogonal);
  return kExitOk;
}

ClassicalGate parse_table(const std::string& text) {
  std::vector<int> t;
  for (char ch : text) {
    if (ch == ',' || ch == ' ') continue;
    if (ch < '0' || ch > '3') throw ParseError(fmt::format("table: '{}' is not a digit 0..3", ch));
    t.push_back(ch - '0');
  }
  if (t.size() == 4) return ClassicalGate(1, t);
  if (t.size() == 16) return ClassicalGate(2, t);
  throw ParseError(fmt::format("table: expected 4 or 16 entries, got {}", t.size()));
}

int cmd_logic_synth(const std::string& table, const std::string& basis_text, int depth) {
  const ClassicalGate g = parse_table(table);
  std::vector<Connective> basis;
  std::stringstream ss(basis_text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const auto c = connective_from_name(item);
    if (!c) throw ParseError(fmt::format("basis: unknown connective '{}'", item));
    basis.push_back(*c);
  }
  if (basis.empty()) throw ParseError("basis: no connectives given");
  SynthesisOptions options;
  options.max_depth = depth;
  try {
    const LogicExpr e = synthesize(g, basis, options);
    std::cout << e.to_string() << "\n";
    return kExitOk;
  } catch (const SynthesisNotFound& e) {
    std::cerr << "not found: " << e.what() << "\n";
    return kExitError;
  }
}

int cmd_selftest(std::uint64_t seed) {
  bool ok = true;
  for (int id = 1; id <= kSuiteCount; ++id) {
    const CriterionResult r = run_suite(id, seed);
    std::cout << format_result(r) << std::endl;
    ok = ok && r.passed();
  }
  return ok ? kExitOk : kExitError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mixed-state ququat simulator"};
  app.require_subcommand(1);

  std::vector<std::string> run_files;
  bool suite = false, verify = false;
  std::string format = "json";
  auto* run_cmd = app.add_subcommand("run", "Execute circuit description files");
  run_cmd->add_option("files", run_files, "Circuit JSON file(s)")->required();
  run_cmd->add_flag("--suite", suite, "Run several files in parallel");
  run_cmd->add_flag("--verify", verify, "Replay every step through the dense-matrix oracle");
  run_cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "table"}));

  std::string analyze_file;
  std::string analyze_format = "json";
  auto* analyze_cmd = app.add_subcommand("analyze", "Classify a gate payload");
  analyze_cmd->add_option("file", analyze_file, "Gate payload JSON file")->required();
  analyze_cmd->add_option("--format", analyze_format, "Output format")->check(CLI::IsMember({"json", "table"}));

  auto* logic_cmd = app.add_subcommand("logic", "Four-valued logic tools");
  logic_cmd->require_subcommand(1);
  std::vector<std::string> exprs;
  auto* compile_cmd = logic_cmd->add_subcommand("compile", "Compile expressions (one per output ququat) to a gate matrix");
  compile_cmd->add_option("expr", exprs, "Prefix expression, e.g. \"(neg x1)\"")->required();
  std::string table, basis = "neg,and,or";
  int depth = 8;
  auto* synth_cmd = logic_cmd->add_subcommand("synth", "Find an expression for a truth table");
  synth_cmd->add_option("table", table, "4 or 16 digits, first entry is the all-zero input")->required();
  synth_cmd->add_option("--basis", basis, "Comma-separated connective names");
  synth_cmd->add_option("--depth", depth, "Maximum expression depth")->check(CLI::Range(0, 8));

  std::uint64_t seed = kDefaultSeed;
  auto* selftest_cmd = app.add_subcommand("selftest", "Run the acceptance property suites");
  selftest_cmd->add_option("--seed", seed, "Sampler seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitParse;
  }

  try {
    if (*run_cmd) return cmd_run(run_files, suite, verify, format);
    if (*analyze_cmd) return cmd_analyze(analyze_file, analyze_format);
    if (*compile_cmd) return cmd_logic_compile(exprs);
    if (*synth_cmd) return cmd_logic_synth(table, basis, depth);
    if (*selftest_cmd) return cmd_selftest(seed);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const VerificationError& e) {
    std::cerr << "verification failed: " << e.what() << "\n";
    return kExitVerify;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
