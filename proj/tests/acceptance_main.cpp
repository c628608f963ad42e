// Acceptance runner: one PASS/FAIL line per criterion.

#include <chrono>
#include <cmath>
#include <iostream>
#include <string>

#include <fmt/format.h>

#include "json.hpp"
#include "process.hpp"
#include "ququat/acceptance.hpp"

namespace {

using namespace ququat;

CriterionResult end_to_end() {
  CriterionResult r{11, "end-to-end command line", false, 0.0, 60.0, ""};
  const std::string cli = test::quoted(QUQUAT_CLI_PATH);
  const std::string bell = test::quoted(std::string(QUQUAT_CIRCUITS_DIR) + "/bell.json");
  std::string failures;
  const auto start = std::chrono::steady_clock::now();

  const auto run = test::run_command(cli + " run " + bell + " --verify 2>&1");
  if (run.exit_code != 0) failures += fmt::format("\n  - bell run exited {}", run.exit_code);
  try {
    const auto j = nlohmann::json::parse(run.out);
    const auto p = j.at("measurements").at(0).at("probabilities").get<std::vector<double>>();
    const std::vector<double> want = {0.5, 0.0, 0.0, 0.5};
    double worst = p.size() == want.size() ? 0.0 : 1.0;
    for (std::size_t i = 0; i < std::min(p.size(), want.size()); ++i) worst = std::max(worst, std::abs(p[i] - want[i]));
    if (worst > 1e-10) failures += fmt::format("\n  - bell probabilities off by {:.3e}", worst);
    const double residual = j.at("residual").get<double>();
    if (!(residual < 1e-9)) failures += fmt::format("\n  - verify residual {:.3e}", residual);
  } catch (const std::exception& e) {
    failures += fmt::format("\n  - unreadable bell report: {}", e.what());
  }

  const auto self = test::run_command(cli + " selftest 2>&1");
  if (self.exit_code != 0) failures += fmt::format("\n  - selftest exited {}", self.exit_code);

  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  r.checks_passed = failures.empty();
  r.detail = failures.empty() ? "bell circuit and selftest ok" : fmt::format("checks failed:{}", failures);
  return r;
}

}  // namespace

int main() {
  int failed = 0;
  for (int id = 1; id <= kSuiteCount; ++id) {
    const CriterionResult r = run_suite(id);
    std::cout << format_result(r) << std::endl;
    failed += r.passed() ? 0 : 1;
  }
  const CriterionResult cli = end_to_end();
  std::cout << format_result(cli) << std::endl;
  failed += cli.passed() ? 0 : 1;
  std::cout << fmt::format("{} of {} criteria passed\n", kSuiteCount + 1 - failed, kSuiteCount + 1);
  return failed == 0 ? 0 : 1;
}
