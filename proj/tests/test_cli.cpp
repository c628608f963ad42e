#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <string>

#include "json.hpp"
#include "process.hpp"

using ququat::test::quoted;
using ququat::test::run_command;
using nlohmann::json;

namespace {

const std::string kCli = QUQUAT_CLI_PATH;
const std::string kCircuits = QUQUAT_CIRCUITS_DIR;

std::string cli(const std::string& args) { return quoted(kCli) + " " + args + " 2>/dev/null"; }

std::string circuit(const std::string& name) { return quoted(kCircuits + "/" + name); }

std::string temp_file(const std::string& name, const std::string& text) {
  const std::string path = "/tmp/ququat_test_" + name;
  std::ofstream(path) << text;
  return path;
}

}  // namespace

TEST_CASE("run bell circuit with verification") {
  const auto r = run_command(cli("run " + circuit("bell.json") + " --verify"));
  REQUIRE(r.exit_code == 0);
  const json j = json::parse(r.out);
  const auto p = j["measurements"][0]["probabilities"].get<std::vector<double>>();
  REQUIRE(p.size() == 4);
  CHECK(std::abs(p[0] - 0.5) < 1e-10);
  CHECK(std::abs(p[1]) < 1e-10);
  CHECK(std::abs(p[2]) < 1e-10);
  CHECK(std::abs(p[3] - 0.5) < 1e-10);
  CHECK(j["residual"].get<double>() < 1e-9);
  CHECK(j["verified"].get<bool>());
}

TEST_CASE("run without verify has a null residual") {
  const auto r = run_command(cli("run " + circuit("not_gate.json")));
  REQUIRE(r.exit_code == 0);
  const json j = json::parse(r.out);
  CHECK(j["residual"].is_null());
  CHECK(j["final_state"].get<std::vector<double>>() == std::vector<double>{1, 0, 0, -1});
}

TEST_CASE("table format") {
  const auto r = run_command(cli("run " + circuit("bell.json") + " --verify --format table"));
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("verification residual") != std::string::npos);
}

TEST_CASE("suite mode runs every bundled circuit") {
  const auto r = run_command(cli("run --suite --verify " + circuit("bell.json") + " " + circuit("not_gate.json") +
                                 " " + circuit("measure_mixed.json") + " " + circuit("classical_minmax.json") +
                                 " " + circuit("noisy_channel.json") + " " + circuit("logic_negation.json")));
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("bell.json") != std::string::npos);
}

TEST_CASE("parse errors exit with code 2") {
  const std::string bad = temp_file("bad.json", R"({"n":1,"ops":[{"gate":"Q","targets":[0]}]})");
  CHECK(run_command(cli("run " + quoted(bad))).exit_code == 2);
  CHECK(run_command(cli("run /nonexistent/file.json")).exit_code == 2);
  CHECK(run_command(cli("logic compile '(neg x1'")).exit_code == 2);
  CHECK(run_command(cli("frobnicate")).exit_code == 2);
}

TEST_CASE("verification failure exits with code 3") {
  const auto r = run_command("QUQUAT_TOLERANCE=1e-300 " + cli("run " + circuit("noisy_channel.json") + " --verify"));
  CHECK(r.exit_code == 3);
}

TEST_CASE("analyze") {
  const auto r = run_command(cli("analyze " + circuit("hadamard_analyze.json")));
  REQUIRE(r.exit_code == 0);
  const json j = json::parse(r.out);
  CHECK(j["flags"]["orthogonal"].get<bool>());
  CHECK(j["flags"]["completely_positive"].get<bool>());
  const auto m = run_command(cli("analyze " + circuit("min_max_analyze.json") + " --format table"));
  CHECK(m.exit_code == 0);
  CHECK(m.out.find("unital") != std::string::npos);
}

TEST_CASE("logic commands") {
  const auto c = run_command(cli("logic compile '(neg x1)'"));
  CHECK(c.exit_code == 0);
  CHECK(c.out.find("trace_preserving=true") != std::string::npos);
  const auto two = run_command(cli("logic compile '(or x1 x2)' '(and x1 x2)'"));
  CHECK(two.exit_code == 0);
  CHECK(two.out.find("unital=true") != std::string::npos);
  const auto s = run_command(cli("logic synth 1230 --basis v4 --depth 2"));
  CHECK(s.exit_code == 0);
  CHECK(s.out.find("v4") != std::string::npos);
  CHECK(run_command(cli("logic synth 3210 --basis shift,or --depth 6")).exit_code == 1);
}
