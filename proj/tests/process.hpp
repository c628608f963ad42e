#ifndef QUQUAT_TESTS_PROCESS_HPP_
#define QUQUAT_TESTS_PROCESS_HPP_

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

namespace ququat::test {

struct ProcessResult {
  int exit_code = -1;
  std::string out;
};

/// Runs a shell command, capturing standard output.
inline ProcessResult run_command(const std::string& command) {
  ProcessResult r;
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) return r;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

inline std::string quoted(const std::string& s) { return "'" + s + "'"; }

}  // namespace ququat::test

#endif  // QUQUAT_TESTS_PROCESS_HPP_
