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

// Property suites shared by `ququat selftest` and the acceptance test.

#ifndef QUQUAT_ACCEPTANCE_HPP_
#define QUQUAT_ACCEPTANCE_HPP_

#include <cstdint>
#include <string>
#include <vector>

namespace ququat {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool checks_passed = false;
  double seconds = 0.0;
  double limit_seconds = 0.0;
  /// Failed sub-checks, one per line; a summary when everything passed.
  std::string detail;

  bool passed() const { return checks_passed && seconds < limit_seconds; }
};

inline constexpr int kSuiteCount = 10;
inline constexpr std::uint64_t kDefaultSeed = 20261015;

/// Runs suite `id` in 1..kSuiteCount.
CriterionResult run_suite(int id, std::uint64_t seed = kDefaultSeed);

std::vector<CriterionResult> run_all_suites(std::uint64_t seed = kDefaultSeed);

/// "[PASS] 3 orthogonality ... (0.12 s / 5 s)".
std::string format_result(const CriterionResult& r);

}  // namespace ququat

#endif  // QUQUAT_ACCEPTANCE_HPP_
