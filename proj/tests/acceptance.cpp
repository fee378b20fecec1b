/*
   Copyright 2026 The symmpoly Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// Acceptance runner: one PASS/FAIL line per criterion, checks listed above it.
//
//   acceptance                  run criteria 1..10
//   acceptance --criterion N    run one criterion

#include <cstdio>
#include <cstring>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "symmpoly/cli.hpp"
#include "symmpoly/verify.hpp"

using namespace symmpoly;

namespace {

constexpr std::uint64_t kSeed = 7;

void print(const CheckResult& c) {
  std::printf("  %-4s %s: %.12g %s %.12g\n", c.pass ? "ok" : "FAIL", c.name.c_str(), c.measured,
              c.relation.c_str(), c.threshold);
}

std::string cli_verify(unsigned workers, int& status) {
  const std::string w = std::to_string(workers);
  const std::string s = std::to_string(kSeed);
  const char* argv[] = {"symmpoly", "verify", "--level", "desk", "--seed", s.c_str(), "--workers", w.c_str()};
  std::ostringstream out, err;
  status = run_cli(8, argv, out, err);
  return out.str();
}

bool run(int criterion) {
  VerifyConfig config;
  config.seed = kSeed;
  config.criterion = criterion;
  std::vector<CheckResult> checks = run_criterion(criterion, config);
  if (criterion == 10) {
    // The full verify CSV, produced twice through the command line.
    int status_one = 0, status_four = 0;
    const std::string one = cli_verify(1, status_one);
    const std::string four = cli_verify(4, status_four);
    const bool same = !one.empty() && one == four && status_one == status_four;
    checks.push_back({10, "verify CSV byte-identical for --workers 1 and 4", same ? 0.0 : 1.0, "<=", 0.0, same});
  }
  for (const auto& c : checks) print(c);
  const bool pass = all_passed(checks);
  std::printf("[PRIMARY] criterion %d: %s\n", criterion, pass ? "PASS" : "FAIL");
  std::fflush(stdout);
  return pass;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    std::vector<int> criteria;
    if (argc == 3 && std::strcmp(argv[1], "--criterion") == 0) {
      criteria.push_back(std::stoi(argv[2]));
    } else if (argc == 1) {
      for (int c = 1; c <= kCriterionCount; ++c) criteria.push_back(c);
    } else {
      std::cerr << "usage: acceptance [--criterion N]\n";
      return 2;
    }
    bool all = true;
    for (int c : criteria) all = run(c) && all;
    return all ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "acceptance: " << e.what() << "\n";
    return 2;
  }
}
