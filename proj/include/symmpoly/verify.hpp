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

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace symmpoly {

enum class VerifyLevel { desk, deep };

VerifyLevel parse_level(std::string_view name);
std::string_view to_string(VerifyLevel level);

struct VerifyConfig {
  VerifyLevel level = VerifyLevel::desk;
  std::uint64_t seed = 7;
  unsigned workers = 1;
  std::optional<int> criterion;  // run only this one (1..10)
};

inline constexpr int kCriterionCount = 10;

/// One acceptance check: pass iff `measured relation threshold`.
struct CheckResult {
  int criterion = 0;
  std::string name;
  double measured = 0.0;
  std::string relation;  // "<=" or ">="
  double threshold = 0.0;
  bool pass = false;
};

/// Sample sizes: desk runs 1e5 samples per ensemble (4e5 for TV); deep
/// multiplies them by 10.
std::vector<CheckResult> run_criterion(int criterion, const VerifyConfig& config);
std::vector<CheckResult> run_acceptance(const VerifyConfig& config);

/// Density checks (normalization, sampled blocks, ratio maximiser).
/// Criterion 9 is this list at N = 1e5.
std::vector<CheckResult> density_checks(std::uint64_t seed, std::size_t N, unsigned workers = 1);

bool all_passed(const std::vector<CheckResult>& checks);

/// Header: criterion,check,measured,relation,threshold,result
void write_checks_csv(std::ostream& out, const std::vector<CheckResult>& checks);

}  // namespace symmpoly
