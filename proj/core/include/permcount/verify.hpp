// Copyright 2026 The permcount Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Cross-check suite: exhaustive counts against closed forms and reference
// values, reported as one exact-equality CheckResult per comparison.

#ifndef PERMCOUNT_VERIFY_HPP
#define PERMCOUNT_VERIFY_HPP

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "permcount/count_table.hpp"
#include "permcount/modring.hpp"

namespace permcount {

using Params = std::vector<std::pair<std::string, std::string>>;

struct CheckResult {
  std::string check_id;
  Params params;
  Natural expected;
  Natural actual;

  bool pass() const { return expected == actual; }
};

struct CheckInfo {
  std::string_view id;
  std::string_view description;
};

/// Every check id the suite can emit. Each appears at least once in a
/// quick run.
const std::vector<CheckInfo>& check_registry();

enum class Profile { Quick, Full };

struct SuiteOptions {
  Profile profile = Profile::Quick;
  unsigned threads = 0;
  std::uint64_t seed = 0x5EED;
  std::size_t identity_samples = 100000;
};

class ModulusMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Results come back sorted by check id, then parameters.
std::vector<CheckResult> run_suite(const SuiteOptions& opts);

/// One result per x. Throws ModulusMismatch if the tables differ in modulus.
std::vector<CheckResult> diff_tables(const CountTable& expected, const CountTable& actual,
                                     std::string_view check_id = "table_diff");

void sort_results(std::vector<CheckResult>& results);

std::size_t count_failures(const std::vector<CheckResult>& results);

/// {"check_id":..,"params":{..},"expected":"..","actual":"..","status":".."}
/// per line. Counts are decimal strings so they stay exact at any size.
void write_json_lines(std::ostream& os, const std::vector<CheckResult>& results);

void write_table(std::ostream& os, const std::vector<CheckResult>& results);

}  // namespace permcount

#endif  // PERMCOUNT_VERIFY_HPP
