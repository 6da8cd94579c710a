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

#ifndef PERMCOUNT_TOOLS_CLI_HPP
#define PERMCOUNT_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "permcount/verify.hpp"

namespace permcount::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kUsage = 2,
  kResourceBound = 3,
};

/// Runs one invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int verify_exit_code(const std::vector<CheckResult>& results);

}  // namespace permcount::cli

#endif  // PERMCOUNT_TOOLS_CLI_HPP
