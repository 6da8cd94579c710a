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

#ifndef PERMCOUNT_SRC_ENUMERATION_HPP
#define PERMCOUNT_SRC_ENUMERATION_HPP

#include <cstdint>
#include <vector>

#include "permcount/oracle.hpp"

namespace permcount::detail {

/// Invertible matrices over Z_n by (class mod p, permanent). Row-major
/// [label][x] with label 5 for "no unit sub-permanent". Every one of the
/// n^9 matrices is visited.
struct ClassTally {
  std::uint64_t n = 0;
  std::vector<std::uint64_t> counts;  // 6 * n

  std::uint64_t at(int label, std::uint64_t x) const { return counts[label * n + x]; }
};

ClassTally enumerate_classes(std::uint64_t n, std::uint64_t p, const CensusOptions& opts);

}  // namespace permcount::detail

#endif  // PERMCOUNT_SRC_ENUMERATION_HPP
