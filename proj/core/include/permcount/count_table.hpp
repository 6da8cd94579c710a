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

#ifndef PERMCOUNT_COUNT_TABLE_HPP
#define PERMCOUNT_COUNT_TABLE_HPP

#include <cstdint>
#include <vector>

#include "permcount/modring.hpp"

namespace permcount {

/// counts[x] for every residue x in [0, modulus).
struct CountTable {
  std::uint64_t modulus = 1;
  std::vector<Natural> counts;

  CountTable() = default;
  explicit CountTable(std::uint64_t n) : modulus(n), counts(n) {}

  Natural total() const {
    Natural t = 0;
    for (const auto& c : counts) t += c;
    return t;
  }

  friend bool operator==(const CountTable&, const CountTable&) = default;
};

}  // namespace permcount

#endif  // PERMCOUNT_COUNT_TABLE_HPP
