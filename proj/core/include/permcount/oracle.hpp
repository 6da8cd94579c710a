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

// Exhaustive counting over GL3(Z_n) and GL2(Z_n).
//
// Nothing in this file consults a closed form. The naive engine evaluates
// every n^9 matrix. The tiered engine fixes the first two rows (n^6
// prefixes), turns the permanent and determinant into linear forms in the
// third row, and then either walks all n^3 third rows (any n) or counts
// solutions of the resulting linear system over F_p by rank (prime n).
// Work is split by first-row index into contiguous shards; each shard keeps
// a private 64-bit tally and shards are merged in index order, so results
// do not depend on the thread count.

#ifndef PERMCOUNT_ORACLE_HPP
#define PERMCOUNT_ORACLE_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "permcount/closed_form.hpp"
#include "permcount/count_table.hpp"
#include "permcount/matrices.hpp"
#include "permcount/modring.hpp"

namespace permcount {

struct OracleBounds {
  std::uint64_t naive_max = 8;
  std::uint64_t tiered_max = 16;
  std::uint64_t census2_max = 50;
};

/// Thrown when a census is requested above its configured bound.
class ModulusTooLarge : public std::length_error {
 public:
  ModulusTooLarge(const std::string& what, std::uint64_t bound)
      : std::length_error(what), bound_(bound) {}
  std::uint64_t bound() const { return bound_; }

 private:
  std::uint64_t bound_;
};

/// Called with (prefixes processed, total prefixes). May be invoked from
/// worker threads, serialized by the engine.
using ProgressHook = std::function<void(std::uint64_t, std::uint64_t)>;

struct CensusOptions {
  unsigned threads = 0;  // 0: std::thread::hardware_concurrency()
  OracleBounds bounds;
  ProgressHook progress;
  // Disables the prime-field fast path; every third row is enumerated.
  bool force_generic = false;
};

/// Per-x, per-class counts over a prime power p^k. The class is taken mod p.
/// `unclassified[x]` counts invertible matrices with no unit among the five
/// sub-permanents; it is expected to be zero everywhere.
struct ClassCensus {
  std::uint64_t p = 0;
  unsigned k = 0;
  std::uint64_t modulus = 0;
  std::vector<std::array<Natural, 5>> counts;
  std::vector<Natural> unclassified;

  const Natural& at(std::uint64_t x, ClassLabel label) const {
    return counts.at(x).at(static_cast<std::size_t>(label_index(label)));
  }
  Natural row_total(std::uint64_t x) const;
  CountTable marginal() const;
};

/// G(p, 0) split by the zero pattern of the first two rows.
struct CaseCensus {
  std::uint64_t p = 0;
  std::array<Natural, 7> counts;

  const Natural& at(CaseRow row) const { return counts[static_cast<std::size_t>(row)]; }
  Natural total() const;
};

CountTable census_naive(const Modulus& n, const CensusOptions& opts = {});
CountTable census_tiered(const Modulus& n, const CensusOptions& opts = {});

/// census_naive within its bound, census_tiered above it.
CountTable census(const Modulus& n, const CensusOptions& opts = {});

ClassCensus class_census(std::uint64_t p, unsigned k, const CensusOptions& opts = {});

CaseCensus case_census_oracle(std::uint64_t p, const CensusOptions& opts = {});

/// Exhaustive census of GL2(Z_n) by permanent.
CountTable census_2x2(const Modulus& n, const CensusOptions& opts = {});

unsigned resolve_threads(unsigned requested);

}  // namespace permcount

#endif  // PERMCOUNT_ORACLE_HPP
