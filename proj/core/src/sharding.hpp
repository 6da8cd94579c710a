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

#ifndef PERMCOUNT_SRC_SHARDING_HPP
#define PERMCOUNT_SRC_SHARDING_HPP

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <vector>

#include "permcount/oracle.hpp"

namespace permcount::detail {

/// Splits first-row indices [0, n^3) into one contiguous range per worker.
/// `body(shard, first_row_index)` handles every matrix with that first row.
/// Shards come back in range order regardless of scheduling.
template <class Shard, class Init, class Body>
std::vector<Shard> run_shards(std::uint64_t n, const CensusOptions& opts, Init init,
                              Body body) {
  const std::uint64_t rows = n * n * n;
  const std::uint64_t workers =
      std::max<std::uint64_t>(1, std::min<std::uint64_t>(resolve_threads(opts.threads), rows));

  std::vector<Shard> shards;
  shards.reserve(workers);
  for (std::uint64_t i = 0; i < workers; ++i) shards.push_back(init());

  std::atomic<std::uint64_t> done{0};
  std::mutex progress_mu;
  const std::uint64_t total_prefixes = rows * rows;

  auto work = [&](std::uint64_t w) {
    const std::uint64_t begin = rows * w / workers;
    const std::uint64_t end = rows * (w + 1) / workers;
    for (std::uint64_t r = begin; r < end; ++r) {
      body(shards[w], r);
      if (opts.progress) {
        std::uint64_t now = done.fetch_add(rows) + rows;
        std::lock_guard lock(progress_mu);
        opts.progress(now, total_prefixes);
      }
    }
  };

  if (workers == 1) {
    work(0);
    return shards;
  }

  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::uint64_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        work(w);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return shards;
}

/// Decodes a row index in [0, n^3) into three entries, most significant first.
inline std::array<std::uint64_t, 3> decode_row(std::uint64_t index, std::uint64_t n) {
  return {index / (n * n), index / n % n, index % n};
}

/// Counts must fit a 64-bit shard tally; n^9 bounds any single count.
inline void check_tally_capacity(std::uint64_t n) {
  __extension__ unsigned __int128 v = 1;
  for (int i = 0; i < 9; ++i) v *= n;
  if (v >> 62) throw std::overflow_error("modulus too large for 64-bit tallies");
}

inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out;
  if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("tally overflow");
  return out;
}

}  // namespace permcount::detail

#endif  // PERMCOUNT_SRC_SHARDING_HPP
