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

// Reference counts computed with plain integer loops, sharing no code with
// the library under test.

#ifndef PERMCOUNT_TESTS_BRUTE_HPP
#define PERMCOUNT_TESTS_BRUTE_HPP

#include <cstdint>
#include <numeric>
#include <vector>

namespace brute {

inline std::int64_t md(std::int64_t v, std::int64_t n) { return ((v % n) + n) % n; }

// counts[x] over all invertible 3x3 matrices mod n. Feasible for n <= 6.
inline std::vector<std::uint64_t> census3(std::int64_t n) {
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(n), 0);
  std::int64_t a[9];
  const std::int64_t total = n * n * n * n * n * n * n * n * n;
  for (std::int64_t idx = 0; idx < total; ++idx) {
    std::int64_t v = idx;
    for (int i = 0; i < 9; ++i) {
      a[i] = v % n;
      v /= n;
    }
    const std::int64_t t1 = a[0] * a[4] * a[8], t2 = a[1] * a[5] * a[6], t3 = a[2] * a[3] * a[7];
    const std::int64_t s1 = a[2] * a[4] * a[6], s2 = a[0] * a[5] * a[7], s3 = a[1] * a[3] * a[8];
    const std::int64_t det = md(t1 + t2 + t3 - s1 - s2 - s3, n);
    if (std::gcd(det, n) != 1) continue;
    ++counts[static_cast<std::size_t>(md(t1 + t2 + t3 + s1 + s2 + s3, n))];
  }
  return counts;
}

inline std::vector<std::uint64_t> census2(std::int64_t n) {
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(n), 0);
  for (std::int64_t a = 0; a < n; ++a)
    for (std::int64_t b = 0; b < n; ++b)
      for (std::int64_t c = 0; c < n; ++c)
        for (std::int64_t d = 0; d < n; ++d)
          if (std::gcd(md(a * d - b * c, n), n) == 1)
            ++counts[static_cast<std::size_t>(md(a * d + b * c, n))];
  return counts;
}

// Trial-division factor list with multiplicity.
inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    while (n % d == 0) {
      out.push_back(d);
      n /= d;
    }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace brute

#endif  // PERMCOUNT_TESTS_BRUTE_HPP
