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

#include "permcount/structure_maps.hpp"

#include <numeric>
#include <string>

#include "enumeration.hpp"
#include "sharding.hpp"

namespace permcount {
namespace {

std::uint64_t prime_power(std::uint64_t p, unsigned k) {
  if (!is_prime(p) || k == 0) throw std::invalid_argument("expected a prime power");
  return PrimePower{p, k}.value();
}

struct PermDet {
  std::uint64_t perm;
  std::uint64_t det;
};

PermDet perm_det(const std::array<std::uint64_t, 9>& e, std::uint64_t n) {
  const std::uint64_t pos = e[0] * e[4] % n * e[8] + e[1] * e[5] % n * e[6] + e[2] * e[3] % n * e[7];
  const std::uint64_t neg = e[0] * e[5] % n * e[7] + e[1] * e[3] % n * e[8] + e[2] * e[4] % n * e[6];
  return {(pos + neg) % n, (pos % n + n - neg % n) % n};
}

}  // namespace

ShiftResult psi_shift(const Mat3& m, std::int64_t x, ClassLabel label, std::uint64_t p,
                      unsigned k) {
  const std::uint64_t n = prime_power(p, k);
  if (m.modulus() != n) throw std::invalid_argument("matrix modulus must be p^k");
  const Residue shift_by(x, n);
  if (shift_by.value() % p != 0)
    throw ShiftNotDivisible(std::to_string(x) + " is not divisible by " + std::to_string(p));
  const auto [row, col] = pivot_entry(label);
  const Residue pivot = pivot_sub_permanent(sub_permanents(m), label);
  if (!is_unit(pivot))
    throw PivotNotUnit("pivot sub-permanent " + std::to_string(pivot.value()) +
                       " is not a unit mod " + std::to_string(n));
  const Residue shift = shift_by * mod_inv(pivot);
  const Residue entry = Residue(m.at(row, col), n) + shift;
  return ShiftResult{m.with_entry(row, col, static_cast<std::int64_t>(entry.value())), row, col,
                     shift};
}

Mat3 project(const Mat3& m, std::uint64_t p) { return m.reduced(p); }

Natural fiber_count(const Mat3& a, std::uint64_t p, unsigned k, const CensusOptions& opts) {
  const std::uint64_t n = prime_power(p, k);
  if (a.modulus() != p) throw std::invalid_argument("fiber base must live over Z_p");
  if (!is_invertible(a) || permanent3(a).value() != 0)
    throw std::invalid_argument("fiber base must be invertible with permanent 0 mod p");
  const std::uint64_t lifts_per_entry = n / p;
  if (lifts_per_entry > 1) detail::check_tally_capacity(lifts_per_entry);
  const std::uint64_t q = lifts_per_entry;

  // Digits of the lift, one per entry; entry i becomes a_i + p * digit_i.
  auto shards = detail::run_shards<std::uint64_t>(
      q, opts, [] { return std::uint64_t{0}; },
      [&](std::uint64_t& hits, std::uint64_t first) {
        const auto d0 = detail::decode_row(first, q);
        std::array<std::uint64_t, 9> e{};
        for (int i = 0; i < 3; ++i) e[i] = a.entries()[i] + p * d0[i];
        const std::uint64_t rest = q * q * q * q * q * q;
        for (std::uint64_t idx = 0; idx < rest; ++idx) {
          std::uint64_t v = idx;
          for (int i = 8; i >= 3; --i) {
            e[i] = a.entries()[i] + p * (v % q);
            v /= q;
          }
          const auto pd = perm_det(e, n);
          if (pd.perm % p == 0 && std::gcd(pd.det, n) == 1) ++hits;
        }
      });
  Natural total = 0;
  for (auto h : shards) total += h;
  return total;
}

Mat3 witness(ClassLabel label, std::uint64_t p, unsigned k, std::int64_t x) {
  if (p == 2) throw std::invalid_argument("witness matrices need an odd prime");
  const std::uint64_t n = prime_power(p, k);
  const Residue xr(x, n);
  if (xr.value() % p != 0) throw ShiftNotDivisible("witness needs p | x");
  const auto v = [](const Residue& r) { return static_cast<std::int64_t>(r.value()); };
  const Residue one(1, n);
  const Residue half = mod_inv(Residue(2, n));
  const Residue xm1 = xr - one;
  switch (label) {
    case ClassLabel::C11:
      return Mat3(n, {v(xm1 * half), v((xr + one) * half), 0, 1, 1, 0, 0, 0, 1});
    case ClassLabel::C12:
      return Mat3(n, {1, 0, 0, 1, 1, 1, 0, 1, v(xm1)});
    case ClassLabel::C13:
      return Mat3(n, {1, 0, 0, v(mod_inv(xm1)), 1, 1, v(xm1), 1, v(xm1)});
    case ClassLabel::C21:
      return Mat3(n, {0, 0, 1, 1, 1, 0, v(xm1), 1, 0});
    case ClassLabel::C22:
      return Mat3(n, {1, 1, 1, 0, 1, 1, 0, 1, v(xm1)});
    case ClassLabel::NonInvertible:
      break;
  }
  throw std::invalid_argument("no witness for NonInvertible");
}

EmptinessReport emptiness_scan(std::uint64_t p, unsigned k, const CensusOptions& opts) {
  const std::uint64_t n = prime_power(p, k);
  if (n > opts.bounds.tiered_max)
    throw ModulusTooLarge("emptiness_scan: modulus " + std::to_string(n) + " exceeds bound " +
                              std::to_string(opts.bounds.tiered_max),
                          opts.bounds.tiered_max);
  const auto tally = detail::enumerate_classes(n, p, opts);
  EmptinessReport r;
  r.p = p;
  r.k = k;
  r.invertible = 0;
  r.violations = 0;
  for (std::uint64_t x = 0; x < n; ++x) {
    for (int l = 0; l < 6; ++l) r.invertible += tally.at(l, x);
    r.violations += tally.at(5, x);
  }
  return r;
}

std::vector<ShiftBijectionRow> shift_bijection_scan(std::uint64_t p, unsigned k,
                                                    const CensusOptions& opts) {
  const std::uint64_t n = prime_power(p, k);
  if (n > opts.bounds.tiered_max)
    throw ModulusTooLarge("shift_bijection_scan: modulus " + std::to_string(n) +
                              " exceeds bound " + std::to_string(opts.bounds.tiered_max),
                          opts.bounds.tiered_max);
  const std::uint64_t shifts = n / p;  // x = 0, p, 2p, ...
  const std::size_t cells = shifts * 5;

  struct Cell {
    std::uint64_t source = 0, images = 0, failures = 0;
  };
  using Shard = std::vector<Cell>;
  auto shards = detail::run_shards<Shard>(
      n, opts, [cells] { return Shard(cells); },
      [&](Shard& tally, std::uint64_t r) {
        const auto a = detail::decode_row(r, n);
        std::array<std::uint64_t, 9> e{a[0], a[1], a[2]};
        const std::uint64_t rest = n * n * n * n * n * n;
        for (std::uint64_t idx = 0; idx < rest; ++idx) {
          std::uint64_t v = idx;
          for (int i = 8; i >= 3; --i) {
            e[i] = v % n;
            v /= n;
          }
          const auto pd = perm_det(e, n);
          if (pd.perm != 0 || std::gcd(pd.det, n) != 1) continue;
          const Mat3 m(n, {static_cast<std::int64_t>(e[0]), static_cast<std::int64_t>(e[1]),
                           static_cast<std::int64_t>(e[2]), static_cast<std::int64_t>(e[3]),
                           static_cast<std::int64_t>(e[4]), static_cast<std::int64_t>(e[5]),
                           static_cast<std::int64_t>(e[6]), static_cast<std::int64_t>(e[7]),
                           static_cast<std::int64_t>(e[8])});
          const ClassLabel label = classify(m, p);
          if (label == ClassLabel::NonInvertible) continue;  // counted by emptiness_scan
          for (std::uint64_t s = 0; s < shifts; ++s) {
            const auto x = static_cast<std::int64_t>(s * p);
            Cell& cell = tally[s * 5 + static_cast<std::size_t>(label_index(label))];
            ++cell.source;
            const Mat3 image = psi_shift(m, x, label, p, k).image;
            if (permanent3(image).value() == static_cast<std::uint64_t>(x) &&
                is_invertible(image) && classify(image, p) == label)
              ++cell.images;
            if (psi_shift(image, -x, label, p, k).image != m) ++cell.failures;
          }
        }
      });

  std::vector<ShiftBijectionRow> out;
  out.reserve(cells);
  for (std::uint64_t s = 0; s < shifts; ++s) {
    for (ClassLabel l : kClassLabels) {
      ShiftBijectionRow row;
      row.x = static_cast<std::int64_t>(s * p);
      row.label = l;
      const std::size_t i = s * 5 + static_cast<std::size_t>(label_index(l));
      for (const auto& sh : shards) {
        row.source = detail::checked_add(row.source, sh[i].source);
        row.images_in_class = detail::checked_add(row.images_in_class, sh[i].images);
        row.round_trip_failures = detail::checked_add(row.round_trip_failures, sh[i].failures);
      }
      out.push_back(row);
    }
  }
  return out;
}

}  // namespace permcount
