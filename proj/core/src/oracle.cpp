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

#include "permcount/oracle.hpp"

#include <numeric>
#include <string>
#include <thread>

#include "enumeration.hpp"
#include "prefix_forms.hpp"
#include "prime_field_count.hpp"
#include "sharding.hpp"

namespace permcount {
namespace {

using detail::checked_add;
using detail::decode_row;
using detail::PrefixForms;
using detail::Row;

void require_bound(std::uint64_t n, std::uint64_t bound, const char* engine) {
  if (n > bound) {
    throw ModulusTooLarge(std::string(engine) + ": modulus " + std::to_string(n) +
                              " exceeds bound " + std::to_string(bound),
                          bound);
  }
}

// unit[v] for v in [0, 2n), so a sum of two canonical residues can be looked
// up without reducing it first.
std::vector<std::uint8_t> unit_table_2n(std::uint64_t n) {
  std::vector<std::uint8_t> t(2 * n);
  for (std::uint64_t v = 0; v < 2 * n; ++v) t[v] = std::gcd(v % n, n) == 1;
  return t;
}

bool can_be_invertible(const PrefixForms& f, std::uint64_t n) {
  std::uint64_t g = std::gcd(std::gcd(f.det[0], f.det[1]), std::gcd(f.det[2], n));
  return g == 1;
}

// Adds, for every third row making the matrix invertible, one to
// tally[perm mod n]. Walks all n^3 third rows.
void tally_third_rows(const PrefixForms& f, std::uint64_t n,
                      const std::vector<std::uint8_t>& unit2,
                      std::vector<std::uint64_t>& cz, std::vector<std::uint64_t>& dz,
                      std::uint64_t* tally) {
  for (std::uint64_t z = 0; z < n; ++z) {
    cz[z] = f.perm[2] * z % n;
    dz[z] = f.det[2] * z % n;
  }
  std::uint64_t px = 0, dx = 0;
  for (std::uint64_t x = 0; x < n; ++x) {
    std::uint64_t pxy = px, dxy = dx;
    for (std::uint64_t y = 0; y < n; ++y) {
      for (std::uint64_t z = 0; z < n; ++z) {
        std::uint64_t perm = pxy + cz[z];
        perm -= perm >= n ? n : 0;
        tally[perm] += unit2[dxy + dz[z]];
      }
      pxy += f.perm[1];
      pxy -= pxy >= n ? n : 0;
      dxy += f.det[1];
      dxy -= dxy >= n ? n : 0;
    }
    px += f.perm[0];
    px -= px >= n ? n : 0;
    dx += f.det[0];
    dx -= dx >= n ? n : 0;
  }
}

CountTable merge(std::uint64_t n, const std::vector<std::vector<std::uint64_t>>& shards) {
  CountTable t(n);
  for (std::uint64_t x = 0; x < n; ++x) {
    std::uint64_t sum = 0;
    for (const auto& s : shards) sum = checked_add(sum, s[x]);
    t.counts[x] = sum;
  }
  return t;
}

CountTable census_generic(std::uint64_t n, const CensusOptions& opts) {
  const auto unit2 = unit_table_2n(n);
  using Shard = std::vector<std::uint64_t>;
  auto shards = detail::run_shards<Shard>(
      n, opts, [n] { return Shard(n, 0); },
      [&](Shard& tally, std::uint64_t r) {
        const Row a = decode_row(r, n);
        std::vector<std::uint64_t> cz(n), dz(n);
        for (std::uint64_t s = 0; s < n * n * n; ++s) {
          const PrefixForms f = detail::prefix_forms(a, decode_row(s, n), n);
          if (!can_be_invertible(f, n)) continue;
          tally_third_rows(f, n, unit2, cz, dz, tally.data());
        }
      });
  return merge(n, shards);
}

CountTable census_prime(std::uint64_t p, const CensusOptions& opts) {
  const detail::PrimeField field(p);
  using Shard = std::array<std::uint64_t, 2>;
  auto shards = detail::run_shards<Shard>(
      p, opts, [] { return Shard{0, 0}; },
      [&](Shard& tally, std::uint64_t r) {
        const Row a = decode_row(r, p);
        for (std::uint64_t s = 0; s < p * p * p; ++s) {
          const auto c = detail::count_invertible(field, detail::prefix_forms(a, decode_row(s, p), p));
          tally[0] += static_cast<std::uint64_t>(c.zero);
          tally[1] += static_cast<std::uint64_t>(c.nonzero);
        }
      });
  std::uint64_t zero = 0, nonzero = 0;
  for (const auto& s : shards) {
    zero = checked_add(zero, s[0]);
    nonzero = checked_add(nonzero, s[1]);
  }
  CountTable t(p);
  t.counts[0] = zero;
  for (std::uint64_t x = 1; x < p; ++x) t.counts[x] = nonzero;
  return t;
}

int count_nonzero(const Row& r) { return (r[0] != 0) + (r[1] != 0) + (r[2] != 0); }

}  // namespace

namespace detail {

ClassTally enumerate_classes(std::uint64_t n, std::uint64_t p, const CensusOptions& opts) {
  if (p < 2 || n % p != 0) throw std::invalid_argument("class prime must divide the modulus");
  check_tally_capacity(n);
  const auto unit2 = unit_table_2n(n);
  std::vector<std::uint64_t> modp(n);
  for (std::uint64_t v = 0; v < n; ++v) modp[v] = v % p;

  using Shard = std::vector<std::uint64_t>;
  auto shards = run_shards<Shard>(
      n, opts, [n] { return Shard(6 * n, 0); },
      [&](Shard& tally, std::uint64_t r) {
        const Row a = decode_row(r, n);
        std::vector<std::uint8_t> labels(p * p * p);
        std::vector<std::uint64_t> cz(n), dz(n);
        for (std::uint64_t s = 0; s < n * n * n; ++s) {
          const PrefixForms f = prefix_forms(a, decode_row(s, n), n);
          if (!can_be_invertible(f, n)) continue;
          // First unit sub-permanent for each third row mod p.
          for (std::uint64_t v = 0; v < p * p * p; ++v) {
            const Row t = decode_row(v, p);
            std::uint8_t label = 5;
            for (std::uint8_t k = 0; k < 5; ++k) {
              const auto& c = f.sub[k];
              if ((c[0] * t[0] + c[1] * t[1] + c[2] * t[2]) % p != 0) {
                label = k;
                break;
              }
            }
            labels[v] = label;
          }
          for (std::uint64_t z = 0; z < n; ++z) {
            cz[z] = f.perm[2] * z % n;
            dz[z] = f.det[2] * z % n;
          }
          for (std::uint64_t x = 0; x < n; ++x) {
            for (std::uint64_t y = 0; y < n; ++y) {
              const std::uint64_t pxy = (f.perm[0] * x + f.perm[1] * y) % n;
              const std::uint64_t dxy = (f.det[0] * x + f.det[1] * y) % n;
              const std::uint64_t base = (modp[x] * p + modp[y]) * p;
              for (std::uint64_t z = 0; z < n; ++z) {
                if (!unit2[dxy + dz[z]]) continue;
                std::uint64_t perm = pxy + cz[z];
                perm -= perm >= n ? n : 0;
                ++tally[labels[base + modp[z]] * n + perm];
              }
            }
          }
        }
      });

  ClassTally out{n, std::vector<std::uint64_t>(6 * n, 0)};
  for (const auto& s : shards)
    for (std::size_t i = 0; i < s.size(); ++i) out.counts[i] = checked_add(out.counts[i], s[i]);
  return out;
}

}  // namespace detail

unsigned resolve_threads(unsigned requested) {
  if (requested > 0) return requested;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

Natural ClassCensus::row_total(std::uint64_t x) const {
  Natural t = 0;
  for (const auto& c : counts.at(x)) t += c;
  return t;
}

CountTable ClassCensus::marginal() const {
  CountTable t(modulus);
  for (std::uint64_t x = 0; x < modulus; ++x) t.counts[x] = row_total(x) + unclassified[x];
  return t;
}

Natural CaseCensus::total() const {
  Natural t = 0;
  for (const auto& c : counts) t += c;
  return t;
}

CountTable census_naive(const Modulus& modulus, const CensusOptions& opts) {
  const std::uint64_t n = modulus.n();
  require_bound(n, opts.bounds.naive_max, "census_naive");
  detail::check_tally_capacity(n);
  using Shard = std::vector<std::uint64_t>;
  auto shards = detail::run_shards<Shard>(
      n, opts, [n] { return Shard(n, 0); },
      [n](Shard& tally, std::uint64_t r) {
        const Row a = decode_row(r, n);
        for (std::uint64_t s = 0; s < n * n * n; ++s) {
          const Row b = decode_row(s, n);
          for (std::uint64_t t = 0; t < n * n * n; ++t) {
            const Row c = decode_row(t, n);
            const std::uint64_t pos = a[0] * b[1] * c[2] + a[1] * b[2] * c[0] + a[2] * b[0] * c[1];
            const std::uint64_t neg = a[0] * b[2] * c[1] + a[1] * b[0] * c[2] + a[2] * b[1] * c[0];
            const std::uint64_t det = (pos % n + n - neg % n) % n;
            if (std::gcd(det, n) != 1) continue;
            ++tally[(pos + neg) % n];
          }
        }
      });
  return merge(n, shards);
}

CountTable census_tiered(const Modulus& modulus, const CensusOptions& opts) {
  const std::uint64_t n = modulus.n();
  require_bound(n, opts.bounds.tiered_max, "census_tiered");
  detail::check_tally_capacity(n);
  if (modulus.is_prime() && !opts.force_generic) return census_prime(n, opts);
  return census_generic(n, opts);
}

CountTable census(const Modulus& n, const CensusOptions& opts) {
  if (n.n() <= opts.bounds.naive_max) return census_naive(n, opts);
  return census_tiered(n, opts);
}

ClassCensus class_census(std::uint64_t p, unsigned k, const CensusOptions& opts) {
  if (!is_prime(p) || k == 0) throw std::invalid_argument("class census needs a prime power");
  const std::uint64_t n = PrimePower{p, k}.value();
  require_bound(n, opts.bounds.tiered_max, "class_census");

  ClassCensus out;
  out.p = p;
  out.k = k;
  out.modulus = n;
  out.counts.assign(n, {});
  out.unclassified.assign(n, 0);

  if (k == 1 && !opts.force_generic) {
    const detail::PrimeField field(p);
    using Shard = std::array<std::array<std::uint64_t, 2>, 6>;
    auto shards = detail::run_shards<Shard>(
        p, opts, [] { return Shard{}; },
        [&](Shard& tally, std::uint64_t r) {
          const Row a = decode_row(r, p);
          for (std::uint64_t s = 0; s < p * p * p; ++s) {
            const auto by_class =
                detail::count_by_class(field, detail::prefix_forms(a, decode_row(s, p), p));
            for (int l = 0; l < 6; ++l) {
              tally[l][0] += static_cast<std::uint64_t>(by_class[l].zero);
              tally[l][1] += static_cast<std::uint64_t>(by_class[l].nonzero);
            }
          }
        });
    for (int l = 0; l < 6; ++l) {
      std::uint64_t zero = 0, nonzero = 0;
      for (const auto& s : shards) {
        zero = checked_add(zero, s[l][0]);
        nonzero = checked_add(nonzero, s[l][1]);
      }
      for (std::uint64_t x = 0; x < p; ++x) {
        const std::uint64_t v = x == 0 ? zero : nonzero;
        if (l == 5) {
          out.unclassified[x] = v;
        } else {
          out.counts[x][l] = v;
        }
      }
    }
    return out;
  }

  const auto tally = detail::enumerate_classes(n, p, opts);
  for (std::uint64_t x = 0; x < n; ++x) {
    for (int l = 0; l < 5; ++l) out.counts[x][l] = tally.at(l, x);
    out.unclassified[x] = tally.at(5, x);
  }
  return out;
}

CaseCensus case_census_oracle(std::uint64_t p, const CensusOptions& opts) {
  if (!is_prime(p) || p == 2) throw std::invalid_argument("case census needs an odd prime");
  require_bound(p, opts.bounds.tiered_max, "case_census_oracle");

  const detail::PrimeField field(p);
  const auto unit2 = unit_table_2n(p);
  using Shard = std::array<std::uint64_t, 7>;
  auto shards = detail::run_shards<Shard>(
      p, opts, [] { return Shard{}; },
      [&](Shard& tally, std::uint64_t r) {
        const Row a = decode_row(r, p);
        const int first = count_nonzero(a);
        if (first == 0) return;
        std::vector<std::uint64_t> cz(p), dz(p), third(p);
        for (std::uint64_t s = 0; s < p * p * p; ++s) {
          const Row b = decode_row(s, p);
          const int second = count_nonzero(b);
          if (second == 0) continue;
          const PrefixForms f = detail::prefix_forms(a, b, p);
          std::uint64_t zero_perm = 0;
          if (opts.force_generic) {
            std::fill(third.begin(), third.end(), 0);
            if (can_be_invertible(f, p)) tally_third_rows(f, p, unit2, cz, dz, third.data());
            zero_perm = third[0];
          } else {
            zero_perm = static_cast<std::uint64_t>(detail::count_invertible(field, f).zero);
          }
          tally[static_cast<std::size_t>(case_row_for(first, second))] += zero_perm;
        }
      });

  CaseCensus out;
  out.p = p;
  for (std::size_t i = 0; i < 7; ++i) {
    std::uint64_t v = 0;
    for (const auto& s : shards) v = checked_add(v, s[i]);
    out.counts[i] = v;
  }
  return out;
}

CountTable census_2x2(const Modulus& modulus, const CensusOptions& opts) {
  const std::uint64_t n = modulus.n();
  require_bound(n, opts.bounds.census2_max, "census_2x2");
  std::vector<std::uint64_t> tally(n, 0);
  for (std::uint64_t a = 0; a < n; ++a)
    for (std::uint64_t b = 0; b < n; ++b)
      for (std::uint64_t c = 0; c < n; ++c)
        for (std::uint64_t d = 0; d < n; ++d) {
          const std::uint64_t det = (a * d % n + n - b * c % n) % n;
          if (std::gcd(det, n) == 1) ++tally[(a * d + b * c) % n];
        }
  CountTable t(n);
  for (std::uint64_t x = 0; x < n; ++x) t.counts[x] = tally[x];
  return t;
}

}  // namespace permcount
