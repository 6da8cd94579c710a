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

#include "permcount/closed_form.hpp"

#include <stdexcept>
#include <string>

namespace permcount {
namespace {

void require_prime(std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
}

void require_odd_prime(std::uint64_t p) {
  require_prime(p);
  if (p == 2) throw std::invalid_argument("requires an odd prime");
}

void require_exponent(unsigned k) {
  if (k == 0) throw std::invalid_argument("exponent must be at least 1");
}

// p^(8(k-1)), the lifting factor from Z_p to Z_{p^k}.
Natural lift_factor(std::uint64_t p, unsigned k) { return ipow(p, 8 * (k - 1)); }

}  // namespace

std::string_view branch_name(Branch b) {
  return b == Branch::QR ? "qr" : "non-qr";
}

Natural gl3_order(std::uint64_t p, unsigned k) {
  require_prime(p);
  require_exponent(k);
  const Natural q = p;
  const Natural q3 = q * q * q;
  return ipow(p, 9 * (k - 1)) * (q3 - 1) * (q3 - q) * (q3 - q * q);
}

Branch qr_branch(std::uint64_t p) {
  require_odd_prime(p);
  return is_quadratic_residue(static_cast<std::int64_t>(p) - 3, p) ? Branch::QR
                                                                  : Branch::NonQR;
}

Natural g2_prime(std::uint64_t p, std::int64_t x) {
  require_prime(p);
  // Over Z_2 the permanent equals the determinant.
  if (p == 2) return reduce(x, p) == 0 ? 0 : 6;
  const Natural q = p;
  if (reduce(x, p) == 0) return (q - 1) * (q - 1) * (q - 1);
  return (q - 1) * (q * q + 1);
}

Natural g_p0(std::uint64_t p) {
  require_prime(p);
  if (p == 2) return 0;
  const Natural q = p;
  const Natural q1_4 = ipow(p - 1, 4);
  if (qr_branch(p) == Branch::QR) {
    const Natural s = q + 1;
    return q * q1_4 * (s * s * s + 1);
  }
  return q * q * q1_4 * (q * q + 3 * q + 5);
}

Natural g_pk0(std::uint64_t p, unsigned k) {
  require_exponent(k);
  return lift_factor(p, k) * g_p0(p);
}

Natural g_pk1(std::uint64_t p, unsigned k) {
  require_exponent(k);
  const Natural numerator = gl3_order(p, 1) - g_p0(p);
  const Natural denominator = p - 1;
  if (numerator % denominator != 0)
    throw std::logic_error("g(p,1) division is not exact for p = " + std::to_string(p));
  return lift_factor(p, k) * (numerator / denominator);
}

Natural g_pk(std::uint64_t p, unsigned k, std::int64_t x) {
  require_exponent(k);
  const std::uint64_t pk = PrimePower{p, k}.value();
  if (reduce(x, pk) % p == 0) return g_pk0(p, k);
  return g_pk1(p, k);
}

Natural g_n(const Modulus& n, std::int64_t x) {
  Natural result = 1;
  for (const auto& f : n.factors()) {
    result *= g_pk(f.p, f.k, x);
    if (result == 0) break;
  }
  return result;
}

Natural g_p0_class(std::uint64_t p, ClassLabel label) {
  require_odd_prime(p);
  const Natural q = p;
  const Natural base = q * ipow(p - 1, 4);  // the (2,2) class
  switch (label) {
    case ClassLabel::C22: return base;
    case ClassLabel::C21: return (3 * q - 1) * base;
    case ClassLabel::C13: return (q - 1) * base;
    case ClassLabel::C12: return q * (q + 1) * base;
    case ClassLabel::C11:
      if (qr_branch(p) == Branch::QR) return (q + 3) * (q * q - q + 1) * base;
      return (q * q * q + 2 * q * q + 1) * base;
    case ClassLabel::NonInvertible: break;
  }
  throw std::invalid_argument("no class count for NonInvertible");
}

Natural g_pk0_class(std::uint64_t p, unsigned k, ClassLabel label) {
  require_exponent(k);
  return lift_factor(p, k) * g_p0_class(p, label);
}

std::string_view case_row_name(CaseRow row) {
  switch (row) {
    case CaseRow::FirstOneNonzero: return "first-one-nonzero";
    case CaseRow::FirstOneZeroSecondOneNonzero: return "first-one-zero/second-one-nonzero";
    case CaseRow::FirstOneZeroSecondOneZero: return "first-one-zero/second-one-zero";
    case CaseRow::FirstOneZeroSecondAllNonzero: return "first-one-zero/second-all-nonzero";
    case CaseRow::FirstAllNonzeroSecondOneNonzero: return "first-all-nonzero/second-one-nonzero";
    case CaseRow::FirstAllNonzeroSecondOneZero: return "first-all-nonzero/second-one-zero";
    case CaseRow::FirstAllNonzeroSecondAllNonzero: return "first-all-nonzero/second-all-nonzero";
  }
  return "?";
}

CaseRow case_row_for(int first_nonzero, int second_nonzero) {
  if (first_nonzero < 1 || first_nonzero > 3 || second_nonzero < 1 || second_nonzero > 3)
    throw std::invalid_argument("rows of an invertible matrix have 1..3 nonzero entries");
  if (first_nonzero == 1) return CaseRow::FirstOneNonzero;
  static constexpr CaseRow kTwo[] = {CaseRow::FirstOneZeroSecondOneNonzero,
                                     CaseRow::FirstOneZeroSecondOneZero,
                                     CaseRow::FirstOneZeroSecondAllNonzero};
  static constexpr CaseRow kThree[] = {CaseRow::FirstAllNonzeroSecondOneNonzero,
                                       CaseRow::FirstAllNonzeroSecondOneZero,
                                       CaseRow::FirstAllNonzeroSecondAllNonzero};
  return first_nonzero == 2 ? kTwo[second_nonzero - 1] : kThree[second_nonzero - 1];
}

std::vector<CaseCensusRow> case_census_closed(std::uint64_t p) {
  require_odd_prime(p);
  const Natural q = p;
  auto q1 = [&](unsigned e) { return ipow(p - 1, e); };
  const Natural all_nonzero =
      qr_branch(p) == Branch::QR ? q * q1(5) * (q * q - 2 * q - 2)
                                 : q * q * q1(5) * (q - 2);
  return {
      {CaseRow::FirstOneNonzero, 3 * q * q * q1(4)},
      {CaseRow::FirstOneZeroSecondOneNonzero, 3 * q * q1(4)},
      // Coefficient 9, not 6: with 6p(p-1)^5 the rows no longer sum to
      // g(p, 0), and exhaustive counts for p = 3, 5, 7 agree with 9.
      {CaseRow::FirstOneZeroSecondOneZero, 9 * q * q1(5) + 3 * q * q1(4)},
      {CaseRow::FirstOneZeroSecondAllNonzero, 3 * q * q1(6)},
      {CaseRow::FirstAllNonzeroSecondOneNonzero, 3 * q * q1(5)},
      {CaseRow::FirstAllNonzeroSecondOneZero, 3 * q * q1(6)},
      {CaseRow::FirstAllNonzeroSecondAllNonzero, all_nonzero},
  };
}

CountTable closed_form_table(const Modulus& n) {
  CountTable t(n.n());
  for (std::uint64_t x = 0; x < n.n(); ++x) t.counts[x] = g_n(n, static_cast<std::int64_t>(x));
  return t;
}

}  // namespace permcount
