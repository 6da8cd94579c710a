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

#include <gtest/gtest.h>

#include <map>

#include "brute.hpp"

namespace permcount {
namespace {

Natural N(const char* s) { return Natural(s); }

TEST(Gl3Order, Examples) {
  EXPECT_EQ(gl3_order(2, 1), 168);
  EXPECT_EQ(gl3_order(3, 1), 11232);
  EXPECT_EQ(gl3_order(3, 2), 221079456);
}

TEST(Gl3Order, MatchesBruteForce) {
  for (std::int64_t n : {2, 3, 4, 5}) {
    std::uint64_t total = 0;
    for (auto c : brute::census3(n)) total += c;
    const Modulus m(static_cast<std::uint64_t>(n));
    EXPECT_EQ(gl3_order(m.factors()[0].p, m.factors()[0].k), total) << n;
  }
}

TEST(QrBranch, Examples) {
  EXPECT_EQ(qr_branch(7), Branch::QR);
  EXPECT_EQ(qr_branch(13), Branch::QR);
  EXPECT_EQ(qr_branch(3), Branch::NonQR);
  EXPECT_EQ(qr_branch(5), Branch::NonQR);
  EXPECT_EQ(qr_branch(11), Branch::NonQR);
  EXPECT_THROW(qr_branch(2), std::invalid_argument);
  EXPECT_THROW(qr_branch(9), std::invalid_argument);
}

TEST(QrBranch, AgreesWithResidueMod3) {
  for (std::uint64_t p = 5; p < 2000; ++p) {
    if (!is_prime(p)) continue;
    EXPECT_EQ(qr_branch(p) == Branch::QR, p % 3 == 1) << p;
  }
}

TEST(G2Prime, Examples) {
  EXPECT_EQ(g2_prime(3, 0), 8);
  EXPECT_EQ(g2_prime(5, 0), 64);
  EXPECT_EQ(g2_prime(5, 2), 104);
}

TEST(G2Prime, MatchesBruteForce) {
  for (std::int64_t p : {2, 3, 5, 7, 11}) {
    const auto counts = brute::census2(p);
    for (std::int64_t x = 0; x < p; ++x)
      EXPECT_EQ(g2_prime(static_cast<std::uint64_t>(p), x), counts[static_cast<std::size_t>(x)])
          << p << "," << x;
  }
}

TEST(GP0, ReferenceValues) {
  EXPECT_EQ(g_p0(2), 0);
  EXPECT_EQ(g_p0(3), 3312);
  EXPECT_EQ(g_p0(5), 288000);
  EXPECT_EQ(g_p0(7), 4653936);
  EXPECT_EQ(g_p0(11), 192390000);
  EXPECT_EQ(g_p0(13), 739964160);
  EXPECT_THROW(g_p0(9), std::invalid_argument);
}

TEST(GPk, Examples) {
  EXPECT_EQ(g_pk0(3, 2), 21730032);
  EXPECT_EQ(g_pk0(3, 1), 3312);
  EXPECT_EQ(g_pk0(2, 5), 0);
  EXPECT_EQ(g_pk1(3, 1), 3960);
  EXPECT_EQ(g_pk1(2, 1), 168);
  EXPECT_EQ(g_pk1(3, 2), 25981560);
  EXPECT_EQ(g_pk(3, 2, 3), 21730032);
  EXPECT_EQ(g_pk(3, 2, 6), 21730032);
  EXPECT_EQ(g_pk(5, 1, 2), 300000);
  EXPECT_EQ(g_pk(5, 1, -3), 300000);
  EXPECT_EQ(g_pk(5, 1, -5), 288000);
}

TEST(GN, Examples) {
  EXPECT_EQ(g_n(Modulus(6), 0), 0);
  EXPECT_EQ(g_n(Modulus(6), 1), 665280);
  EXPECT_EQ(g_n(Modulus(1), 0), 1);
}

TEST(GN, MatchesBruteForce) {
  for (std::int64_t n : {2, 3, 4, 5, 6}) {
    const auto counts = brute::census3(n);
    for (std::int64_t x = 0; x < n; ++x)
      EXPECT_EQ(g_n(Modulus(static_cast<std::uint64_t>(n)), x),
                counts[static_cast<std::size_t>(x)])
          << n << "," << x;
  }
}

TEST(GN, LargeCompositeIsExact) {
  // 739964160 = 2^8 3^6 5 13 61; g(2^8, 0) = 0 forces g(n, 0) = 0.
  EXPECT_EQ(g_n(Modulus(739964160), 0), 0);
  const Modulus m(739964160);
  Natural expected = 1;
  for (const auto& f : m.factors()) expected *= g_pk(f.p, f.k, 5);
  EXPECT_EQ(g_n(m, 5), expected);
  EXPECT_GT(g_n(m, 5), Natural(1) << 200);
}

TEST(Property, PartitionIdentity) {
  for (std::uint64_t p : {2u, 3u, 5u, 7u, 11u, 13u, 101u, 65537u}) {
    for (unsigned k = 1; k <= 4; ++k) {
      const Natural pk = ipow(p, k);
      const Natural phi = ipow(p, k - 1) * (p - 1);
      EXPECT_EQ(gl3_order(p, k), ipow(p, k - 1) * g_pk0(p, k) + phi * g_pk1(p, k))
          << p << "^" << k;
      (void)pk;
    }
  }
}

TEST(Property, SumOverResiduesIsGroupOrder) {
  for (std::uint64_t n : {2u, 12u, 30u, 49u, 72u}) {
    const Modulus m(n);
    Natural sum = 0;
    for (std::uint64_t x = 0; x < n; ++x) sum += g_n(m, static_cast<std::int64_t>(x));
    Natural order = 1;
    for (const auto& f : m.factors()) order *= gl3_order(f.p, f.k);
    EXPECT_EQ(sum, order) << n;
  }
}

TEST(Property, Multiplicative) {
  for (std::uint64_t a : {3u, 4u, 5u, 7u, 8u}) {
    for (std::uint64_t b : {9u, 11u, 25u}) {
      if (std::gcd(a, b) != 1) continue;
      for (std::int64_t x = -3; x < 40; ++x)
        EXPECT_EQ(g_n(Modulus(a * b), x), g_n(Modulus(a), x) * g_n(Modulus(b), x));
    }
  }
}

TEST(ClassCounts, ReferenceTable) {
  struct Row {
    std::uint64_t n, p;
    unsigned k;
    std::array<const char*, 6> values;
  };
  const std::vector<Row> rows = {
      {3, 3, 1, {"3312", "2208", "576", "96", "384", "48"}},
      {5, 5, 1, {"288000", "225280", "38400", "5120", "17920", "1280"}},
      {7, 7, 1, {"4653936", "3900960", "508032", "54432", "181440", "9072"}},
      {9, 3, 2, {"21730032", "14486688", "3779136", "629856", "2519424", "314928"}},
      {11, 11, 1, {"192390000", "173140000", "14520000", "1100000", "3520000", "110000"}},
      {13, 13, 1, {"739964160", "677154816", "49061376", "3234816", "10243584", "269568"}},
  };
  for (const auto& r : rows) {
    EXPECT_EQ(g_pk0(r.p, r.k), N(r.values[0])) << r.n;
    Natural sum = 0;
    for (std::size_t i = 0; i < 5; ++i) {
      EXPECT_EQ(g_pk0_class(r.p, r.k, kClassLabels[i]), N(r.values[i + 1])) << r.n;
      sum += g_pk0_class(r.p, r.k, kClassLabels[i]);
    }
    EXPECT_EQ(sum, g_pk0(r.p, r.k));
  }
}

TEST(ClassCounts, Examples) {
  EXPECT_EQ(g_p0_class(3, ClassLabel::C22), 48);
  EXPECT_EQ(g_p0_class(7, ClassLabel::C21), 181440);
  EXPECT_EQ(g_p0_class(11, ClassLabel::C11), 173140000);
  EXPECT_EQ(g_pk0_class(3, 2, ClassLabel::C22), 314928);
  EXPECT_EQ(g_pk0_class(3, 2, ClassLabel::C11), 14486688);
  EXPECT_EQ(g_pk0_class(3, 1, ClassLabel::C13), 96);
  EXPECT_THROW(g_p0_class(2, ClassLabel::C11), std::invalid_argument);
  EXPECT_THROW(g_p0_class(5, ClassLabel::NonInvertible), std::invalid_argument);
}

TEST(ClassCounts, SumToZeroCountForManyPrimes) {
  for (std::uint64_t p = 3; p < 400; ++p) {
    if (!is_prime(p)) continue;
    Natural sum = 0;
    for (ClassLabel l : kClassLabels) sum += g_p0_class(p, l);
    EXPECT_EQ(sum, g_p0(p)) << p;
  }
}

// Counts per (nonzeros in row 1, nonzeros in row 2), from a separate
// exhaustive enumeration of G(p, 0).
const std::map<std::uint64_t, std::map<std::pair<int, int>, std::uint64_t>> kPatternCensus = {
    {3, {{{1, 2}, 144}, {{1, 3}, 288}, {{2, 1}, 144}, {{2, 2}, 1008},
         {{2, 3}, 576}, {{3, 1}, 288}, {{3, 2}, 576}, {{3, 3}, 288}}},
    {5, {{{1, 2}, 3840}, {{1, 3}, 15360}, {{2, 1}, 3840}, {{2, 2}, 49920},
         {{2, 3}, 61440}, {{3, 1}, 15360}, {{3, 2}, 61440}, {{3, 3}, 76800}}},
    {7, {{{1, 2}, 27216}, {{1, 3}, 163296}, {{2, 1}, 27216}, {{2, 2}, 517104},
         {{2, 3}, 979776}, {{3, 1}, 163296}, {{3, 2}, 979776}, {{3, 3}, 1796256}}},
};

TEST(CaseCensus, MatchesPatternEnumeration) {
  for (const auto& [p, cells] : kPatternCensus) {
    std::map<CaseRow, Natural> expected;
    for (const auto& [key, count] : cells) expected[case_row_for(key.first, key.second)] += count;
    const auto rows = case_census_closed(p);
    ASSERT_EQ(rows.size(), kCaseRows.size());
    for (const auto& r : rows) EXPECT_EQ(r.count, expected[r.row]) << p << " " << case_row_name(r.row);
  }
}

TEST(CaseCensus, Examples) {
  const auto at = [](std::uint64_t p, CaseRow row) {
    for (const auto& r : case_census_closed(p))
      if (r.row == row) return r.count;
    return Natural(-1);
  };
  EXPECT_EQ(at(5, CaseRow::FirstOneNonzero), 19200);
  EXPECT_EQ(at(7, CaseRow::FirstAllNonzeroSecondAllNonzero), 1796256);
  EXPECT_THROW(case_census_closed(2), std::invalid_argument);
}

TEST(CaseCensus, RowsSumToZeroCount) {
  for (std::uint64_t p = 3; p < 300; ++p) {
    if (!is_prime(p)) continue;
    Natural sum = 0;
    for (const auto& r : case_census_closed(p)) sum += r.count;
    EXPECT_EQ(sum, g_p0(p)) << p;
  }
}

TEST(ClosedFormTable, Composite) {
  const CountTable t = closed_form_table(Modulus(12));
  ASSERT_EQ(t.counts.size(), 12u);
  EXPECT_EQ(t.total(), gl3_order(2, 2) * gl3_order(3, 1));
  for (std::uint64_t x = 0; x < 12; ++x)
    EXPECT_EQ(t.counts[x], g_n(Modulus(12), static_cast<std::int64_t>(x)));
}

}  // namespace
}  // namespace permcount
