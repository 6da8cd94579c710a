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

#include "permcount/matrices.hpp"

#include <gtest/gtest.h>

#include <random>

namespace permcount {
namespace {

const Mat3 kExample3 = Mat3(3, {1, 0, 0, 2, 1, 2, 1, 1, 1});

Mat3 all_ones(std::uint64_t n) { return Mat3(n, {1, 1, 1, 1, 1, 1, 1, 1, 1}); }

TEST(Permanent3, Examples) {
  EXPECT_EQ(permanent3(Mat3::identity(5)).value(), 1u);
  EXPECT_EQ(permanent3(kExample3).value(), 0u);
  EXPECT_EQ(permanent3(all_ones(7)).value(), 6u);
}

TEST(Determinant3, Examples) {
  EXPECT_EQ(determinant3(Mat3::identity(7)).value(), 1u);
  EXPECT_EQ(determinant3(kExample3).value(), 2u);
  EXPECT_EQ(determinant3(Mat3(5, {1, 2, 3, 1, 2, 3, 4, 0, 1})).value(), 0u);
}

TEST(TwoByTwo, Examples) {
  EXPECT_EQ(permanent2(Mat2(3, 1, 0, 0, 1)).value(), 1u);
  EXPECT_EQ(determinant2(Mat2(3, 1, 0, 0, 1)).value(), 1u);
  EXPECT_EQ(permanent2(Mat2(5, 1, 1, 1, 1)).value(), 2u);
  EXPECT_EQ(determinant2(Mat2(5, 1, 1, 1, 1)).value(), 0u);
  EXPECT_EQ(permanent2(Mat2(3, 1, 2, 1, 1)).value(), 0u);
  EXPECT_EQ(determinant2(Mat2(3, 1, 2, 1, 1)).value(), 2u);
}

TEST(SubPermanents, Examples) {
  const auto id = sub_permanents(Mat3::identity(5));
  EXPECT_EQ(id.p11.value(), 1u);
  EXPECT_EQ(id.p12.value(), 0u);
  EXPECT_EQ(id.p13.value(), 0u);
  EXPECT_EQ(id.p21.value(), 0u);
  EXPECT_EQ(id.p22.value(), 1u);

  const auto ex = sub_permanents(kExample3);
  EXPECT_EQ(ex.p11.value(), 0u);
  EXPECT_EQ(ex.p12.value(), 1u);

  const auto ones = sub_permanents(all_ones(7));
  for (const Residue& r : {ones.p11, ones.p12, ones.p13, ones.p21, ones.p22})
    EXPECT_EQ(r.value(), 2u);
}

TEST(Invertible, Examples) {
  EXPECT_TRUE(is_invertible(Mat3::identity(12)));
  EXPECT_FALSE(is_invertible(Mat3::zero(3)));
  EXPECT_TRUE(is_invertible(kExample3));
  // det 2 is a zero divisor mod 4.
  EXPECT_FALSE(is_invertible(Mat3(4, {2, 0, 0, 0, 1, 0, 0, 0, 1})));
  EXPECT_TRUE(is_invertible(Mat3(4, {3, 0, 0, 0, 1, 0, 0, 0, 1})));
}

TEST(Classify, Examples) {
  EXPECT_EQ(classify(Mat3::identity(5), 5), ClassLabel::C11);
  EXPECT_EQ(classify(kExample3, 3), ClassLabel::C12);
  EXPECT_EQ(classify(Mat3(5, {0, 0, 1, 1, 1, 0, 4, 1, 0}), 5), ClassLabel::C21);
  EXPECT_EQ(classify(Mat3::zero(5), 5), ClassLabel::NonInvertible);
}

TEST(Classify, UsesResidueModP) {
  // Over Z_9 the class is decided by the reduction mod 3.
  const Mat3 m(9, {4, 0, 0, 5, 1, 2, 1, 1, 1});
  EXPECT_EQ(classify(m, 3), classify(m.reduced(3), 3));
  EXPECT_THROW(classify(m, 5), std::invalid_argument);
}

TEST(Labels, RoundTrip) {
  for (ClassLabel l : kClassLabels) {
    EXPECT_EQ(parse_label(label_name(l)), l);
    const auto [r, c] = pivot_entry(l);
    EXPECT_EQ(label_name(l), std::to_string(r + 1) + "," + std::to_string(c + 1));
  }
  EXPECT_FALSE(parse_label("3,3").has_value());
  EXPECT_THROW(pivot_entry(ClassLabel::NonInvertible), std::invalid_argument);
}

TEST(Mat3, ParseAndPrint) {
  const Mat3 m = Mat3::parse("1, 0, 0; 2,1,2 ;1,1,-2", 3);
  EXPECT_EQ(m, kExample3);
  EXPECT_EQ(m.to_string(), "1,0,0;2,1,2;1,1,1");
  EXPECT_THROW(Mat3::parse("1,2;3,4", 5), std::invalid_argument);
  EXPECT_THROW(Mat3::parse("1,2,3;4,5,x;7,8,9", 5), std::invalid_argument);
}

TEST(Mat3, ModulusBounds) {
  EXPECT_THROW(Mat3::identity(0), std::invalid_argument);
  EXPECT_THROW(Mat3::identity(kMaxMatrixModulus + 1), std::invalid_argument);
  EXPECT_NO_THROW(Mat3::identity(kMaxMatrixModulus));
}

TEST(Mat3, WithEntryAndReduce) {
  const Mat3 m = Mat3::identity(9).with_entry(2, 1, -1);
  EXPECT_EQ(m.at(2, 1), 8u);
  EXPECT_EQ(m.reduced(3).at(2, 1), 2u);
  EXPECT_THROW(m.reduced(2), std::invalid_argument);
}

// Permanent and determinant against the full 6-term Leibniz sums, over
// random entries near the 32-bit limit.
TEST(Property, LeibnizAgreement) {
  std::mt19937_64 rng(42);
  for (std::uint64_t n : std::vector<std::uint64_t>{2, 12, 49, 1000003, kMaxMatrixModulus}) {
    std::uniform_int_distribution<std::int64_t> d(0, static_cast<std::int64_t>(n) - 1);
    for (int trial = 0; trial < 2000; ++trial) {
      std::array<std::int64_t, 9> a{};
      for (auto& v : a) v = d(rng);
      const Mat3 m(n, a);
      const Natural N = n;
      Natural pos = Natural(a[0]) * a[4] * a[8] + Natural(a[1]) * a[5] * a[6] +
                    Natural(a[2]) * a[3] * a[7];
      Natural neg = Natural(a[2]) * a[4] * a[6] + Natural(a[0]) * a[5] * a[7] +
                    Natural(a[1]) * a[3] * a[8];
      EXPECT_EQ(Natural(permanent3(m).value()), (pos + neg) % N);
      EXPECT_EQ(Natural(determinant3(m).value()), (pos + N * N * N * 6 - neg) % N);
      // Transposition preserves both.
      EXPECT_EQ(permanent3(m.transposed()), permanent3(m));
      EXPECT_EQ(determinant3(m.transposed()), determinant3(m));
    }
  }
}

// The five sub-permanents satisfy
// 2 a22 P22 - a11 P11 + a12 P12 - 2 a21 P21 - 3 a13 P13 = det - 6 a13 a21 a32.
TEST(Property, SubPermanentIdentity) {
  std::mt19937_64 rng(7);
  for (std::uint64_t n : {4u, 9u, 12u, 49u}) {
    std::uniform_int_distribution<std::int64_t> d(0, static_cast<std::int64_t>(n) - 1);
    for (int trial = 0; trial < 20000; ++trial) {
      std::array<std::int64_t, 9> a{};
      for (auto& v : a) v = d(rng);
      const Mat3 m(n, a);
      const auto sp = sub_permanents(m);
      const auto R = [n](std::int64_t v) { return Residue(v, n); };
      const Residue lhs = R(2 * a[4]) * sp.p22 - R(a[0]) * sp.p11 + R(a[1]) * sp.p12 -
                          R(2 * a[3]) * sp.p21 - R(3 * a[2]) * sp.p13;
      const Residue rhs = determinant3(m) - R(6 * a[2] * a[3] * a[7]);
      ASSERT_EQ(lhs, rhs) << m.to_string() << " mod " << n;
    }
  }
}

TEST(Property, PermanentRowExpansion) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::int64_t> d(0, 10);
  for (int trial = 0; trial < 1000; ++trial) {
    std::array<std::int64_t, 9> a{};
    for (auto& v : a) v = d(rng);
    const Mat3 m(11, a);
    const auto sp = sub_permanents(m);
    // Expansion along the first row uses P11, P12, P13.
    const Residue first = Residue(a[0], 11) * sp.p11 + Residue(a[1], 11) * sp.p12 +
                          Residue(a[2], 11) * sp.p13;
    EXPECT_EQ(first, permanent3(m));
  }
}

}  // namespace
}  // namespace permcount
