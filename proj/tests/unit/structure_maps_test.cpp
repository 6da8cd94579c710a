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

#include <gtest/gtest.h>

#include "permcount/closed_form.hpp"

namespace permcount {
namespace {

TEST(PsiShift, Example) {
  const Mat3 m(9, {4, 5, 0, 1, 1, 0, 0, 0, 1});
  ASSERT_EQ(permanent3(m).value(), 0u);
  ASSERT_EQ(classify(m, 3), ClassLabel::C11);
  const ShiftResult r = psi_shift(m, 3, ClassLabel::C11, 3, 2);
  EXPECT_EQ(r.image, Mat3(9, {7, 5, 0, 1, 1, 0, 0, 0, 1}));
  EXPECT_EQ(permanent3(r.image).value(), 3u);
  EXPECT_EQ(r.row, 0);
  EXPECT_EQ(r.col, 0);
}

TEST(PsiShift, ZeroShiftIsIdentity) {
  const Mat3 m(9, {4, 5, 0, 1, 1, 0, 0, 0, 1});
  EXPECT_EQ(psi_shift(m, 0, ClassLabel::C11, 3, 2).image, m);
}

TEST(PsiShift, InversePair) {
  const Mat3 m(9, {4, 5, 0, 1, 1, 0, 0, 0, 1});
  const Mat3 there = psi_shift(m, 6, ClassLabel::C11, 3, 2).image;
  EXPECT_EQ(psi_shift(there, 9 - 6, ClassLabel::C11, 3, 2).image, m);
}

TEST(PsiShift, Errors) {
  const Mat3 m(9, {4, 5, 0, 1, 1, 0, 0, 0, 1});
  EXPECT_THROW(psi_shift(m, 2, ClassLabel::C11, 3, 2), ShiftNotDivisible);
  // P13 = a21 a32 + a22 a31 = 0.
  EXPECT_THROW(psi_shift(m, 3, ClassLabel::C13, 3, 2), PivotNotUnit);
  EXPECT_THROW(psi_shift(m, 3, ClassLabel::C11, 3, 3), std::invalid_argument);
}

TEST(PsiShift, EveryWitnessShiftsWithinItsClass) {
  for (auto [p, k] : {std::pair<std::uint64_t, unsigned>{3, 2}, {5, 2}, {7, 1}, {3, 3}}) {
    const std::uint64_t n = PrimePower{p, k}.value();
    for (ClassLabel l : kClassLabels) {
      const Mat3 m = witness(l, p, k, 0);
      for (std::uint64_t x = 0; x < n; x += p) {
        const Mat3 img = psi_shift(m, static_cast<std::int64_t>(x), l, p, k).image;
        EXPECT_EQ(permanent3(img).value(), x);
        EXPECT_TRUE(is_invertible(img));
        EXPECT_EQ(classify(img, p), l);
      }
    }
  }
}

TEST(Project, Examples) {
  const Mat3 target(3, {1, 0, 0, 2, 1, 2, 1, 1, 1});
  EXPECT_EQ(project(Mat3(9, {4, 0, 0, 2, 1, 2, 1, 1, 1}), 3), target);
  EXPECT_EQ(project(Mat3(9, {1, 3, 0, 2, 1, 2, 1, 1, 1}), 3), target);
  EXPECT_EQ(project(Mat3::identity(9), 3), Mat3::identity(3));
  EXPECT_EQ(permanent3(Mat3(9, {4, 0, 0, 2, 1, 2, 1, 1, 1})).value(), 3u);
  EXPECT_EQ(permanent3(Mat3(9, {1, 3, 0, 2, 1, 2, 1, 1, 1})).value(), 6u);
}

TEST(FiberCount, Examples) {
  const Mat3 a(3, {1, 0, 0, 2, 1, 2, 1, 1, 1});
  EXPECT_EQ(fiber_count(a, 3, 2), 19683);
  EXPECT_EQ(fiber_count(a, 3, 1), 1);
  const Mat3 b = witness(ClassLabel::C12, 5, 1, 0);
  EXPECT_EQ(fiber_count(b, 5, 2), 1953125);
}

TEST(FiberCount, RejectsOutsideZeroClass) {
  EXPECT_THROW(fiber_count(Mat3::identity(3), 3, 2), std::invalid_argument);
  EXPECT_THROW(fiber_count(Mat3::zero(3), 3, 2), std::invalid_argument);
  EXPECT_THROW(fiber_count(Mat3(9, {1, 0, 0, 2, 1, 2, 1, 1, 1}), 3, 2), std::invalid_argument);
}

TEST(Witness, Examples) {
  EXPECT_EQ(witness(ClassLabel::C11, 5, 1, 0), Mat3(5, {2, 3, 0, 1, 1, 0, 0, 0, 1}));
  EXPECT_EQ(witness(ClassLabel::C21, 3, 1, 0), Mat3(3, {0, 0, 1, 1, 1, 0, 2, 1, 0}));
  EXPECT_EQ(witness(ClassLabel::C22, 5, 1, 5), Mat3(5, {1, 1, 1, 0, 1, 1, 0, 1, 4}));
}

TEST(Witness, PropertiesAcrossModuli) {
  for (auto [p, k] : {std::pair<std::uint64_t, unsigned>{3, 1}, {3, 2}, {3, 4}, {5, 1}, {5, 3},
                      {7, 2}, {11, 1}, {13, 2}, {101, 2}}) {
    const std::uint64_t n = PrimePower{p, k}.value();
    for (ClassLabel l : kClassLabels) {
      for (std::uint64_t x = 0; x < n; x += p) {
        const Mat3 w = witness(l, p, k, static_cast<std::int64_t>(x));
        EXPECT_EQ(permanent3(w).value(), x) << p << "^" << k << " " << label_name(l);
        EXPECT_TRUE(is_invertible(w));
        EXPECT_EQ(classify(w, p), l);
      }
    }
  }
}

TEST(Witness, Errors) {
  EXPECT_THROW(witness(ClassLabel::C11, 2, 1, 0), std::invalid_argument);
  EXPECT_THROW(witness(ClassLabel::C11, 5, 1, 1), ShiftNotDivisible);
  EXPECT_THROW(witness(ClassLabel::NonInvertible, 5, 1, 0), std::invalid_argument);
}

TEST(EmptinessScan, NoViolations) {
  for (auto [p, k] : {std::pair<std::uint64_t, unsigned>{2, 1}, {2, 2}, {3, 1}, {5, 1}}) {
    const EmptinessReport r = emptiness_scan(p, k);
    EXPECT_EQ(r.violations, 0);
    EXPECT_EQ(r.invertible, gl3_order(p, k));
  }
  EXPECT_EQ(emptiness_scan(2, 1).invertible, 168);
  EXPECT_EQ(emptiness_scan(3, 1).invertible, 11232);
  EXPECT_THROW(emptiness_scan(17, 1), ModulusTooLarge);
}

TEST(ShiftBijectionScan, CountsAndRoundTrip) {
  for (auto [p, k] : {std::pair<std::uint64_t, unsigned>{3, 1}, {5, 1}}) {
    const auto rows = shift_bijection_scan(p, k);
    ASSERT_EQ(rows.size(), 5u * (PrimePower{p, k}.value() / p));
    for (const auto& r : rows) {
      EXPECT_EQ(Natural(r.source), g_pk0_class(p, k, r.label));
      EXPECT_EQ(r.images_in_class, r.source);
      EXPECT_EQ(r.round_trip_failures, 0u);
    }
  }
}

}  // namespace
}  // namespace permcount
