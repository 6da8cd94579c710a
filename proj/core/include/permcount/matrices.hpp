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

#ifndef PERMCOUNT_MATRICES_HPP
#define PERMCOUNT_MATRICES_HPP

#include <array>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>

#include "permcount/modring.hpp"

namespace permcount {

/// Largest modulus a matrix may carry; keeps every triple product in 64 bits.
inline constexpr std::uint64_t kMaxMatrixModulus = 1u << 20;

/// Dense 3x3 matrix over Z_n with canonical entries. Indices are 0-based
/// (row, col); a_ij in the usual 1-based notation is at(i - 1, j - 1).
class Mat3 {
 public:
  Mat3(std::uint64_t n, std::initializer_list<std::int64_t> row_major);
  Mat3(std::uint64_t n, const std::array<std::int64_t, 9>& row_major);

  static Mat3 identity(std::uint64_t n);
  static Mat3 zero(std::uint64_t n);

  /// Parses "a,b,c;d,e,f;g,h,i". Entries may be negative; they are reduced.
  static Mat3 parse(std::string_view literal, std::uint64_t n);

  std::uint64_t modulus() const { return n_; }
  std::uint32_t at(int row, int col) const { return e_[row * 3 + col]; }
  const std::array<std::uint32_t, 9>& entries() const { return e_; }

  /// Copy with entry (row, col) replaced by value mod n.
  Mat3 with_entry(int row, int col, std::int64_t value) const;

  /// Entrywise reduction to a divisor m of n.
  Mat3 reduced(std::uint64_t m) const;

  Mat3 transposed() const;

  std::string to_string() const;

  friend bool operator==(const Mat3&, const Mat3&) = default;

 private:
  Mat3() = default;

  std::uint64_t n_ = 1;
  std::array<std::uint32_t, 9> e_{};
};

class Mat2 {
 public:
  Mat2(std::uint64_t n, std::int64_t a, std::int64_t b, std::int64_t c,
       std::int64_t d);

  std::uint64_t modulus() const { return n_; }
  std::uint32_t at(int row, int col) const { return e_[row * 2 + col]; }

  friend bool operator==(const Mat2&, const Mat2&) = default;

 private:
  std::uint64_t n_;
  std::array<std::uint32_t, 4> e_;
};

/// The five sub-permanents that decide class membership. P_ij is the
/// permanent of the 2x2 minor left after deleting row i and column j.
struct SubPermanents {
  Residue p11, p12, p13, p21, p22;
};

/// Class of a matrix by the first of P11, P12, P13, P21, P22 (in that order)
/// that is a unit mod p. NonInvertible when none is.
enum class ClassLabel { C11, C12, C13, C21, C22, NonInvertible };

inline constexpr std::array<ClassLabel, 5> kClassLabels = {
    ClassLabel::C11, ClassLabel::C12, ClassLabel::C13, ClassLabel::C21,
    ClassLabel::C22};

/// "1,1", "1,2", ... or "none".
std::string_view label_name(ClassLabel label);
std::optional<ClassLabel> parse_label(std::string_view name);
int label_index(ClassLabel label);

/// (row, col) of the entry a class's pivot sub-permanent multiplies in the
/// permanent's row expansion, 0-based.
std::pair<int, int> pivot_entry(ClassLabel label);

Residue permanent3(const Mat3& m);
Residue determinant3(const Mat3& m);
Residue permanent2(const Mat2& m);
Residue determinant2(const Mat2& m);
SubPermanents sub_permanents(const Mat3& m);
Residue pivot_sub_permanent(const SubPermanents& sp, ClassLabel label);
bool is_invertible(const Mat3& m);
ClassLabel classify(const Mat3& m, std::uint64_t p);

}  // namespace permcount

#endif  // PERMCOUNT_MATRICES_HPP
