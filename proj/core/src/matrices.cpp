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

#include <charconv>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace permcount {
namespace {

void check_modulus(std::uint64_t n) {
  if (n == 0 || n > kMaxMatrixModulus)
    throw std::invalid_argument("matrix modulus out of range: " + std::to_string(n));
}

// a*b + c*d mod n for canonical entries.
std::uint64_t sum2(std::uint64_t a, std::uint64_t b, std::uint64_t c,
                   std::uint64_t d, std::uint64_t n) {
  return (a * b + c * d) % n;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

}  // namespace

Mat3::Mat3(std::uint64_t n, std::initializer_list<std::int64_t> row_major) : n_(n) {
  check_modulus(n);
  if (row_major.size() != 9) throw std::invalid_argument("Mat3 needs 9 entries");
  int i = 0;
  for (std::int64_t v : row_major) e_[i++] = static_cast<std::uint32_t>(reduce(v, n));
}

Mat3::Mat3(std::uint64_t n, const std::array<std::int64_t, 9>& row_major) : n_(n) {
  check_modulus(n);
  for (int i = 0; i < 9; ++i) e_[i] = static_cast<std::uint32_t>(reduce(row_major[i], n));
}

Mat3 Mat3::identity(std::uint64_t n) { return Mat3(n, {1, 0, 0, 0, 1, 0, 0, 0, 1}); }

Mat3 Mat3::zero(std::uint64_t n) { return Mat3(n, {0, 0, 0, 0, 0, 0, 0, 0, 0}); }

Mat3 Mat3::parse(std::string_view literal, std::uint64_t n) {
  auto rows = split(literal, ';');
  if (rows.size() != 3) throw std::invalid_argument("matrix literal needs 3 rows");
  std::array<std::int64_t, 9> values{};
  for (int r = 0; r < 3; ++r) {
    auto cells = split(rows[r], ',');
    if (cells.size() != 3) throw std::invalid_argument("matrix row needs 3 entries");
    for (int c = 0; c < 3; ++c) {
      auto cell = trim(cells[c]);
      std::int64_t v = 0;
      auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
      if (ec != std::errc() || ptr != cell.data() + cell.size() || cell.empty())
        throw std::invalid_argument("bad matrix entry '" + std::string(cell) + "'");
      values[r * 3 + c] = v;
    }
  }
  return Mat3(n, values);
}

Mat3 Mat3::with_entry(int row, int col, std::int64_t value) const {
  Mat3 copy = *this;
  copy.e_[row * 3 + col] = static_cast<std::uint32_t>(reduce(value, n_));
  return copy;
}

Mat3 Mat3::reduced(std::uint64_t m) const {
  if (m == 0 || n_ % m != 0)
    throw std::invalid_argument("reduction target must divide the modulus");
  Mat3 out;
  out.n_ = m;
  for (int i = 0; i < 9; ++i) out.e_[i] = static_cast<std::uint32_t>(e_[i] % m);
  return out;
}

Mat3 Mat3::transposed() const {
  Mat3 out = *this;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) out.e_[c * 3 + r] = e_[r * 3 + c];
  return out;
}

std::string Mat3::to_string() const {
  std::ostringstream os;
  for (int r = 0; r < 3; ++r) {
    if (r) os << ';';
    os << at(r, 0) << ',' << at(r, 1) << ',' << at(r, 2);
  }
  return os.str();
}

Mat2::Mat2(std::uint64_t n, std::int64_t a, std::int64_t b, std::int64_t c,
           std::int64_t d)
    : n_(n) {
  check_modulus(n);
  e_ = {static_cast<std::uint32_t>(reduce(a, n)), static_cast<std::uint32_t>(reduce(b, n)),
        static_cast<std::uint32_t>(reduce(c, n)), static_cast<std::uint32_t>(reduce(d, n))};
}

std::string_view label_name(ClassLabel label) {
  switch (label) {
    case ClassLabel::C11: return "1,1";
    case ClassLabel::C12: return "1,2";
    case ClassLabel::C13: return "1,3";
    case ClassLabel::C21: return "2,1";
    case ClassLabel::C22: return "2,2";
    case ClassLabel::NonInvertible: return "none";
  }
  return "none";
}

std::optional<ClassLabel> parse_label(std::string_view name) {
  for (ClassLabel l : kClassLabels)
    if (label_name(l) == name) return l;
  if (name == "none") return ClassLabel::NonInvertible;
  return std::nullopt;
}

int label_index(ClassLabel label) { return static_cast<int>(label); }

std::pair<int, int> pivot_entry(ClassLabel label) {
  switch (label) {
    case ClassLabel::C11: return {0, 0};
    case ClassLabel::C12: return {0, 1};
    case ClassLabel::C13: return {0, 2};
    case ClassLabel::C21: return {1, 0};
    case ClassLabel::C22: return {1, 1};
    case ClassLabel::NonInvertible: break;
  }
  throw std::invalid_argument("NonInvertible has no pivot entry");
}

Residue permanent3(const Mat3& m) {
  const auto sp = sub_permanents(m);
  const std::uint64_t n = m.modulus();
  std::uint64_t v = (m.at(0, 0) * sp.p11.value() + m.at(0, 1) * sp.p12.value() +
                     m.at(0, 2) * sp.p13.value()) % n;
  return Residue(static_cast<std::int64_t>(v), n);
}

Residue determinant3(const Mat3& m) {
  const std::uint64_t n = m.modulus();
  auto a = [&](int i, int j) -> std::uint64_t { return m.at(i, j); };
  auto minor = [&](int c0, int c1) {
    std::uint64_t pos = a(1, c0) * a(2, c1) % n;
    std::uint64_t neg = a(1, c1) * a(2, c0) % n;
    return (pos + n - neg) % n;
  };
  std::uint64_t plus = (a(0, 0) * minor(1, 2) + a(0, 2) * minor(0, 1)) % n;
  std::uint64_t minus = a(0, 1) * minor(0, 2) % n;
  return Residue(static_cast<std::int64_t>((plus + n - minus) % n), n);
}

Residue permanent2(const Mat2& m) {
  const std::uint64_t n = m.modulus();
  return Residue(static_cast<std::int64_t>(sum2(m.at(0, 0), m.at(1, 1), m.at(0, 1), m.at(1, 0), n)), n);
}

Residue determinant2(const Mat2& m) {
  const std::uint64_t n = m.modulus();
  std::uint64_t pos = std::uint64_t{m.at(0, 0)} * m.at(1, 1) % n;
  std::uint64_t neg = std::uint64_t{m.at(0, 1)} * m.at(1, 0) % n;
  return Residue(static_cast<std::int64_t>((pos + n - neg) % n), n);
}

SubPermanents sub_permanents(const Mat3& m) {
  const std::uint64_t n = m.modulus();
  auto a = [&](int i, int j) -> std::uint64_t { return m.at(i - 1, j - 1); };
  auto r = [&](std::uint64_t v) { return Residue(static_cast<std::int64_t>(v), n); };
  return SubPermanents{
      r(sum2(a(2, 2), a(3, 3), a(2, 3), a(3, 2), n)),
      r(sum2(a(2, 1), a(3, 3), a(2, 3), a(3, 1), n)),
      r(sum2(a(2, 1), a(3, 2), a(2, 2), a(3, 1), n)),
      r(sum2(a(1, 2), a(3, 3), a(1, 3), a(3, 2), n)),
      r(sum2(a(1, 1), a(3, 3), a(1, 3), a(3, 1), n)),
  };
}

Residue pivot_sub_permanent(const SubPermanents& sp, ClassLabel label) {
  switch (label) {
    case ClassLabel::C11: return sp.p11;
    case ClassLabel::C12: return sp.p12;
    case ClassLabel::C13: return sp.p13;
    case ClassLabel::C21: return sp.p21;
    case ClassLabel::C22: return sp.p22;
    case ClassLabel::NonInvertible: break;
  }
  throw std::invalid_argument("NonInvertible has no pivot sub-permanent");
}

bool is_invertible(const Mat3& m) { return is_unit(determinant3(m)); }

ClassLabel classify(const Mat3& m, std::uint64_t p) {
  if (p < 2 || m.modulus() % p != 0)
    throw std::invalid_argument("classification prime must divide the modulus");
  const Mat3 reduced = m.modulus() == p ? m : m.reduced(p);
  if (!is_invertible(reduced)) return ClassLabel::NonInvertible;
  const auto sp = sub_permanents(reduced);
  for (ClassLabel l : kClassLabels)
    if (pivot_sub_permanent(sp, l).value() != 0) return l;
  return ClassLabel::NonInvertible;
}

}  // namespace permcount
