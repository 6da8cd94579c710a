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

#ifndef PERMCOUNT_SRC_PREFIX_FORMS_HPP
#define PERMCOUNT_SRC_PREFIX_FORMS_HPP

#include <array>
#include <cstdint>

namespace permcount::detail {

using Row = std::array<std::uint64_t, 3>;

/// With the first two rows fixed, the permanent, determinant and the five
/// classifying sub-permanents are all linear in the third row (x, y, z).
/// Each form is stored as its (x, y, z) coefficients mod n.
struct PrefixForms {
  Row perm;
  Row det;
  std::array<Row, 5> sub;  // P11, P12, P13, P21, P22
};

inline PrefixForms prefix_forms(const Row& a, const Row& b, std::uint64_t n) {
  auto add = [n](std::uint64_t u, std::uint64_t v) { return (u + v) % n; };
  auto sub = [n](std::uint64_t u, std::uint64_t v) { return (u + n - v) % n; };
  auto mul = [n](std::uint64_t u, std::uint64_t v) { return u * v % n; };
  PrefixForms f;
  // Cofactors of the third row.
  f.perm = {add(mul(a[1], b[2]), mul(a[2], b[1])), add(mul(a[0], b[2]), mul(a[2], b[0])),
            add(mul(a[0], b[1]), mul(a[1], b[0]))};
  f.det = {sub(mul(a[1], b[2]), mul(a[2], b[1])), sub(mul(a[2], b[0]), mul(a[0], b[2])),
           sub(mul(a[0], b[1]), mul(a[1], b[0]))};
  // P11 = b2 z + b3 y, P12 = b1 z + b3 x, P13 = b1 y + b2 x,
  // P21 = a2 z + a3 y, P22 = a1 z + a3 x (1-based entries).
  f.sub = {Row{0, b[2], b[1]}, Row{b[2], 0, b[0]}, Row{b[1], b[0], 0},
           Row{0, a[2], a[1]}, Row{a[2], 0, a[0]}};
  return f;
}

}  // namespace permcount::detail

#endif  // PERMCOUNT_SRC_PREFIX_FORMS_HPP
