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

// Third-row counting over a prime field by linear algebra.
//
// For fixed first two rows every quantity of interest is a linear form in
// the third row v. The number of v with L1(v) = ... = Lr(v) = 0 and
// perm(v) = t is p^(3 - rank) at t = 0 and zero elsewhere when perm lies in
// the span of the L's, and p^(2 - rank) at every t otherwise. Inequalities
// (det(v) != 0, pivot sub-permanent != 0) are handled by inclusion-exclusion
// over those equality systems.

#ifndef PERMCOUNT_SRC_PRIME_FIELD_COUNT_HPP
#define PERMCOUNT_SRC_PRIME_FIELD_COUNT_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "prefix_forms.hpp"

namespace permcount::detail {

class PrimeField {
 public:
  explicit PrimeField(std::uint64_t p);
  std::uint64_t p() const { return p_; }
  std::uint64_t inv(std::uint64_t a) const { return inv_[a]; }

 private:
  std::uint64_t p_;
  std::vector<std::uint64_t> inv_;
};

/// Span of up to three vectors of F_p^3, kept in reduced row echelon form.
class Span {
 public:
  explicit Span(const PrimeField& f) : f_(&f) {}

  bool add(Row v);
  bool contains(Row v) const;
  int rank() const { return rank_; }

 private:
  Row reduce(Row v) const;

  const PrimeField* f_;
  std::array<Row, 3> basis_{};
  std::array<int, 3> pivot_{};
  int rank_ = 0;
};

/// Third-row counts with perm(v) = 0, and with perm(v) = t for each t != 0
/// (the latter is the same for every nonzero t).
struct SplitCount {
  std::int64_t zero = 0;
  std::int64_t nonzero = 0;

  SplitCount& operator+=(const SplitCount& o) {
    zero += o.zero;
    nonzero += o.nonzero;
    return *this;
  }
  SplitCount& operator-=(const SplitCount& o) {
    zero -= o.zero;
    nonzero -= o.nonzero;
    return *this;
  }
};

/// Third rows making the matrix invertible, split by permanent.
SplitCount count_invertible(const PrimeField& f, const PrefixForms& forms);

/// Same, further split by class; index 5 collects invertible matrices with
/// no unit sub-permanent.
std::array<SplitCount, 6> count_by_class(const PrimeField& f, const PrefixForms& forms);

}  // namespace permcount::detail

#endif  // PERMCOUNT_SRC_PRIME_FIELD_COUNT_HPP
