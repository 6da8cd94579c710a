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

#include "prime_field_count.hpp"

#include "permcount/modring.hpp"

namespace permcount::detail {

PrimeField::PrimeField(std::uint64_t p) : p_(p), inv_(p, 0) {
  for (std::uint64_t a = 1; a < p; ++a)
    inv_[a] = mod_inv(Residue(static_cast<std::int64_t>(a), p)).value();
}

Row Span::reduce(Row v) const {
  const std::uint64_t p = f_->p();
  for (int i = 0; i < rank_; ++i) {
    const std::uint64_t c = v[pivot_[i]];
    if (c == 0) continue;
    for (int j = 0; j < 3; ++j) v[j] = (v[j] + (p - c) * basis_[i][j]) % p;
  }
  return v;
}

bool Span::add(Row v) {
  v = reduce(v);
  int pivot = 0;
  while (pivot < 3 && v[pivot] == 0) ++pivot;
  if (pivot == 3) return false;
  const std::uint64_t p = f_->p();
  const std::uint64_t s = f_->inv(v[pivot]);
  for (auto& x : v) x = x * s % p;
  // Keep the basis reduced: clear the new pivot column from older vectors.
  for (int i = 0; i < rank_; ++i) {
    const std::uint64_t c = basis_[i][pivot];
    if (c == 0) continue;
    for (int j = 0; j < 3; ++j) basis_[i][j] = (basis_[i][j] + (p - c) * v[j]) % p;
  }
  basis_[rank_] = v;
  pivot_[rank_] = pivot;
  ++rank_;
  return true;
}

bool Span::contains(Row v) const {
  v = reduce(v);
  return v[0] == 0 && v[1] == 0 && v[2] == 0;
}

namespace {

std::int64_t ipow_small(std::uint64_t p, int e) {
  std::int64_t r = 1;
  for (int i = 0; i < e; ++i) r *= static_cast<std::int64_t>(p);
  return r;
}

// Solutions of the homogeneous system `s`, split by the value of perm.
SplitCount solutions(const Span& s, const Row& perm, std::uint64_t p) {
  const int r = s.rank();
  if (s.contains(perm)) return {ipow_small(p, 3 - r), 0};
  const std::int64_t each = ipow_small(p, 2 - r);
  return {each, each};
}

SplitCount with(Span s, const Row& extra, const Row& perm, std::uint64_t p) {
  s.add(extra);
  return solutions(s, perm, p);
}

SplitCount with(Span s, const Row& e1, const Row& e2, const Row& perm, std::uint64_t p) {
  s.add(e1);
  s.add(e2);
  return solutions(s, perm, p);
}

}  // namespace

SplitCount count_invertible(const PrimeField& f, const PrefixForms& forms) {
  Span empty(f);
  SplitCount out = solutions(empty, forms.perm, f.p());
  out -= with(empty, forms.det, forms.perm, f.p());
  return out;
}

std::array<SplitCount, 6> count_by_class(const PrimeField& f, const PrefixForms& forms) {
  const std::uint64_t p = f.p();
  std::array<SplitCount, 6> out{};
  Span earlier(f);  // sub-permanents required to vanish
  for (int k = 0; k < 5; ++k) {
    const Row& pivot = forms.sub[k];
    SplitCount c = solutions(earlier, forms.perm, p);
    c -= with(earlier, pivot, forms.perm, p);
    c -= with(earlier, forms.det, forms.perm, p);
    c += with(earlier, pivot, forms.det, forms.perm, p);
    out[k] = c;
    earlier.add(pivot);
  }
  SplitCount rest = solutions(earlier, forms.perm, p);
  rest -= with(earlier, forms.det, forms.perm, p);
  out[5] = rest;
  return out;
}

}  // namespace permcount::detail
