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

#ifndef PERMCOUNT_STRUCTURE_MAPS_HPP
#define PERMCOUNT_STRUCTURE_MAPS_HPP

#include <array>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "permcount/matrices.hpp"
#include "permcount/modring.hpp"
#include "permcount/oracle.hpp"

namespace permcount {

class PivotNotUnit : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class ShiftNotDivisible : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct ShiftResult {
  Mat3 image;
  int row = 0;  // 0-based position of the shifted entry
  int col = 0;
  Residue shift;
};

/// Adds x * P^{-1} to the pivot entry of `label`, where P is that class's
/// pivot sub-permanent. Moves the permanent by exactly x and, since p | x,
/// leaves the determinant and all sub-permanents unchanged mod p.
/// M lives over Z_{p^k}.
ShiftResult psi_shift(const Mat3& m, std::int64_t x, ClassLabel label, std::uint64_t p,
                      unsigned k);

/// Entrywise reduction from Z_{p^k} to Z_p.
Mat3 project(const Mat3& m, std::uint64_t p);

/// Enumerates all p^(9(k-1)) entrywise lifts of `a` (over Z_p) to Z_{p^k}
/// and counts those that are invertible with permanent divisible by p.
Natural fiber_count(const Mat3& a, std::uint64_t p, unsigned k,
                    const CensusOptions& opts = {});

/// Explicit member of G(p^k, x, label) for odd p and p | x.
Mat3 witness(ClassLabel label, std::uint64_t p, unsigned k, std::int64_t x);

struct EmptinessReport {
  std::uint64_t p = 0;
  unsigned k = 0;
  Natural invertible;  // matrices scanned that were invertible
  Natural violations;  // invertible with no unit sub-permanent mod p
};

EmptinessReport emptiness_scan(std::uint64_t p, unsigned k, const CensusOptions& opts = {});

/// Result of pushing every matrix of G(p^k, 0, label) through psi_shift for
/// one x with p | x.
struct ShiftBijectionRow {
  std::int64_t x = 0;
  ClassLabel label = ClassLabel::C11;
  std::uint64_t source = 0;          // |G(p^k, 0, label)|
  std::uint64_t images_in_class = 0;  // images landing in G(p^k, x, label)
  std::uint64_t round_trip_failures = 0;
};

/// One row per (x, label), x ascending over multiples of p in [0, p^k).
std::vector<ShiftBijectionRow> shift_bijection_scan(std::uint64_t p, unsigned k,
                                                    const CensusOptions& opts = {});

}  // namespace permcount

#endif  // PERMCOUNT_STRUCTURE_MAPS_HPP
