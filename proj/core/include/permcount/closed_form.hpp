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

// Closed-form counts of invertible 3x3 matrices over Z_n by permanent value.
//
// g(n, x) is the number of M in GL3(Z_n) with perm(M) = x (mod n). The
// count is multiplicative over coprime factors of n, depends on x only
// through whether p | x at each prime power p^k, and reduces to g(p, 0).
// All arithmetic here is exact.

#ifndef PERMCOUNT_CLOSED_FORM_HPP
#define PERMCOUNT_CLOSED_FORM_HPP

#include <array>
#include <cstdint>
#include <string_view>
#include <vector>

#include "permcount/count_table.hpp"
#include "permcount/matrices.hpp"
#include "permcount/modring.hpp"

namespace permcount {

/// Whether p - 3 is a quadratic residue mod an odd prime p.
enum class Branch { QR, NonQR };

std::string_view branch_name(Branch b);

/// |GL3(Z_{p^k})| = p^(9(k-1)) (p^3 - 1)(p^3 - p)(p^3 - p^2).
Natural gl3_order(std::uint64_t p, unsigned k);

/// Throws std::invalid_argument for p == 2 or composite p.
Branch qr_branch(std::uint64_t p);

/// 2x2 counts at an odd prime: (p-1)^3 at x = 0, (p-1)(p^2+1) otherwise.
/// At p = 2 these are 0 and 6.
Natural g2_prime(std::uint64_t p, std::int64_t x);

/// g(p, 0). Zero at p = 2; otherwise one of two polynomials in p chosen by
/// qr_branch.
Natural g_p0(std::uint64_t p);

/// g(p^k, 0) = p^(8(k-1)) g(p, 0).
Natural g_pk0(std::uint64_t p, unsigned k);

/// g(p^k, 1) = p^(8(k-1)) (|GL3(Z_p)| - g(p, 0)) / (p - 1).
/// Throws std::logic_error if the division is not exact.
Natural g_pk1(std::uint64_t p, unsigned k);

/// g(p^k, x), dispatching on p | x after reducing x mod p^k.
Natural g_pk(std::uint64_t p, unsigned k, std::int64_t x);

/// g(n, x) as the product over prime-power factors. g(1, x) = 1.
Natural g_n(const Modulus& n, std::int64_t x);

/// Per-class count g(p, 0, i, j) for an odd prime. Rejects NonInvertible.
Natural g_p0_class(std::uint64_t p, ClassLabel label);

/// g(p^k, 0, i, j) = p^(8(k-1)) g(p, 0, i, j).
Natural g_pk0_class(std::uint64_t p, unsigned k, ClassLabel label);

/// Rows of the zero-pattern breakdown of G(p, 0), keyed on how many entries
/// of the first and second rows are nonzero mod p. The first row with a
/// single nonzero entry is one aggregated row over all second rows.
enum class CaseRow {
  FirstOneNonzero,
  FirstOneZeroSecondOneNonzero,
  FirstOneZeroSecondOneZero,
  FirstOneZeroSecondAllNonzero,
  FirstAllNonzeroSecondOneNonzero,
  FirstAllNonzeroSecondOneZero,
  FirstAllNonzeroSecondAllNonzero,
};

inline constexpr std::array<CaseRow, 7> kCaseRows = {
    CaseRow::FirstOneNonzero,
    CaseRow::FirstOneZeroSecondOneNonzero,
    CaseRow::FirstOneZeroSecondOneZero,
    CaseRow::FirstOneZeroSecondAllNonzero,
    CaseRow::FirstAllNonzeroSecondOneNonzero,
    CaseRow::FirstAllNonzeroSecondOneZero,
    CaseRow::FirstAllNonzeroSecondAllNonzero,
};

std::string_view case_row_name(CaseRow row);

/// Row for a matrix whose first and second rows have the given numbers of
/// nonzero entries mod p (each in 1..3).
CaseRow case_row_for(int first_nonzero, int second_nonzero);

struct CaseCensusRow {
  CaseRow row;
  Natural count;
};

/// All seven rows for an odd prime; they sum to g_p0(p).
std::vector<CaseCensusRow> case_census_closed(std::uint64_t p);

/// g(n, x) for every x in [0, n).
CountTable closed_form_table(const Modulus& n);

}  // namespace permcount

#endif  // PERMCOUNT_CLOSED_FORM_HPP
