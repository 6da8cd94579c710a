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

#include "permcount/modring.hpp"

#include <numeric>

namespace permcount {
namespace {
__extension__ typedef unsigned __int128 u128;
__extension__ typedef __int128 i128;
}  // namespace

std::uint64_t PrimePower::value() const {
  std::uint64_t v = 1;
  for (unsigned i = 0; i < k; ++i) v *= p;
  return v;
}

Modulus::Modulus(std::uint64_t n) : n_(n) {
  if (n == 0) throw std::invalid_argument("modulus must be positive");
  std::uint64_t rest = n;
  for (std::uint64_t d = 2; d <= rest / d; ++d) {
    if (rest % d != 0) continue;
    unsigned k = 0;
    while (rest % d == 0) {
      rest /= d;
      ++k;
    }
    factors_.push_back({d, k});
  }
  if (rest > 1) factors_.push_back({rest, 1});
}

Modulus factorize(std::uint64_t n) { return Modulus(n); }

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d <= n / d; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint64_t totient(const Modulus& m) {
  std::uint64_t phi = 1;
  for (const auto& f : m.factors()) phi *= f.value() / f.p * (f.p - 1);
  return phi;
}

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t n) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % n);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t n) {
  std::uint64_t result = 1 % n;
  base %= n;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, n);
    base = mul_mod(base, base, n);
    exp >>= 1;
  }
  return result;
}

Natural ipow(std::uint64_t base, unsigned exp) {
  return boost::multiprecision::pow(Natural(base), exp);
}

std::uint64_t reduce(std::int64_t value, std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("modulus must be positive");
  if (value >= 0) return static_cast<std::uint64_t>(value) % n;
  // -(value + 1) avoids overflow at INT64_MIN.
  std::uint64_t neg = static_cast<std::uint64_t>(-(value + 1)) % n;
  return n - 1 - neg;
}

Residue::Residue(std::int64_t value, std::uint64_t n)
    : value_(reduce(value, n)), n_(n) {}

Residue Residue::operator+(const Residue& o) const {
  std::uint64_t s = value_ + o.value_;
  if (s >= n_ || s < value_) s -= n_;
  return Residue(s, n_, true);
}

Residue Residue::operator-(const Residue& o) const {
  std::uint64_t d = value_ >= o.value_ ? value_ - o.value_ : n_ - (o.value_ - value_);
  return Residue(d, n_, true);
}

Residue Residue::operator*(const Residue& o) const {
  return Residue(mul_mod(value_, o.value_, n_), n_, true);
}

Residue Residue::operator-() const {
  return Residue(value_ == 0 ? 0 : n_ - value_, n_, true);
}

bool is_unit(const Residue& a) { return std::gcd(a.value(), a.modulus()) == 1; }

Residue mod_inv(const Residue& a) {
  const std::uint64_t n = a.modulus();
  if (!is_unit(a)) {
    throw NotAUnit(std::to_string(a.value()) + " is not a unit mod " +
                   std::to_string(n));
  }
  // Extended Euclid on signed 128-bit intermediates.
  i128 old_r = a.value(), r = n, old_s = 1, s = 0;
  while (r != 0) {
    i128 q = old_r / r;
    i128 t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  i128 inv = old_s % static_cast<i128>(n);
  if (inv < 0) inv += n;
  return Residue(static_cast<std::int64_t>(inv), n);
}

bool is_quadratic_residue(std::int64_t a, std::uint64_t p) {
  if (p == 2) throw std::invalid_argument("Euler's criterion needs an odd prime");
  std::uint64_t r = reduce(a, p);
  if (r == 0) return false;
  return pow_mod(r, (p - 1) / 2, p) == 1;
}

std::string to_string(const Natural& v) { return v.str(); }

}  // namespace permcount
