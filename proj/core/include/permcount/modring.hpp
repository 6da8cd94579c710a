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

#ifndef PERMCOUNT_MODRING_HPP
#define PERMCOUNT_MODRING_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace permcount {

/// Exact non-negative counts. Every formula path works in this type.
using Natural = boost::multiprecision::cpp_int;

/// Raised by mod_inv when the argument shares a factor with the modulus.
class NotAUnit : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct PrimePower {
  std::uint64_t p = 0;
  unsigned k = 0;

  std::uint64_t value() const;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// A modulus n >= 1 together with its factorization into prime powers,
/// primes strictly increasing. The factor list is empty iff n == 1.
class Modulus {
 public:
  /// Factorizes by trial division. Throws std::invalid_argument for n == 0.
  explicit Modulus(std::uint64_t n);

  std::uint64_t n() const { return n_; }
  const std::vector<PrimePower>& factors() const { return factors_; }

  bool is_prime() const { return factors_.size() == 1 && factors_[0].k == 1; }
  bool is_prime_power() const { return factors_.size() == 1; }

  friend bool operator==(const Modulus& a, const Modulus& b) {
    return a.n_ == b.n_;
  }

 private:
  std::uint64_t n_;
  std::vector<PrimePower> factors_;
};

Modulus factorize(std::uint64_t n);

bool is_prime(std::uint64_t n);

std::uint64_t totient(const Modulus& m);

std::uint64_t gcd(std::uint64_t a, std::uint64_t b);

/// (a * b) mod n without overflow for any 64-bit n.
std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t n);

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t n);

/// base^exp as an exact natural.
Natural ipow(std::uint64_t base, unsigned exp);

/// Reduces any signed integer into [0, n).
std::uint64_t reduce(std::int64_t value, std::uint64_t n);

/// An element of Z_n, always held as its canonical representative.
class Residue {
 public:
  Residue(std::int64_t value, std::uint64_t n);

  std::uint64_t value() const { return value_; }
  std::uint64_t modulus() const { return n_; }

  Residue operator+(const Residue& o) const;
  Residue operator-(const Residue& o) const;
  Residue operator*(const Residue& o) const;
  Residue operator-() const;

  friend bool operator==(const Residue&, const Residue&) = default;

 private:
  Residue(std::uint64_t value, std::uint64_t n, bool /*canonical*/)
      : value_(value), n_(n) {}

  std::uint64_t value_;
  std::uint64_t n_;
};

bool is_unit(const Residue& a);

/// Inverse of a unit. Throws NotAUnit when gcd(a, n) > 1.
Residue mod_inv(const Residue& a);

/// Euler's criterion on an odd prime p. Zero is not a residue.
/// Throws std::invalid_argument for p == 2.
bool is_quadratic_residue(std::int64_t a, std::uint64_t p);

std::string to_string(const Natural& v);

}  // namespace permcount

#endif  // PERMCOUNT_MODRING_HPP
