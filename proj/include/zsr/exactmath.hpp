#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace zsr {

/// Raised when an argument lies outside an operation's mathematical domain.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Arbitrary-precision non-negative integer.
///
/// Thin value wrapper around GMP's mpz_class. Every operation that could
/// leave the naturals (subtraction below zero, inexact division) throws
/// instead of wrapping or truncating.
class Natural {
 public:
  Natural() = default;
  Natural(std::uint64_t v);  // NOLINT(google-explicit-constructor)
  explicit Natural(mpz_class v);

  static Natural parse(std::string_view decimal);

  const mpz_class& mpz() const { return value_; }
  std::string str() const { return value_.get_str(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool fits_u64() const;
  std::uint64_t to_u64() const;

  Natural& operator+=(const Natural& rhs);
  Natural& operator*=(const Natural& rhs);

  friend Natural operator+(Natural lhs, const Natural& rhs) { return lhs += rhs; }
  friend Natural operator*(Natural lhs, const Natural& rhs) { return lhs *= rhs; }
  /// Throws DomainError when rhs > lhs.
  friend Natural operator-(const Natural& lhs, const Natural& rhs);

  /// Exact quotient; throws DomainError if divisor is zero or does not divide.
  Natural divexact(const Natural& divisor) const;
  bool divisible_by(const Natural& divisor) const;

  friend bool operator==(const Natural& a, const Natural& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const Natural& a, const Natural& b) {
    return cmp(a.value_, b.value_) <=> 0;
  }

 private:
  mpz_class value_;
};

/// Exact rational number, always in lowest terms with positive denominator.
class ExactRatio {
 public:
  ExactRatio() = default;
  ExactRatio(std::int64_t v);  // NOLINT(google-explicit-constructor)
  ExactRatio(const Natural& v);  // NOLINT(google-explicit-constructor)
  ExactRatio(mpz_class num, mpz_class den);
  explicit ExactRatio(mpq_class v);

  static ExactRatio parse(std::string_view text);

  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }
  const mpq_class& mpq() const { return value_; }

  /// "num" when the denominator is 1, "num/den" otherwise.
  std::string str() const;

  /// Integer power; negative exponents invert (zero base with negative
  /// exponent is a domain error).
  ExactRatio pow(std::int64_t exponent) const;

  ExactRatio& operator+=(const ExactRatio& rhs);
  ExactRatio& operator-=(const ExactRatio& rhs);
  ExactRatio& operator*=(const ExactRatio& rhs);
  ExactRatio& operator/=(const ExactRatio& rhs);

  friend ExactRatio operator+(ExactRatio a, const ExactRatio& b) { return a += b; }
  friend ExactRatio operator-(ExactRatio a, const ExactRatio& b) { return a -= b; }
  friend ExactRatio operator*(ExactRatio a, const ExactRatio& b) { return a *= b; }
  friend ExactRatio operator/(ExactRatio a, const ExactRatio& b) { return a /= b; }

  friend bool operator==(const ExactRatio& a, const ExactRatio& b) { return cmp(a.value_, b.value_) == 0; }
  /// Compares by cross-multiplication of the canonical representatives.
  friend std::strong_ordering operator<=>(const ExactRatio& a, const ExactRatio& b);

 private:
  mpq_class value_;
};

struct PrimePower {
  std::uint64_t prime = 0;
  unsigned exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Primes strictly increasing, exponents >= 1.
using Factorization = std::vector<PrimePower>;

/// Trial-division factorization. factorize(1) is empty; factorize(0) throws.
Factorization factorize(std::uint64_t n);

/// All divisors of n in increasing order.
std::vector<std::uint64_t> divisors(std::uint64_t n);

int mobius(std::uint64_t n);
std::uint64_t euler_phi(std::uint64_t n);
bool is_prime(std::uint64_t n);

/// Returns (p, s) if n = p^s with s >= 1.
std::optional<PrimePower> as_prime_power(std::uint64_t n);

/// Exponent of the prime p in n (n >= 1).
unsigned valuation(std::uint64_t n, std::uint64_t p);

/// n with every factor of p removed.
std::uint64_t strip_prime(std::uint64_t n, std::uint64_t p);

std::uint64_t ipow(std::uint64_t base, unsigned exponent);

/// Exact binomial coefficient via the running-product formula; bottom > top
/// is a domain error.
Natural binomial(std::uint64_t top, std::uint64_t bottom);

}  // namespace zsr
