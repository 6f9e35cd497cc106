#include "zsr/exactmath.hpp"

#include <algorithm>
#include <limits>

namespace zsr {

namespace {

mpz_class mpz_from_u64(std::uint64_t v) {
  mpz_class out;
  mpz_import(out.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
  return out;
}

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

}  // namespace

// ---------------------------------------------------------------- Natural

Natural::Natural(std::uint64_t v) : value_(mpz_from_u64(v)) {}

Natural::Natural(mpz_class v) : value_(std::move(v)) {
  if (sgn(value_) < 0) throw DomainError("Natural: negative value " + value_.get_str());
}

Natural Natural::parse(std::string_view decimal) {
  if (!all_digits(decimal)) throw DomainError("Natural: not a decimal string: '" + std::string(decimal) + "'");
  return Natural(mpz_class(std::string(decimal), 10));
}

bool Natural::fits_u64() const { return mpz_sizeinbase(value_.get_mpz_t(), 2) <= 64; }

std::uint64_t Natural::to_u64() const {
  if (!fits_u64()) throw DomainError("Natural: value exceeds 64 bits");
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, 1, sizeof(out), 0, 0, value_.get_mpz_t());
  return out;
}

Natural& Natural::operator+=(const Natural& rhs) {
  value_ += rhs.value_;
  return *this;
}

Natural& Natural::operator*=(const Natural& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Natural operator-(const Natural& lhs, const Natural& rhs) {
  if (rhs > lhs) throw DomainError("Natural: subtraction below zero");
  return Natural(mpz_class(lhs.value_ - rhs.value_));
}

bool Natural::divisible_by(const Natural& divisor) const {
  if (divisor.is_zero()) return false;
  return mpz_divisible_p(value_.get_mpz_t(), divisor.value_.get_mpz_t()) != 0;
}

Natural Natural::divexact(const Natural& divisor) const {
  if (!divisible_by(divisor)) {
    throw DomainError("Natural: " + divisor.str() + " does not divide " + str());
  }
  mpz_class q;
  mpz_divexact(q.get_mpz_t(), value_.get_mpz_t(), divisor.value_.get_mpz_t());
  return Natural(std::move(q));
}

// ------------------------------------------------------------- ExactRatio

static_assert(sizeof(long) == sizeof(std::int64_t), "GMP si conversions assume LP64");

ExactRatio::ExactRatio(std::int64_t v) : value_(static_cast<long>(v)) {}

ExactRatio::ExactRatio(const Natural& v) : value_(v.mpz()) {}

ExactRatio::ExactRatio(mpz_class num, mpz_class den) {
  if (sgn(den) == 0) throw DomainError("ExactRatio: zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

ExactRatio::ExactRatio(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }

ExactRatio ExactRatio::parse(std::string_view text) {
  auto slash = text.find('/');
  auto parse_int = [](std::string_view s) {
    std::string_view digits = s;
    if (!digits.empty() && digits.front() == '-') digits.remove_prefix(1);
    if (!all_digits(digits)) throw DomainError("ExactRatio: malformed '" + std::string(s) + "'");
    return mpz_class(std::string(s), 10);
  };
  if (slash == std::string_view::npos) return ExactRatio(parse_int(text), 1);
  return ExactRatio(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

std::string ExactRatio::str() const {
  if (value_.get_den() == 1) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

ExactRatio ExactRatio::pow(std::int64_t exponent) const {
  if (exponent < 0 && sgn(value_) == 0) throw DomainError("ExactRatio: zero to a negative power");
  if (exponent > std::numeric_limits<long>::max() || -exponent > std::numeric_limits<long>::max()) {
    throw DomainError("ExactRatio: exponent out of range");
  }
  const unsigned long e = static_cast<unsigned long>(exponent < 0 ? -exponent : exponent);
  mpz_class num;
  mpz_class den;
  mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), e);
  if (exponent < 0) std::swap(num, den);
  return ExactRatio(num, den);
}

ExactRatio& ExactRatio::operator+=(const ExactRatio& rhs) {
  value_ += rhs.value_;
  return *this;
}

ExactRatio& ExactRatio::operator-=(const ExactRatio& rhs) {
  value_ -= rhs.value_;
  return *this;
}

ExactRatio& ExactRatio::operator*=(const ExactRatio& rhs) {
  value_ *= rhs.value_;
  return *this;
}

ExactRatio& ExactRatio::operator/=(const ExactRatio& rhs) {
  if (sgn(rhs.value_) == 0) throw DomainError("ExactRatio: division by zero");
  value_ /= rhs.value_;
  return *this;
}

std::strong_ordering operator<=>(const ExactRatio& a, const ExactRatio& b) {
  // Denominators are positive, so the sign of a.num*b.den - b.num*a.den decides.
  mpz_class lhs = a.value_.get_num() * b.value_.get_den();
  mpz_class rhs = b.value_.get_num() * a.value_.get_den();
  return cmp(lhs, rhs) <=> 0;
}

// ----------------------------------------------------------- number theory

Factorization factorize(std::uint64_t n) {
  if (n == 0) throw DomainError("factorize: input must be >= 1");
  Factorization out;
  for (std::uint64_t p = 2; p <= n / p; p += (p == 2 ? 1 : 2)) {
    if (n % p != 0) continue;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.push_back({p, e});
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  if (n == 0) throw DomainError("divisors: input must be >= 1");
  std::vector<std::uint64_t> out{1};
  for (const auto& [p, e] : factorize(n)) {
    const std::size_t base = out.size();
    std::uint64_t pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

int mobius(std::uint64_t n) {
  if (n == 0) throw DomainError("mobius: input must be >= 1");
  int sign = 1;
  for (const auto& pp : factorize(n)) {
    if (pp.exponent > 1) return 0;
    sign = -sign;
  }
  return sign;
}

std::uint64_t euler_phi(std::uint64_t n) {
  if (n == 0) throw DomainError("euler_phi: input must be >= 1");
  std::uint64_t out = n;
  for (const auto& pp : factorize(n)) out = out / pp.prime * (pp.prime - 1);
  return out;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  const auto f = factorize(n);
  return f.size() == 1 && f.front().exponent == 1;
}

std::optional<PrimePower> as_prime_power(std::uint64_t n) {
  if (n < 2) return std::nullopt;
  auto f = factorize(n);
  if (f.size() != 1) return std::nullopt;
  return f.front();
}

unsigned valuation(std::uint64_t n, std::uint64_t p) {
  if (n == 0) throw DomainError("valuation: input must be >= 1");
  if (p < 2) throw DomainError("valuation: base must be >= 2");
  unsigned e = 0;
  while (n % p == 0) {
    n /= p;
    ++e;
  }
  return e;
}

std::uint64_t strip_prime(std::uint64_t n, std::uint64_t p) {
  if (n == 0) throw DomainError("strip_prime: input must be >= 1");
  if (p < 2) throw DomainError("strip_prime: base must be >= 2");
  while (n % p == 0) n /= p;
  return n;
}

std::uint64_t ipow(std::uint64_t base, unsigned exponent) {
  std::uint64_t out = 1;
  for (unsigned i = 0; i < exponent; ++i) {
    if (base != 0 && out > std::numeric_limits<std::uint64_t>::max() / base) {
      throw DomainError("ipow: overflow");
    }
    out *= base;
  }
  return out;
}

Natural binomial(std::uint64_t top, std::uint64_t bottom) {
  if (bottom > top) {
    throw DomainError("binomial: bottom " + std::to_string(bottom) + " exceeds top " + std::to_string(top));
  }
  const std::uint64_t k = std::min(bottom, top - bottom);
  mpz_class r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // r * (top - k + i) is divisible by i: it equals i * C(top - k + i, i).
    r *= mpz_from_u64(top - k + i);
    mpz_divexact(r.get_mpz_t(), r.get_mpz_t(), mpz_from_u64(i).get_mpz_t());
  }
  return Natural(std::move(r));
}

}  // namespace zsr
