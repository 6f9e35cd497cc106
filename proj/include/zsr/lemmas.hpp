#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "zsr/exactmath.hpp"
#include "zsr/groupmodel.hpp"

namespace zsr {

// Exact verifiers for the binomial-ratio inequalities and the order-spectrum
// structure facts behind the reciprocity theorem. Each check recomputes its
// two sides along separate arithmetic paths and compares them exactly.
//
// Notation shared by all checks: m, n >= 2 are the two group orders, a < b are
// divisors of gcd(m, n), and
//
//   B(x) = C((m + n) / x, n / x)
//
// is the binomial weight of divisor x in the counting formula.

enum class LemmaId { L21i, L21ii, L22i, L22ii, L23, L24, L25 };

std::string_view to_string(LemmaId id);

struct LemmaInstance {
  LemmaId id = LemmaId::L21i;
  std::map<std::string, std::int64_t> parameters;
  bool holds = false;
  /// Which comparison lhs/rhs describe (the first failing one if any fails).
  std::string comparison;
  ExactRatio lhs;
  ExactRatio rhs;
};

enum class Variant { i, ii };

/// p^{alpha + gamma - 2s - 1} q^{beta - t} m' n', where n = p^alpha q^beta n',
/// m = p^gamma q^delta m' and a = p^s, b = q^t.
ExactRatio delta(std::uint64_t m, std::uint64_t n, std::uint64_t a, std::uint64_t b, std::uint64_t p,
                 std::uint64_t q);

/// Variant i (b > a): B(a)/B(b) >= (1 + m/n)^{n/a - n/b} (1 + a n / (b m))^{m/a - m/b},
/// and B(a) > B(b).
/// Variant ii (b >= 2a): a B(a) > max(m, n) B(b).
LemmaInstance check_lemma21(std::uint64_t m, std::uint64_t n, std::uint64_t a, std::uint64_t b, Variant v);

/// a = p^s, b = q^t distinct primes, b < 2a.
/// Variant i (n/a - n/b >= 3): a B(a)/B(b) > 2 Delta q^delta, and when Delta >= 1
///   a B(a) - (q^delta - q^t) B(b) > 2b B(b).
///   For {a, b} = {2, 3} only the latter is checked (it holds unconditionally).
/// Variant ii (n/a - n/b = 2, {a, b} != {2, 3}): a B(a)/B(b) > Delta q^delta,
///   and when Delta >= 1 a B(a) - (q^delta - q^t) B(b) > b B(b).
/// delta is the q-adic valuation of m.
LemmaInstance check_lemma22(std::uint64_t m, std::uint64_t n, std::uint64_t a, std::uint64_t b, std::uint64_t p,
                            std::uint64_t q, Variant v);

/// Spectrum-structure facts for a pair of abelian groups. Only lemmas whose
/// hypotheses hold produce an instance.
std::vector<LemmaInstance> check_structure_lemmas(const AbelianGroup& g, const AbelianGroup& h);

struct LemmaGridSummary {
  std::string grid;
  std::uint64_t max = 0;
  std::uint64_t instances = 0;
  std::vector<LemmaInstance> failures;  ///< lexicographic grid order
};

/// All m, n in [2, max] and divisors 2 <= a < b of gcd(m, n) admissible for v.
LemmaGridSummary lemma21_grid(Variant v, std::uint64_t max, unsigned parallelism = 1);

/// All m, n in [2, max] and prime powers a = p^s, b = q^t dividing gcd(m, n)
/// admissible for v. Variant i includes the {2, 3} clause.
LemmaGridSummary lemma22_grid(Variant v, std::uint64_t max, unsigned parallelism = 1);

/// All unordered pairs of abelian groups with orders in [1, max_order].
LemmaGridSummary structure_grid(std::uint64_t max_order, unsigned parallelism = 1);

}  // namespace zsr
