#pragma once

#include <cstdint>
#include <stdexcept>
#include <string_view>

#include "zsr/exactmath.hpp"
#include "zsr/groupmodel.hpp"

namespace zsr {

/// Raised by the oracles when an input exceeds their configured budget.
class BudgetExceeded : public DomainError {
 public:
  using DomainError::DomainError;
};

enum class CountMethod { formula, dp_oracle, molien_oracle };

std::string_view to_string(CountMethod m);
CountMethod parse_count_method(std::string_view s);

/// |M(G, m)| together with how it was obtained.
struct CountReport {
  GroupDescriptor group;
  std::uint64_t length = 0;
  Natural value;
  CountMethod method = CountMethod::formula;
};

/// Number of zero-sum multisets of length m over a group with this spectrum:
///
///   (1 / (n + m)) * sum_{d | gcd(n, m)} phi(d) * C(n/d + m/d, n/d)
///
/// with gcd(n, 0) = n. Depends on the spectrum only. Throws std::logic_error if
/// the sum is not divisible by n + m (which would mean the spectrum is wrong).
Natural count_formula(const OrderSpectrum& spectrum, std::uint64_t m);

/// The raw sum above, before division by n + m.
Natural count_formula_numerator(const OrderSpectrum& spectrum, std::uint64_t m);

struct DpBudget {
  std::uint64_t max_group_order = 36;
  std::uint64_t max_length = 36;
};

/// Direct multiset enumeration over the elements of g.
Natural count_dp(const AbelianGroup& g, std::uint64_t m, DpBudget budget = {});

struct SeriesBudget {
  std::uint64_t max_group_order = 64;
  std::uint64_t max_length = 128;
};

/// Coefficient of t^m in (1/n) * sum_{d | n} phi(d) (1 - t^d)^{-n/d}, the
/// Molien series of the regular representation.
Natural count_molien(const OrderSpectrum& spectrum, std::uint64_t m, SeriesBudget budget = {});

/// C(n + m, n) / (n + m) for coprime n, m >= 1.
Natural rational_catalan(std::uint64_t n, std::uint64_t m);

/// Dispatches on method; dp requires an abelian group.
CountReport count(const GroupDescriptor& g, std::uint64_t m, CountMethod method);

}  // namespace zsr
