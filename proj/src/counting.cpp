#include "zsr/counting.hpp"

#include <numeric>
#include <vector>

namespace zsr {

std::string_view to_string(CountMethod m) {
  switch (m) {
    case CountMethod::formula:
      return "formula";
    case CountMethod::dp_oracle:
      return "dp";
    case CountMethod::molien_oracle:
      return "molien";
  }
  return "formula";
}

CountMethod parse_count_method(std::string_view s) {
  if (s == "formula") return CountMethod::formula;
  if (s == "dp") return CountMethod::dp_oracle;
  if (s == "molien") return CountMethod::molien_oracle;
  throw DomainError("unknown count method '" + std::string(s) + "'");
}

Natural count_formula_numerator(const OrderSpectrum& spectrum, std::uint64_t m) {
  const std::uint64_t n = spectrum.group_order();
  const std::uint64_t g = std::gcd(n, m);  // std::gcd(n, 0) == n
  Natural sum;
  for (auto d : divisors(g)) {
    const auto phi = spectrum.at(d);
    if (phi == 0) continue;
    sum += Natural(phi) * binomial(n / d + m / d, n / d);
  }
  return sum;
}

Natural count_formula(const OrderSpectrum& spectrum, std::uint64_t m) {
  const Natural sum = count_formula_numerator(spectrum, m);
  const Natural denom(spectrum.group_order() + m);
  if (!sum.divisible_by(denom)) {
    throw std::logic_error("count_formula: " + sum.str() + " not divisible by " + denom.str() +
                           " for spectrum " + spectrum.str());
  }
  return sum.divexact(denom);
}

Natural count_dp(const AbelianGroup& g, std::uint64_t m, DpBudget budget) {
  const std::uint64_t n = g.order();
  if (n > budget.max_group_order || m > budget.max_length) {
    throw BudgetExceeded("count_dp: budget is |G| <= " + std::to_string(budget.max_group_order) +
                         ", m <= " + std::to_string(budget.max_length) + " (got |G| = " + std::to_string(n) +
                         ", m = " + std::to_string(m) + ")");
  }
  const auto& factors = g.invariant_factors();
  const std::size_t r = factors.size();

  // Element i <-> mixed-radix digits, first factor least significant.
  std::vector<std::vector<std::uint64_t>> elems(n, std::vector<std::uint64_t>(r, 0));
  for (std::uint64_t i = 1; i < n; ++i) {
    elems[i] = elems[i - 1];
    for (std::size_t k = 0; k < r; ++k) {
      if (++elems[i][k] < factors[k]) break;
      elems[i][k] = 0;
    }
  }
  auto index_of = [&](const std::vector<std::uint64_t>& digits) {
    std::uint64_t idx = 0;
    for (std::size_t k = r; k-- > 0;) idx = idx * factors[k] + digits[k];
    return idx;
  };
  // minus[s][i] = index of (element s) - (element i)
  std::vector<std::vector<std::uint64_t>> minus(n, std::vector<std::uint64_t>(n));
  std::vector<std::uint64_t> tmp(r);
  for (std::uint64_t s = 0; s < n; ++s) {
    for (std::uint64_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < r; ++k) tmp[k] = (elems[s][k] + factors[k] - elems[i][k]) % factors[k];
      minus[s][i] = index_of(tmp);
    }
  }

  // f[k][s]: multisets of size k over the elements seen so far summing to s.
  std::vector<std::vector<Natural>> f(m + 1, std::vector<Natural>(n));
  f[0][0] = Natural(1);
  for (std::uint64_t i = 0; i < n; ++i) {
    // f(i,k,s) = f(i-1,k,s) + f(i,k-1,s-g_i); ascending k reuses element i.
    for (std::uint64_t k = 1; k <= m; ++k) {
      for (std::uint64_t s = 0; s < n; ++s) f[k][s] += f[k - 1][minus[s][i]];
    }
  }
  return f[m][0];
}

Natural count_molien(const OrderSpectrum& spectrum, std::uint64_t m, SeriesBudget budget) {
  const std::uint64_t n = spectrum.group_order();
  if (n > budget.max_group_order || m > budget.max_length) {
    throw BudgetExceeded("count_molien: budget is |G| <= " + std::to_string(budget.max_group_order) +
                         ", m <= " + std::to_string(budget.max_length) + " (got |G| = " + std::to_string(n) +
                         ", m = " + std::to_string(m) + ")");
  }
  std::vector<mpz_class> total(m + 1, 0);
  std::vector<mpz_class> term(m + 1);
  for (auto d : divisors(n)) {
    const auto phi = spectrum.at(d);
    if (phi == 0) continue;
    // (1 - t^d)^{-r} = sum_j C(j + r - 1, j) t^{jd}, built by the ratio
    // c_j = c_{j-1} * (j + r - 1) / j.
    const std::uint64_t r = n / d;
    std::fill(term.begin(), term.end(), 0);
    mpz_class c = 1;
    for (std::uint64_t j = 0; j * d <= m; ++j) {
      if (j > 0) {
        c *= static_cast<unsigned long>(j + r - 1);
        mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(j));
      }
      term[j * d] = c;
    }
    for (std::uint64_t k = 0; k <= m; ++k) total[k] += term[k] * static_cast<unsigned long>(phi);
  }
  const mpz_class& coeff = total[m];
  if (!mpz_divisible_ui_p(coeff.get_mpz_t(), static_cast<unsigned long>(n))) {
    throw std::logic_error("count_molien: coefficient " + coeff.get_str() + " not divisible by " +
                           std::to_string(n));
  }
  mpz_class q;
  mpz_divexact_ui(q.get_mpz_t(), coeff.get_mpz_t(), static_cast<unsigned long>(n));
  return Natural(std::move(q));
}

Natural rational_catalan(std::uint64_t n, std::uint64_t m) {
  if (n == 0 || m == 0) throw DomainError("rational_catalan: arguments must be >= 1");
  if (std::gcd(n, m) != 1) {
    throw DomainError("rational_catalan: " + std::to_string(n) + " and " + std::to_string(m) + " are not coprime");
  }
  return binomial(n + m, n).divexact(Natural(n + m));
}

CountReport count(const GroupDescriptor& g, std::uint64_t m, CountMethod method) {
  CountReport report{g, m, Natural{}, method};
  switch (method) {
    case CountMethod::formula:
      report.value = count_formula(order_spectrum(g), m);
      break;
    case CountMethod::dp_oracle:
      report.value = count_dp(g.abelian(), m);
      break;
    case CountMethod::molien_oracle:
      report.value = count_molien(order_spectrum(g), m);
      break;
  }
  return report;
}

}  // namespace zsr
