#include "zsr/lemmas.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <optional>
#include <thread>

namespace zsr {

std::string_view to_string(LemmaId id) {
  switch (id) {
    case LemmaId::L21i:
      return "L21i";
    case LemmaId::L21ii:
      return "L21ii";
    case LemmaId::L22i:
      return "L22i";
    case LemmaId::L22ii:
      return "L22ii";
    case LemmaId::L23:
      return "L23";
    case LemmaId::L24:
      return "L24";
    case LemmaId::L25:
      return "L25";
  }
  return "?";
}

namespace {

using i64 = std::int64_t;

i64 as_i64(std::uint64_t v) { return static_cast<i64>(v); }

ExactRatio ratio(std::uint64_t num, std::uint64_t den) {
  return {mpz_class(static_cast<unsigned long>(num)), mpz_class(static_cast<unsigned long>(den))};
}

Natural weight(std::uint64_t m, std::uint64_t n, std::uint64_t x) { return binomial((m + n) / x, n / x); }

void require(bool cond, const std::string& what) {
  if (!cond) throw DomainError("precondition failed: " + what);
}

void require_common_divisors(std::uint64_t m, std::uint64_t n, std::uint64_t a, std::uint64_t b) {
  require(m >= 2 && n >= 2, "m, n >= 2");
  require(a >= 2 && b >= 2, "a, b >= 2");
  const auto g = std::gcd(m, n);
  require(g % a == 0, "a | gcd(m, n)");
  require(g % b == 0, "b | gcd(m, n)");
}

unsigned prime_exponent_of(std::uint64_t x, std::uint64_t p, const char* name) {
  auto pp = as_prime_power(x);
  if (!pp || pp->prime != p) {
    throw DomainError(std::string("precondition failed: ") + name + " = " + std::to_string(x) +
                      " is not a power of " + std::to_string(p));
  }
  return pp->exponent;
}

}  // namespace

// -------------------------------------------------------------------- Delta

ExactRatio delta(std::uint64_t m, std::uint64_t n, std::uint64_t a, std::uint64_t b, std::uint64_t p,
                 std::uint64_t q) {
  require(is_prime(p) && is_prime(q), "p, q prime");
  require(p != q, "p != q");
  const unsigned s = prime_exponent_of(a, p, "a");
  const unsigned t = prime_exponent_of(b, q, "b");
  require(m >= 1 && n >= 1, "m, n >= 1");
  const auto g = std::gcd(m, n);
  require(g % a == 0, "a | gcd(m, n)");
  require(g % b == 0, "b | gcd(m, n)");

  const i64 alpha = valuation(n, p);
  const i64 beta = valuation(n, q);
  const i64 gamma = valuation(m, p);
  const std::uint64_t n_rest = strip_prime(strip_prime(n, p), q);
  const std::uint64_t m_rest = strip_prime(strip_prime(m, p), q);

  return ExactRatio(as_i64(p)).pow(alpha + gamma - 2 * static_cast<i64>(s) - 1) *
         ExactRatio(as_i64(q)).pow(beta - static_cast<i64>(t)) * ExactRatio(as_i64(m_rest)) *
         ExactRatio(as_i64(n_rest));
}

// --------------------------------------------------------------- Lemma 2.1

LemmaInstance check_lemma21(std::uint64_t m, std::uint64_t n, std::uint64_t a, std::uint64_t b, Variant v) {
  require_common_divisors(m, n, a, b);
  LemmaInstance out;
  out.parameters = {{"m", as_i64(m)}, {"n", as_i64(n)}, {"a", as_i64(a)}, {"b", as_i64(b)}};

  const Natural weight_a = weight(m, n, a);
  const Natural weight_b = weight(m, n, b);

  if (v == Variant::i) {
    require(b > a, "b > a");
    out.id = LemmaId::L21i;
    // Closed form from m, n, a, b alone; exponents are integers since a, b | m, n.
    const i64 exp_n = as_i64(n / a - n / b);
    const i64 exp_m = as_i64(m / a - m / b);
    const ExactRatio bound = (ExactRatio(1) + ratio(m, n)).pow(exp_n) * (ExactRatio(1) + ratio(a * n, b * m)).pow(exp_m);
    const ExactRatio quotient = ExactRatio(weight_a) / ExactRatio(weight_b);
    const bool ratio_ok = quotient >= bound;
    const bool strict_ok = weight_a > weight_b;
    out.holds = ratio_ok && strict_ok;
    if (!ratio_ok || strict_ok) {
      out.comparison = "ratio>=bound";
      out.lhs = quotient;
      out.rhs = bound;
    } else {
      out.comparison = "B(a)>B(b)";
      out.lhs = ExactRatio(weight_a);
      out.rhs = ExactRatio(weight_b);
    }
    return out;
  }

  require(b >= 2 * a, "b >= 2a");
  out.id = LemmaId::L21ii;
  out.comparison = "aB(a)>max(m,n)B(b)";
  out.lhs = ExactRatio(Natural(a) * weight_a);
  out.rhs = ExactRatio(Natural(std::max(m, n)) * weight_b);
  out.holds = out.lhs > out.rhs;
  return out;
}

// --------------------------------------------------------------- Lemma 2.2

LemmaInstance check_lemma22(std::uint64_t m, std::uint64_t n, std::uint64_t a, std::uint64_t b, std::uint64_t p,
                            std::uint64_t q, Variant v) {
  require_common_divisors(m, n, a, b);
  require(is_prime(p) && is_prime(q), "p, q prime");
  require(p != q, "p != q");
  const unsigned s = prime_exponent_of(a, p, "a");
  const unsigned t = prime_exponent_of(b, q, "b");
  require(b < 2 * a, "b < 2a");

  const i64 gap = as_i64(n / a) - as_i64(n / b);
  const bool special = (a == 2 && b == 3) || (a == 3 && b == 2);
  if (v == Variant::i) {
    require(gap >= 3, "n(1/a - 1/b) >= 3");
  } else {
    require(gap == 2, "n(1/a - 1/b) = 2");
    require(!special, "{a, b} != {2, 3}");
  }

  LemmaInstance out;
  out.id = v == Variant::i ? LemmaId::L22i : LemmaId::L22ii;
  const unsigned q_exp_m = valuation(m, q);  // delta
  out.parameters = {{"m", as_i64(m)},  {"n", as_i64(n)}, {"a", as_i64(a)},          {"b", as_i64(b)},
                    {"p", as_i64(p)},  {"q", as_i64(q)}, {"s", static_cast<i64>(s)}, {"t", static_cast<i64>(t)},
                    {"delta", q_exp_m}, {"clause23", special ? 1 : 0}};

  const Natural weight_a = weight(m, n, a);
  const Natural weight_b = weight(m, n, b);
  const std::uint64_t q_delta = ipow(q, q_exp_m);
  const std::uint64_t q_t = ipow(q, t);
  const std::uint64_t multiple = v == Variant::i ? 2 : 1;

  // a B(a) - (q^delta - q^t) B(b)  vs  multiple * b * B(b)
  auto consequence = [&](LemmaInstance& inst) {
    inst.comparison = v == Variant::i ? "aB(a)-(q^delta-q^t)B(b)>2bB(b)" : "aB(a)-(q^delta-q^t)B(b)>bB(b)";
    inst.lhs = ExactRatio(Natural(a) * weight_a) - ExactRatio(Natural(q_delta - q_t) * weight_b);
    inst.rhs = ExactRatio(Natural(multiple * b) * weight_b);
    return inst.lhs > inst.rhs;
  };

  if (special) {
    out.parameters["consequence"] = 1;
    out.holds = consequence(out);
    return out;
  }

  const ExactRatio d = delta(m, n, a, b, p, q);
  const ExactRatio quotient = ExactRatio(Natural(a) * weight_a) / ExactRatio(weight_b);
  const ExactRatio bound = ExactRatio(as_i64(multiple)) * d * ExactRatio(as_i64(q_delta));
  const bool ratio_ok = quotient > bound;
  const bool with_consequence = d >= ExactRatio(1);
  out.parameters["consequence"] = with_consequence ? 1 : 0;

  out.comparison = v == Variant::i ? "aB(a)/B(b)>2Delta*q^delta" : "aB(a)/B(b)>Delta*q^delta";
  out.lhs = quotient;
  out.rhs = bound;
  out.holds = ratio_ok;
  if (ratio_ok && with_consequence) {
    LemmaInstance probe = out;
    if (!consequence(probe)) {
      probe.holds = false;
      return probe;
    }
  }
  return out;
}

// -------------------------------------------------------- structure lemmas

std::vector<LemmaInstance> check_structure_lemmas(const AbelianGroup& g, const AbelianGroup& h) {
  const std::uint64_t n = g.order();
  const std::uint64_t m = h.order();
  const std::uint64_t common = std::gcd(n, m);
  const OrderSpectrum sg = order_spectrum(GroupDescriptor(g));
  const OrderSpectrum sh = order_spectrum(GroupDescriptor(h));
  std::vector<LemmaInstance> out;

  auto base_params = [&] { return std::map<std::string, i64>{{"n", as_i64(n)}, {"m", as_i64(m)}}; };

  // Minimum of {d | gcd : phi_G(d) > phi_H(d)} (side 0) or the reverse (side 1).
  for (int side = 0; side < 2; ++side) {
    std::optional<std::uint64_t> least;
    for (auto d : divisors(common)) {
      const auto x = sg.at(d);
      const auto y = sh.at(d);
      if (side == 0 ? x > y : x < y) {
        least = d;
        break;
      }
    }
    if (!least) continue;
    LemmaInstance inst;
    inst.id = LemmaId::L23;
    inst.parameters = base_params();
    inst.parameters["side"] = side;
    inst.comparison = "min_is_prime_power";
    const auto pp = as_prime_power(*least);
    inst.parameters["p"] = pp ? as_i64(pp->prime) : 0;
    inst.lhs = ExactRatio(as_i64(*least));
    inst.rhs = pp ? ExactRatio(as_i64(ipow(pp->prime, pp->exponent))) : ExactRatio(0);
    inst.holds = pp.has_value();
    out.push_back(std::move(inst));
  }

  for (const auto& [q, kmax] : factorize(common)) {
    unsigned t = 0;
    for (unsigned k = 1; k <= kmax; ++k) {
      if (sg.at(ipow(q, k)) != sh.at(ipow(q, k))) {
        t = k;
        break;
      }
    }
    if (t == 0) continue;

    // The side with more elements of order q^t must have q^{t+1} | its order,
    // and q^t <= difference <= q^delta - q^t with delta its q-valuation.
    const std::uint64_t qt = ipow(q, t);
    const bool h_larger = sg.at(qt) < sh.at(qt);
    const std::uint64_t larger_order = h_larger ? m : n;
    const std::uint64_t diff = h_larger ? sh.at(qt) - sg.at(qt) : sg.at(qt) - sh.at(qt);
    const unsigned dlt = valuation(larger_order, q);
    LemmaInstance l24;
    l24.id = LemmaId::L24;
    l24.parameters = base_params();
    l24.parameters["q"] = as_i64(q);
    l24.parameters["t"] = t;
    l24.parameters["delta"] = dlt;
    l24.parameters["side"] = h_larger ? 1 : 0;
    const std::uint64_t q_next = qt * q;
    const std::uint64_t q_delta = ipow(q, dlt);
    if (larger_order % q_next != 0) {
      l24.comparison = "q^(t+1)|order";
      l24.lhs = ExactRatio(as_i64(q_next));
      l24.rhs = ExactRatio(as_i64(larger_order));
      l24.holds = false;
    } else if (diff < qt) {
      l24.comparison = "q^t<=diff";
      l24.lhs = ExactRatio(as_i64(qt));
      l24.rhs = ExactRatio(as_i64(diff));
      l24.holds = false;
    } else {
      l24.comparison = "diff<=q^delta-q^t";
      l24.lhs = ExactRatio(as_i64(diff));
      l24.rhs = ExactRatio(as_i64(q_delta)) - ExactRatio(as_i64(qt));
      l24.holds = l24.lhs <= l24.rhs;
    }
    out.push_back(std::move(l24));

    // Sign flip between p^s and p^{s+1} with s >= 2 forces both p-valuations
    // to reach s + 2.
    const unsigned s = t;
    const std::uint64_t p = q;
    if (s >= 2 && s + 1 <= kmax) {
      const std::uint64_t ps = ipow(p, s);
      const std::uint64_t ps1 = ps * p;
      const bool flip = (sg.at(ps) > sh.at(ps) && sg.at(ps1) < sh.at(ps1)) ||
                        (sh.at(ps) > sg.at(ps) && sh.at(ps1) < sg.at(ps1));
      if (flip) {
        LemmaInstance l25;
        l25.id = LemmaId::L25;
        l25.parameters = base_params();
        l25.parameters["p"] = as_i64(p);
        l25.parameters["s"] = s;
        const i64 alpha = valuation(n, p);
        const i64 gamma = valuation(m, p);
        l25.parameters["alpha"] = alpha;
        l25.parameters["gamma"] = gamma;
        l25.comparison = "min(alpha,gamma)>=s+2";
        l25.lhs = ExactRatio(std::min(alpha, gamma));
        l25.rhs = ExactRatio(static_cast<i64>(s) + 2);
        l25.holds = l25.lhs >= l25.rhs;
        out.push_back(std::move(l25));
      }
    }
  }
  return out;
}

// -------------------------------------------------------------------- grids

namespace {

struct RowResult {
  std::uint64_t instances = 0;
  std::vector<LemmaInstance> failures;
};

// Rows are evaluated in any order but merged by row index.
template <typename RowFn>
LemmaGridSummary run_rows(std::string grid, std::uint64_t max, std::size_t rows, unsigned parallelism, RowFn fn) {
  std::vector<RowResult> results(rows);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t r = next++; r < rows; r = next++) results[r] = fn(r);
  };
  const unsigned workers = std::max(1u, parallelism);
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  LemmaGridSummary summary;
  summary.grid = std::move(grid);
  summary.max = max;
  for (auto& r : results) {
    summary.instances += r.instances;
    for (auto& f : r.failures) summary.failures.push_back(std::move(f));
  }
  return summary;
}

void record(RowResult& row, LemmaInstance inst) {
  ++row.instances;
  if (!inst.holds) row.failures.push_back(std::move(inst));
}

}  // namespace

LemmaGridSummary lemma21_grid(Variant v, std::uint64_t max, unsigned parallelism) {
  const std::size_t rows = max >= 2 ? max - 1 : 0;
  return run_rows(v == Variant::i ? "L21i" : "L21ii", max, rows, parallelism, [&](std::size_t r) {
    RowResult row;
    const std::uint64_t m = r + 2;
    for (std::uint64_t n = 2; n <= max; ++n) {
      const auto ds = divisors(std::gcd(m, n));
      for (auto a : ds) {
        if (a < 2) continue;
        for (auto b : ds) {
          if (b <= a || (v == Variant::ii && b < 2 * a)) continue;
          record(row, check_lemma21(m, n, a, b, v));
        }
      }
    }
    return row;
  });
}

LemmaGridSummary lemma22_grid(Variant v, std::uint64_t max, unsigned parallelism) {
  const std::size_t rows = max >= 2 ? max - 1 : 0;
  return run_rows(v == Variant::i ? "L22i" : "L22ii", max, rows, parallelism, [&](std::size_t r) {
    RowResult row;
    const std::uint64_t m = r + 2;
    for (std::uint64_t n = 2; n <= max; ++n) {
      std::vector<std::pair<std::uint64_t, PrimePower>> prime_powers;
      for (auto d : divisors(std::gcd(m, n))) {
        if (auto pp = as_prime_power(d)) prime_powers.emplace_back(d, *pp);
      }
      for (const auto& [a, pa] : prime_powers) {
        for (const auto& [b, qb] : prime_powers) {
          if (pa.prime == qb.prime || b >= 2 * a) continue;
          const std::int64_t gap = static_cast<std::int64_t>(n / a) - static_cast<std::int64_t>(n / b);
          const bool special = (a == 2 && b == 3) || (a == 3 && b == 2);
          const bool admissible = v == Variant::i ? gap >= 3 : (gap == 2 && !special);
          if (!admissible) continue;
          record(row, check_lemma22(m, n, a, b, pa.prime, qb.prime, v));
        }
      }
    }
    return row;
  });
}

LemmaGridSummary structure_grid(std::uint64_t max_order, unsigned parallelism) {
  std::vector<AbelianGroup> groups;
  for (std::uint64_t n = 1; n <= max_order; ++n) {
    for (auto& g : enumerate_abelian(n)) groups.push_back(std::move(g));
  }
  return run_rows("struct", max_order, groups.size(), parallelism, [&](std::size_t i) {
    RowResult row;
    for (std::size_t j = i; j < groups.size(); ++j) {
      for (auto& inst : check_structure_lemmas(groups[i], groups[j])) record(row, std::move(inst));
    }
    return row;
  });
}

}  // namespace zsr
