#include "zsr/groupmodel.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace zsr {

// ------------------------------------------------------------ AbelianGroup

AbelianGroup canonicalize(std::vector<std::uint64_t> factors) {
  for (auto f : factors) {
    if (f <= 1) throw DomainError("canonicalize: factor " + std::to_string(f) + " must be >= 2");
  }
  // prime -> exponents contributed by each factor
  std::map<std::uint64_t, std::vector<unsigned>> exps;
  for (auto f : factors) {
    for (const auto& pp : factorize(f)) exps[pp.prime].push_back(pp.exponent);
  }
  std::size_t rank = 0;
  for (auto& [p, e] : exps) {
    std::sort(e.begin(), e.end(), std::greater<>());
    rank = std::max(rank, e.size());
  }
  // chain[0] is the largest invariant factor.
  std::vector<std::uint64_t> chain(rank, 1);
  for (const auto& [p, e] : exps) {
    for (std::size_t i = 0; i < e.size(); ++i) chain[i] *= ipow(p, e[i]);
  }
  std::reverse(chain.begin(), chain.end());
  return AbelianGroup::from_factors(std::move(chain));
}

AbelianGroup AbelianGroup::from_factors(std::vector<std::uint64_t> factors) {
  bool is_chain = std::all_of(factors.begin(), factors.end(), [](auto f) { return f >= 2; });
  for (std::size_t i = 1; is_chain && i < factors.size(); ++i) is_chain = factors[i] % factors[i - 1] == 0;
  if (!is_chain) return canonicalize(std::move(factors));
  return AbelianGroup(std::move(factors));
}

std::uint64_t AbelianGroup::order() const {
  std::uint64_t n = 1;
  for (auto f : factors_) n *= f;
  return n;
}

// --------------------------------------------------------- GroupDescriptor

bool operator==(const Product& a, const Product& b) { return a.factors == b.factors; }

GroupDescriptor GroupDescriptor::dihedral(std::uint64_t half_order) {
  if (half_order < 3) throw DomainError("dihedral group needs half order >= 3");
  return GroupDescriptor(Variant{Dihedral{half_order}});
}

GroupDescriptor GroupDescriptor::dicyclic(std::uint64_t index) {
  if (index < 2) throw DomainError("dicyclic group needs index >= 2");
  return GroupDescriptor(Variant{Dicyclic{index}});
}

GroupDescriptor GroupDescriptor::product(std::vector<GroupDescriptor> factors) {
  std::vector<GroupDescriptor> nonabelian;
  std::vector<std::uint64_t> abelian_factors;
  auto absorb = [&](auto& self, const GroupDescriptor& g) -> void {
    std::visit(
        [&](const auto& v) {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, AbelianGroup>) {
            const auto& f = v.invariant_factors();
            abelian_factors.insert(abelian_factors.end(), f.begin(), f.end());
          } else if constexpr (std::is_same_v<T, Product>) {
            for (const auto& inner : v.factors) self(self, inner);
          } else {
            nonabelian.push_back(g);
          }
        },
        g.variant());
  };
  for (const auto& f : factors) absorb(absorb, f);

  AbelianGroup ab = canonicalize(std::move(abelian_factors));
  if (nonabelian.empty()) return GroupDescriptor(std::move(ab));
  if (!ab.is_trivial()) nonabelian.emplace_back(std::move(ab));
  if (nonabelian.size() == 1) return nonabelian.front();
  return GroupDescriptor(Variant{Product{std::move(nonabelian)}});
}

const AbelianGroup& GroupDescriptor::abelian() const {
  if (const auto* a = std::get_if<AbelianGroup>(&v_)) return *a;
  throw DomainError(notation() + " is not abelian");
}

std::uint64_t GroupDescriptor::order() const {
  return std::visit(
      [](const auto& v) -> std::uint64_t {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, AbelianGroup>) {
          return v.order();
        } else if constexpr (std::is_same_v<T, Dihedral>) {
          return 2 * v.half_order;
        } else if constexpr (std::is_same_v<T, Dicyclic>) {
          return 4 * v.index;
        } else {
          std::uint64_t n = 1;
          for (const auto& f : v.factors) n *= f.order();
          return n;
        }
      },
      v_);
}

std::string GroupDescriptor::notation() const {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, AbelianGroup>) {
          if (v.is_trivial()) return "C1";
          std::string out;
          for (auto f : v.invariant_factors()) {
            if (!out.empty()) out += 'x';
            out += "C" + std::to_string(f);
          }
          return out;
        } else if constexpr (std::is_same_v<T, Dihedral>) {
          return "D" + std::to_string(2 * v.half_order);
        } else if constexpr (std::is_same_v<T, Dicyclic>) {
          return "Dic" + std::to_string(v.index);
        } else {
          std::string out;
          for (const auto& f : v.factors) {
            if (!out.empty()) out += 'x';
            out += f.notation();
          }
          return out;
        }
      },
      v_);
}

// ----------------------------------------------------------------- parsing

ParseError::ParseError(const std::string& message, std::size_t offset)
    : DomainError(message + " at byte " + std::to_string(offset)), offset_(offset) {}

namespace {

constexpr std::uint64_t kMaxNotationValue = 1'000'000'000;

class NotationParser {
 public:
  explicit NotationParser(std::string_view text) : text_(text) {}

  GroupDescriptor parse() {
    if (text_.empty()) throw ParseError("empty group notation", 0);
    std::vector<GroupDescriptor> terms;
    terms.push_back(term());
    while (pos_ < text_.size()) {
      if (text_[pos_] != 'x') throw ParseError(std::string("expected 'x', found '") + text_[pos_] + "'", pos_);
      ++pos_;
      terms.push_back(term());
    }
    return GroupDescriptor::product(std::move(terms));
  }

 private:
  bool consume(std::string_view token) {
    if (text_.substr(pos_, token.size()) != token) return false;
    pos_ += token.size();
    return true;
  }

  std::uint64_t integer() {
    const std::size_t start = pos_;
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), value);
    if (ec == std::errc::result_out_of_range) throw ParseError("integer out of range", start);
    if (ec != std::errc()) throw ParseError("expected integer", start);
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    if (value > kMaxNotationValue) throw ParseError("integer out of range", start);
    return value;
  }

  GroupDescriptor term() {
    const std::size_t start = pos_;
    if (consume("Q8")) return GroupDescriptor::dicyclic(2);
    if (consume("Dic")) {
      const auto k = integer();
      if (k < 2) throw ParseError("Dic<k> requires k >= 2", start);
      return GroupDescriptor::dicyclic(k);
    }
    if (consume("D")) {
      const auto n = integer();
      if (n % 2 != 0 || n < 6) throw ParseError("D<n> requires even n >= 6", start);
      return GroupDescriptor::dihedral(n / 2);
    }
    if (consume("C")) {
      const auto n = integer();
      if (n == 0) throw ParseError("C<n> requires n >= 1", start);
      if (n == 1) return GroupDescriptor{};
      return GroupDescriptor(canonicalize({n}));
    }
    if (pos_ >= text_.size()) throw ParseError("expected group term", pos_);
    throw ParseError(std::string("unexpected character '") + text_[pos_] + "'", pos_);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

GroupDescriptor parse_group(std::string_view text) { return NotationParser(text).parse(); }

// ----------------------------------------------------------- OrderSpectrum

OrderSpectrum::OrderSpectrum(std::uint64_t group_order, std::map<std::uint64_t, std::uint64_t> entries)
    : order_(group_order), entries_(std::move(entries)) {
  if (order_ == 0) throw DomainError("OrderSpectrum: group order must be >= 1");
  std::uint64_t total = 0;
  for (const auto& [d, count] : entries_) {
    if (d == 0 || order_ % d != 0) {
      throw DomainError("OrderSpectrum: key " + std::to_string(d) + " does not divide " + std::to_string(order_));
    }
    total += count;
  }
  for (auto d : divisors(order_)) entries_.try_emplace(d, 0);
  if (entries_.at(1) != 1) throw DomainError("OrderSpectrum: phi(1) must be 1");
  if (total != order_) throw DomainError("OrderSpectrum: counts sum to " + std::to_string(total));
}

std::uint64_t OrderSpectrum::at(std::uint64_t d) const {
  auto it = entries_.find(d);
  return it == entries_.end() ? 0 : it->second;
}

std::string OrderSpectrum::str() const {
  std::string out = "{";
  for (const auto& [d, c] : entries_) {
    if (out.size() > 1) out += ',';
    out += std::to_string(d) + ":" + std::to_string(c);
  }
  return out + "}";
}

namespace {

std::map<std::uint64_t, std::uint64_t> cyclic_counts(std::uint64_t n) {
  std::map<std::uint64_t, std::uint64_t> out;
  for (auto d : divisors(n)) out[d] = euler_phi(d);
  return out;
}

// phi(d) = sum_{l | d} mu(d/l) prod_i gcd(n_i, l)
std::map<std::uint64_t, std::uint64_t> abelian_counts(const AbelianGroup& g) {
  const auto& factors = g.invariant_factors();
  std::map<std::uint64_t, std::uint64_t> out;
  for (auto d : divisors(g.order())) {
    std::int64_t phi = 0;
    for (auto l : divisors(d)) {
      const int mu = mobius(d / l);
      if (mu == 0) continue;
      std::int64_t prod = 1;
      for (auto ni : factors) prod *= static_cast<std::int64_t>(std::gcd(ni, l));
      phi += mu * prod;
    }
    out[d] = static_cast<std::uint64_t>(phi);
  }
  return out;
}

// Order of (x, y) is lcm(ord x, ord y).
OrderSpectrum lcm_convolve(const OrderSpectrum& a, const OrderSpectrum& b) {
  std::map<std::uint64_t, std::uint64_t> out;
  for (const auto& [da, ca] : a.entries()) {
    if (ca == 0) continue;
    for (const auto& [db, cb] : b.entries()) {
      if (cb == 0) continue;
      out[std::lcm(da, db)] += ca * cb;
    }
  }
  return {a.group_order() * b.group_order(), std::move(out)};
}

}  // namespace

OrderSpectrum order_spectrum(const GroupDescriptor& g) {
  return std::visit(
      [](const auto& v) -> OrderSpectrum {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, AbelianGroup>) {
          return {v.order(), abelian_counts(v)};
        } else if constexpr (std::is_same_v<T, Dihedral>) {
          // rotations form C_k; the k reflections are involutions
          auto counts = cyclic_counts(v.half_order);
          counts[2] += v.half_order;
          return {2 * v.half_order, std::move(counts)};
        } else if constexpr (std::is_same_v<T, Dicyclic>) {
          // <a> = C_{2k}; every element a^j b of the other coset has order 4
          auto counts = cyclic_counts(2 * v.index);
          counts[4] += 2 * v.index;
          return {4 * v.index, std::move(counts)};
        } else {
          OrderSpectrum acc;
          for (const auto& f : v.factors) acc = lcm_convolve(acc, order_spectrum(f));
          return acc;
        }
      },
      g.variant());
}

OrderSpectrum order_spectrum_bruteforce(const AbelianGroup& g, std::uint64_t bound) {
  const auto n = g.order();
  if (n > bound) {
    throw DomainError("order_spectrum_bruteforce: order " + std::to_string(n) + " exceeds oracle bound " +
                      std::to_string(bound));
  }
  const auto& factors = g.invariant_factors();
  std::vector<std::uint64_t> digits(factors.size(), 0);
  std::map<std::uint64_t, std::uint64_t> counts;
  for (std::uint64_t idx = 0; idx < n; ++idx) {
    std::uint64_t ord = 1;
    for (std::size_t i = 0; i < factors.size(); ++i) {
      ord = std::lcm(ord, factors[i] / std::gcd(factors[i], digits[i]));
    }
    ++counts[ord];
    for (std::size_t i = 0; i < digits.size(); ++i) {
      if (++digits[i] < factors[i]) break;
      digits[i] = 0;
    }
  }
  return {n, std::move(counts)};
}

// ------------------------------------------------------------ enumeration

std::vector<std::vector<unsigned>> integer_partitions(unsigned k) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> current;
  auto rec = [&](auto& self, unsigned remaining, unsigned max_part) -> void {
    if (remaining == 0) {
      out.push_back(current);
      return;
    }
    for (unsigned part = std::min(remaining, max_part); part >= 1; --part) {
      current.push_back(part);
      self(self, remaining - part, part);
      current.pop_back();
    }
  };
  rec(rec, k, k);
  return out;
}

std::vector<AbelianGroup> enumerate_abelian(std::uint64_t n) {
  if (n == 0) throw DomainError("enumerate_abelian: order must be >= 1");
  std::vector<std::vector<std::uint64_t>> partial{{}};
  for (const auto& [p, a] : factorize(n)) {
    std::vector<std::vector<std::uint64_t>> next;
    for (const auto& lambda : integer_partitions(a)) {
      for (const auto& base : partial) {
        auto f = base;
        for (auto part : lambda) f.push_back(ipow(p, part));
        next.push_back(std::move(f));
      }
    }
    partial = std::move(next);
  }
  std::vector<AbelianGroup> out;
  out.reserve(partial.size());
  for (auto& f : partial) out.push_back(canonicalize(std::move(f)));
  std::sort(out.begin(), out.end(), [](const AbelianGroup& x, const AbelianGroup& y) {
    const auto& fx = x.invariant_factors();
    const auto& fy = y.invariant_factors();
    if (fx.size() != fy.size()) return fx.size() < fy.size();
    return fx < fy;
  });
  return out;
}

}  // namespace zsr
