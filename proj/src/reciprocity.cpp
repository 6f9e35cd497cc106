#include "zsr/reciprocity.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <numeric>
#include <thread>

namespace zsr {

SpectrumCondition spectrum_condition(const OrderSpectrum& g, const OrderSpectrum& h) {
  for (auto d : divisors(std::gcd(g.group_order(), h.group_order()))) {
    if (g.at(d) != h.at(d)) return {false, d};
  }
  return {true, std::nullopt};
}

SpectrumCondition spectrum_condition(const GroupDescriptor& g, const GroupDescriptor& h) {
  return spectrum_condition(order_spectrum(g), order_spectrum(h));
}

ReciprocityReport reciprocity_check(const GroupDescriptor& g, const OrderSpectrum& spectrum_g,
                                    const GroupDescriptor& h, const OrderSpectrum& spectrum_h) {
  ReciprocityReport r;
  r.g = g;
  r.h = h;
  const auto cond = spectrum_condition(spectrum_g, spectrum_h);
  r.spectra_agree = cond.agree;
  r.witness_divisor = cond.witness;
  r.count_g_at_h = count_formula(spectrum_g, spectrum_h.group_order());
  r.count_h_at_g = count_formula(spectrum_h, spectrum_g.group_order());
  r.counts_agree = r.count_g_at_h == r.count_h_at_g;
  r.iff_consistent = r.spectra_agree == r.counts_agree;
  return r;
}

ReciprocityReport reciprocity_check(const GroupDescriptor& g, const GroupDescriptor& h) {
  return reciprocity_check(g, order_spectrum(g), h, order_spectrum(h));
}

// ---------------------------------------------------------------- families

std::string_view to_string(Family f) {
  switch (f) {
    case Family::abelian:
      return "abelian";
    case Family::dihedral:
      return "dihedral";
    case Family::dicyclic:
      return "dicyclic";
    case Family::products:
      return "products";
  }
  return "abelian";
}

Family parse_family(std::string_view s) {
  for (auto f : {Family::abelian, Family::dihedral, Family::dicyclic, Family::products}) {
    if (s == to_string(f)) return f;
  }
  throw DomainError("unknown family '" + std::string(s) + "'");
}

std::set<Family> parse_families(std::string_view list) {
  std::set<Family> out;
  std::size_t start = 0;
  while (start <= list.size()) {
    auto comma = list.find(',', start);
    if (comma == std::string_view::npos) comma = list.size();
    out.insert(parse_family(list.substr(start, comma - start)));
    start = comma + 1;
  }
  return out;
}

namespace {

bool canonical_less(const GroupDescriptor& a, const GroupDescriptor& b) {
  if (a.order() != b.order()) return a.order() < b.order();
  return a.notation() < b.notation();
}

std::vector<GroupDescriptor> base_members(bool abelian, bool dihedral, bool dicyclic, std::uint64_t max_order,
                                          bool include_trivial) {
  std::vector<GroupDescriptor> out;
  if (abelian) {
    for (std::uint64_t n = include_trivial ? 1 : 2; n <= max_order; ++n) {
      for (auto& g : enumerate_abelian(n)) out.emplace_back(std::move(g));
    }
  }
  if (dihedral) {
    for (std::uint64_t k = 3; 2 * k <= max_order; ++k) out.push_back(GroupDescriptor::dihedral(k));
  }
  if (dicyclic) {
    for (std::uint64_t k = 2; 4 * k <= max_order; ++k) out.push_back(GroupDescriptor::dicyclic(k));
  }
  return out;
}

}  // namespace

std::vector<GroupDescriptor> family_members(const std::set<Family>& families, std::uint64_t max_order) {
  auto out = base_members(families.contains(Family::abelian), families.contains(Family::dihedral),
                          families.contains(Family::dicyclic), max_order, true);
  std::sort(out.begin(), out.end(), canonical_less);

  if (families.contains(Family::products)) {
    std::set<std::pair<std::uint64_t, OrderSpectrum>> seen;
    for (const auto& g : out) seen.emplace(g.order(), order_spectrum(g));

    auto factors = base_members(true, true, true, max_order / 2, false);
    std::sort(factors.begin(), factors.end(), canonical_less);
    std::vector<GroupDescriptor> products;
    for (std::size_t i = 0; i < factors.size(); ++i) {
      for (std::size_t j = i; j < factors.size(); ++j) {
        if (factors[i].order() * factors[j].order() > max_order) continue;
        if (factors[i].is_abelian() && factors[j].is_abelian()) continue;
        products.push_back(GroupDescriptor::product({factors[i], factors[j]}));
      }
    }
    std::sort(products.begin(), products.end(), canonical_less);
    for (auto& p : products) {
      if (seen.emplace(p.order(), order_spectrum(p)).second) out.push_back(std::move(p));
    }
    std::sort(out.begin(), out.end(), canonical_less);
  }
  return out;
}

// -------------------------------------------------------------------- scans

ScanSummary scan_pairs(const std::vector<GroupDescriptor>& groups, const PairScanOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<OrderSpectrum> spectra;
  spectra.reserve(groups.size());
  for (const auto& g : groups) spectra.push_back(order_spectrum(g));
  std::vector<std::string> names;
  names.reserve(groups.size());
  for (const auto& g : groups) names.push_back(g.notation());

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < groups.size(); ++i) {
    for (std::size_t j = i; j < groups.size(); ++j) pairs.emplace_back(i, j);
  }

  ScanSummary summary;
  const unsigned workers = std::max(1u, options.parallelism);
  constexpr std::size_t kChunk = 2048;
  std::vector<std::optional<ReciprocityReport>> buffer;
  std::vector<char> fresh;

  for (std::size_t base = 0; base < pairs.size(); base += kChunk) {
    const std::size_t len = std::min(kChunk, pairs.size() - base);
    buffer.assign(len, std::nullopt);
    fresh.assign(len, 1);

    if (options.known != nullptr) {
      for (std::size_t k = 0; k < len; ++k) {
        const auto [i, j] = pairs[base + k];
        auto it = options.known->find({names[i], names[j]});
        if (it != options.known->end()) {
          buffer[k] = it->second;
          fresh[k] = 0;
        }
      }
    }

    std::atomic<std::size_t> next{0};
    auto work = [&] {
      for (std::size_t k = next++; k < len; k = next++) {
        if (buffer[k]) continue;
        const auto [i, j] = pairs[base + k];
        buffer[k] = reciprocity_check(groups[i], spectra[i], groups[j], spectra[j]);
      }
    };
    if (workers == 1) {
      work();
    } else {
      std::vector<std::jthread> pool;
      for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    }

    // Emit strictly in pair order regardless of which worker finished first.
    for (std::size_t k = 0; k < len; ++k) {
      const auto& r = *buffer[k];
      ++summary.pairs_checked;
      if (r.spectra_agree) ++summary.pairs_spectra_agree;
      if (!r.iff_consistent) summary.violations.push_back(r);
      if (options.sink) options.sink(r, fresh[k] != 0);
    }
  }
  summary.elapsed_ms = static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count());
  return summary;
}

ScanSummary verify_theorem(std::uint64_t max_order, bool abelian_only, const PairScanOptions& options) {
  if (max_order < 1) throw DomainError("verify_theorem: max_order must be >= 1");
  const std::set<Family> families = abelian_only
                                        ? std::set<Family>{Family::abelian}
                                        : std::set<Family>{Family::abelian, Family::dihedral, Family::dicyclic,
                                                           Family::products};
  return conjecture_scan(families, max_order, options);
}

ScanSummary conjecture_scan(const std::set<Family>& families, std::uint64_t max_order, const PairScanOptions& options) {
  if (max_order < 1) throw DomainError("scan: max_order must be >= 1");
  if (families.empty()) throw DomainError("scan: family set must be nonempty");
  auto summary = scan_pairs(family_members(families, max_order), options);
  summary.max_order = max_order;
  for (auto f : families) summary.families.emplace_back(to_string(f));
  return summary;
}

bool divisor_gap_free(std::uint64_t n) {
  const auto ds = divisors(n);
  // divisors are sorted, so consecutive integers would be adjacent entries
  for (std::size_t i = 1; i < ds.size(); ++i) {
    if (ds[i - 1] > 1 && ds[i] - ds[i - 1] == 1) return false;
  }
  return true;
}

}  // namespace zsr
