#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "zsr/counting.hpp"
#include "zsr/groupmodel.hpp"

namespace zsr {

struct SpectrumCondition {
  bool agree = true;
  /// Smallest d | gcd(|G|, |H|) with phi_G(d) != phi_H(d), when one exists.
  std::optional<std::uint64_t> witness;
};

SpectrumCondition spectrum_condition(const OrderSpectrum& g, const OrderSpectrum& h);
SpectrumCondition spectrum_condition(const GroupDescriptor& g, const GroupDescriptor& h);

/// Both sides of the reciprocity equivalence for one pair (G, H).
struct ReciprocityReport {
  GroupDescriptor g;
  GroupDescriptor h;
  bool spectra_agree = true;
  std::optional<std::uint64_t> witness_divisor;
  Natural count_g_at_h;  ///< |M(G, |H|)|
  Natural count_h_at_g;  ///< |M(H, |G|)|
  bool counts_agree = true;
  bool iff_consistent = true;

  friend bool operator==(const ReciprocityReport&, const ReciprocityReport&) = default;
};

ReciprocityReport reciprocity_check(const GroupDescriptor& g, const GroupDescriptor& h);

/// Same, reusing precomputed spectra.
ReciprocityReport reciprocity_check(const GroupDescriptor& g, const OrderSpectrum& spectrum_g,
                                    const GroupDescriptor& h, const OrderSpectrum& spectrum_h);

enum class Family { abelian, dihedral, dicyclic, products };

std::string_view to_string(Family f);
Family parse_family(std::string_view s);
/// Comma-separated family names, e.g. "abelian,dihedral".
std::set<Family> parse_families(std::string_view list);

/// All descriptors from the chosen families with order <= max_order, sorted
/// by (order, notation). Products have exactly two non-trivial factors drawn
/// from the base families, at least one non-abelian, and are dropped when
/// their (order, spectrum) already occurs.
std::vector<GroupDescriptor> family_members(const std::set<Family>& families, std::uint64_t max_order);

/// Key identifying a pair in result logs: (notation of g, notation of h).
using PairKey = std::pair<std::string, std::string>;

struct ScanSummary {
  std::uint64_t pairs_checked = 0;
  std::uint64_t pairs_spectra_agree = 0;
  std::vector<ReciprocityReport> violations;
  std::uint64_t max_order = 0;
  std::vector<std::string> families;
  std::uint64_t elapsed_ms = 0;
};

struct PairScanOptions {
  unsigned parallelism = 1;
  /// Reports already on record; these pairs are not recomputed.
  const std::map<PairKey, ReciprocityReport>* known = nullptr;
  /// Called once per pair, in canonical pair order, with fresh = false for
  /// pairs taken from `known`.
  std::function<void(const ReciprocityReport&, bool fresh)> sink;
};

/// Checks every unordered pair (i <= j) of `groups` in order.
ScanSummary scan_pairs(const std::vector<GroupDescriptor>& groups, const PairScanOptions& options = {});

/// All unordered pairs of abelian groups with orders in [1, max_order]
/// (every family when abelian_only is false).
ScanSummary verify_theorem(std::uint64_t max_order, bool abelian_only = true, const PairScanOptions& options = {});

ScanSummary conjecture_scan(const std::set<Family>& families, std::uint64_t max_order,
                            const PairScanOptions& options = {});

/// True iff no two divisors d1 > d2 > 1 of n differ by exactly 1.
bool divisor_gap_free(std::uint64_t n);

}  // namespace zsr
