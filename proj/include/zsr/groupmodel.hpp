#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "zsr/exactmath.hpp"

namespace zsr {

/// Finite abelian group in invariant-factor form n_1 | n_2 | ... | n_r.
/// The empty factor list is the trivial group.
class AbelianGroup {
 public:
  AbelianGroup() = default;

  /// Accepts any list of factors >= 2 and canonicalizes it.
  static AbelianGroup from_factors(std::vector<std::uint64_t> factors);

  const std::vector<std::uint64_t>& invariant_factors() const { return factors_; }
  std::uint64_t order() const;
  bool is_trivial() const { return factors_.empty(); }

  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
  friend auto operator<=>(const AbelianGroup&, const AbelianGroup&) = default;

 private:
  explicit AbelianGroup(std::vector<std::uint64_t> chain) : factors_(std::move(chain)) {}
  std::vector<std::uint64_t> factors_;
};

/// Invariant-factor form of C_{f_1} x ... x C_{f_k}. Order-insensitive and
/// idempotent; a factor <= 1 is a domain error.
AbelianGroup canonicalize(std::vector<std::uint64_t> factors);

struct Dihedral {
  std::uint64_t half_order = 3;  ///< k >= 3, order 2k
  friend bool operator==(const Dihedral&, const Dihedral&) = default;
};

struct Dicyclic {
  std::uint64_t index = 2;  ///< k >= 2, order 4k
  friend bool operator==(const Dicyclic&, const Dicyclic&) = default;
};

class GroupDescriptor;

struct Product {
  std::vector<GroupDescriptor> factors;
  friend bool operator==(const Product&, const Product&);
};

/// Any group the library can name: abelian, dihedral, dicyclic, or a direct
/// product of those. Construct through the factories; they normalize, so a
/// product of abelian groups is always stored as a single AbelianGroup.
class GroupDescriptor {
 public:
  using Variant = std::variant<AbelianGroup, Dihedral, Dicyclic, Product>;

  GroupDescriptor() : v_(AbelianGroup{}) {}
  GroupDescriptor(AbelianGroup g) : v_(std::move(g)) {}  // NOLINT(google-explicit-constructor)

  static GroupDescriptor dihedral(std::uint64_t half_order);
  static GroupDescriptor dicyclic(std::uint64_t index);
  /// Flattens nested products, merges abelian components into one canonical
  /// abelian factor (placed last), and drops trivial factors.
  static GroupDescriptor product(std::vector<GroupDescriptor> factors);

  const Variant& variant() const { return v_; }
  bool is_abelian() const { return std::holds_alternative<AbelianGroup>(v_); }
  const AbelianGroup& abelian() const;

  std::uint64_t order() const;

  /// Canonical notation, e.g. "C2xC6", "D10", "Dic3", "D6xC2". Trivial is "C1".
  std::string notation() const;

  friend bool operator==(const GroupDescriptor& a, const GroupDescriptor& b) { return a.v_ == b.v_; }

 private:
  explicit GroupDescriptor(Variant v) : v_(std::move(v)) {}
  Variant v_;
};

/// Syntax or semantic error in group notation; offset is the byte position.
class ParseError : public DomainError {
 public:
  ParseError(const std::string& message, std::size_t offset);
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// group := term ('x' term)* ; term := 'C' int | 'D' int | 'Dic' int | 'Q8'
GroupDescriptor parse_group(std::string_view text);

/// d -> number of elements of order exactly d, with an entry (possibly zero)
/// for every divisor of the group order.
class OrderSpectrum {
 public:
  OrderSpectrum() = default;
  /// Fills missing divisors with zero; throws if a key does not divide the
  /// order, phi(1) != 1, or the counts do not sum to the order.
  OrderSpectrum(std::uint64_t group_order, std::map<std::uint64_t, std::uint64_t> entries);

  std::uint64_t group_order() const { return order_; }
  const std::map<std::uint64_t, std::uint64_t>& entries() const { return entries_; }
  /// Zero for d that does not divide the order.
  std::uint64_t at(std::uint64_t d) const;

  /// "{1:1,2:5,5:4,10:0}"
  std::string str() const;

  friend bool operator==(const OrderSpectrum&, const OrderSpectrum&) = default;
  friend auto operator<=>(const OrderSpectrum&, const OrderSpectrum&) = default;

 private:
  std::uint64_t order_ = 1;
  std::map<std::uint64_t, std::uint64_t> entries_{{1, 1}};
};

OrderSpectrum order_spectrum(const GroupDescriptor& g);

inline constexpr std::uint64_t kDefaultBruteForceBound = 5000;

/// Element-by-element tally; refuses groups above the bound.
OrderSpectrum order_spectrum_bruteforce(const AbelianGroup& g,
                                        std::uint64_t bound = kDefaultBruteForceBound);

/// One canonical representative per isomorphism class, sorted
/// lexicographically by invariant factors.
std::vector<AbelianGroup> enumerate_abelian(std::uint64_t n);

/// Partitions of k in reverse-lexicographic order (largest parts first).
std::vector<std::vector<unsigned>> integer_partitions(unsigned k);

}  // namespace zsr
