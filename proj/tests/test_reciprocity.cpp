#include <algorithm>

#include "doctest.h"
#include "oracles.hpp"
#include "zsr/reciprocity.hpp"

using namespace zsr;

namespace {

GroupDescriptor G(const char* s) { return parse_group(s); }

std::vector<GroupDescriptor> small_pool(std::uint64_t max_order) {
  return family_members({Family::abelian, Family::dihedral, Family::dicyclic, Family::products}, max_order);
}

}  // namespace

TEST_CASE("spectrum_condition examples") {
  auto c = spectrum_condition(G("C4"), G("C2xC2"));
  CHECK(!c.agree);
  CHECK(c.witness == 2);
  c = spectrum_condition(G("C2xC2"), G("C2xC6"));
  CHECK(c.agree);
  CHECK(!c.witness);
  for (const auto& g : small_pool(16)) {
    const auto self = spectrum_condition(g, g);
    REQUIRE(self.agree);
    REQUIRE(!self.witness);
  }
}

TEST_CASE("reciprocity_check examples") {
  auto r = reciprocity_check(G("C2xC2"), G("C2xC6"));
  CHECK(r.count_g_at_h == Natural(119));
  CHECK(r.count_h_at_g == Natural(119));
  CHECK(r.spectra_agree);
  CHECK(r.counts_agree);
  CHECK(r.iff_consistent);
  CHECK(!r.witness_divisor);

  r = reciprocity_check(G("C4"), G("C2xC2"));
  CHECK(r.count_g_at_h == Natural(10));
  CHECK(r.count_h_at_g == Natural(11));
  CHECK(!r.spectra_agree);
  CHECK(r.witness_divisor == 2);
  CHECK(r.iff_consistent);

  r = reciprocity_check(G("D10"), G("C10"));
  CHECK(!r.spectra_agree);
  CHECK(r.witness_divisor == 2);
  CHECK(!r.counts_agree);
  CHECK(order_spectrum(G("D10")).at(2) == 5);
  CHECK(order_spectrum(G("C10")).at(2) == 1);
}

TEST_CASE("cyclic pairs always reciprocate") {
  for (std::uint64_t n = 1; n <= 30; ++n) {
    const GroupDescriptor cn = n == 1 ? AbelianGroup{} : canonicalize({n});
    for (std::uint64_t m = 1; m <= 30; ++m) {
      const GroupDescriptor cm = m == 1 ? AbelianGroup{} : canonicalize({m});
      REQUIRE(reciprocity_check(cn, cm).counts_agree);
    }
  }
}

TEST_CASE("symmetry over descriptors of order <= 24") {
  const auto pool = small_pool(24);
  for (const auto& g : pool) {
    for (const auto& h : pool) {
      const auto a = spectrum_condition(g, h), b = spectrum_condition(h, g);
      REQUIRE(a.agree == b.agree);
      REQUIRE(a.witness == b.witness);
      REQUIRE(reciprocity_check(g, h).counts_agree == reciprocity_check(h, g).counts_agree);
    }
  }
}

TEST_CASE("witness is minimal and genuine") {
  const auto pool = small_pool(32);
  for (const auto& g : pool) {
    const auto sg = order_spectrum(g);
    for (const auto& h : pool) {
      const auto sh = order_spectrum(h);
      const auto c = spectrum_condition(sg, sh);
      const auto gcd = std::gcd(g.order(), h.order());
      if (!c.witness) {
        REQUIRE(c.agree);
        for (auto d : divisors(gcd)) REQUIRE(sg.at(d) == sh.at(d));
        continue;
      }
      REQUIRE(!c.agree);
      REQUIRE(gcd % *c.witness == 0);
      REQUIRE(sg.at(*c.witness) != sh.at(*c.witness));
      for (auto d : divisors(gcd))
        if (d < *c.witness) REQUIRE(sg.at(d) == sh.at(d));
    }
  }
}

TEST_CASE("coprime abelian pairs collapse to rational Catalan") {
  for (std::uint64_t n = 1; n <= 30; ++n) {
    for (std::uint64_t m = 1; m <= 30; ++m) {
      if (std::gcd(n, m) != 1) continue;
      for (const auto& g : enumerate_abelian(n)) {
        for (const auto& h : enumerate_abelian(m)) {
          const auto r = reciprocity_check(g, h);
          REQUIRE(r.spectra_agree);
          REQUIRE(r.count_g_at_h == rational_catalan(n, m));
          REQUIRE(r.count_h_at_g == rational_catalan(n, m));
        }
      }
    }
  }
}

TEST_CASE("verify_theorem small bounds") {
  auto s = verify_theorem(1);
  CHECK(s.pairs_checked == 1);
  CHECK(s.violations.empty());
  s = verify_theorem(8);
  CHECK(s.pairs_checked == 66);
  CHECK(s.violations.empty());
  CHECK(s.max_order == 8);
  CHECK(s.families == std::vector<std::string>{"abelian"});
  CHECK_THROWS_AS(verify_theorem(0), DomainError);
}

TEST_CASE("verify_theorem(36) has no violations") {
  std::uint64_t k = 0;
  for (std::uint64_t n = 1; n <= 36; ++n) k += enumerate_abelian(n).size();
  const auto s = verify_theorem(36, true, {.parallelism = 4});
  CHECK(s.pairs_checked == k * (k + 1) / 2);
  CHECK(s.violations.empty());
}

TEST_CASE("abelian conjecture scan matches verify_theorem") {
  std::vector<ReciprocityReport> a, b;
  PairScanOptions oa, ob;
  oa.sink = [&](const ReciprocityReport& r, bool) { a.push_back(r); };
  ob.sink = [&](const ReciprocityReport& r, bool) { b.push_back(r); };
  const auto sa = verify_theorem(20, true, oa);
  const auto sb = conjecture_scan({Family::abelian}, 20, ob);
  CHECK(sa.pairs_checked == sb.pairs_checked);
  CHECK(sa.pairs_spectra_agree == sb.pairs_spectra_agree);
  CHECK(a == b);
}

TEST_CASE("dihedral scan") {
  const auto members = family_members({Family::dihedral}, 16);
  std::vector<std::string> names;
  for (const auto& g : members) names.push_back(g.notation());
  CHECK(names == std::vector<std::string>{"D6", "D8", "D10", "D12", "D14", "D16"});
  const auto s = conjecture_scan({Family::dihedral}, 16);
  CHECK(s.pairs_checked == 21);
  CHECK(s.violations.empty());
  CHECK(s.families == std::vector<std::string>{"dihedral"});
}

TEST_CASE("family_members ordering and products") {
  const auto members = small_pool(24);
  for (std::size_t i = 1; i < members.size(); ++i) {
    const auto& a = members[i - 1];
    const auto& b = members[i];
    REQUIRE(std::pair(a.order(), a.notation()) < std::pair(b.order(), b.notation()));
  }
  std::set<std::pair<std::uint64_t, OrderSpectrum>> product_keys;
  bool saw_product = false;
  for (const auto& g : members) {
    if (!std::holds_alternative<Product>(g.variant())) continue;
    saw_product = true;
    REQUIRE(std::get<Product>(g.variant()).factors.size() == 2);
    REQUIRE(product_keys.insert({g.order(), order_spectrum(g)}).second);
  }
  CHECK(saw_product);
  CHECK(family_members({Family::abelian}, 1).size() == 1);
  CHECK_THROWS_AS(parse_family("sporadic"), DomainError);
  CHECK(parse_families("abelian,dicyclic") == std::set<Family>{Family::abelian, Family::dicyclic});
  CHECK_THROWS_AS(parse_families(""), DomainError);
}

TEST_CASE("sufficiency holds in a mixed scan") {
  PairScanOptions o;
  std::uint64_t agree = 0;
  o.sink = [&](const ReciprocityReport& r, bool) {
    if (r.spectra_agree) {
      ++agree;
      REQUIRE(r.counts_agree);
    }
  };
  o.parallelism = 4;
  const auto s = conjecture_scan({Family::abelian, Family::dihedral, Family::dicyclic, Family::products}, 24, o);
  CHECK(s.pairs_spectra_agree == agree);
  CHECK(s.violations.empty());
  CHECK_THROWS_AS(conjecture_scan({}, 10), DomainError);
}

TEST_CASE("scan output is independent of parallelism") {
  const auto groups = small_pool(20);
  std::vector<ReciprocityReport> seq, par;
  PairScanOptions a, b;
  a.sink = [&](const ReciprocityReport& r, bool) { seq.push_back(r); };
  b.sink = [&](const ReciprocityReport& r, bool) { par.push_back(r); };
  b.parallelism = 7;
  scan_pairs(groups, a);
  scan_pairs(groups, b);
  CHECK(seq == par);
  CHECK(seq.size() == groups.size() * (groups.size() + 1) / 2);
}

TEST_CASE("known reports are replayed, not recomputed") {
  const auto groups = small_pool(12);
  std::vector<ReciprocityReport> all;
  PairScanOptions o;
  o.sink = [&](const ReciprocityReport& r, bool) { all.push_back(r); };
  scan_pairs(groups, o);
  std::map<PairKey, ReciprocityReport> known;
  for (std::size_t i = 0; i < all.size(); i += 2) known[{all[i].g.notation(), all[i].h.notation()}] = all[i];
  std::vector<ReciprocityReport> again;
  std::size_t fresh_count = 0;
  PairScanOptions o2;
  o2.known = &known;
  o2.sink = [&](const ReciprocityReport& r, bool fresh) {
    again.push_back(r);
    fresh_count += fresh;
  };
  scan_pairs(groups, o2);
  CHECK(again == all);
  CHECK(fresh_count == all.size() - known.size());
}

TEST_CASE("divisor_gap_free") {
  CHECK(divisor_gap_free(15));
  CHECK(!divisor_gap_free(6));
  CHECK(divisor_gap_free(10));
  CHECK(divisor_gap_free(1));
  CHECK_THROWS_AS(divisor_gap_free(0), DomainError);
  for (std::uint64_t n = 1; n <= 10000; ++n) REQUIRE(divisor_gap_free(n) == oracle::gap_free_bruteforce(n));
}
