#include <algorithm>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "zsr/groupmodel.hpp"

using namespace zsr;

namespace {

OrderSpectrum from_table(const oracle::TableGroup& t) {
  return OrderSpectrum(t.size(), t.spectrum());
}

}  // namespace

TEST_CASE("parse_group examples") {
  CHECK(parse_group("C2xC6") == GroupDescriptor(AbelianGroup::from_factors({2, 6})));
  auto d10 = parse_group("D10");
  CHECK(d10 == GroupDescriptor::dihedral(5));
  CHECK(d10.order() == 10);
  CHECK(parse_group("C4xC2").abelian().invariant_factors() == std::vector<std::uint64_t>{2, 4});
  CHECK(parse_group("Q8") == parse_group("Dic2"));
  CHECK(parse_group("C1").order() == 1);
  CHECK(parse_group("C1").notation() == "C1");
  CHECK(parse_group("C2xC3").notation() == "C6");
  CHECK(parse_group("D6xC2").notation() == "D6xC2");
  CHECK(parse_group("C2xD6").notation() == "D6xC2");
  CHECK(parse_group("Dic3xD8").order() == 96);
}

TEST_CASE("parse_group rejects malformed notation") {
  for (const char* bad : {"", "C", "c4", "C0", "D5", "D4", "Dic1", "C4x", "xC4", "C 4", "Q9", "C4*C2", "C-3",
                          "C99999999999999999999"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_group(bad), ParseError);
  }
  try {
    parse_group("C4xZ2");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 3);
  }
}

TEST_CASE("canonicalize") {
  CHECK(canonicalize({6, 2}).invariant_factors() == std::vector<std::uint64_t>{2, 6});
  CHECK(canonicalize({4, 2}).invariant_factors() == std::vector<std::uint64_t>{2, 4});
  CHECK(canonicalize({2, 3}).invariant_factors() == std::vector<std::uint64_t>{6});
  CHECK(canonicalize({}).is_trivial());
  CHECK_THROWS_AS(canonicalize({4, 1}), DomainError);
  CHECK_THROWS_AS(canonicalize({0}), DomainError);

  // [2,3] and [6] have the same brute-force spectrum.
  CHECK(oracle::abelian_from_factors({2, 3}).spectrum() == oracle::cyclic(6).spectrum());
}

TEST_CASE("canonicalize is idempotent, order-insensitive and a divisor chain") {
  std::vector<std::vector<std::uint64_t>> lists;
  std::vector<std::uint64_t> cur;
  auto rec = [&](auto&& self, std::uint64_t from, std::uint64_t prod) -> void {
    if (!cur.empty()) lists.push_back(cur);
    for (std::uint64_t f = from; f * prod <= 200; ++f) {
      cur.push_back(f);
      self(self, f, prod * f);
      cur.pop_back();
    }
  };
  rec(rec, 2, 1);
  REQUIRE(lists.size() > 500);
  for (auto l : lists) {
    const auto c = canonicalize(l);
    const auto& f = c.invariant_factors();
    for (std::size_t i = 1; i < f.size(); ++i) REQUIRE(f[i] % f[i - 1] == 0);
    REQUIRE(canonicalize(f) == c);
    std::uint64_t prod = 1;
    for (auto x : l) prod *= x;
    REQUIRE(c.order() == prod);
    std::reverse(l.begin(), l.end());
    REQUIRE(canonicalize(l) == c);
    if (l.size() >= 3) {
      std::rotate(l.begin(), l.begin() + 1, l.end());
      REQUIRE(canonicalize(l) == c);
    }
  }
}

TEST_CASE("integer_partitions") {
  CHECK(integer_partitions(0) == std::vector<std::vector<unsigned>>{{}});
  CHECK(integer_partitions(4) == std::vector<std::vector<unsigned>>{{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}});
  for (unsigned k = 0; k <= 15; ++k) REQUIRE(integer_partitions(k).size() == oracle::partition_count(k));
}

TEST_CASE("enumerate_abelian examples") {
  auto e1 = enumerate_abelian(1);
  REQUIRE(e1.size() == 1);
  CHECK(e1[0].is_trivial());
  auto e4 = enumerate_abelian(4);
  REQUIRE(e4.size() == 2);
  CHECK(e4[0].invariant_factors() == std::vector<std::uint64_t>{4});
  CHECK(e4[1].invariant_factors() == std::vector<std::uint64_t>{2, 2});
  auto e36 = enumerate_abelian(36);
  std::vector<std::vector<std::uint64_t>> got;
  for (const auto& g : e36) got.push_back(g.invariant_factors());
  CHECK(got == std::vector<std::vector<std::uint64_t>>{{36}, {2, 18}, {3, 12}, {6, 6}});
  std::set<std::map<std::uint64_t, std::uint64_t>> distinct;
  for (const auto& f : got) distinct.insert(oracle::abelian_from_factors(f).spectrum());
  CHECK(distinct.size() == 4);
  CHECK_THROWS_AS(enumerate_abelian(0), DomainError);
}

TEST_CASE("enumerate_abelian count matches partition products up to 200") {
  for (std::uint64_t n = 1; n <= 200; ++n) {
    std::uint64_t expected = 1;
    for (auto [p, e] : factorize(n)) expected *= oracle::partition_count(e);
    const auto groups = enumerate_abelian(n);
    REQUIRE(groups.size() == expected);
    std::set<std::vector<std::uint64_t>> seen;
    for (const auto& g : groups) {
      REQUIRE(g.order() == n);
      REQUIRE(seen.insert(g.invariant_factors()).second);
    }
  }
}

TEST_CASE("order_spectrum examples") {
  CHECK(order_spectrum(parse_group("D10")) == OrderSpectrum(10, {{1, 1}, {2, 5}, {5, 4}, {10, 0}}));
  CHECK(order_spectrum(parse_group("D10")).str() == "{1:1,2:5,5:4,10:0}");
  const auto c26 = order_spectrum(parse_group("C2xC6"));
  CHECK(c26 == OrderSpectrum(12, {{1, 1}, {2, 3}, {3, 2}, {6, 6}}));
  CHECK(c26.at(4) == 0);
  CHECK(c26.at(12) == 0);
  CHECK(c26.entries().count(4) == 1);
  CHECK(order_spectrum(parse_group("Q8")) == OrderSpectrum(8, {{1, 1}, {2, 1}, {4, 6}}));
}

TEST_CASE("OrderSpectrum validation") {
  CHECK_THROWS_AS(OrderSpectrum(6, {{1, 1}, {4, 5}}), DomainError);
  CHECK_THROWS_AS(OrderSpectrum(6, {{1, 2}, {2, 4}}), DomainError);
  CHECK_THROWS_AS(OrderSpectrum(6, {{1, 1}, {2, 1}}), DomainError);
  CHECK(OrderSpectrum(4, {{1, 1}, {2, 3}}).str() == "{1:1,2:3,4:0}");
}

TEST_CASE("brute-force spectrum examples and bound") {
  CHECK(order_spectrum_bruteforce(AbelianGroup{}) == OrderSpectrum(1, {{1, 1}}));
  CHECK(order_spectrum_bruteforce(canonicalize({4})) == OrderSpectrum(4, {{1, 1}, {2, 1}, {4, 2}}));
  CHECK(order_spectrum_bruteforce(canonicalize({2, 2})) == OrderSpectrum(4, {{1, 1}, {2, 3}, {4, 0}}));
  try {
    order_spectrum_bruteforce(canonicalize({6000}));
    FAIL("expected refusal");
  } catch (const DomainError& e) {
    CHECK(std::string(e.what()).find("5000") != std::string::npos);
  }
  CHECK_THROWS_AS(order_spectrum_bruteforce(canonicalize({100}), 50), DomainError);
}

TEST_CASE("formula spectrum equals brute force for abelian groups up to 200") {
  for (std::uint64_t n = 1; n <= 200; ++n) {
    for (const auto& g : enumerate_abelian(n)) {
      const auto s = order_spectrum(g);
      REQUIRE(s == order_spectrum_bruteforce(g));
      std::uint64_t sum = 0;
      for (auto [d, c] : s.entries()) sum += c;
      REQUIRE(sum == n);
      REQUIRE(s.at(1) == 1);
    }
  }
}

TEST_CASE("abelian spectra match explicit tables") {
  for (std::uint64_t n = 1; n <= 48; ++n) {
    for (const auto& g : enumerate_abelian(n)) {
      REQUIRE(order_spectrum(g) == from_table(oracle::abelian_from_factors(g.invariant_factors())));
    }
  }
}

TEST_CASE("cyclic spectrum is Euler phi") {
  for (std::uint64_t n = 1; n <= 200; ++n) {
    const auto s = order_spectrum(canonicalize(n == 1 ? std::vector<std::uint64_t>{} : std::vector{n}));
    for (auto d : divisors(n)) REQUIRE(s.at(d) == euler_phi(d));
  }
}

TEST_CASE("non-abelian spectra match element models") {
  CHECK(from_table(oracle::quaternion_q8()) == OrderSpectrum(8, {{1, 1}, {2, 1}, {4, 6}}));
  CHECK(from_table(oracle::dicyclic_presentation(2)) == from_table(oracle::quaternion_q8()));
  for (std::uint64_t k = 3; k <= 24; ++k) {
    CAPTURE(k);
    REQUIRE(order_spectrum(GroupDescriptor::dihedral(k)) == from_table(oracle::dihedral_perm(k)));
  }
  for (std::uint64_t k = 2; k <= 12; ++k) {
    CAPTURE(k);
    REQUIRE(order_spectrum(GroupDescriptor::dicyclic(k)) == from_table(oracle::dicyclic_presentation(k)));
  }
  const auto d6xc2 = oracle::direct_product(oracle::dihedral_perm(3), oracle::cyclic(2));
  CHECK(order_spectrum(parse_group("D6xC2")) == from_table(d6xc2));
  const auto d8xq8 = oracle::direct_product(oracle::dihedral_perm(4), oracle::quaternion_q8());
  CHECK(order_spectrum(parse_group("D8xQ8")) == from_table(d8xq8));
  const auto dic3xc4 = oracle::direct_product(oracle::dicyclic_presentation(3), oracle::cyclic(4));
  CHECK(order_spectrum(parse_group("Dic3xC4")) == from_table(dic3xc4));
}

TEST_CASE("product spectrum is symmetric") {
  std::vector<GroupDescriptor> pool;
  for (std::uint64_t n = 1; n <= 24; ++n)
    for (const auto& g : enumerate_abelian(n)) pool.emplace_back(g);
  for (std::uint64_t k = 3; k <= 12; ++k) pool.push_back(GroupDescriptor::dihedral(k));
  for (std::uint64_t k = 2; k <= 6; ++k) pool.push_back(GroupDescriptor::dicyclic(k));
  for (const auto& a : pool) {
    for (const auto& b : pool) {
      if (a.order() * b.order() > 48) continue;
      const auto ab = GroupDescriptor::product({a, b});
      const auto ba = GroupDescriptor::product({b, a});
      REQUIRE(ab.order() == a.order() * b.order());
      REQUIRE(order_spectrum(ab) == order_spectrum(ba));
    }
  }
}

TEST_CASE("product normalization") {
  const auto ab = GroupDescriptor::product({canonicalize({2}), canonicalize({3})});
  CHECK(ab.is_abelian());
  CHECK(ab.notation() == "C6");
  const auto nested = GroupDescriptor::product(
      {GroupDescriptor::product({GroupDescriptor::dihedral(3), canonicalize({2})}), canonicalize({2})});
  CHECK(nested.notation() == "D6xC2xC2");
  CHECK(GroupDescriptor::product({GroupDescriptor::dihedral(5), AbelianGroup{}}) == GroupDescriptor::dihedral(5));
  CHECK_THROWS_AS(GroupDescriptor::dihedral(2), DomainError);
  CHECK_THROWS_AS(GroupDescriptor::dicyclic(1), DomainError);
  CHECK_THROWS_AS(GroupDescriptor::dihedral(3).abelian(), DomainError);
}
