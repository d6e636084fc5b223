#include <algorithm>
#include <map>

#include "doctest.h"

#include "dyck/ternary_tree.hpp"
#include "oracles.hpp"

using dyck::DyckNumber;
using dyck::Natural;

namespace {

DyckNumber dn(std::uint64_t v) { return DyckNumber(v); }

std::array<std::uint64_t, 3> raw(const dyck::Triplet& t) {
  return {t[0].value().convert_to<std::uint64_t>(), t[1].value().convert_to<std::uint64_t>(),
          t[2].value().convert_to<std::uint64_t>()};
}

}  // namespace

TEST_CASE("children") {
  CHECK(raw(dyck::children(dn(1))) == std::array<std::uint64_t, 3>{3, 5, 7});
  CHECK(raw(dyck::children(dn(5))) == std::array<std::uint64_t, 3>{19, 21, 23});
  CHECK(raw(dyck::children(dn(11))) == std::array<std::uint64_t, 3>{43, 45, 47});
  for (std::uint64_t v : {43, 45, 47}) {
    CHECK(oracle::is_dyck(v));
  }
  CHECK_THROWS_AS(dyck::children(DyckNumber()), dyck::not_dyck_error);
}

TEST_CASE("parent") {
  CHECK(dyck::parent(dn(43))->value() == 11);
  CHECK(oracle::parent(43) == 11U);
  // candidate 2*floor(39/8)+1 = 9 is not a Dyck number
  CHECK_FALSE(dyck::parent(dn(39)).has_value());
  CHECK_FALSE(oracle::parent(39).has_value());
  CHECK(dyck::parent(dn(3))->value() == 1);
  CHECK_FALSE(dyck::parent(dn(1)).has_value());
}

TEST_CASE("is_ternary_root") {
  for (std::uint64_t v : {1, 39, 103, 143, 151, 167, 199, 295, 327}) {
    CHECK(dyck::is_ternary_root(dn(v)));
  }
  CHECK_FALSE(dyck::is_ternary_root(dn(43)));
  CHECK_FALSE(dyck::is_ternary_root(dn(13)));
  for (std::uint64_t v : {33023, 33151, 33215, 33247, 33263, 33271}) {
    CHECK(dyck::is_ternary_root(dn(v)));
  }
}

TEST_CASE("parent and children agree with the exhaustive parent search to 2^14") {
  for (std::uint64_t d = 1; d <= (1U << 14); ++d) {
    if (!oracle::is_dyck(d)) {
      continue;
    }
    const auto p = dyck::parent(dn(d));
    const auto expected = oracle::parent(d);
    REQUIRE(p.has_value() == expected.has_value());
    if (p) {
      CHECK(p->value() == *expected);
      const auto kids = raw(dyck::children(*p));
      CHECK(std::ranges::find(kids, d) != kids.end());
    }
    for (const auto& c : dyck::children(dn(d))) {
      CHECK(dyck::parent(c)->value() == d);
    }
  }
}

TEST_CASE("children of level-k nodes sit two levels down") {
  for (unsigned k = 2; k <= 14; ++k) {
    for (const auto& d : dyck::level_terms(k)) {
      for (const auto& c : dyck::children(d)) {
        CHECK(c.bit_length() == k + 2);
      }
    }
  }
  const auto top = dyck::children(dn(1));
  CHECK(top[0].bit_length() == 2);
  CHECK(top[1].bit_length() == 3);
  CHECK(top[2].bit_length() == 3);
}

TEST_CASE("no Dyck number up to 2^16 is in two triplets") {
  std::map<std::uint64_t, int> claims;
  for (std::uint64_t d = 1; 4 * d - 1 <= (1U << 16); ++d) {
    if (!dyck::validate_u64(d).is_dyck) {
      continue;
    }
    for (std::uint64_t c : {4 * d - 1, 4 * d + 1, 4 * d + 3}) {
      ++claims[c];
    }
  }
  for (const auto& [c, count] : claims) {
    CHECK(count == 1);
  }
}

TEST_CASE("Mersenne triplets are pairwise coprime") {
  const auto t6 = dyck::mersenne_tail(6).triplet;
  CHECK(t6 == std::array<Natural, 3>{59, 61, 63});
  CHECK(oracle::gcd(59, 61) == 1);
  CHECK(oracle::gcd(59, 63) == 1);
  CHECK(oracle::gcd(61, 63) == 1);
  for (unsigned n = 4; n <= 30; ++n) {
    CHECK(dyck::pairwise_coprime(dyck::mersenne_tail(n).triplet));
  }
  const std::array<Natural, 3> shared{9, 15, 7};
  CHECK_FALSE(dyck::pairwise_coprime(shared));
}

TEST_CASE("forest_check") {
  const auto r4 = dyck::forest_check(4);
  CHECK(r4.ok());
  CHECK(r4.roots == std::vector<std::uint64_t>{1});
  REQUIRE(r4.levels.size() == 4);
  CHECK(r4.levels[3].root_count == 0);

  const auto r9 = dyck::forest_check(9);
  CHECK(r9.ok());
  for (std::uint64_t v : {39, 103, 143, 151, 167, 199, 295, 327}) {
    CHECK(std::ranges::binary_search(r9.roots, v));
  }
  std::uint64_t total = 0;
  for (const auto& level : r9.levels) {
    total += level.root_count;
  }
  CHECK(total == r9.roots.size());

  CHECK_THROWS_AS(dyck::forest_check(0), std::out_of_range);
  CHECK_THROWS_AS(dyck::forest_check(21), std::out_of_range);
}

TEST_CASE("node") {
  const auto n = dyck::node(dn(45));
  CHECK(n.parent->value() == 11);
  CHECK(raw(n.children) == std::array<std::uint64_t, 3>{179, 181, 183});
}
