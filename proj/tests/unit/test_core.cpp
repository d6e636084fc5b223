#include <random>

#include "doctest.h"

#include "dyck/core.hpp"
#include "dyck/enumeration.hpp"
#include "oracles.hpp"

using dyck::DyckNumber;
using dyck::Natural;

TEST_CASE("validate") {
  CHECK(dyck::validate(59) == dyck::CheckResult{true, 4});
  CHECK(dyck::validate(0) == dyck::CheckResult{true, 0});
  CHECK(dyck::validate(1) == dyck::CheckResult{true, 1});
  // 1001: the suffix 001 has two zeros and one one.
  CHECK_FALSE(dyck::validate(9).is_dyck);
  CHECK_FALSE(oracle::is_dyck(9));
  CHECK_FALSE(dyck::validate(2).is_dyck);
  CHECK_FALSE(dyck::validate(-5).is_dyck);
}

TEST_CASE("validate matches the brute-force suffix scan below 2^16") {
  for (std::uint64_t n = 0; n < (1U << 16); ++n) {
    const auto result = dyck::validate(Natural(n));
    REQUIRE(result.is_dyck == oracle::is_dyck(n));
    if (result.is_dyck && n > 0) {
      CHECK(result.deficit == oracle::padded(n).size() - oracle::binary(n).size());
    }
  }
}

TEST_CASE("validate works past 64 bits") {
  // 1·(01)^40·1 has balance 2 and is Dyck; appending a zero at the bottom breaks it.
  Natural n = 1;
  for (int i = 0; i < 40; ++i) {
    n = (n << 2) | 1;
  }
  n = (n << 1) | 1;
  CHECK(dyck::validate(n) == dyck::CheckResult{true, 2});
  CHECK_FALSE(dyck::validate(n << 1).is_dyck);
  CHECK_FALSE(dyck::validate((n << 3) | 1).is_dyck);
}

TEST_CASE("binary_weight") {
  CHECK(dyck::binary_weight(0) == 0);
  CHECK(dyck::binary_weight(59) == 5);
  for (std::size_t k = 0; k <= 64; ++k) {
    CHECK(dyck::binary_weight(dyck::mersenne(k)) == k);
  }
}

TEST_CASE("DyckNumber rejects non-Dyck values") {
  CHECK_THROWS_AS(DyckNumber(std::uint64_t{9}), dyck::not_dyck_error);
  CHECK_THROWS_AS(DyckNumber(Natural(41)), dyck::not_dyck_error);
  CHECK(DyckNumber(std::uint64_t{59}).deficit() == 4);
  CHECK(DyckNumber().value() == 0);
}

TEST_CASE("pad and unpad") {
  CHECK(dyck::pad(DyckNumber(59U)).bits() == "0000111011");
  CHECK(dyck::pad(DyckNumber(3U)).bits() == "0011");
  CHECK(dyck::pad(DyckNumber()).bits().empty());
  CHECK(dyck::unpad(dyck::PaddedWord::parse("0011")).value() == 3);
  CHECK(dyck::unpad(dyck::PaddedWord::parse("")).value() == 0);
  CHECK(dyck::unpad(dyck::PaddedWord::parse("01010101")).value() == 85);
  CHECK_THROWS_AS(dyck::PaddedWord::parse("0110"), dyck::not_dyck_error);
  CHECK_THROWS_AS(dyck::PaddedWord::parse("001"), dyck::not_dyck_error);
  CHECK_THROWS_AS(dyck::PaddedWord::parse("0012"), dyck::not_dyck_error);
  CHECK_THROWS_AS(dyck::PaddedWord::parse("1100"), dyck::not_dyck_error);
}

TEST_CASE("bracket codec") {
  CHECK(dyck::to_brackets(DyckNumber(1U)).chars() == "()");
  CHECK(dyck::to_brackets(DyckNumber(3U)).chars() == "(())");
  // padded 0000111011
  CHECK(oracle::brackets(59) == "(((()))())");
  CHECK(dyck::to_brackets(DyckNumber(59U)).chars() == "(((()))())");
  CHECK(dyck::from_brackets(dyck::BracketWord::parse("(((()))())")).value() == 59);
  CHECK(dyck::from_brackets(dyck::BracketWord::parse("()")).value() == 1);
  CHECK_THROWS_AS(dyck::BracketWord::parse("())("), dyck::not_dyck_error);
  CHECK_THROWS_AS(dyck::BracketWord::parse("(()"), dyck::not_dyck_error);
  CHECK_THROWS_AS(dyck::BracketWord::parse("[]"), dyck::not_dyck_error);
}

TEST_CASE("codec round trips for every term up to level 16") {
  for (unsigned n = 1; n <= 16; ++n) {
    for (const auto& d : dyck::level_terms(n)) {
      const auto word = dyck::pad(d);
      REQUIRE(dyck::unpad(word) == d);
      REQUIRE(dyck::from_brackets(dyck::to_brackets(d)) == d);
      CHECK(word.size() == 2 * dyck::binary_weight(d.value()));
      CHECK(d.deficit() == 2 * dyck::binary_weight(d.value()) - dyck::bit_length(d.value()));
    }
  }
}

TEST_CASE("every balanced word up to length 24 unpads to a Dyck number") {
  for (unsigned w = 0; w <= 12; ++w) {
    for (const auto& bits : oracle::balanced_words(w)) {
      const auto d = dyck::unpad(dyck::PaddedWord::parse(bits));
      const auto check = dyck::validate(d.value());
      REQUIRE(check.is_dyck);
      CHECK(check.deficit == 2 * w - dyck::bit_length(d.value()));
      CHECK(dyck::pad(d).bits() == bits);
    }
  }
}

TEST_CASE("is_symmetric") {
  CHECK(dyck::is_symmetric(DyckNumber(11U)));
  CHECK_FALSE(dyck::is_symmetric(DyckNumber(13U)));
  CHECK(dyck::is_symmetric(DyckNumber()));
  CHECK(dyck::is_symmetric(DyckNumber(21U)));
}

TEST_CASE("is_symmetric agrees with mirroring the bracket word up to level 16") {
  for (unsigned n = 1; n <= 16; ++n) {
    for (auto it = dyck::level_terms(n).begin(); it != std::default_sentinel; ++it) {
      REQUIRE(dyck::is_symmetric(*it) == oracle::is_symmetric(it.raw()));
    }
  }
}

TEST_CASE("property: random long balanced words survive the codecs") {
  std::mt19937_64 rng(20230206);
  for (int trial = 0; trial < 200; ++trial) {
    // Random walk that never closes more than it opened, then closes the rest.
    const std::size_t w = 1 + rng() % 400;
    std::string bits;
    std::size_t open = 0, close = 0;
    while (open < w || close < w) {
      const bool can_open = open < w;
      const bool can_close = close < open;
      if (can_open && (!can_close || rng() % 2 == 0)) {
        bits.push_back('0');
        ++open;
      } else {
        bits.push_back('1');
        ++close;
      }
    }
    const auto word = dyck::PaddedWord::parse(bits);
    const auto d = dyck::unpad(word);
    REQUIRE(dyck::validate(d.value()).is_dyck);
    CHECK(dyck::pad(d) == word);
    CHECK(dyck::to_padded(dyck::to_brackets(word)) == word);
    CHECK(d.semilength() == w);
  }
}
