#include "dyck/core.hpp"

#include <algorithm>

namespace dyck {

namespace mp = boost::multiprecision;

CheckResult validate_u64(std::uint64_t n) noexcept {
  if (n == 0) {
    return {true, 0};
  }
  if ((n & 1) == 0) {
    return {false, 0};
  }
  std::int64_t balance = 0;
  for (; n != 0; n >>= 1) {
    balance += (n & 1) ? 1 : -1;
    if (balance < 0) {
      return {false, 0};
    }
  }
  return {true, static_cast<std::size_t>(balance)};
}

CheckResult validate(const Natural& n) {
  if (n.sign() < 0) {
    return {false, 0};
  }
  const std::size_t len = bit_length(n);
  if (len <= 64) {
    return validate_u64(n.convert_to<std::uint64_t>());
  }
  if (!mp::bit_test(n, 0)) {
    return {false, 0};
  }
  std::int64_t balance = 0;
  for (std::size_t i = 0; i < len; ++i) {
    balance += mp::bit_test(n, static_cast<unsigned>(i)) ? 1 : -1;
    if (balance < 0) {
      return {false, 0};
    }
  }
  return {true, static_cast<std::size_t>(balance)};
}

bool is_dyck(const Natural& n) { return validate(n).is_dyck; }

std::size_t binary_weight(const Natural& n) { return popcount(n); }

DyckNumber::DyckNumber(Natural value) : value_(std::move(value)) {
  if (!is_dyck(value_)) {
    throw not_dyck_error(value_.str() + " is not a Dyck number");
  }
}

DyckNumber::DyckNumber(std::uint64_t value) : value_(value) {
  if (!validate_u64(value).is_dyck) {
    throw not_dyck_error(std::to_string(value) + " is not a Dyck number");
  }
}

DyckNumber DyckNumber::trusted(Natural value) noexcept {
  DyckNumber d;
  d.value_ = std::move(value);
  return d;
}

namespace {

// Suffix balance over a word written with `open`/`close` symbols, read from
// the right as in the numeric encoding.
bool balanced(std::string_view word, char open, char close) {
  if (word.size() % 2 != 0) {
    return false;
  }
  std::int64_t balance = 0;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    if (*it == close) {
      ++balance;
    } else if (*it == open) {
      if (--balance < 0) {
        return false;
      }
    } else {
      return false;
    }
  }
  return balance == 0;
}

}  // namespace

PaddedWord PaddedWord::parse(std::string_view bits) {
  if (!balanced(bits, '0', '1')) {
    throw not_dyck_error("not a balanced 0/1 word: \"" + std::string(bits) + "\"");
  }
  return PaddedWord(std::string(bits));
}

BracketWord BracketWord::parse(std::string_view chars) {
  if (!balanced(chars, '(', ')')) {
    throw not_dyck_error("not a balanced bracket word: \"" + std::string(chars) + "\"");
  }
  return BracketWord(std::string(chars));
}

PaddedWord pad(const DyckNumber& d) {
  if (d.value().is_zero()) {
    return PaddedWord();
  }
  std::string bits(d.deficit(), '0');
  bits += to_binary(d.value());
  return PaddedWord(std::move(bits));
}

DyckNumber unpad(const PaddedWord& word) {
  Natural value = 0;
  for (char c : word.bits()) {
    value <<= 1;
    if (c == '1') {
      value |= 1;
    }
  }
  return DyckNumber::trusted(std::move(value));
}

BracketWord to_brackets(const PaddedWord& word) {
  std::string chars = word.bits();
  std::ranges::replace(chars, '0', '(');
  std::ranges::replace(chars, '1', ')');
  return BracketWord(std::move(chars));
}

BracketWord to_brackets(const DyckNumber& d) { return to_brackets(pad(d)); }

PaddedWord to_padded(const BracketWord& word) {
  std::string bits = word.chars();
  std::ranges::replace(bits, '(', '0');
  std::ranges::replace(bits, ')', '1');
  return PaddedWord::parse(bits);
}

DyckNumber from_brackets(const BracketWord& word) { return unpad(to_padded(word)); }

bool is_symmetric(const PaddedWord& word) {
  const std::string& p = word.bits();
  const std::size_t n = p.size();
  for (std::size_t i = 0; i < n / 2; ++i) {
    if (p[i] == p[n - 1 - i]) {
      return false;
    }
  }
  return true;
}

bool is_symmetric(const DyckNumber& d) { return is_symmetric(pad(d)); }

}  // namespace dyck
