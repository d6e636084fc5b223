#include "dyck/natural.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace dyck {

namespace mp = boost::multiprecision;

std::size_t bit_length(const Natural& n) {
  if (n.is_zero()) {
    return 0;
  }
  return static_cast<std::size_t>(mp::msb(n)) + 1;
}

std::size_t popcount(const Natural& n) {
  const auto& backend = n.backend();
  const auto* limbs = backend.limbs();
  std::size_t count = 0;
  for (std::size_t i = 0; i < backend.size(); ++i) {
    count += static_cast<std::size_t>(std::popcount(limbs[i]));
  }
  return count;
}

Natural power_of_two(std::size_t k) {
  Natural result = 0;
  mp::bit_set(result, static_cast<unsigned>(k));
  return result;
}

Natural mersenne(std::size_t n) { return power_of_two(n) - 1; }

bool is_power_of_two(const Natural& n) {
  return n.sign() > 0 && popcount(n) == 1;
}

std::string to_binary(const Natural& n) {
  if (n.is_zero()) {
    return "0";
  }
  const std::size_t len = bit_length(n);
  std::string out(len, '0');
  for (std::size_t i = 0; i < len; ++i) {
    if (mp::bit_test(n, static_cast<unsigned>(i))) {
      out[len - 1 - i] = '1';
    }
  }
  return out;
}

std::string to_decimal(const Natural& n) { return n.str(); }

Natural parse_natural(std::string_view text) {
  if (text.empty()) {
    throw std::invalid_argument("empty number");
  }
  Natural value = 0;
  if (text.size() > 2 && text[0] == '0' && (text[1] == 'b' || text[1] == 'B')) {
    for (char c : text.substr(2)) {
      if (c != '0' && c != '1') {
        throw std::invalid_argument("malformed binary number: " + std::string(text));
      }
      value <<= 1;
      if (c == '1') {
        value |= 1;
      }
    }
    return value;
  }
  for (char c : text) {
    if (c < '0' || c > '9') {
      throw std::invalid_argument("malformed number: " + std::string(text));
    }
    value *= 10;
    value += c - '0';
  }
  return value;
}

Natural binomial(std::size_t n, std::size_t k) {
  if (k > n) {
    return 0;
  }
  k = std::min(k, n - k);
  Natural result = 1;
  // result stays C(n-k+i, i) after step i, so the division is exact.
  for (std::size_t i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

std::uint64_t to_u64(const Natural& n) {
  if (n.sign() < 0 || bit_length(n) > 64) {
    throw std::out_of_range("value does not fit in 64 bits");
  }
  return n.convert_to<std::uint64_t>();
}

}  // namespace dyck
