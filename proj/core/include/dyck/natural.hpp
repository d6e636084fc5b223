#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace dyck {

/// Arbitrary-precision natural number. Negative values are never produced by
/// this library; functions taking a Natural reject them.
using Natural = boost::multiprecision::cpp_int;

/// Number of binary digits, 0 for zero.
std::size_t bit_length(const Natural& n);

/// Count of 1-bits.
std::size_t popcount(const Natural& n);

Natural power_of_two(std::size_t k);

/// 2^n - 1.
Natural mersenne(std::size_t n);

bool is_power_of_two(const Natural& n);

/// Compact binary expansion without leading zeros; "0" for zero.
std::string to_binary(const Natural& n);

std::string to_decimal(const Natural& n);

/// Parses a decimal literal or a binary literal with a 0b/0B prefix.
/// Throws std::invalid_argument on anything else (signs, blanks, junk).
Natural parse_natural(std::string_view text);

/// Exact binomial coefficient by the multiplicative formula.
Natural binomial(std::size_t n, std::size_t k);

/// Narrows to 64 bits; throws std::out_of_range when the value does not fit.
std::uint64_t to_u64(const Natural& n);

}  // namespace dyck
