#pragma once

// Single Dyck numbers: validation, the padded and bracket codecs, binary
// weight and the mirror-symmetry test.
//
// A Dyck word uses 0 for '(' and 1 for ')'. Dropping the leading zeros and
// reading the rest as binary gives a Dyck number; the dropped zeros are
// recovered from the count of ones. 0 encodes the empty word.

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include "dyck/errors.hpp"
#include "dyck/natural.hpp"

namespace dyck {

struct CheckResult {
  bool is_dyck = false;
  /// #1s - #0s of the compact expansion, i.e. how many leading zeros the
  /// padded word restores. Meaningful only when is_dyck.
  std::size_t deficit = 0;

  friend bool operator==(const CheckResult&, const CheckResult&) = default;
};

/// Total: every natural gets an answer. Scans from the least significant bit
/// and stops at the first suffix with more 0s than 1s.
CheckResult validate(const Natural& n);

/// Same contract on a machine word; used by the level scanners.
CheckResult validate_u64(std::uint64_t n) noexcept;

bool is_dyck(const Natural& n);

/// Number of 1-bits. For a Dyck number this is the semilength of its path.
std::size_t binary_weight(const Natural& n);

class DyckNumber {
 public:
  /// The empty word.
  DyckNumber() = default;

  /// Throws not_dyck_error unless validate(value).is_dyck.
  explicit DyckNumber(Natural value);
  explicit DyckNumber(std::uint64_t value);

  /// Skips validation. The caller guarantees the invariant.
  static DyckNumber trusted(Natural value) noexcept;

  const Natural& value() const noexcept { return value_; }
  std::size_t semilength() const { return popcount(value_); }
  std::size_t bit_length() const { return dyck::bit_length(value_); }
  std::size_t deficit() const { return 2 * semilength() - bit_length(); }
  std::string str() const { return value_.str(); }

  friend bool operator==(const DyckNumber& a, const DyckNumber& b) {
    return a.value_ == b.value_;
  }
  friend bool operator<(const DyckNumber& a, const DyckNumber& b) {
    return a.value_ < b.value_;
  }

 private:
  Natural value_ = 0;
};

/// Balanced 0/1 word of length 2w: w zeros, w ones, and no suffix with more
/// zeros than ones.
class PaddedWord {
 public:
  PaddedWord() = default;

  /// Throws not_dyck_error for characters other than 0/1 or for an
  /// unbalanced word.
  static PaddedWord parse(std::string_view bits);

  const std::string& bits() const noexcept { return bits_; }
  std::size_t size() const noexcept { return bits_.size(); }
  std::size_t semilength() const noexcept { return bits_.size() / 2; }
  char operator[](std::size_t i) const { return bits_[i]; }

  friend bool operator==(const PaddedWord&, const PaddedWord&) = default;

 private:
  explicit PaddedWord(std::string bits) : bits_(std::move(bits)) {}
  friend PaddedWord pad(const DyckNumber& d);

  std::string bits_;
};

/// Balanced word over '(' and ')'.
class BracketWord {
 public:
  BracketWord() = default;

  static BracketWord parse(std::string_view chars);

  const std::string& chars() const noexcept { return chars_; }
  std::size_t size() const noexcept { return chars_.size(); }

  friend bool operator==(const BracketWord&, const BracketWord&) = default;

 private:
  explicit BracketWord(std::string chars) : chars_(std::move(chars)) {}
  friend BracketWord to_brackets(const PaddedWord& word);

  std::string chars_;
};

/// Restores the deficit leading zeros. Length is 2 * binary_weight(d).
PaddedWord pad(const DyckNumber& d);
DyckNumber unpad(const PaddedWord& word);

BracketWord to_brackets(const PaddedWord& word);
BracketWord to_brackets(const DyckNumber& d);
PaddedWord to_padded(const BracketWord& word);
DyckNumber from_brackets(const BracketWord& word);

/// Mirror positions of the padded word carry complementary bits, which is
/// the same as the bracket word reading identically after reversal and
/// swapping '(' with ')'. 0 is symmetric.
bool is_symmetric(const PaddedWord& word);
bool is_symmetric(const DyckNumber& d);

}  // namespace dyck
