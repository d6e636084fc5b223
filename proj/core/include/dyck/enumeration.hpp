#pragma once

// Levels (Dyck numbers of a fixed binary length), admissible binary
// suffixes, and the exact counting identities that tie them to central
// binomial and Catalan numbers.

#include <array>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "dyck/core.hpp"
#include "dyck/natural.hpp"

namespace dyck {

enum class LevelStrategy {
  Auto,       // Scan up to kScanCutoff, SuffixDfs beyond
  Scan,       // every odd integer of the level, filtered by validate
  SuffixDfs,  // 1 prepended to each admissible suffix, lexicographic DFS
};

/// Levels are streamed through 64-bit cursors.
inline constexpr unsigned kMaxLevel = 64;
inline constexpr unsigned kScanCutoff = 24;

/// Largest suffix length that suffixes() will materialize.
inline constexpr std::size_t kMaxMaterializedSuffix = 28;

namespace detail {

class ScanCursor {
 public:
  explicit ScanCursor(unsigned n);
  std::optional<std::uint64_t> next();

 private:
  std::uint64_t current_;
  std::uint64_t last_;
  bool done_ = false;
};

}  // namespace detail

/// Lexicographic (equivalently ascending) stream of the admissible suffixes
/// of a fixed length: bit strings whose every suffix has at least as many 1s
/// as 0s. Words are returned right-aligned in a machine word.
class SuffixStream {
 public:
  /// length <= 63.
  explicit SuffixStream(std::size_t length);

  std::optional<std::uint64_t> next();
  std::size_t length() const noexcept { return length_; }

 private:
  struct Frame {
    std::uint64_t value;
    std::int32_t balance;
    std::int32_t peak;  // highest prefix balance seen so far
    std::uint32_t depth;
    std::uint8_t next_bit;
  };

  std::size_t length_;
  std::vector<Frame> stack_;
};

/// All Dyck numbers of binary length n, ascending, produced lazily.
class LevelView {
 public:
  explicit LevelView(unsigned n, LevelStrategy strategy = LevelStrategy::Auto);

  unsigned level() const noexcept { return n_; }
  /// Resolved strategy; never Auto.
  LevelStrategy strategy() const noexcept { return strategy_; }

  DyckNumber min_term() const;
  DyckNumber max_term() const;
  /// Closed-form cardinality, C(n-1, floor((n-1)/2)).
  Natural size() const;

  class iterator {
   public:
    using value_type = DyckNumber;
    using difference_type = std::ptrdiff_t;
    using iterator_category = std::input_iterator_tag;

    iterator() = default;
    iterator(unsigned n, LevelStrategy strategy);

    const DyckNumber& operator*() const { return current_; }
    const DyckNumber* operator->() const { return &current_; }
    iterator& operator++();
    void operator++(int) { ++*this; }

    /// Raw value of the current term.
    std::uint64_t raw() const noexcept { return raw_; }

    friend bool operator==(const iterator& it, std::default_sentinel_t) {
      return it.done_;
    }

   private:
    void advance();

    std::variant<std::monostate, detail::ScanCursor, SuffixStream> cursor_;
    std::uint64_t lead_ = 0;  // 2^(n-1), the prepended leading bit
    std::uint64_t raw_ = 0;
    DyckNumber current_;
    bool done_ = true;
  };

  iterator begin() const { return iterator(n_, strategy_); }
  std::default_sentinel_t end() const { return {}; }

  std::vector<DyckNumber> to_vector() const;
  std::vector<std::uint64_t> to_raw() const;

 private:
  unsigned n_;
  LevelStrategy strategy_;
};

/// Throws std::out_of_range unless 1 <= n <= kMaxLevel.
LevelView level_terms(unsigned n, LevelStrategy strategy = LevelStrategy::Auto);

Natural level_count(unsigned n);

/// Dyck successor of M_(n-1): M_(n-1) + M_ceil((n-1)/2) + 1, and 1 for n = 1.
DyckNumber level_min(unsigned n);

/// M_n = 2^n - 1; level_max(0) is 0.
DyckNumber level_max(unsigned n);

struct SuffixSet {
  std::size_t length = 0;
  /// Ascending; each word right-aligned, `length` bits wide.
  std::vector<std::uint64_t> words;

  std::size_t size() const noexcept { return words.size(); }
  std::string word(std::size_t i) const;
  /// Members with as many 0s as 1s, i.e. the Dyck words of this length.
  std::size_t zero_balance_count() const;
};

/// Builds the admissible suffixes of length l by repeatedly prepending a bit
/// to the shorter ones (0 only while the balance is positive). l must not
/// exceed kMaxMaterializedSuffix; use SuffixStream beyond that.
SuffixSet suffixes(std::size_t l);

/// C(l, floor(l/2)).
Natural suffix_count(std::size_t l);

/// One step of the doubling recurrence: from #S_l to #S_(l+1). Odd l doubles;
/// even l doubles and subtracts Cat(l/2), the Dyck words that cannot take a
/// leading 0.
Natural suffix_count_step(std::size_t l, const Natural& count_at_l);

/// #S_l obtained by folding suffix_count_step from #S_0 = 1.
Natural suffix_count_by_recurrence(std::size_t l);

Natural catalan(std::size_t k);

struct MersenneTail {
  unsigned n = 0;
  /// (M_n - 4, M_n - 2, M_n)
  std::array<Natural, 3> triplet;
  /// Last nine terms of the level; present for n >= 6.
  std::optional<std::array<Natural, 9>> nine;
  /// M_n - 22, M_n - 14, M_n - 6, M_n + 2, which are not Dyck numbers;
  /// present for n >= 6.
  std::optional<std::array<Natural, 4>> excluded;
};

/// Throws std::out_of_range for n < 4.
MersenneTail mersenne_tail(unsigned n);

struct GfCoefficients {
  Natural central;      // C(2k, k), coefficient of 1/sqrt(1-4x)
  Natural odd_central;  // C(2k+1, k), coefficient of (G(x)-1)/2x
  Natural interleaved;  // coefficient k of G(x^2) + x H(x^2)
};

GfCoefficients gf_coefficients(std::size_t k);

struct LevelStats {
  unsigned n = 0;
  std::uint64_t count = 0;
  std::uint64_t symmetric_count = 0;
  std::uint64_t asymmetric_count = 0;
  /// Symmetric terms that are neither Mersenne nor self-bijective.
  std::uint64_t interior_count = 0;
  /// Roots of the ternary triplet forest.
  std::uint64_t root_count = 0;

  friend bool operator==(const LevelStats&, const LevelStats&) = default;
};

/// Full scan of level n.
LevelStats level_stats(unsigned n);

}  // namespace dyck
