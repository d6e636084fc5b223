#include "dyck/enumeration.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <stdexcept>
#include <utility>

namespace dyck {

namespace {

void require_level(unsigned n) {
  if (n == 0 || n > kMaxLevel) {
    throw std::out_of_range("level must be in 1.." + std::to_string(kMaxLevel) +
                            ", got " + std::to_string(n));
  }
}

LevelStrategy resolve(unsigned n, LevelStrategy strategy) {
  if (strategy != LevelStrategy::Auto) {
    return strategy;
  }
  return n <= kScanCutoff ? LevelStrategy::Scan : LevelStrategy::SuffixDfs;
}

}  // namespace

namespace detail {

ScanCursor::ScanCursor(unsigned n) {
  if (n == 1) {
    current_ = last_ = 1;
    return;
  }
  current_ = (std::uint64_t{1} << (n - 1)) + 1;
  last_ = n == 64 ? std::numeric_limits<std::uint64_t>::max()
                  : (std::uint64_t{1} << n) - 1;
}

std::optional<std::uint64_t> ScanCursor::next() {
  while (!done_) {
    const std::uint64_t candidate = current_;
    if (candidate == last_) {
      done_ = true;
    } else {
      current_ += 2;
    }
    if (validate_u64(candidate).is_dyck) {
      return candidate;
    }
  }
  return std::nullopt;
}

}  // namespace detail

SuffixStream::SuffixStream(std::size_t length) : length_(length) {
  if (length > 63) {
    throw std::out_of_range("suffix streams are limited to 63 bits");
  }
  stack_.push_back(Frame{0, 0, 0, 0, 0});
}

std::optional<std::uint64_t> SuffixStream::next() {
  // Prefix-first DFS, 0 before 1. A partial word stays extendable while the
  // remaining bits can still lift the final balance to the highest prefix
  // balance, which is what every suffix starting inside the prefix needs.
  while (!stack_.empty()) {
    Frame& top = stack_.back();
    if (top.depth == length_) {
      const std::uint64_t word = top.value;
      stack_.pop_back();
      return word;
    }
    if (top.next_bit > 1) {
      stack_.pop_back();
      continue;
    }
    const std::uint8_t bit = top.next_bit++;
    Frame child{(top.value << 1) | bit, top.balance + (bit ? 1 : -1), 0, top.depth + 1, 0};
    child.peak = std::max(top.peak, child.balance);
    const auto remaining = static_cast<std::int32_t>(length_ - child.depth);
    if (child.peak - child.balance <= remaining) {
      stack_.push_back(child);
    }
  }
  return std::nullopt;
}

LevelView::LevelView(unsigned n, LevelStrategy strategy)
    : n_(n), strategy_(resolve(n, strategy)) {
  require_level(n);
}

DyckNumber LevelView::min_term() const { return level_min(n_); }
DyckNumber LevelView::max_term() const { return level_max(n_); }
Natural LevelView::size() const { return level_count(n_); }

LevelView::iterator::iterator(unsigned n, LevelStrategy strategy) : done_(false) {
  if (strategy == LevelStrategy::SuffixDfs) {
    cursor_.emplace<SuffixStream>(n - 1);
    lead_ = std::uint64_t{1} << (n - 1);
  } else {
    cursor_.emplace<detail::ScanCursor>(n);
  }
  advance();
}

LevelView::iterator& LevelView::iterator::operator++() {
  advance();
  return *this;
}

void LevelView::iterator::advance() {
  std::optional<std::uint64_t> next;
  if (auto* scan = std::get_if<detail::ScanCursor>(&cursor_)) {
    next = scan->next();
  } else if (auto* dfs = std::get_if<SuffixStream>(&cursor_)) {
    next = dfs->next();
  }
  if (!next) {
    done_ = true;
    return;
  }
  raw_ = *next | lead_;
  current_ = DyckNumber::trusted(Natural(raw_));
}

std::vector<DyckNumber> LevelView::to_vector() const {
  std::vector<DyckNumber> out;
  for (const auto& d : *this) {
    out.push_back(d);
  }
  return out;
}

std::vector<std::uint64_t> LevelView::to_raw() const {
  std::vector<std::uint64_t> out;
  for (auto it = begin(); it != end(); ++it) {
    out.push_back(it.raw());
  }
  return out;
}

LevelView level_terms(unsigned n, LevelStrategy strategy) {
  return LevelView(n, strategy);
}

Natural level_count(unsigned n) {
  if (n == 0) {
    throw std::out_of_range("level must be positive");
  }
  return binomial(n - 1, (n - 1) / 2);
}

DyckNumber level_min(unsigned n) {
  if (n == 0) {
    throw std::out_of_range("level must be positive");
  }
  if (n == 1) {
    return DyckNumber(std::uint64_t{1});
  }
  const std::size_t half = n / 2;  // ceil((n - 1) / 2)
  return DyckNumber(mersenne(n - 1) + mersenne(half) + 1);
}

DyckNumber level_max(unsigned n) { return DyckNumber::trusted(mersenne(n)); }

std::string SuffixSet::word(std::size_t i) const {
  std::string out(length, '0');
  const std::uint64_t w = words.at(i);
  for (std::size_t b = 0; b < length; ++b) {
    if ((w >> b) & 1) {
      out[length - 1 - b] = '1';
    }
  }
  return out;
}

std::size_t SuffixSet::zero_balance_count() const {
  return static_cast<std::size_t>(std::ranges::count_if(words, [this](std::uint64_t w) {
    return 2 * static_cast<std::size_t>(std::popcount(w)) == length;
  }));
}

SuffixSet suffixes(std::size_t l) {
  if (l > kMaxMaterializedSuffix) {
    throw std::out_of_range("suffix sets are materialized only up to length " +
                            std::to_string(kMaxMaterializedSuffix));
  }
  // (word, balance) pairs; each round prepends one bit on the left.
  std::vector<std::pair<std::uint64_t, std::uint32_t>> current{{0, 0}};
  for (std::size_t len = 0; len < l; ++len) {
    std::vector<std::pair<std::uint64_t, std::uint32_t>> grown;
    grown.reserve(current.size() * 2);
    const std::uint64_t one = std::uint64_t{1} << len;
    for (const auto& [word, balance] : current) {
      grown.emplace_back(word | one, balance + 1);
      if (balance > 0) {
        grown.emplace_back(word, balance - 1);
      }
    }
    current = std::move(grown);
  }
  SuffixSet set;
  set.length = l;
  set.words.reserve(current.size());
  for (const auto& entry : current) {
    set.words.push_back(entry.first);
  }
  std::ranges::sort(set.words);
  return set;
}

Natural suffix_count(std::size_t l) { return binomial(l, l / 2); }

Natural suffix_count_step(std::size_t l, const Natural& count_at_l) {
  if (l % 2 == 1) {
    return 2 * count_at_l;
  }
  return 2 * count_at_l - catalan(l / 2);
}

Natural suffix_count_by_recurrence(std::size_t l) {
  Natural count = 1;
  for (std::size_t i = 0; i < l; ++i) {
    count = suffix_count_step(i, count);
  }
  return count;
}

Natural catalan(std::size_t k) { return binomial(2 * k, k) / (k + 1); }

MersenneTail mersenne_tail(unsigned n) {
  if (n < 4) {
    throw std::out_of_range("a Mersenne triplet needs level >= 4");
  }
  const Natural m = mersenne(n);
  MersenneTail tail;
  tail.n = n;
  tail.triplet = {m - 4, m - 2, m};
  if (n >= 6) {
    tail.nine = std::array<Natural, 9>{m - 20, m - 18, m - 16, m - 12, m - 10,
                                       m - 8,  m - 4,  m - 2,  m};
    tail.excluded = std::array<Natural, 4>{m - 22, m - 14, m - 6, m + 2};
  }
  return tail;
}

GfCoefficients gf_coefficients(std::size_t k) {
  auto central = [](std::size_t i) { return binomial(2 * i, i); };
  auto odd_central = [](std::size_t i) { return binomial(2 * i + 1, i); };
  GfCoefficients c;
  c.central = central(k);
  c.odd_central = odd_central(k);
  c.interleaved = k % 2 == 0 ? central(k / 2) : odd_central((k - 1) / 2);
  return c;
}

}  // namespace dyck
