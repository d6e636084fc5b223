#pragma once

// Brute-force reference computations used only by the tests. Everything here
// works on strings and exhaustive search and shares no code with the library
// paths it checks.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace oracle {

using Big = boost::multiprecision::cpp_int;

inline std::string binary(std::uint64_t n) {
  if (n == 0) {
    return "";
  }
  std::string s;
  for (; n != 0; n >>= 1) {
    s.push_back((n & 1) ? '1' : '0');
  }
  std::reverse(s.begin(), s.end());
  return s;
}

inline std::uint64_t from_binary(const std::string& s) {
  std::uint64_t v = 0;
  for (char c : s) {
    v = v * 2 + (c == '1' ? 1 : 0);
  }
  return v;
}

/// Every suffix of the string holds at least as many '1' as '0'.
inline bool suffixes_balanced(const std::string& s) {
  for (std::size_t start = 0; start < s.size(); ++start) {
    const auto tail = s.substr(start);
    if (std::count(tail.begin(), tail.end(), '0') > std::count(tail.begin(), tail.end(), '1')) {
      return false;
    }
  }
  return true;
}

inline bool is_dyck(std::uint64_t n) { return suffixes_balanced(binary(n)); }

inline std::string padded(std::uint64_t n) {
  const std::string s = binary(n);
  const auto ones = std::count(s.begin(), s.end(), '1');
  const auto zeros = static_cast<std::ptrdiff_t>(s.size()) - ones;
  return std::string(static_cast<std::size_t>(ones - zeros), '0') + s;
}

inline std::string brackets(std::uint64_t n) {
  std::string p = padded(n);
  for (char& c : p) {
    c = c == '0' ? '(' : ')';
  }
  return p;
}

/// Mirror image of a bracket word: reversed, with '(' and ')' swapped.
inline std::string mirrored(const std::string& word) {
  std::string out(word.rbegin(), word.rend());
  for (char& c : out) {
    c = c == '(' ? ')' : '(';
  }
  return out;
}

inline bool is_symmetric(std::uint64_t n) {
  const std::string b = brackets(n);
  return mirrored(b) == b;
}

inline std::vector<std::uint64_t> level(unsigned n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t v = std::uint64_t{1} << (n - 1); v < (std::uint64_t{1} << n); ++v) {
    if (is_dyck(v)) {
      out.push_back(v);
    }
  }
  return out;
}

/// All length-l strings over {0,1} passing the suffix rule, lexicographic.
inline std::vector<std::string> suffix_set(unsigned l) {
  std::vector<std::string> out;
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << l); ++v) {
    std::string s(l, '0');
    for (unsigned b = 0; b < l; ++b) {
      if ((v >> b) & 1) {
        s[l - 1 - b] = '1';
      }
    }
    if (suffixes_balanced(s)) {
      out.push_back(s);
    }
  }
  return out;
}

/// Balanced 0/1 words of semilength w, built left to right as bracket paths.
inline void balanced_words(unsigned w, std::string& prefix, unsigned open, unsigned close,
                           std::vector<std::string>& out) {
  if (open == w && close == w) {
    out.push_back(prefix);
    return;
  }
  if (open < w) {
    prefix.push_back('0');
    balanced_words(w, prefix, open + 1, close, out);
    prefix.pop_back();
  }
  if (close < open) {
    prefix.push_back('1');
    balanced_words(w, prefix, open, close + 1, out);
    prefix.pop_back();
  }
}

inline std::vector<std::string> balanced_words(unsigned w) {
  std::vector<std::string> out;
  std::string prefix;
  balanced_words(w, prefix, 0, 0, out);
  return out;
}

/// Pascal's triangle entry by repeated addition.
inline Big pascal(unsigned n, unsigned k) {
  std::vector<Big> row{1};
  for (unsigned i = 1; i <= n; ++i) {
    std::vector<Big> next(i + 1, 1);
    for (unsigned j = 1; j < i; ++j) {
      next[j] = row[j - 1] + row[j];
    }
    row = std::move(next);
  }
  return k <= n ? row[k] : Big(0);
}

/// Catalan numbers by Segner's convolution.
inline Big catalan(unsigned k) {
  std::vector<Big> c{1};
  for (unsigned n = 0; n < k; ++n) {
    Big next = 0;
    for (unsigned i = 0; i <= n; ++i) {
      next += c[i] * c[n - i];
    }
    c.push_back(next);
  }
  return c[k];
}

/// B through bracket words: the part after the leading ')' is a path suffix;
/// its mirror image is prepended.
inline std::uint64_t bij(std::uint64_t d) {
  std::string tail = binary(d).substr(1);
  for (char& c : tail) {
    c = c == '0' ? '(' : ')';
  }
  std::string word = mirrored(tail) + tail;
  for (char& c : word) {
    c = c == '(' ? '0' : '1';
  }
  return from_binary(word);
}

/// B^-1 by exhaustive search over the level that maps onto s.
inline std::optional<std::uint64_t> inv_bij(std::uint64_t s) {
  const std::size_t w = padded(s).size() / 2;
  for (std::uint64_t d : level(static_cast<unsigned>(w + 1))) {
    if (bij(d) == s) {
      return d;
    }
  }
  return std::nullopt;
}

/// Parent in the triplet forest by searching every smaller Dyck number.
inline std::optional<std::uint64_t> parent(std::uint64_t d) {
  for (std::uint64_t p = 1; 4 * p - 1 <= d; ++p) {
    if (is_dyck(p) && (d == 4 * p - 1 || d == 4 * p + 1 || d == 4 * p + 3)) {
      return p;
    }
  }
  return std::nullopt;
}

inline std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

}  // namespace oracle
