#include "dyck/ternary_tree.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include <boost/multiprecision/cpp_int.hpp>

namespace dyck {

Triplet children(const DyckNumber& d) {
  if (d.value().is_zero()) {
    throw not_dyck_error("0 has no triplet");
  }
  const Natural base = 4 * d.value();
  Triplet out;
  const Natural members[3] = {base - 1, base + 1, base + 3};
  for (std::size_t i = 0; i < 3; ++i) {
    if (!is_dyck(members[i])) {
      throw defect_error("triplet member " + members[i].str() + " of " + d.str() +
                         " is not a Dyck number");
    }
    out[i] = DyckNumber::trusted(members[i]);
  }
  return out;
}

std::optional<DyckNumber> parent(const DyckNumber& d) {
  if (d.value().is_zero()) {
    throw not_dyck_error("0 is not a triplet node");
  }
  const Natural candidate = 2 * (d.value() / 8) + 1;
  if (!is_dyck(candidate)) {
    return std::nullopt;
  }
  const Natural base = 4 * candidate;
  const Natural& v = d.value();
  if (v != base - 1 && v != base + 1 && v != base + 3) {
    return std::nullopt;
  }
  return DyckNumber::trusted(candidate);
}

bool is_ternary_root(const DyckNumber& d) { return !parent(d).has_value(); }

TripletNode node(const DyckNumber& d) { return TripletNode{d, parent(d), children(d)}; }

bool pairwise_coprime(std::span<const Natural> values) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    for (std::size_t j = i + 1; j < values.size(); ++j) {
      if (boost::multiprecision::gcd(values[i], values[j]) != 1) {
        return false;
      }
    }
  }
  return true;
}

bool TernaryReport::ok() const noexcept {
  return orphans.empty() && multiple_parents.empty() && claimed_roots.empty() &&
         non_coprime_triplets.empty();
}

TernaryReport forest_check(unsigned level_bound) {
  if (level_bound == 0 || level_bound > kMaxTernaryCheckBound) {
    throw std::out_of_range("ternary forest checks support levels 1.." +
                            std::to_string(kMaxTernaryCheckBound));
  }
  TernaryReport report;
  report.level_bound = level_bound;

  // claimer[c] = the node whose triplet contains c; claims[c] counts them.
  std::unordered_map<std::uint64_t, std::uint64_t> claimer;
  std::unordered_map<std::uint64_t, unsigned> claims;
  std::vector<std::uint64_t> terms;
  for (unsigned n = 1; n <= level_bound; ++n) {
    for (auto it = level_terms(n).begin(); it != std::default_sentinel; ++it) {
      const std::uint64_t d = it.raw();
      terms.push_back(d);
      for (const auto& child : children(*it)) {
        if (child.bit_length() > level_bound) {
          continue;
        }
        const auto c = child.value().convert_to<std::uint64_t>();
        claimer[c] = d;
        ++claims[c];
      }
    }
  }

  for (const std::uint64_t d : terms) {
    const auto p = parent(DyckNumber::trusted(Natural(d)));
    const auto count = claims.contains(d) ? claims[d] : 0U;
    if (count > 1) {
      report.multiple_parents.push_back(d);
    }
    if (!p) {
      report.roots.push_back(d);
      if (count != 0) {
        report.claimed_roots.push_back(d);
      }
    } else if (count == 0 || claimer[d] != p->value()) {
      report.orphans.push_back(d);
    }
  }

  for (unsigned n = 1; n <= level_bound; ++n) {
    report.levels.push_back(level_stats(n));
  }
  for (unsigned n = 4; n <= level_bound; ++n) {
    const MersenneTail tail = mersenne_tail(n);
    if (!pairwise_coprime(tail.triplet)) {
      report.non_coprime_triplets.push_back(n);
    }
  }
  return report;
}

}  // namespace dyck
