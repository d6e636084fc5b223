#pragma once

// The ternary triplet forest: every Dyck number d spawns the triplet
// (4d - 1, 4d + 1, 4d + 3), and a triplet member d points back to
// 2 * floor(d / 8) + 1 whenever that candidate really spawned it. Nodes with
// no such parent are roots.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "dyck/core.hpp"
#include "dyck/enumeration.hpp"

namespace dyck {

using Triplet = std::array<DyckNumber, 3>;

/// Throws not_dyck_error for 0 and defect_error if a child fails validation.
Triplet children(const DyckNumber& d);

/// Empty for roots, including 1.
std::optional<DyckNumber> parent(const DyckNumber& d);

bool is_ternary_root(const DyckNumber& d);

struct TripletNode {
  DyckNumber value;
  std::optional<DyckNumber> parent;
  Triplet children;
};

TripletNode node(const DyckNumber& d);

bool pairwise_coprime(std::span<const Natural> values);

inline constexpr unsigned kMaxTernaryCheckBound = 20;

struct TernaryReport {
  unsigned level_bound = 0;
  /// Ascending.
  std::vector<std::uint64_t> roots;
  /// One entry per level 1..level_bound.
  std::vector<LevelStats> levels;

  /// Non-roots that are claimed by no triplet, or whose parent formula names
  /// a node that did not claim them.
  std::vector<std::uint64_t> orphans;
  /// Terms claimed by more than one triplet.
  std::vector<std::uint64_t> multiple_parents;
  /// Roots that some triplet claims anyway.
  std::vector<std::uint64_t> claimed_roots;
  /// Levels n (4..level_bound) whose Mersenne triplet is not pairwise coprime.
  std::vector<unsigned> non_coprime_triplets;

  bool ok() const noexcept;
};

/// Throws std::out_of_range unless 1 <= level_bound <= kMaxTernaryCheckBound.
TernaryReport forest_check(unsigned level_bound);

}  // namespace dyck
