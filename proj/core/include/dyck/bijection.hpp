#pragma once

// The bijection B from nonzero Dyck numbers onto symmetric Dyck numbers, its
// inverse, and the unary trees ("chains") it grows from asymmetric roots.
//
// For d = 1·s in binary, B(d) is the number whose padded word is
// revcomp(s)·s, where revcomp reverses s and flips every bit. The inverse of
// a symmetric d with w = binary_weight(d) is (d mod 2^w) + 2^w.

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

#include "dyck/core.hpp"

namespace dyck {

enum class TermClass {
  Mersenne,       // 2^n - 1
  SelfBijective,  // 3 * 2^k - 1, k >= 1; fixed points of B
  TreeRoot,       // asymmetric
  Interior,       // symmetric, on some chain
};

std::string_view to_string(TermClass c) noexcept;

/// Throws not_dyck_error for 0.
DyckNumber bij(const DyckNumber& d);

/// Throws not_dyck_error unless d is symmetric.
DyckNumber inv_bij(const DyckNumber& d);

bool is_mersenne(const Natural& n);
bool is_self_bijective(const Natural& n);

/// Throws not_dyck_error for 0.
TermClass classify(const DyckNumber& d);

struct BChain {
  DyckNumber root;
  /// terms[0] = B(root), terms[i + 1] = B(terms[i]).
  std::vector<DyckNumber> terms;
};

/// First k images of B starting at an asymmetric root. Throws
/// std::invalid_argument when root is not a TreeRoot.
BChain chain(const DyckNumber& root, std::size_t k);

struct RootPath {
  DyckNumber root;
  /// From the input down to the root, both included.
  std::vector<DyckNumber> path;

  std::size_t steps() const noexcept { return path.empty() ? 0 : path.size() - 1; }
};

/// Follows inv_bij down to the asymmetric root of d's chain. Mersenne and
/// self-bijective terms sit on no chain and raise root_refused; running past
/// 2 * bit_length(d) steps raises defect_error.
RootPath root_of(const DyckNumber& d);

inline constexpr unsigned kDefaultPartitionBound = 20;

/// Outcome of checking that B splits the non-Mersenne, non-self-bijective
/// Dyck numbers of bounded length into disjoint chains.
struct PartitionReport {
  unsigned level_bound = 0;
  std::size_t tree_roots = 0;
  std::size_t interior_terms = 0;
  /// Roots r whose first image B(r) is within the bound.
  std::size_t first_step_images = 0;

  /// (interior term, root) ascending by term.
  std::vector<std::pair<std::uint64_t, std::uint64_t>> assignments;

  /// Interior terms that no forward chain reached.
  std::vector<std::uint64_t> unassigned;
  /// Terms reached by more than one forward chain.
  std::vector<std::uint64_t> collisions;
  /// First images B(r) shared by two roots.
  std::vector<std::uint64_t> duplicate_first_images;
  /// Interior terms where root_of disagrees with the chain that reached them,
  /// or where the descent failed.
  std::vector<std::uint64_t> root_mismatches;
  /// Chain members that are not Interior.
  std::vector<std::uint64_t> misclassified;

  bool ok() const noexcept;

  /// Interior terms whose root is below `limit`.
  std::size_t covered_by_roots_below(std::uint64_t limit) const;
};

/// Throws std::out_of_range when level_bound is 0 or exceeds max_bound
/// (which may not exceed 62).
PartitionReport forest_partition(unsigned level_bound,
                                 unsigned max_bound = kDefaultPartitionBound);

namespace reference {

/// B computed on padded words, step by step: drop the leading 1, reverse and
/// complement what is left, prepend it, read the result as binary. Kept as an
/// independent route for differential testing.
DyckNumber bij_by_words(const DyckNumber& d);

}  // namespace reference

}  // namespace dyck
