#include "dyck/bijection.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "dyck/enumeration.hpp"

namespace dyck {

namespace mp = boost::multiprecision;

std::string_view to_string(TermClass c) noexcept {
  switch (c) {
    case TermClass::Mersenne:
      return "mersenne";
    case TermClass::SelfBijective:
      return "self-bijective";
    case TermClass::TreeRoot:
      return "tree-root";
    case TermClass::Interior:
      return "interior";
  }
  return "unknown";
}

DyckNumber bij(const DyckNumber& d) {
  const Natural& value = d.value();
  if (value.is_zero()) {
    throw not_dyck_error("B is undefined at 0");
  }
  const std::size_t width = d.bit_length() - 1;
  Natural suffix = value;
  mp::bit_unset(suffix, static_cast<unsigned>(width));

  Natural mirrored = 0;
  for (std::size_t i = 0; i < width; ++i) {
    if (!mp::bit_test(suffix, static_cast<unsigned>(i))) {
      mp::bit_set(mirrored, static_cast<unsigned>(width - 1 - i));
    }
  }
  mirrored <<= width;
  mirrored |= suffix;
  return DyckNumber::trusted(std::move(mirrored));
}

DyckNumber inv_bij(const DyckNumber& d) {
  if (!is_symmetric(d)) {
    throw not_dyck_error(d.str() + " is not a symmetric Dyck number");
  }
  const std::size_t w = d.semilength();
  Natural half = d.value();
  // d mod 2^w keeps the low w bits.
  if (bit_length(half) > w) {
    half &= mersenne(w);
  }
  mp::bit_set(half, static_cast<unsigned>(w));
  return DyckNumber::trusted(std::move(half));
}

bool is_mersenne(const Natural& n) { return n.sign() >= 0 && is_power_of_two(n + 1); }

bool is_self_bijective(const Natural& n) {
  if (n < 5) {
    return false;
  }
  const Natural next = n + 1;
  if (next % 3 != 0) {
    return false;
  }
  return is_power_of_two(next / 3);
}

TermClass classify(const DyckNumber& d) {
  if (d.value().is_zero()) {
    throw not_dyck_error("0 has no class");
  }
  if (is_mersenne(d.value())) {
    return TermClass::Mersenne;
  }
  if (is_self_bijective(d.value())) {
    return TermClass::SelfBijective;
  }
  return is_symmetric(d) ? TermClass::Interior : TermClass::TreeRoot;
}

BChain chain(const DyckNumber& root, std::size_t k) {
  if (root.value().is_zero() || classify(root) != TermClass::TreeRoot) {
    throw std::invalid_argument(root.str() + " is not the root of a bijection tree");
  }
  BChain out{root, {}};
  out.terms.reserve(k);
  DyckNumber current = root;
  for (std::size_t i = 0; i < k; ++i) {
    current = bij(current);
    out.terms.push_back(current);
  }
  return out;
}

RootPath root_of(const DyckNumber& d) {
  switch (classify(d)) {
    case TermClass::Mersenne:
      throw root_refused(root_refused::Reason::MersenneLadder,
                         d.str() + " is a Mersenne number: the inverse climbs the ascending "
                                   "Mersenne ladder and never reaches a root");
    case TermClass::SelfBijective:
      throw root_refused(root_refused::Reason::FixedPoint,
                         d.str() + " is self-bijective: a fixed point of B with no root");
    case TermClass::TreeRoot:
      return RootPath{d, {d}};
    case TermClass::Interior:
      break;
  }

  RootPath result{d, {d}};
  const std::size_t cap = 2 * d.bit_length();
  DyckNumber current = d;
  for (std::size_t step = 0; step < cap; ++step) {
    current = inv_bij(current);
    result.path.push_back(current);
    if (!is_symmetric(current)) {
      result.root = current;
      return result;
    }
    if (is_mersenne(current.value()) || is_self_bijective(current.value())) {
      throw defect_error("descent from " + d.str() + " left the bijection forest at " +
                         current.str());
    }
  }
  throw defect_error("no asymmetric root within " + std::to_string(cap) + " steps of " +
                     d.str());
}

bool PartitionReport::ok() const noexcept {
  return unassigned.empty() && collisions.empty() && duplicate_first_images.empty() &&
         root_mismatches.empty() && misclassified.empty() &&
         assignments.size() == interior_terms;
}

std::size_t PartitionReport::covered_by_roots_below(std::uint64_t limit) const {
  return static_cast<std::size_t>(std::ranges::count_if(
      assignments, [limit](const auto& entry) { return entry.second < limit; }));
}

PartitionReport forest_partition(unsigned level_bound, unsigned max_bound) {
  if (max_bound > 62) {
    throw std::out_of_range("forest_partition supports bounds up to 62");
  }
  if (level_bound == 0 || level_bound > max_bound) {
    throw std::out_of_range("level bound must be in 1.." + std::to_string(max_bound));
  }

  PartitionReport report;
  report.level_bound = level_bound;

  std::vector<std::uint64_t> roots;
  std::vector<std::uint64_t> interior;
  std::unordered_map<std::uint64_t, TermClass> classes;
  for (unsigned n = 1; n <= level_bound; ++n) {
    for (const auto& d : level_terms(n)) {
      const auto raw = d.value().convert_to<std::uint64_t>();
      const TermClass c = classify(d);
      classes.emplace(raw, c);
      if (c == TermClass::TreeRoot) {
        roots.push_back(raw);
      } else if (c == TermClass::Interior) {
        interior.push_back(raw);
      }
    }
  }
  report.tree_roots = roots.size();
  report.interior_terms = interior.size();

  // Forward pass: walk each root's chain while it stays within the bound.
  // After the first step bit lengths strictly grow, so stopping at the first
  // oversized term loses nothing.
  std::unordered_map<std::uint64_t, std::uint64_t> owner;
  std::map<std::uint64_t, std::size_t> first_images;
  for (const std::uint64_t root : roots) {
    DyckNumber term = bij(DyckNumber::trusted(Natural(root)));
    if (term.bit_length() > level_bound) {
      continue;
    }
    ++first_images[term.value().convert_to<std::uint64_t>()];
    while (term.bit_length() <= level_bound) {
      const auto raw = term.value().convert_to<std::uint64_t>();
      if (auto [it, inserted] = owner.emplace(raw, root); !inserted) {
        report.collisions.push_back(raw);
      }
      if (auto it = classes.find(raw); it == classes.end() || it->second != TermClass::Interior) {
        report.misclassified.push_back(raw);
      }
      term = bij(term);
    }
  }
  for (const auto& [image, count] : first_images) {
    report.first_step_images += count;
    if (count > 1) {
      report.duplicate_first_images.push_back(image);
    }
  }

  // Backward pass: every Interior term must descend to the root that reached
  // it going forward.
  std::ranges::sort(interior);
  for (const std::uint64_t term : interior) {
    const auto it = owner.find(term);
    if (it == owner.end()) {
      report.unassigned.push_back(term);
    } else {
      report.assignments.emplace_back(term, it->second);
    }
    try {
      const RootPath path = root_of(DyckNumber::trusted(Natural(term)));
      if (it == owner.end() || path.root.value() != it->second) {
        report.root_mismatches.push_back(term);
      }
    } catch (const std::exception&) {
      report.root_mismatches.push_back(term);
    }
  }

  std::ranges::sort(report.collisions);
  std::ranges::sort(report.misclassified);
  return report;
}

namespace reference {

DyckNumber bij_by_words(const DyckNumber& d) {
  if (d.value().is_zero()) {
    throw not_dyck_error("B is undefined at 0");
  }
  const std::string compact = to_binary(d.value());
  const std::string suffix = compact.substr(1);
  std::string prefix(suffix.rbegin(), suffix.rend());
  for (char& c : prefix) {
    c = c == '0' ? '1' : '0';
  }
  const std::string word = prefix + suffix;
  return unpad(PaddedWord::parse(word));
}

}  // namespace reference

}  // namespace dyck
