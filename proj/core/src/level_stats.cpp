#include "dyck/bijection.hpp"
#include "dyck/enumeration.hpp"
#include "dyck/ternary_tree.hpp"

namespace dyck {

LevelStats level_stats(unsigned n) {
  LevelStats stats;
  stats.n = n;
  for (const auto& d : level_terms(n)) {
    ++stats.count;
    if (is_symmetric(d)) {
      ++stats.symmetric_count;
      const TermClass c = classify(d);
      if (c == TermClass::Interior) {
        ++stats.interior_count;
      }
    } else {
      ++stats.asymmetric_count;
    }
    if (is_ternary_root(d)) {
      ++stats.root_count;
    }
  }
  return stats;
}

}  // namespace dyck
