#include <functional>

#include "dyck/enumeration.hpp"
#include "dyck/oeis.hpp"

namespace dyck::oeis {

namespace {

struct IndexedSequence {
  const char* id;
  std::int64_t offset;
  std::function<Natural(std::int64_t)> at;
};

const std::vector<IndexedSequence>& indexed_sequences() {
  static const std::vector<IndexedSequence> table = {
      {"A000108", 0, [](std::int64_t i) { return catalan(static_cast<std::size_t>(i)); }},
      {"A000225", 0, [](std::int64_t i) { return mersenne(static_cast<std::size_t>(i)); }},
      {"A000984", 0,
       [](std::int64_t i) { return gf_coefficients(static_cast<std::size_t>(i)).central; }},
      {"A001405", 0, [](std::int64_t i) { return suffix_count(static_cast<std::size_t>(i)); }},
      {"A001700", 0,
       [](std::int64_t i) { return gf_coefficients(static_cast<std::size_t>(i)).odd_central; }},
      {"A052940", 0,
       [](std::int64_t i) -> Natural {
         if (i == 0) {
           return 1;
         }
         return 3 * power_of_two(static_cast<std::size_t>(i)) - 1;
       }},
  };
  return table;
}

const IndexedSequence* find_indexed(const std::string& id) {
  for (const auto& s : indexed_sequences()) {
    if (id == s.id) {
      return &s;
    }
  }
  return nullptr;
}

bool is_enumerated(const std::string& id) { return id == "A036991" || id == "A350346"; }

// Dyck numbers in ascending order, optionally preceded by 0.
std::vector<Natural> dyck_numbers(std::size_t count, bool include_zero, bool binary_digits) {
  std::vector<Natural> out;
  out.reserve(count);
  auto emit = [&](const Natural& v) {
    out.push_back(binary_digits ? parse_natural(to_binary(v)) : v);
  };
  if (include_zero && count > 0) {
    emit(0);
  }
  for (unsigned n = 1; out.size() < count && n <= kMaxLevel; ++n) {
    for (const auto& d : level_terms(n)) {
      if (out.size() == count) {
        break;
      }
      emit(d.value());
    }
  }
  return out;
}

// Local convention for the Dyck-number listings: offset 1, a(1) = 0.
constexpr std::int64_t kDyckOffset = 1;

}  // namespace

std::vector<std::string> supported_sequences() {
  std::vector<std::string> ids;
  for (const auto& s : indexed_sequences()) {
    ids.emplace_back(s.id);
  }
  ids.emplace_back("A036991");
  ids.emplace_back("A350346");
  return ids;
}

std::optional<BFile> local_sequence(const std::string& seq_id, const BFile& remote,
                                    std::size_t limit) {
  const std::size_t wanted =
      limit == 0 ? remote.entries.size() : std::min(limit, remote.entries.size());
  if (const auto* seq = find_indexed(seq_id)) {
    BFile file{seq_id, {}};
    for (std::size_t i = 0; i < wanted; ++i) {
      const std::int64_t index = remote.entries[i].index;
      if (index >= seq->offset) {
        file.entries.push_back({index, seq->at(index)});
      }
    }
    return file;
  }
  if (is_enumerated(seq_id)) {
    if (remote.entries.empty()) {
      return BFile{seq_id, {}};
    }
    // Align on values: the remote listing may or may not start with 0.
    const bool include_zero = remote.entries.front().value == 0;
    const auto values = dyck_numbers(wanted, include_zero, seq_id == "A350346");
    return make_bfile(seq_id, values, remote.entries.front().index);
  }
  return std::nullopt;
}

BFile local_sequence(const std::string& seq_id, std::size_t count) {
  if (const auto* seq = find_indexed(seq_id)) {
    BFile file{seq_id, {}};
    for (std::size_t i = 0; i < count; ++i) {
      const std::int64_t index = seq->offset + static_cast<std::int64_t>(i);
      file.entries.push_back({index, seq->at(index)});
    }
    return file;
  }
  if (is_enumerated(seq_id)) {
    return make_bfile(seq_id, dyck_numbers(count, true, seq_id == "A350346"), kDyckOffset);
  }
  throw std::invalid_argument("no local computation for " + seq_id);
}

}  // namespace dyck::oeis
