#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "dyck/oeis.hpp"

namespace dyck::oeis {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

std::int64_t parse_index(std::string_view token, std::size_t line) {
  std::int64_t index = 0;
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, index);
  if (ec != std::errc{} || ptr != end) {
    throw parse_error(line, "bad index \"" + std::string(token) + "\"");
  }
  return index;
}

Natural parse_value(std::string_view token, std::size_t line) {
  if (token.empty() ||
      !std::ranges::all_of(token, [](char c) { return c >= '0' && c <= '9'; })) {
    throw parse_error(line, "bad value \"" + std::string(token) + "\"");
  }
  return parse_natural(token);
}

}  // namespace

bool is_valid_seq_id(std::string_view id) {
  return id.size() == 7 && id[0] == 'A' &&
         std::ranges::all_of(id.substr(1), [](char c) { return c >= '0' && c <= '9'; });
}

BFile parse_bfile(std::string_view text, std::string seq_id) {
  BFile file{std::move(seq_id), {}};
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text.remove_prefix(eol == std::string_view::npos ? text.size() : eol + 1);
    ++line_no;

    line = trim(line);
    if (line.empty() || line.front() == '#') {
      continue;
    }
    const auto gap = line.find_first_of(" \t");
    if (gap == std::string_view::npos) {
      throw parse_error(line_no, "expected \"index value\"");
    }
    const std::string_view index_token = line.substr(0, gap);
    const std::string_view value_token = trim(line.substr(gap));
    if (value_token.find_first_of(" \t") != std::string_view::npos) {
      throw parse_error(line_no, "trailing tokens after value");
    }
    Entry entry{parse_index(index_token, line_no), parse_value(value_token, line_no)};
    if (!file.entries.empty() && entry.index <= file.entries.back().index) {
      throw parse_error(line_no, "index " + std::to_string(entry.index) +
                                     " does not increase");
    }
    file.entries.push_back(std::move(entry));
  }
  return file;
}

std::string serialize_bfile(const BFile& file) {
  std::ostringstream out;
  if (!file.seq_id.empty()) {
    out << "# " << file.seq_id << '\n';
  }
  for (const auto& e : file.entries) {
    out << e.index << ' ' << e.value << '\n';
  }
  return out.str();
}

BFile make_bfile(std::string seq_id, std::span<const Natural> values, std::int64_t first_index) {
  BFile file{std::move(seq_id), {}};
  file.entries.reserve(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    file.entries.push_back({first_index + static_cast<std::int64_t>(i), values[i]});
  }
  return file;
}

DiffReport compare(const BFile& local, const BFile& remote) {
  DiffReport report;
  report.seq_id = remote.seq_id.empty() ? local.seq_id : remote.seq_id;
  auto a = local.entries.begin();
  auto b = remote.entries.begin();
  while (a != local.entries.end() && b != remote.entries.end()) {
    if (a->index < b->index) {
      ++a;
    } else if (b->index < a->index) {
      ++b;
    } else {
      ++report.compared_count;
      if (a->value != b->value) {
        report.first_mismatch = Mismatch{a->index, a->value, b->value};
        return report;
      }
      ++a;
      ++b;
    }
  }
  if (report.compared_count == 0) {
    throw disjoint_ranges_error("local and remote index ranges do not overlap");
  }
  return report;
}

DiffReport compare(std::span<const Natural> local, std::int64_t first_index, const BFile& remote) {
  return compare(make_bfile(remote.seq_id, local, first_index), remote);
}

std::string bfile_url(std::string_view seq_id) {
  const std::string id(seq_id);
  return "https://oeis.org/" + id + "/b" + id.substr(1) + ".txt";
}

}  // namespace dyck::oeis
