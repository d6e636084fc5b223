#pragma once

// OEIS b-files: parsing, serialization, a local cache, retrieval, and
// entry-by-entry comparison against locally computed sequences.

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dyck/natural.hpp"

namespace dyck::oeis {

class parse_error : public std::runtime_error {
 public:
  parse_error(std::size_t line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Nothing cached and the network is off or unreachable.
class unavailable_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// compare() got index ranges with no overlap.
class disjoint_ranges_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Entry {
  std::int64_t index = 0;
  Natural value;

  friend bool operator==(const Entry&, const Entry&) = default;
};

struct BFile {
  std::string seq_id;
  std::vector<Entry> entries;

  friend bool operator==(const BFile&, const BFile&) = default;
};

/// "A" followed by exactly six digits.
bool is_valid_seq_id(std::string_view id);

/// Lines of "index value"; '#' comments and blank lines are skipped.
/// Indices must strictly increase and values must be naturals.
BFile parse_bfile(std::string_view text, std::string seq_id = {});

std::string serialize_bfile(const BFile& file);

BFile make_bfile(std::string seq_id, std::span<const Natural> values, std::int64_t first_index);

struct Mismatch {
  std::int64_t index = 0;
  Natural local;
  Natural remote;
};

struct DiffReport {
  std::string seq_id;
  std::size_t compared_count = 0;
  std::optional<Mismatch> first_mismatch;

  bool clean() const noexcept { return !first_mismatch.has_value(); }
};

/// Compares the overlapping index range. `local[i]` sits at index
/// first_index + i.
DiffReport compare(std::span<const Natural> local, std::int64_t first_index, const BFile& remote);
DiffReport compare(const BFile& local, const BFile& remote);

/// https://oeis.org/Annnnnn/bnnnnnn.txt
std::string bfile_url(std::string_view seq_id);

inline constexpr const char* kCacheEnvVar = "DYCK_OEIS_CACHE";

/// $DYCK_OEIS_CACHE, else $XDG_CACHE_HOME/dyck-oeis, else ~/.cache/dyck-oeis.
std::filesystem::path default_cache_root();

/// One raw body file plus a JSON metadata file per sequence.
class Cache {
 public:
  explicit Cache(std::filesystem::path root);

  const std::filesystem::path& root() const noexcept { return root_; }
  std::filesystem::path raw_path(std::string_view seq_id) const;
  std::filesystem::path meta_path(std::string_view seq_id) const;

  std::optional<std::string> load(std::string_view seq_id) const;

  /// Writes through temporary files and renames, so readers never observe a
  /// partial body.
  void store(std::string_view seq_id, std::string_view body, std::string_view source_url) const;

 private:
  std::filesystem::path root_;
};

/// Returns the body at `url`; throws unavailable_error on any transport or
/// HTTP failure.
using Fetcher = std::function<std::string(const std::string& url)>;

Fetcher http_fetcher(std::chrono::seconds timeout = std::chrono::seconds(10));

struct ClientOptions {
  std::filesystem::path cache_root = default_cache_root();
  bool offline = false;
  bool refresh = false;
  /// Defaults to http_fetcher().
  Fetcher fetcher;
};

class Client {
 public:
  explicit Client(ClientOptions options = {});

  /// Cache first unless refresh is set. Network failures with nothing cached
  /// raise unavailable_error; malformed bodies raise parse_error and are not
  /// cached.
  BFile fetch_bfile(const std::string& seq_id);

  const Cache& cache() const noexcept { return cache_; }

 private:
  std::mutex& lock_for(const std::string& seq_id);

  ClientOptions options_;
  Cache cache_;
  std::mutex locks_guard_;
  std::map<std::string, std::unique_ptr<std::mutex>> locks_;
};

/// Sequences this library can compute, by OEIS id.
std::vector<std::string> supported_sequences();

/// Local values aligned to `remote`'s index range, at most `limit` entries
/// (0 means all). Returns an empty optional for unsupported ids.
std::optional<BFile> local_sequence(const std::string& seq_id, const BFile& remote,
                                    std::size_t limit = 0);

/// The first `count` local terms with this library's index convention.
BFile local_sequence(const std::string& seq_id, std::size_t count);

}  // namespace dyck::oeis
