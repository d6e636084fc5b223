#include <chrono>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>

#include <unistd.h>

#include "dyck/oeis.hpp"
#include "json.hpp"

namespace dyck::oeis {

namespace fs = std::filesystem;

fs::path default_cache_root() {
  if (const char* env = std::getenv(kCacheEnvVar); env != nullptr && *env != '\0') {
    return env;
  }
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg != nullptr && *xdg != '\0') {
    return fs::path(xdg) / "dyck-oeis";
  }
  if (const char* home = std::getenv("HOME"); home != nullptr && *home != '\0') {
    return fs::path(home) / ".cache" / "dyck-oeis";
  }
  return fs::temp_directory_path() / "dyck-oeis";
}

Cache::Cache(fs::path root) : root_(std::move(root)) {}

fs::path Cache::raw_path(std::string_view seq_id) const {
  return root_ / (std::string(seq_id) + ".txt");
}

fs::path Cache::meta_path(std::string_view seq_id) const {
  return root_ / (std::string(seq_id) + ".meta.json");
}

std::optional<std::string> Cache::load(std::string_view seq_id) const {
  std::ifstream in(raw_path(seq_id), std::ios::binary);
  if (!in) {
    return std::nullopt;
  }
  std::ostringstream body;
  body << in.rdbuf();
  return body.str();
}

namespace {

void write_atomically(const fs::path& target, std::string_view contents) {
  std::ostringstream suffix;
  suffix << ".tmp." << ::getpid() << '.' << std::this_thread::get_id();
  fs::path tmp = target;
  tmp += suffix.str();
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!out) {
      throw std::runtime_error("cannot write " + tmp.string());
    }
  }
  fs::rename(tmp, target);
}

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

void Cache::store(std::string_view seq_id, std::string_view body,
                  std::string_view source_url) const {
  fs::create_directories(root_);
  write_atomically(raw_path(seq_id), body);
  const nlohmann::ordered_json meta = {
      {"seq_id", seq_id},
      {"source_url", source_url},
      {"retrieved_at", utc_timestamp()},
      {"bytes", body.size()},
  };
  write_atomically(meta_path(seq_id), meta.dump(2) + "\n");
}

}  // namespace dyck::oeis
