#include <stdexcept>

#include "dyck/oeis.hpp"

namespace dyck::oeis {

Client::Client(ClientOptions options)
    : options_(std::move(options)), cache_(options_.cache_root) {
  if (!options_.fetcher) {
    options_.fetcher = http_fetcher();
  }
}

std::mutex& Client::lock_for(const std::string& seq_id) {
  std::lock_guard guard(locks_guard_);
  auto& slot = locks_[seq_id];
  if (!slot) {
    slot = std::make_unique<std::mutex>();
  }
  return *slot;
}

BFile Client::fetch_bfile(const std::string& seq_id) {
  if (!is_valid_seq_id(seq_id)) {
    throw std::invalid_argument("malformed sequence id \"" + seq_id + "\"");
  }
  std::lock_guard guard(lock_for(seq_id));

  const auto cached = cache_.load(seq_id);
  if (cached && (!options_.refresh || options_.offline)) {
    return parse_bfile(*cached, seq_id);
  }
  if (options_.offline) {
    throw unavailable_error("offline and no cached b-file for " + seq_id + " under " +
                            cache_.root().string());
  }

  const std::string url = bfile_url(seq_id);
  std::string body;
  try {
    body = options_.fetcher(url);
  } catch (const unavailable_error&) {
    if (cached) {
      return parse_bfile(*cached, seq_id);
    }
    throw;
  }
  BFile file = parse_bfile(body, seq_id);
  cache_.store(seq_id, body, url);
  return file;
}

}  // namespace dyck::oeis
