#define CPPHTTPLIB_OPENSSL_SUPPORT
#include "httplib.h"

#include "dyck/oeis.hpp"

namespace dyck::oeis {

Fetcher http_fetcher(std::chrono::seconds timeout) {
  return [timeout](const std::string& url) -> std::string {
    const auto scheme_end = url.find("://");
    if (scheme_end == std::string::npos) {
      throw unavailable_error("not an absolute URL: " + url);
    }
    const auto path_start = url.find('/', scheme_end + 3);
    const std::string origin = url.substr(0, path_start);
    const std::string path = path_start == std::string::npos ? "/" : url.substr(path_start);

    httplib::Client client(origin);
    client.set_connection_timeout(timeout);
    client.set_read_timeout(timeout);
    client.set_follow_location(true);
    auto response = client.Get(path);
    if (!response) {
      throw unavailable_error("GET " + url + " failed: " + httplib::to_string(response.error()));
    }
    if (response->status != 200) {
      throw unavailable_error("GET " + url + " returned HTTP " +
                              std::to_string(response->status));
    }
    return response->body;
  };
}

}  // namespace dyck::oeis
