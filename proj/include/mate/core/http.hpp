#pragma once

#include <chrono>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

namespace mate {

class InvalidUrl : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// http(s)://host[:port][/path]
struct Url {
  std::string scheme;
  std::string host;
  int port = 0;
  std::string path;  // no trailing slash; empty for the root

  /// Throws InvalidUrl.
  static Url parse(std::string_view text);

  std::string origin() const;
  /// path + "/" + leaf, e.g. {path="/v1"}.join("chat/completions") == "/v1/chat/completions".
  std::string join(std::string_view leaf) const;
  std::string str() const { return origin() + path; }
};

struct HttpResult {
  int status = 0;
  std::string body;
  std::string error;  // empty when a response arrived
  bool timed_out = false;

  bool transported() const noexcept { return error.empty(); }
};

/// One blocking POST with a JSON body. Never throws on transport problems; see HttpResult.
HttpResult http_post_json(const Url& base, const std::string& path, const std::string& body,
                          const std::map<std::string, std::string>& headers,
                          std::chrono::milliseconds timeout);

}  // namespace mate
