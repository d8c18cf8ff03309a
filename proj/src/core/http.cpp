#include "mate/core/http.hpp"

#include <regex>

#include <httplib.h>

namespace mate {

Url Url::parse(std::string_view text) {
  static const std::regex re(R"(^(https?)://([A-Za-z0-9.\-]+|\[[0-9A-Fa-f:]+\])(?::(\d{1,5}))?(/[^\s?#]*)?$)",
                             std::regex::icase);
  std::cmatch m;
  if (!std::regex_match(text.data(), text.data() + text.size(), m, re)) {
    throw InvalidUrl("malformed URL: '" + std::string(text) + "'");
  }
  Url u;
  u.scheme = m[1].str();
  for (auto& c : u.scheme) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  u.host = m[2].str();
  if (m[3].matched) {
    u.port = std::stoi(m[3].str());
    if (u.port <= 0 || u.port > 65535) throw InvalidUrl("port out of range in '" + std::string(text) + "'");
  } else {
    u.port = u.scheme == "https" ? 443 : 80;
  }
  u.path = m[4].matched ? m[4].str() : "";
  while (!u.path.empty() && u.path.back() == '/') u.path.pop_back();
  return u;
}

std::string Url::origin() const {
  return scheme + "://" + host + ":" + std::to_string(port);
}

std::string Url::join(std::string_view leaf) const {
  while (!leaf.empty() && leaf.front() == '/') leaf.remove_prefix(1);
  return path + "/" + std::string(leaf);
}

HttpResult http_post_json(const Url& base, const std::string& path, const std::string& body,
                          const std::map<std::string, std::string>& headers,
                          std::chrono::milliseconds timeout) {
  httplib::Client client(base.origin());
  client.set_connection_timeout(timeout);
  client.set_read_timeout(timeout);
  client.set_write_timeout(timeout);
  httplib::Headers h;
  for (const auto& [k, v] : headers) h.emplace(k, v);

  const auto started = std::chrono::steady_clock::now();
  auto res = client.Post(path, h, body, "application/json");
  HttpResult out;
  if (!res) {
    const auto elapsed = std::chrono::steady_clock::now() - started;
    const auto err = res.error();
    out.timed_out = err == httplib::Error::ConnectionTimeout ||
                    (err == httplib::Error::Read && elapsed >= timeout * 9 / 10);
    out.error = out.timed_out ? "timeout after " + std::to_string(timeout.count()) + " ms"
                              : httplib::to_string(err);
    return out;
  }
  out.status = res->status;
  out.body = std::move(res->body);
  return out;
}

}  // namespace mate
