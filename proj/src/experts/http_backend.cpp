#include "mate/experts/http_backend.hpp"

#include <nlohmann/json.hpp>

#include "mate/core/hash.hpp"
#include "mate/core/http.hpp"

namespace fs = std::filesystem;

namespace mate::experts {

namespace {

class HttpBackend final : public ConverterBackend {
 public:
  explicit HttpBackend(HttpBackendConfig cfg) : cfg_(std::move(cfg)), url_(Url::parse(cfg_.endpoint)) {}

  BackendKind kind() const override { return BackendKind::Http; }
  bool supports(StageId stage) const override {
    return cfg_.stages.empty() || cfg_.stages.contains(stage);
  }

  void produce(StageId stage, const FileArtifact& input, const fs::path& out) const override {
    const auto bytes = read_file_bytes(input.path);
    const nlohmann::json request{
        {"stage", std::string(to_string(stage))},
        {"input_name", input.path.filename().string()},
        {"input_base64", hash::base64_encode(std::span(bytes.data(), bytes.size()))}};

    const auto r = http_post_json(url_, url_.join("convert"), request.dump(), {}, cfg_.timeout);
    if (!r.transported()) {
      throw BackendFailure(stage, (r.timed_out ? "timeout: " : "transport error: ") + r.error);
    }
    if (r.status != 200) {
      throw BackendFailure(stage, "HTTP " + std::to_string(r.status) + " from " + url_.str());
    }
    std::string decoded;
    try {
      decoded = hash::base64_decode(
          nlohmann::json::parse(r.body).at("output_base64").get<std::string>());
    } catch (const std::exception& e) {
      throw BackendFailure(stage, std::string("malformed /convert response: ") + e.what());
    }
    if (decoded.empty()) throw OutputMissing(stage, "server returned an empty file");
    write_file_bytes(out, decoded);
  }

 private:
  HttpBackendConfig cfg_;
  Url url_;
};

}  // namespace

ConverterPtr make_http_backend(HttpBackendConfig config) {
  return std::make_shared<HttpBackend>(std::move(config));
}

}  // namespace mate::experts
