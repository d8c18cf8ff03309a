#include "mate/interpreter/llm_backend.hpp"

#include <algorithm>
#include <cstdlib>
#include <semaphore>
#include <thread>

#include "mate/core/text.hpp"

namespace mate::interpreter {

using nlohmann::json;

LlmPromptTemplate LlmPromptTemplate::standard() {
  return {
      "You route accessibility requests to a modality conversion. Read the user's request and "
      "answer with exactly one label code from the list below, and nothing else: no "
      "punctuation, no explanation.\n"
      "TTS: turn written text into spoken audio\n"
      "STT: transcribe speech or other audio into text\n"
      "ITT: describe or caption an image in text\n"
      "ITA: describe an image as spoken audio\n"
      "VTT: transcribe or describe a video as text\n"
      "TTI: generate an image from a text description\n"
      "ATI: generate an image from an audio recording\n"
      "TTV: generate a video from text\n"
      "ATV: generate a video from an audio recording\n"
      "UNK: the request is unrelated, unclear, or matches none of the above"};
}

json LlmPromptTemplate::render_messages(std::string_view user_prompt) const {
  return json::array({json{{"role", "system"}, {"content", system_instruction}},
                      json{{"role", "user"}, {"content", std::string(user_prompt)}}});
}

std::chrono::milliseconds RetryPolicy::backoff_for(int retry) const {
  double ms = static_cast<double>(initial_backoff.count());
  for (int i = 0; i < retry; ++i) ms *= multiplier;
  return std::min(max_backoff, std::chrono::milliseconds(static_cast<long long>(ms)));
}

namespace {

bool retryable_status(int status) { return status >= 500 || status == 429; }

std::string clip(std::string_view s, std::size_t n = 200) {
  return s.size() <= n ? std::string(s) : std::string(s.substr(0, n)) + "...";
}

// Shared request loop for both remote backends. Returns the body of the first 200 response.
class RemoteCaller {
 public:
  RemoteCaller(Url base, std::string path, RetryPolicy retry, std::chrono::milliseconds timeout,
               std::size_t max_in_flight)
      : base_(std::move(base)),
        path_(std::move(path)),
        retry_(retry),
        timeout_(timeout),
        slots_(static_cast<std::ptrdiff_t>(std::max<std::size_t>(1, max_in_flight))) {}

  std::string post(const std::string& body, const std::map<std::string, std::string>& headers) const {
    std::string last_error;
    for (int attempt = 0; attempt <= retry_.max_retries; ++attempt) {
      if (attempt > 0) std::this_thread::sleep_for(retry_.backoff_for(attempt - 1));
      HttpResult r;
      {
        slots_.acquire();
        r = http_post_json(base_, path_, body, headers, timeout_);
        slots_.release();
      }
      if (!r.transported()) {
        last_error = r.error;
        continue;
      }
      if (r.status == 200) return std::move(r.body);
      last_error = "HTTP " + std::to_string(r.status) + ": " + clip(r.body);
      if (!retryable_status(r.status)) break;
    }
    throw TransportError(last_error + " (" + base_.origin() + path_ + ")");
  }

  const Url& base() const { return base_; }

 private:
  Url base_;
  std::string path_;
  RetryPolicy retry_;
  std::chrono::milliseconds timeout_;
  mutable std::counting_semaphore<> slots_;
};

class LlmBackend final : public InterpreterBackend {
 public:
  explicit LlmBackend(const LlmBackendConfig& cfg)
      : cfg_(cfg), caller_(make_caller(cfg)) {
    if (cfg_.api_key) {
      api_key_ = *cfg_.api_key;
    } else if (!cfg_.api_key_env.empty()) {
      if (const char* v = std::getenv(cfg_.api_key_env.c_str())) api_key_ = v;
    }
  }

  std::string name() const override { return "llm:" + cfg_.model_name; }

  std::string classify_raw(std::string_view prompt) const override {
    const json request{{"model", cfg_.model_name},
                       {"messages", cfg_.prompt_template.render_messages(prompt)},
                       {"temperature", cfg_.temperature}};
    std::map<std::string, std::string> headers;
    if (!api_key_.empty()) headers["Authorization"] = "Bearer " + api_key_;
    const std::string body = caller_.post(request.dump(), headers);
    try {
      const json resp = json::parse(body);
      return resp.at("choices").at(0).at("message").at("content").get<std::string>();
    } catch (const json::exception& e) {
      throw TransportError(std::string("malformed chat-completion response: ") + e.what());
    }
  }

 private:
  static RemoteCaller make_caller(const LlmBackendConfig& cfg) {
    if (cfg.model_name.empty()) throw std::invalid_argument("LLM backend needs a model name");
    Url url = Url::parse(cfg.endpoint);
    std::string path = url.path;
    if (!path.ends_with("/chat/completions")) path = url.join("chat/completions");
    return RemoteCaller(std::move(url), std::move(path), cfg.retry, cfg.timeout, cfg.max_in_flight);
  }

  LlmBackendConfig cfg_;
  RemoteCaller caller_;
  std::string api_key_;
};

class RemoteClassifierBackend final : public InterpreterBackend {
 public:
  explicit RemoteClassifierBackend(const RemoteClassifierConfig& cfg)
      : caller_(make_caller(cfg)) {}

  std::string name() const override { return "remote:" + caller_.base().str(); }

  std::string classify_raw(std::string_view prompt) const override {
    const std::string body = caller_.post(json{{"prompt", std::string(prompt)}}.dump(), {});
    try {
      return json::parse(body).at("label").get<std::string>();
    } catch (const json::exception& e) {
      throw TransportError(std::string("malformed /classify response: ") + e.what());
    }
  }

 private:
  static RemoteCaller make_caller(const RemoteClassifierConfig& cfg) {
    Url url = Url::parse(cfg.endpoint);
    std::string path = url.join("classify");
    return RemoteCaller(std::move(url), std::move(path), cfg.retry, cfg.timeout, cfg.max_in_flight);
  }

  RemoteCaller caller_;
};

}  // namespace

BackendPtr make_llm_backend(const LlmBackendConfig& config) {
  return std::make_shared<LlmBackend>(config);
}

BackendPtr make_remote_classifier_backend(const RemoteClassifierConfig& config) {
  return std::make_shared<RemoteClassifierBackend>(config);
}

}  // namespace mate::interpreter
