#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "mate/core/http.hpp"
#include "mate/interpreter/backend.hpp"

namespace mate::interpreter {

/// System instruction listing the ten label codes, plus a slot for the user's request.
struct LlmPromptTemplate {
  std::string system_instruction;

  static LlmPromptTemplate standard();

  /// [{"role":"system",...}, {"role":"user", content: prompt}]
  nlohmann::json render_messages(std::string_view user_prompt) const;
};

/// Transport-level retries only; HTTP 5xx, 429 and connection errors are retried.
struct RetryPolicy {
  int max_retries = 2;
  std::chrono::milliseconds initial_backoff{250};
  double multiplier = 2.0;
  std::chrono::milliseconds max_backoff{4000};

  std::chrono::milliseconds backoff_for(int retry) const;
};

inline constexpr std::size_t kDefaultMaxInFlight = 4;
inline constexpr std::string_view kDefaultApiKeyEnv = "MATE_LLM_API_KEY";

struct LlmBackendConfig {
  std::string endpoint;  // base URL, e.g. https://api.openai.com/v1
  std::string model_name;
  LlmPromptTemplate prompt_template = LlmPromptTemplate::standard();
  RetryPolicy retry;
  double temperature = 0.0;
  std::string api_key_env = std::string(kDefaultApiKeyEnv);
  std::optional<std::string> api_key;  // overrides the environment variable
  std::chrono::milliseconds timeout{60000};
  std::size_t max_in_flight = kDefaultMaxInFlight;
};

/// POSTs chat-completion requests to <endpoint>/chat/completions and returns
/// choices[0].message.content. Throws InvalidUrl / std::invalid_argument on bad config.
BackendPtr make_llm_backend(const LlmBackendConfig& config);

struct RemoteClassifierConfig {
  std::string endpoint;
  RetryPolicy retry;
  std::chrono::milliseconds timeout{30000};
  std::size_t max_in_flight = kDefaultMaxInFlight;
};

/// POSTs {"prompt": ...} to <endpoint>/classify and returns the "label" field.
BackendPtr make_remote_classifier_backend(const RemoteClassifierConfig& config);

}  // namespace mate::interpreter
