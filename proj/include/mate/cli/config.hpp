#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>

#include "mate/experts/converter.hpp"
#include "mate/interpreter/backend.hpp"
#include "mate/orchestrator/output_dir.hpp"
#include "mate/orchestrator/session.hpp"

namespace mate::cli {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct InterpreterSettings {
  std::string backend = "native";  // native | llm | remote | keyword
  std::filesystem::path model;     // native
  std::string endpoint;            // llm, remote
  std::string model_name;          // llm
  std::string api_key_env = "MATE_LLM_API_KEY";
  double temperature = 0.0;
  int max_retries = 2;
  int timeout_s = 60;
  std::size_t max_in_flight = 4;
};

struct ConverterSettings {
  /// Per-stage binding text: "stub", "command: <template>" or "http: <url>".
  std::map<experts::StageId, std::string> bindings;
  int timeout_s = 120;
  std::size_t max_processes = 2;
};

/// INI file:
///   [interpreter] backend, model, endpoint, model_name, api_key_env, temperature,
///                 max_retries, timeout_s, max_in_flight
///   [converters]  default, TTS, STT, ITT, TTI, TEXTX, ADEMUX, timeout_s, max_processes
///   [output]      root, candidates (comma list), fallback
///   [session]     menu_after, keep_intermediates
/// Relative paths are taken relative to the config file.
struct Config {
  InterpreterSettings interpreter;
  ConverterSettings converters;
  std::filesystem::path output_root = ".";
  orchestrator::OutputDirPolicy output_policy;
  std::size_t menu_after = orchestrator::kDefaultMenuAfter;
  bool keep_intermediates = false;
};

/// Parses and validates (model file exists, URLs well-formed). Throws ConfigError.
Config load_config(const std::filesystem::path& path);
Config parse_config(const std::string& ini_text, const std::filesystem::path& base_dir);

/// Throws ConfigError when the backend cannot be built (e.g. unreadable model).
interpreter::BackendPtr build_interpreter(const Config& config);
experts::ConverterSet build_converters(const Config& config);

}  // namespace mate::cli
