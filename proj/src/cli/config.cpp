#include "mate/cli/config.hpp"

#include <fstream>
#include <sstream>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include "mate/classifier/model_io.hpp"
#include "mate/core/http.hpp"
#include "mate/core/text.hpp"
#include "mate/eval/fixture.hpp"
#include "mate/experts/command_backend.hpp"
#include "mate/experts/http_backend.hpp"
#include "mate/experts/stub_backend.hpp"
#include "mate/interpreter/llm_backend.hpp"
#include "mate/interpreter/native_backend.hpp"

namespace fs = std::filesystem;
namespace pt = boost::property_tree;

namespace mate::cli {

namespace {

template <typename T>
T get(const pt::ptree& tree, const std::string& key, T fallback) {
  try {
    return tree.get<T>(key, fallback);
  } catch (const pt::ptree_bad_data&) {
    throw ConfigError("bad value for '" + key + "': " + tree.get<std::string>(key, ""));
  }
}

fs::path resolve(const fs::path& base, const std::string& p) {
  fs::path path(p);
  return path.is_relative() ? (base / path).lexically_normal() : path;
}

void check_url(const std::string& what, const std::string& url) {
  try {
    Url::parse(url);
  } catch (const InvalidUrl& e) {
    throw ConfigError(what + ": " + e.what());
  }
}

std::pair<std::string, std::string> split_binding(const std::string& binding) {
  const auto colon = binding.find(':');
  std::string kind = text::to_lower(text::trim(binding.substr(0, colon)));
  std::string arg = colon == std::string::npos ? "" : std::string(text::trim(binding.substr(colon + 1)));
  return {kind, arg};
}

}  // namespace

Config parse_config(const std::string& ini_text, const fs::path& base_dir) {
  pt::ptree tree;
  try {
    std::istringstream in(ini_text);
    pt::read_ini(in, tree);
  } catch (const pt::ini_parser_error& e) {
    throw ConfigError(std::string("config syntax error: ") + e.what());
  }

  Config c;
  auto& ip = c.interpreter;
  ip.backend = text::to_lower(get<std::string>(tree, "interpreter.backend", ip.backend));
  if (auto m = tree.get_optional<std::string>("interpreter.model")) ip.model = resolve(base_dir, *m);
  ip.endpoint = get<std::string>(tree, "interpreter.endpoint", "");
  ip.model_name = get<std::string>(tree, "interpreter.model_name", "");
  ip.api_key_env = get<std::string>(tree, "interpreter.api_key_env", ip.api_key_env);
  ip.temperature = get<double>(tree, "interpreter.temperature", ip.temperature);
  ip.max_retries = get<int>(tree, "interpreter.max_retries", ip.max_retries);
  ip.timeout_s = get<int>(tree, "interpreter.timeout_s", ip.timeout_s);
  ip.max_in_flight = get<std::size_t>(tree, "interpreter.max_in_flight", ip.max_in_flight);

  if (ip.backend == "native") {
    if (ip.model.empty()) throw ConfigError("interpreter.model is required for the native backend");
    if (!fs::is_regular_file(ip.model)) throw ConfigError("model file not found: " + ip.model.string());
  } else if (ip.backend == "llm") {
    check_url("interpreter.endpoint", ip.endpoint);
    if (ip.model_name.empty()) throw ConfigError("interpreter.model_name is required for the llm backend");
  } else if (ip.backend == "remote") {
    check_url("interpreter.endpoint", ip.endpoint);
  } else if (ip.backend != "keyword") {
    throw ConfigError("unknown interpreter backend '" + ip.backend + "'");
  }
  if (ip.max_retries < 0 || ip.timeout_s <= 0 || ip.max_in_flight == 0) {
    throw ConfigError("interpreter limits must be positive");
  }

  auto& cv = c.converters;
  const std::string dflt = get<std::string>(tree, "converters.default", "stub");
  for (auto s : experts::kAllStages) {
    cv.bindings[s] = get<std::string>(tree, "converters." + std::string(experts::to_string(s)), dflt);
  }
  cv.timeout_s = get<int>(tree, "converters.timeout_s", cv.timeout_s);
  cv.max_processes = get<std::size_t>(tree, "converters.max_processes", cv.max_processes);
  for (const auto& [stage, binding] : cv.bindings) {
    const auto [kind, arg] = split_binding(binding);
    const std::string where = "converters." + std::string(experts::to_string(stage));
    if (kind == "stub") continue;
    if (kind == "http") {
      check_url(where, arg);
    } else if (kind == "command") {
      if (arg.find("{input}") == std::string::npos || arg.find("{output}") == std::string::npos) {
        throw ConfigError(where + ": command template needs {input} and {output}");
      }
    } else {
      throw ConfigError(where + ": binding must be stub, command: <template> or http: <url>");
    }
  }

  c.output_root = resolve(base_dir, get<std::string>(tree, "output.root", "."));
  if (auto cands = tree.get_optional<std::string>("output.candidates")) {
    c.output_policy.candidates = text::split_list(*cands);
    if (c.output_policy.candidates.empty()) throw ConfigError("output.candidates is empty");
  }
  c.output_policy.fallback = get<std::string>(tree, "output.fallback", c.output_policy.fallback);
  c.menu_after = get<std::size_t>(tree, "session.menu_after", c.menu_after);
  c.keep_intermediates = get<bool>(tree, "session.keep_intermediates", c.keep_intermediates);
  return c;
}

Config load_config(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str(), fs::absolute(path).parent_path());
}

interpreter::BackendPtr build_interpreter(const Config& config) {
  const auto& ip = config.interpreter;
  try {
    if (ip.backend == "native") {
      auto model = std::make_shared<const classifier::NativeModel>(classifier::load_model(ip.model));
      return interpreter::make_native_backend(std::move(model));
    }
    if (ip.backend == "keyword") return eval::make_keyword_backend();

    interpreter::RetryPolicy retry;
    retry.max_retries = ip.max_retries;
    if (ip.backend == "llm") {
      interpreter::LlmBackendConfig cfg;
      cfg.endpoint = ip.endpoint;
      cfg.model_name = ip.model_name;
      cfg.api_key_env = ip.api_key_env;
      cfg.temperature = ip.temperature;
      cfg.retry = retry;
      cfg.timeout = std::chrono::seconds(ip.timeout_s);
      cfg.max_in_flight = ip.max_in_flight;
      return interpreter::make_llm_backend(cfg);
    }
    interpreter::RemoteClassifierConfig cfg;
    cfg.endpoint = ip.endpoint;
    cfg.retry = retry;
    cfg.timeout = std::chrono::seconds(ip.timeout_s);
    cfg.max_in_flight = ip.max_in_flight;
    return interpreter::make_remote_classifier_backend(cfg);
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception& e) {
    throw ConfigError("cannot build interpreter backend: " + std::string(e.what()));
  }
}

experts::ConverterSet build_converters(const Config& config) {
  const auto& cv = config.converters;
  experts::ConverterSet set;
  auto stub = std::make_shared<const experts::StubBackend>();
  std::map<std::string, experts::ConverterPtr> http_by_url;
  experts::CommandBackendConfig commands;
  commands.max_processes = cv.max_processes;

  for (const auto& [stage, binding] : cv.bindings) {
    const auto [kind, arg] = split_binding(binding);
    if (kind == "stub") {
      set.bind(stage, stub);
    } else if (kind == "http") {
      auto& backend = http_by_url[arg];
      if (!backend) {
        experts::HttpBackendConfig hc;
        hc.endpoint = arg;
        hc.timeout = std::chrono::seconds(cv.timeout_s);
        backend = experts::make_http_backend(hc);
      }
      set.bind(stage, backend);
    } else {
      commands.templates[stage] = arg;
    }
  }
  if (!commands.templates.empty()) {
    auto cmd = experts::make_command_backend(commands);
    for (const auto& [stage, _] : commands.templates) set.bind(stage, cmd);
  }
  return set;
}

}  // namespace mate::cli
