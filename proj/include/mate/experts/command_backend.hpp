#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "mate/experts/converter.hpp"

namespace mate::experts {

inline constexpr std::size_t kDefaultMaxProcesses = 2;

struct CommandBackendConfig {
  /// Whitespace-separated argv templates with {input} and {output} placeholders,
  /// e.g. "whisper-cli --file {input} --out {output}". No shell is involved.
  std::map<StageId, std::string> templates;
  std::size_t max_processes = kDefaultMaxProcesses;
};

/// Expands a template into argv.
std::vector<std::string> expand_command(const std::string& tmpl, const std::string& input,
                                        const std::string& output);

/// Throws std::invalid_argument when a template lacks a placeholder.
ConverterPtr make_command_backend(CommandBackendConfig config);

}  // namespace mate::experts
