#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace mate::orchestrator {

struct OutputDirPolicy {
  std::vector<std::string> candidates{"agents_output", "agents output", "data", "output"};
  std::string fallback = "agents_output";
};

/// First candidate that exists as a directory directly under root, else root/fallback
/// (created). Always absolute. Throws std::invalid_argument when root is not a directory.
std::filesystem::path resolve_output_dir(const std::filesystem::path& root,
                                         const OutputDirPolicy& policy = {});

}  // namespace mate::orchestrator
