#include "mate/orchestrator/output_dir.hpp"

#include <stdexcept>

namespace fs = std::filesystem;

namespace mate::orchestrator {

fs::path resolve_output_dir(const fs::path& root, const OutputDirPolicy& policy) {
  if (policy.candidates.empty()) throw std::invalid_argument("output-dir policy has no candidates");
  if (!fs::is_directory(root)) {
    throw std::invalid_argument("output root is not a directory: " + root.string());
  }
  const fs::path abs_root = fs::absolute(root).lexically_normal();
  for (const auto& name : policy.candidates) {
    const fs::path candidate = abs_root / name;
    if (fs::is_directory(candidate)) return candidate;
  }
  const fs::path created = abs_root / policy.fallback;
  fs::create_directories(created);
  return created;
}

}  // namespace mate::orchestrator
