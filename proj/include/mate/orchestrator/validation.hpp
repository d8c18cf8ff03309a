#pragma once

#include <filesystem>
#include <set>
#include <stdexcept>
#include <string>
#include <variant>

#include "mate/core/file_artifact.hpp"
#include "mate/orchestrator/registry.hpp"

namespace mate::orchestrator {

enum class ValidationErrorKind { MissingFile, EmptyFile, WrongExtension };

/// Carries the expected extension set so the caller can re-prompt.
class ValidationError : public std::runtime_error {
 public:
  ValidationError(ValidationErrorKind kind, std::filesystem::path path, std::set<std::string> expected,
                  const std::string& what)
      : std::runtime_error(what), kind_(kind), path_(std::move(path)), expected_(std::move(expected)) {}

  ValidationErrorKind kind() const noexcept { return kind_; }
  const std::filesystem::path& path() const noexcept { return path_; }
  const std::set<std::string>& expected() const noexcept { return expected_; }

 private:
  ValidationErrorKind kind_;
  std::filesystem::path path_;
  std::set<std::string> expected_;
};

struct StdinText {
  std::string text;
};

using InputSource = std::variant<std::filesystem::path, StdinText>;

/// Checks a file against the expert's accepted inputs (extension match is case-insensitive).
FileArtifact validate_input(const std::filesystem::path& path, const ExpertSpec& spec);

/// Files go through the path overload. Typed text is accepted only when the expert takes
/// stdin; it is then written to a fresh .txt file under `spool_dir`.
FileArtifact validate_input(const InputSource& source, const ExpertSpec& spec,
                            const std::filesystem::path& spool_dir);

}  // namespace mate::orchestrator
