#pragma once

#include <filesystem>
#include <span>
#include <stdexcept>
#include <string>

#include "mate/core/file_artifact.hpp"
#include "mate/experts/converter.hpp"

namespace mate::experts {

/// A pipeline stage failed; carries the stage and the backend's diagnostics.
class StageFailure : public std::runtime_error {
 public:
  StageFailure(StageId stage, std::string diagnostics)
      : std::runtime_error("stage " + std::string(to_string(stage)) + " failed: " + diagnostics),
        stage_(stage),
        diagnostics_(std::move(diagnostics)) {}
  StageId stage() const noexcept { return stage_; }
  const std::string& diagnostics() const noexcept { return diagnostics_; }

 private:
  StageId stage_;
  std::string diagnostics_;
};

class IncompatibleChain : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Runs `stages` left to right, each output feeding the next. Outputs are written to
/// `workdir` as <input-stem>.<n>_<STAGE>.<ext>; the last one is returned. On failure every
/// file written by this call is removed and StageFailure is thrown.
FileArtifact run_pipeline(std::span<const StageId> stages, const FileArtifact& input,
                          const ConverterSet& converters, const std::filesystem::path& workdir);

}  // namespace mate::experts
