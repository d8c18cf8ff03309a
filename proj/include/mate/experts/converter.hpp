#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>

#include "mate/core/file_artifact.hpp"
#include "mate/experts/stage.hpp"

namespace mate::experts {

class ConversionError : public std::runtime_error {
 public:
  ConversionError(StageId stage, const std::string& what)
      : std::runtime_error(std::string(to_string(stage)) + ": " + what), stage_(stage) {}
  StageId stage() const noexcept { return stage_; }

 private:
  StageId stage_;
};

class UnsupportedStage : public ConversionError {
 public:
  using ConversionError::ConversionError;
};
class BackendFailure : public ConversionError {
 public:
  using ConversionError::ConversionError;
};
class SpawnFailure : public BackendFailure {
 public:
  using BackendFailure::BackendFailure;
};
class OutputMissing : public ConversionError {
 public:
  using ConversionError::ConversionError;
};
class KindMismatch : public ConversionError {
 public:
  using ConversionError::ConversionError;
};

enum class BackendKind { Stub, Command, Http };
std::string_view to_string(BackendKind k);

/// Performs single conversion stages. `produce` writes exactly one file at `out`;
/// implementations must tolerate concurrent calls.
class ConverterBackend {
 public:
  virtual ~ConverterBackend() = default;
  virtual BackendKind kind() const = 0;
  virtual bool supports(StageId stage) const = 0;
  virtual void produce(StageId stage, const FileArtifact& input,
                       const std::filesystem::path& out) const = 0;
};

using ConverterPtr = std::shared_ptr<const ConverterBackend>;

/// Checked conversion: support, input kind, output extension, and a non-empty result file.
FileArtifact convert(const ConverterBackend& backend, StageId stage, const FileArtifact& input,
                     const std::filesystem::path& out);

/// Stage -> backend bindings.
class ConverterSet {
 public:
  ConverterSet() = default;
  /// Binds every stage the backend supports.
  static ConverterSet uniform(const ConverterPtr& backend);

  void bind(StageId stage, ConverterPtr backend);
  const ConverterBackend* find(StageId stage) const;

 private:
  std::map<StageId, ConverterPtr> bindings_;
};

}  // namespace mate::experts
