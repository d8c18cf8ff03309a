#pragma once

#include <chrono>
#include <filesystem>
#include <functional>
#include <string>

#include "mate/core/file_artifact.hpp"
#include "mate/experts/converter.hpp"
#include "mate/orchestrator/registry.hpp"

namespace mate::orchestrator {

using Clock = std::function<std::chrono::system_clock::time_point()>;

struct ExecuteOptions {
  bool keep_intermediates = false;
  Clock clock = [] { return std::chrono::system_clock::now(); };
};

/// <stem>_<TASK>_<YYYYmmddTHHMMSSZ>.<ext>
std::string output_file_name(std::string_view stem, TaskType task,
                             std::chrono::system_clock::time_point when, std::string_view ext);

/// Creates an empty file at output_dir/output_file_name(...), appending _1, _2, ... to the
/// stem while the name is taken. Creation is exclusive, so concurrent callers never share.
std::filesystem::path reserve_output_path(const std::filesystem::path& output_dir,
                                          std::string_view stem, TaskType task,
                                          std::chrono::system_clock::time_point when,
                                          std::string_view ext);

/// Runs the expert's pipeline on a validated input. Intermediates live in a scratch
/// directory inside output_dir, removed afterwards unless keep_intermediates is set.
/// Nothing is written outside output_dir. Throws experts::StageFailure, leaving no final file.
FileArtifact execute(const ExpertSpec& spec, const FileArtifact& input,
                     const experts::ConverterSet& converters,
                     const std::filesystem::path& output_dir, const ExecuteOptions& options = {});

/// Scratch directory under output_dir with a name no other caller holds.
std::filesystem::path make_scratch_dir(const std::filesystem::path& output_dir);

}  // namespace mate::orchestrator
