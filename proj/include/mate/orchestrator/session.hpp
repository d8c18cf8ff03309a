#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mate/core/file_artifact.hpp"
#include "mate/experts/converter.hpp"
#include "mate/interpreter/backend.hpp"
#include "mate/orchestrator/execute.hpp"
#include "mate/orchestrator/registry.hpp"

namespace mate::orchestrator {

enum class SessionState { AwaitPrompt, AwaitFile, Executing, Done, Failed };
std::string_view to_string(SessionState s);

struct Message {
  enum class Role { User, System };
  Role role;
  std::string text;
};

/// Separates a request from inline input on one line: "read this aloud <<< Hello there".
inline constexpr std::string_view kInlineMarker = "<<<";
inline constexpr std::size_t kDefaultMenuAfter = 5;

struct SessionConfig {
  /// Consecutive re-prompts after which the task menu is appended.
  std::size_t menu_after_reprompts = kDefaultMenuAfter;
  bool keep_intermediates = false;
  /// Relative file paths typed by the user resolve against this directory.
  std::filesystem::path base_dir = std::filesystem::current_path();
  Clock clock = [] { return std::chrono::system_clock::now(); };
};

struct Session {
  SessionState state = SessionState::AwaitPrompt;
  std::optional<TaskType> task;
  std::optional<ExpertSpec> expert;
  std::filesystem::path output_dir;
  std::vector<Message> transcript;
  std::size_t consecutive_reprompts = 0;
  std::optional<FileArtifact> output;

  static Session start(std::filesystem::path output_dir);
  bool finished() const { return state == SessionState::Done || state == SessionState::Failed; }
};

/// Read-only collaborators of a session.
struct StepContext {
  const interpreter::InterpreterBackend& interpreter;
  std::span<const ExpertSpec> registry;
  const experts::ConverterSet& converters;
  SessionConfig config;
};

/// Advances the session by one user message and returns the new state plus the system
/// reply (also appended to the transcript). Faults become states and replies, never
/// exceptions. Throws std::logic_error if the session already finished.
std::pair<Session, std::string> step(Session session, std::string_view user_message,
                                     const StepContext& ctx);

/// The supported-task menu shown after repeated re-prompts.
std::string task_menu(std::span<const ExpertSpec> registry);

}  // namespace mate::orchestrator
