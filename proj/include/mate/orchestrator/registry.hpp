#pragma once

#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mate/core/task_type.hpp"
#include "mate/experts/stage.hpp"

namespace mate::orchestrator {

/// Marker in accepted_input_extensions meaning "typed text is fine".
inline constexpr std::string_view kStdinMarker = "stdin";

struct ExpertSpec {
  TaskType task = TaskType::UNK;
  std::set<std::string> accepted_input_extensions;
  std::string output_extension;
  std::vector<experts::StageId> stages;

  bool accepts_extension(std::string_view ext) const;
  bool accepts_stdin() const { return accepted_input_extensions.contains(std::string(kStdinMarker)); }
  /// Accepted file extensions, without the stdin marker, as ".a, .b".
  std::string describe_inputs() const;

  friend bool operator==(const ExpertSpec&, const ExpertSpec&) = default;
};

/// The seven experts:
///   TTS {txt,pdf,docx,stdin} -> wav            TTI {txt,pdf,docx,stdin} -> png
///   STT {mp3,mp4,mpeg,mpga,m4a,wav,webm} -> txt ITT {png,jpeg,jpg} -> txt
///   ATI (audio set) -> png via [STT, TTI]       ITA {png,jpeg,jpg} -> wav via [ITT, TTS]
///   VTT {mp4,webm} -> txt via [ADEMUX, STT]
const std::vector<ExpertSpec>& default_registry();

class UnsupportedTask : public std::runtime_error {
 public:
  explicit UnsupportedTask(TaskType t)
      : std::runtime_error("no expert handles task " + std::string(to_string(t))), task_(t) {}
  TaskType task() const noexcept { return task_; }

 private:
  TaskType task_;
};

/// The unique expert for t. Throws UnsupportedTask.
const ExpertSpec& route(TaskType t, std::span<const ExpertSpec> registry);

/// Stages actually run for an input: documents get TEXTX and video containers get ADEMUX
/// in front when the expert's first stage cannot read them directly.
std::vector<experts::StageId> plan_stages(const ExpertSpec& spec, std::string_view input_extension);

/// Short human description, e.g. "text to speech".
std::string_view describe(TaskType t);

}  // namespace mate::orchestrator
