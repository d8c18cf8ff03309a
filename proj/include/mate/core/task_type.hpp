#pragma once

#include <array>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace mate {

/// Closed label space of modality-conversion requests.
enum class TaskType {
  TTS,  ///< text to speech
  STT,  ///< speech to text
  ITT,  ///< image to text
  ITA,  ///< image to audio
  VTT,  ///< video to text
  TTI,  ///< text to image
  ATI,  ///< audio to image
  TTV,  ///< text to video
  ATV,  ///< audio to video
  UNK,  ///< unclassifiable request
};

inline constexpr std::array<TaskType, 10> kAllTaskTypes = {
    TaskType::TTS, TaskType::STT, TaskType::ITT, TaskType::ITA, TaskType::VTT,
    TaskType::TTI, TaskType::ATI, TaskType::TTV, TaskType::ATV, TaskType::UNK};

constexpr std::string_view to_string(TaskType t) {
  switch (t) {
    case TaskType::TTS: return "TTS";
    case TaskType::STT: return "STT";
    case TaskType::ITT: return "ITT";
    case TaskType::ITA: return "ITA";
    case TaskType::VTT: return "VTT";
    case TaskType::TTI: return "TTI";
    case TaskType::ATI: return "ATI";
    case TaskType::TTV: return "TTV";
    case TaskType::ATV: return "ATV";
    case TaskType::UNK: return "UNK";
  }
  return "UNK";
}

inline std::ostream& operator<<(std::ostream& os, TaskType t) { return os << to_string(t); }

/// Position of t in kAllTaskTypes.
constexpr std::size_t index_of(TaskType t) { return static_cast<std::size_t>(t); }

/// Raised when a string is not one of the ten label codes. Carries the raw text.
class ParseFailure : public std::runtime_error {
 public:
  explicit ParseFailure(std::string raw)
      : std::runtime_error("not a task label: \"" + raw + "\""), raw_(std::move(raw)) {}
  const std::string& raw() const noexcept { return raw_; }

 private:
  std::string raw_;
};

/// Strict label parsing: trim surrounding whitespace, uppercase, then exact code match.
/// "TTS." or "text to speech" are not labels.
std::optional<TaskType> try_parse_task_label(std::string_view raw);

/// As try_parse_task_label, but throws ParseFailure.
TaskType parse_task_label(std::string_view raw);

/// The seven conversions that have an expert: TTS, TTI, ATI, STT, ITT, ITA, VTT.
constexpr bool is_supported(TaskType t) {
  switch (t) {
    case TaskType::TTS:
    case TaskType::TTI:
    case TaskType::ATI:
    case TaskType::STT:
    case TaskType::ITT:
    case TaskType::ITA:
    case TaskType::VTT:
      return true;
    case TaskType::TTV:
    case TaskType::ATV:
    case TaskType::UNK:
      return false;
  }
  return false;
}

}  // namespace mate
