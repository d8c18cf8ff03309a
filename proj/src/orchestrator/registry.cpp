#include "mate/orchestrator/registry.hpp"

#include <algorithm>

#include "mate/core/text.hpp"

namespace mate::orchestrator {

using experts::StageId;

bool ExpertSpec::accepts_extension(std::string_view ext) const {
  const auto e = text::to_lower(ext);
  return e != kStdinMarker && accepted_input_extensions.contains(e);
}

std::string ExpertSpec::describe_inputs() const {
  std::string out;
  for (const auto& e : accepted_input_extensions) {
    if (e == kStdinMarker) continue;
    if (!out.empty()) out += ", ";
    out += "." + e;
  }
  return out;
}

const std::vector<ExpertSpec>& default_registry() {
  static const std::vector<ExpertSpec> registry = [] {
    const std::set<std::string> text_in{"txt", "pdf", "docx", std::string(kStdinMarker)};
    const std::set<std::string> audio_in{"mp3", "mp4", "mpeg", "mpga", "m4a", "wav", "webm"};
    const std::set<std::string> image_in{"png", "jpeg", "jpg"};
    const std::set<std::string> video_in{"mp4", "webm"};
    return std::vector<ExpertSpec>{
        {TaskType::TTS, text_in, "wav", {StageId::TTS}},
        {TaskType::TTI, text_in, "png", {StageId::TTI}},
        {TaskType::STT, audio_in, "txt", {StageId::STT}},
        {TaskType::ITT, image_in, "txt", {StageId::ITT}},
        {TaskType::ATI, audio_in, "png", {StageId::STT, StageId::TTI}},
        {TaskType::ITA, image_in, "wav", {StageId::ITT, StageId::TTS}},
        {TaskType::VTT, video_in, "txt", {StageId::ADEMUX, StageId::STT}},
    };
  }();
  return registry;
}

const ExpertSpec& route(TaskType t, std::span<const ExpertSpec> registry) {
  if (!is_supported(t)) throw UnsupportedTask(t);
  auto it = std::find_if(registry.begin(), registry.end(),
                         [t](const ExpertSpec& s) { return s.task == t; });
  if (it == registry.end()) throw UnsupportedTask(t);
  return *it;
}

std::vector<StageId> plan_stages(const ExpertSpec& spec, std::string_view input_extension) {
  std::vector<StageId> stages = spec.stages;
  if (stages.empty()) return stages;
  const auto kind = experts::kind_of_extension(input_extension);
  if (!kind || experts::stage_accepts(stages.front(), *kind)) return stages;
  if (*kind == experts::MediaKind::Document && experts::stage_accepts(stages.front(), experts::MediaKind::Text)) {
    stages.insert(stages.begin(), StageId::TEXTX);
  } else if (*kind == experts::MediaKind::Video &&
             experts::stage_accepts(stages.front(), experts::MediaKind::Audio)) {
    stages.insert(stages.begin(), StageId::ADEMUX);
  }
  return stages;
}

std::string_view describe(TaskType t) {
  switch (t) {
    case TaskType::TTS: return "text to speech";
    case TaskType::STT: return "speech to text";
    case TaskType::ITT: return "image to text";
    case TaskType::ITA: return "image to audio";
    case TaskType::VTT: return "video to text";
    case TaskType::TTI: return "text to image";
    case TaskType::ATI: return "audio to image";
    case TaskType::TTV: return "text to video";
    case TaskType::ATV: return "audio to video";
    case TaskType::UNK: return "unknown request";
  }
  return "";
}

}  // namespace mate::orchestrator
