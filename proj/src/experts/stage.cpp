#include "mate/experts/stage.hpp"

#include "mate/core/text.hpp"

namespace mate::experts {

std::string_view to_string(StageId s) {
  switch (s) {
    case StageId::TTS: return "TTS";
    case StageId::STT: return "STT";
    case StageId::ITT: return "ITT";
    case StageId::TTI: return "TTI";
    case StageId::TEXTX: return "TEXTX";
    case StageId::ADEMUX: return "ADEMUX";
  }
  return "?";
}

std::string_view to_string(MediaKind k) {
  switch (k) {
    case MediaKind::Text: return "text";
    case MediaKind::Audio: return "audio";
    case MediaKind::Image: return "image";
    case MediaKind::Video: return "video";
    case MediaKind::Document: return "document";
  }
  return "?";
}

std::optional<StageId> parse_stage(std::string_view code) {
  const auto upper = text::to_upper(text::trim(code));
  for (StageId s : kAllStages) {
    if (upper == to_string(s)) return s;
  }
  return std::nullopt;
}

std::optional<MediaKind> kind_of_extension(std::string_view ext) {
  const auto e = text::to_lower(ext);
  if (e == "txt") return MediaKind::Text;
  if (e == "pdf" || e == "docx") return MediaKind::Document;
  if (e == "mp3" || e == "mpeg" || e == "mpga" || e == "m4a" || e == "wav") return MediaKind::Audio;
  if (e == "mp4" || e == "webm") return MediaKind::Video;
  if (e == "png" || e == "jpeg" || e == "jpg") return MediaKind::Image;
  return std::nullopt;
}

std::string_view canonical_extension(MediaKind k) {
  switch (k) {
    case MediaKind::Text: return "txt";
    case MediaKind::Audio: return "wav";
    case MediaKind::Image: return "png";
    case MediaKind::Video:
    case MediaKind::Document: return "";
  }
  return "";
}

bool stage_accepts(StageId s, MediaKind k) {
  if (s == StageId::TEXTX && k == MediaKind::Text) return true;
  return signature(s).input == k;
}

bool chain_compatible(std::span<const StageId> stages) {
  for (std::size_t i = 0; i + 1 < stages.size(); ++i) {
    if (!stage_accepts(stages[i + 1], signature(stages[i]).output)) return false;
  }
  return true;
}

}  // namespace mate::experts
