#pragma once

#include <array>
#include <optional>
#include <ostream>
#include <span>
#include <string_view>

namespace mate::experts {

/// Atomic converters. TEXTX extracts text from documents; ADEMUX pulls the audio track out of a video.
enum class StageId { TTS, STT, ITT, TTI, TEXTX, ADEMUX };

inline constexpr std::array<StageId, 6> kAllStages = {StageId::TTS,   StageId::STT,
                                                      StageId::ITT,   StageId::TTI,
                                                      StageId::TEXTX, StageId::ADEMUX};

enum class MediaKind { Text, Audio, Image, Video, Document };

struct StageSignature {
  MediaKind input;
  MediaKind output;
};

constexpr StageSignature signature(StageId s) {
  switch (s) {
    case StageId::TTS: return {MediaKind::Text, MediaKind::Audio};
    case StageId::STT: return {MediaKind::Audio, MediaKind::Text};
    case StageId::ITT: return {MediaKind::Image, MediaKind::Text};
    case StageId::TTI: return {MediaKind::Text, MediaKind::Image};
    case StageId::TEXTX: return {MediaKind::Document, MediaKind::Text};
    case StageId::ADEMUX: return {MediaKind::Video, MediaKind::Audio};
  }
  return {MediaKind::Text, MediaKind::Text};
}

std::string_view to_string(StageId s);
std::string_view to_string(MediaKind k);
std::optional<StageId> parse_stage(std::string_view code);
inline std::ostream& operator<<(std::ostream& os, StageId s) { return os << to_string(s); }

/// txt -> Text, pdf/docx -> Document, mp3/mpeg/mpga/m4a/wav -> Audio, mp4/webm -> Video,
/// png/jpeg/jpg -> Image.
std::optional<MediaKind> kind_of_extension(std::string_view ext);

/// txt, wav or png for the three producible kinds; empty otherwise.
std::string_view canonical_extension(MediaKind k);

/// Whether `s` can consume `k`. TEXTX also takes plain text, passing it through extraction.
bool stage_accepts(StageId s, MediaKind k);

/// Each stage's output is consumable by the next.
bool chain_compatible(std::span<const StageId> stages);

}  // namespace mate::experts
