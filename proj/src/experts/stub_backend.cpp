#include "mate/experts/stub_backend.hpp"

#include <zlib.h>

#include <array>
#include <cstdint>

namespace mate::experts {

namespace stub {

namespace {

void put_u32le(std::string& s, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) s.push_back(static_cast<char>((v >> (8 * i)) & 0xFF));
}
void put_u16le(std::string& s, std::uint16_t v) {
  s.push_back(static_cast<char>(v & 0xFF));
  s.push_back(static_cast<char>(v >> 8));
}
void put_u32be(std::string& s, std::uint32_t v) {
  for (int i = 3; i >= 0; --i) s.push_back(static_cast<char>((v >> (8 * i)) & 0xFF));
}

void put_png_chunk(std::string& png, std::string_view type, std::string_view data) {
  put_u32be(png, static_cast<std::uint32_t>(data.size()));
  std::string body(type);
  body.append(data);
  png.append(body);
  const auto crc = crc32(0L, reinterpret_cast<const Bytef*>(body.data()),
                         static_cast<uInt>(body.size()));
  put_u32be(png, static_cast<std::uint32_t>(crc));
}

}  // namespace

std::string text_output(StageId stage, const hash::Digest& input_digest) {
  return "STUB:" + std::string(to_string(stage)) + ":" +
         hash::to_hex(std::span(input_digest).first(8));
}

std::string silence_wav() {
  constexpr std::uint32_t kRate = 8000;
  constexpr std::uint16_t kChannels = 1;
  constexpr std::uint16_t kBits = 16;
  constexpr std::uint32_t kDataBytes = kRate * kChannels * kBits / 8;
  std::string wav;
  wav.reserve(44 + kDataBytes);
  wav.append("RIFF");
  put_u32le(wav, 36 + kDataBytes);
  wav.append("WAVE");
  wav.append("fmt ");
  put_u32le(wav, 16);
  put_u16le(wav, 1);  // PCM
  put_u16le(wav, kChannels);
  put_u32le(wav, kRate);
  put_u32le(wav, kRate * kChannels * kBits / 8);
  put_u16le(wav, kChannels * kBits / 8);
  put_u16le(wav, kBits);
  wav.append("data");
  put_u32le(wav, kDataBytes);
  wav.append(kDataBytes, '\0');
  return wav;
}

std::string pixel_png(const hash::Digest& input_digest) {
  std::string png("\x89PNG\r\n\x1a\n", 8);

  std::string ihdr;
  put_u32be(ihdr, 1);  // width
  put_u32be(ihdr, 1);  // height
  ihdr.push_back(8);   // bit depth
  ihdr.push_back(2);   // truecolour RGB
  ihdr.append(3, '\0');
  put_png_chunk(png, "IHDR", ihdr);

  // One scanline: filter byte 0, then R, G, B.
  const std::array<Bytef, 4> raw = {0, input_digest[0], input_digest[1], input_digest[2]};
  std::array<Bytef, 64> packed{};
  uLongf packed_len = packed.size();
  compress2(packed.data(), &packed_len, raw.data(), raw.size(), Z_BEST_COMPRESSION);
  put_png_chunk(png, "IDAT",
                std::string_view(reinterpret_cast<const char*>(packed.data()), packed_len));
  put_png_chunk(png, "IEND", {});
  return png;
}

}  // namespace stub

void StubBackend::produce(StageId stage, const FileArtifact& input,
                          const std::filesystem::path& out) const {
  const auto digest = hash::sha256_file(input.path);
  switch (signature(stage).output) {
    case MediaKind::Text: write_file_bytes(out, stub::text_output(stage, digest)); break;
    case MediaKind::Audio: write_file_bytes(out, stub::silence_wav()); break;
    case MediaKind::Image: write_file_bytes(out, stub::pixel_png(digest)); break;
    case MediaKind::Video:
    case MediaKind::Document:
      throw UnsupportedStage(stage, "stub cannot produce " +
                                        std::string(to_string(signature(stage).output)));
  }
  std::lock_guard lock(mu_);
  log_.push_back({stage, input.path, out});
}

std::vector<StageInvocation> StubBackend::invocations() const {
  std::lock_guard lock(mu_);
  return log_;
}

std::vector<StageId> StubBackend::invoked_stages() const {
  std::lock_guard lock(mu_);
  std::vector<StageId> out;
  for (const auto& i : log_) out.push_back(i.stage);
  return out;
}

void StubBackend::clear_log() {
  std::lock_guard lock(mu_);
  log_.clear();
}

}  // namespace mate::experts
