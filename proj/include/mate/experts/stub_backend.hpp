#pragma once

#include <filesystem>
#include <mutex>
#include <string>
#include <vector>

#include "mate/core/hash.hpp"
#include "mate/experts/converter.hpp"

namespace mate::experts {

/// Deterministic stand-ins for real models.
///  - STT/ITT/TEXTX write "STUB:<stage>:<hex of the first 8 bytes of SHA-256(input)>"
///  - TTS and ADEMUX write one second of 8 kHz mono 16-bit silence as RIFF/WAVE
///  - TTI writes a 1x1 RGB PNG coloured by the first three digest bytes
namespace stub {
std::string text_output(StageId stage, const hash::Digest& input_digest);
std::string silence_wav();
std::string pixel_png(const hash::Digest& input_digest);
}  // namespace stub

struct StageInvocation {
  StageId stage;
  std::filesystem::path input;
  std::filesystem::path output;
};

class StubBackend final : public ConverterBackend {
 public:
  BackendKind kind() const override { return BackendKind::Stub; }
  bool supports(StageId) const override { return true; }
  void produce(StageId stage, const FileArtifact& input,
               const std::filesystem::path& out) const override;

  std::vector<StageInvocation> invocations() const;
  std::vector<StageId> invoked_stages() const;
  void clear_log();

 private:
  mutable std::mutex mu_;
  mutable std::vector<StageInvocation> log_;
};

}  // namespace mate::experts
