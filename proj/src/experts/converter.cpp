#include "mate/experts/converter.hpp"

#include <system_error>

namespace fs = std::filesystem;

namespace mate::experts {

std::string_view to_string(BackendKind k) {
  switch (k) {
    case BackendKind::Stub: return "stub";
    case BackendKind::Command: return "command";
    case BackendKind::Http: return "http";
  }
  return "?";
}

FileArtifact convert(const ConverterBackend& backend, StageId stage, const FileArtifact& input,
                     const fs::path& out) {
  if (!backend.supports(stage)) {
    throw UnsupportedStage(stage, std::string(to_string(backend.kind())) +
                                      " backend does not implement this stage");
  }
  const auto in_kind = kind_of_extension(input.extension);
  if (!in_kind || !stage_accepts(stage, *in_kind)) {
    throw KindMismatch(stage, "cannot consume '." + input.extension + "' input (expects " +
                                  std::string(to_string(signature(stage).input)) + ")");
  }
  const auto want_ext = canonical_extension(signature(stage).output);
  if (extension_of(out) != want_ext) {
    throw KindMismatch(stage, "output path must end in ." + std::string(want_ext));
  }

  backend.produce(stage, input, out);

  std::error_code ec;
  const auto size = fs::file_size(out, ec);
  if (ec || size == 0) {
    throw OutputMissing(stage, "backend produced no output at " + out.string());
  }
  return FileArtifact{out, std::string(want_ext), size};
}

ConverterSet ConverterSet::uniform(const ConverterPtr& backend) {
  ConverterSet set;
  for (StageId s : kAllStages) {
    if (backend->supports(s)) set.bind(s, backend);
  }
  return set;
}

void ConverterSet::bind(StageId stage, ConverterPtr backend) {
  bindings_[stage] = std::move(backend);
}

const ConverterBackend* ConverterSet::find(StageId stage) const {
  auto it = bindings_.find(stage);
  return it == bindings_.end() ? nullptr : it->second.get();
}

}  // namespace mate::experts
