#include "mate/orchestrator/validation.hpp"

#include <fcntl.h>
#include <unistd.h>

#include <system_error>

#include "mate/core/text.hpp"

namespace fs = std::filesystem;

namespace mate::orchestrator {

namespace {

std::set<std::string> file_extensions(const ExpertSpec& spec) {
  auto out = spec.accepted_input_extensions;
  out.erase(std::string(kStdinMarker));
  return out;
}

std::string expected_msg(const ExpertSpec& spec) {
  std::string s = "expected one of: " + spec.describe_inputs();
  if (spec.accepts_stdin()) s += " (or typed text)";
  return s;
}

}  // namespace

FileArtifact validate_input(const fs::path& path, const ExpertSpec& spec) {
  std::error_code ec;
  if (!fs::is_regular_file(path, ec)) {
    throw ValidationError(ValidationErrorKind::MissingFile, path, file_extensions(spec),
                          "file not found: " + path.string() + "; " + expected_msg(spec));
  }
  const auto ext = extension_of(path);
  if (!spec.accepts_extension(ext)) {
    throw ValidationError(ValidationErrorKind::WrongExtension, path, file_extensions(spec),
                          "unsupported file type '" + (ext.empty() ? std::string("(none)") : "." + ext) +
                              "' for " + std::string(to_string(spec.task)) + "; " + expected_msg(spec));
  }
  auto artifact = FileArtifact::from_path(path);
  if (artifact.byte_size == 0) {
    throw ValidationError(ValidationErrorKind::EmptyFile, path, file_extensions(spec),
                          "file is empty: " + path.string());
  }
  return artifact;
}

FileArtifact validate_input(const InputSource& source, const ExpertSpec& spec,
                            const fs::path& spool_dir) {
  if (const auto* p = std::get_if<fs::path>(&source)) return validate_input(*p, spec);

  const auto& typed = std::get<StdinText>(source).text;
  if (!spec.accepts_stdin()) {
    throw ValidationError(ValidationErrorKind::WrongExtension, {}, file_extensions(spec),
                          std::string(to_string(spec.task)) + " needs a file; " + expected_msg(spec));
  }
  if (text::trim(typed).empty()) {
    throw ValidationError(ValidationErrorKind::EmptyFile, {}, file_extensions(spec), "typed input is empty");
  }
  for (int n = 0;; ++n) {
    const fs::path candidate = spool_dir / ("stdin" + (n == 0 ? std::string() : "_" + std::to_string(n)) + ".txt");
    const int fd = ::open(candidate.c_str(), O_WRONLY | O_CREAT | O_EXCL, 0644);
    if (fd < 0) {
      if (errno == EEXIST) continue;
      throw std::system_error(errno, std::generic_category(), "cannot create " + candidate.string());
    }
    ::close(fd);
    write_file_bytes(candidate, typed);
    return FileArtifact::from_path(candidate);
  }
}

}  // namespace mate::orchestrator
