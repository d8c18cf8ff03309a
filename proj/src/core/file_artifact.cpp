#include "mate/core/file_artifact.hpp"

#include <fstream>
#include <iterator>

#include "mate/core/text.hpp"

namespace fs = std::filesystem;

namespace mate {

std::string extension_of(const fs::path& path) {
  const std::string name = path.filename().string();
  const auto dot = name.rfind('.');
  if (dot == std::string::npos) return {};
  return text::to_lower(std::string_view(name).substr(dot + 1));
}

FileArtifact FileArtifact::from_path(const fs::path& path) {
  FileArtifact a;
  a.path = path;
  a.extension = extension_of(path);
  a.byte_size = fs::file_size(path);
  return a;
}

UserRequest::UserRequest(std::string prompt_text, std::optional<FileArtifact> attached)
    : prompt_(std::move(prompt_text)), attached_(std::move(attached)) {
  if (text::trim(prompt_).empty()) throw InvalidRequest("prompt is empty");
}

std::vector<unsigned char> read_file_bytes(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_file_bytes(const fs::path& path, std::string_view bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw std::runtime_error("short write to " + path.string());
}

}  // namespace mate
