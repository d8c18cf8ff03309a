#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mate {

/// Lowercased text after the last dot of the file name; empty if there is none.
std::string extension_of(const std::filesystem::path& path);

/// A file on disk together with its normalized extension and size.
struct FileArtifact {
  std::filesystem::path path;
  std::string extension;
  std::uintmax_t byte_size = 0;

  /// Stats an existing file. Throws std::filesystem::filesystem_error when it is missing.
  static FileArtifact from_path(const std::filesystem::path& path);

  friend bool operator==(const FileArtifact&, const FileArtifact&) = default;
};

class InvalidRequest : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A free-text request with an optional attachment.
class UserRequest {
 public:
  /// Throws InvalidRequest when the prompt is blank.
  explicit UserRequest(std::string prompt_text, std::optional<FileArtifact> attached = {});

  const std::string& prompt_text() const noexcept { return prompt_; }
  const std::optional<FileArtifact>& attached_input() const noexcept { return attached_; }

 private:
  std::string prompt_;
  std::optional<FileArtifact> attached_;
};

std::vector<unsigned char> read_file_bytes(const std::filesystem::path& path);
void write_file_bytes(const std::filesystem::path& path, std::string_view bytes);

}  // namespace mate
