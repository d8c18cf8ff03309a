#include "mate/experts/command_backend.hpp"

#include <fcntl.h>
#include <spawn.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cstring>
#include <fstream>
#include <semaphore>
#include <sstream>

#include "mate/core/text.hpp"

extern char** environ;

namespace fs = std::filesystem;

namespace mate::experts {

std::vector<std::string> expand_command(const std::string& tmpl, const std::string& input,
                                        const std::string& output) {
  std::vector<std::string> argv;
  std::istringstream in(tmpl);
  std::string tok;
  while (in >> tok) {
    tok = text::replace_all(std::move(tok), "{input}", input);
    tok = text::replace_all(std::move(tok), "{output}", output);
    argv.push_back(std::move(tok));
  }
  return argv;
}

namespace {

std::string read_tail(const fs::path& p, std::size_t max_bytes = 500) {
  std::ifstream in(p, std::ios::binary);
  std::string s((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (s.size() > max_bytes) s = "..." + s.substr(s.size() - max_bytes);
  return std::string(text::trim(s));
}

class CommandBackend final : public ConverterBackend {
 public:
  explicit CommandBackend(CommandBackendConfig cfg)
      : cfg_(std::move(cfg)),
        slots_(static_cast<std::ptrdiff_t>(std::max<std::size_t>(1, cfg_.max_processes))) {
    for (const auto& [stage, tmpl] : cfg_.templates) {
      if (tmpl.find("{input}") == std::string::npos || tmpl.find("{output}") == std::string::npos) {
        throw std::invalid_argument("command template for " + std::string(to_string(stage)) +
                                    " must contain {input} and {output}");
      }
    }
  }

  BackendKind kind() const override { return BackendKind::Command; }
  bool supports(StageId stage) const override { return cfg_.templates.contains(stage); }

  void produce(StageId stage, const FileArtifact& input, const fs::path& out) const override {
    const auto argv_strings =
        expand_command(cfg_.templates.at(stage), input.path.string(), out.string());
    if (argv_strings.empty()) throw SpawnFailure(stage, "empty command");
    std::vector<char*> argv;
    for (const auto& a : argv_strings) argv.push_back(const_cast<char*>(a.c_str()));
    argv.push_back(nullptr);

    // Child stdout is discarded; stderr is captured next to the output for diagnostics.
    const fs::path err_path = out.string() + ".stderr";
    posix_spawn_file_actions_t actions;
    posix_spawn_file_actions_init(&actions);
    posix_spawn_file_actions_addopen(&actions, STDIN_FILENO, "/dev/null", O_RDONLY, 0);
    posix_spawn_file_actions_addopen(&actions, STDOUT_FILENO, "/dev/null", O_WRONLY, 0);
    posix_spawn_file_actions_addopen(&actions, STDERR_FILENO, err_path.c_str(),
                                     O_WRONLY | O_CREAT | O_TRUNC, 0644);

    slots_.acquire();
    pid_t pid = 0;
    const int rc = posix_spawnp(&pid, argv[0], &actions, nullptr, argv.data(), environ);
    posix_spawn_file_actions_destroy(&actions);
    int status = 0;
    if (rc == 0) {
      while (waitpid(pid, &status, 0) < 0 && errno == EINTR) {
      }
    }
    slots_.release();

    std::string diag = read_tail(err_path);
    std::error_code ec;
    fs::remove(err_path, ec);

    if (rc != 0) {
      throw SpawnFailure(stage, "cannot start '" + argv_strings[0] + "': " + std::strerror(rc));
    }
    if (WIFEXITED(status) && WEXITSTATUS(status) == 127 && !fs::exists(out)) {
      throw SpawnFailure(stage, "cannot start '" + argv_strings[0] + "' (exit 127)" +
                                    (diag.empty() ? "" : ": " + diag));
    }
    if (!WIFEXITED(status) || WEXITSTATUS(status) != 0) {
      std::string why = WIFEXITED(status) ? "exit status " + std::to_string(WEXITSTATUS(status))
                                          : "killed by signal " + std::to_string(WTERMSIG(status));
      throw BackendFailure(stage, "'" + argv_strings[0] + "' failed with " + why +
                                      (diag.empty() ? "" : ": " + diag));
    }
    if (!fs::exists(out)) {
      throw OutputMissing(stage, "'" + argv_strings[0] + "' exited 0 but wrote no " + out.string());
    }
  }

 private:
  CommandBackendConfig cfg_;
  mutable std::counting_semaphore<> slots_;
};

}  // namespace

ConverterPtr make_command_backend(CommandBackendConfig config) {
  return std::make_shared<CommandBackend>(std::move(config));
}

}  // namespace mate::experts
