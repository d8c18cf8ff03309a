#include "mate/orchestrator/execute.hpp"

#include <fcntl.h>
#include <unistd.h>

#include <atomic>
#include <ctime>
#include <system_error>

#include "mate/experts/pipeline.hpp"

namespace fs = std::filesystem;

namespace mate::orchestrator {

std::string output_file_name(std::string_view stem, TaskType task,
                             std::chrono::system_clock::time_point when, std::string_view ext) {
  const std::time_t t = std::chrono::system_clock::to_time_t(when);
  std::tm utc{};
  gmtime_r(&t, &utc);
  char stamp[32];
  std::strftime(stamp, sizeof stamp, "%Y%m%dT%H%M%SZ", &utc);
  return std::string(stem) + "_" + std::string(to_string(task)) + "_" + stamp + "." + std::string(ext);
}

fs::path reserve_output_path(const fs::path& output_dir, std::string_view stem, TaskType task,
                             std::chrono::system_clock::time_point when, std::string_view ext) {
  for (int n = 0;; ++n) {
    const std::string s = n == 0 ? std::string(stem) : std::string(stem) + "_" + std::to_string(n);
    const fs::path candidate = output_dir / output_file_name(s, task, when, ext);
    const int fd = ::open(candidate.c_str(), O_WRONLY | O_CREAT | O_EXCL, 0644);
    if (fd >= 0) {
      ::close(fd);
      return candidate;
    }
    if (errno != EEXIST) {
      throw std::system_error(errno, std::generic_category(), "cannot create " + candidate.string());
    }
  }
}

fs::path make_scratch_dir(const fs::path& output_dir) {
  static std::atomic<unsigned> counter{0};
  for (;;) {
    const fs::path dir = output_dir / (".mate-work-" + std::to_string(::getpid()) + "-" +
                                       std::to_string(counter.fetch_add(1)));
    if (fs::create_directory(dir)) return dir;
  }
}

FileArtifact execute(const ExpertSpec& spec, const FileArtifact& input,
                     const experts::ConverterSet& converters, const fs::path& output_dir,
                     const ExecuteOptions& options) {
  const auto stages = plan_stages(spec, input.extension);
  const fs::path scratch = make_scratch_dir(output_dir);
  auto drop_scratch = [&] {
    std::error_code ec;
    if (!options.keep_intermediates) fs::remove_all(scratch, ec);
  };

  FileArtifact produced;
  try {
    produced = experts::run_pipeline(stages, input, converters, scratch);
  } catch (...) {
    std::error_code ec;
    fs::remove_all(scratch, ec);
    throw;
  }

  const fs::path final_path = reserve_output_path(output_dir, input.path.stem().string(), spec.task,
                                                  options.clock(), spec.output_extension);
  std::error_code ec;
  if (options.keep_intermediates) {
    fs::copy_file(produced.path, final_path, fs::copy_options::overwrite_existing, ec);
  } else {
    fs::rename(produced.path, final_path, ec);
  }
  if (ec) {
    fs::remove(final_path, ec);
    drop_scratch();
    throw experts::StageFailure(stages.back(), "cannot place output: " + ec.message());
  }
  drop_scratch();
  return FileArtifact::from_path(final_path);
}

}  // namespace mate::orchestrator
