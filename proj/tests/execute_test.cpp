#include <gtest/gtest.h>

#include <thread>

#include "mate/experts/pipeline.hpp"
#include "mate/experts/stub_backend.hpp"
#include "mate/orchestrator/execute.hpp"
#include "test_support.hpp"

using namespace mate;
using namespace mate::orchestrator;
using mtest::TempDir;

namespace {

std::chrono::system_clock::time_point fixed_time() {
  // 2024-03-05T06:07:08Z
  return std::chrono::system_clock::time_point(std::chrono::seconds(1709618828));
}

std::vector<std::filesystem::path> entries(const std::filesystem::path& dir) {
  std::vector<std::filesystem::path> out;
  for (const auto& e : std::filesystem::directory_iterator(dir)) out.push_back(e.path().filename());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(Execute, OutputFileName) {
  EXPECT_EQ(output_file_name("notes", TaskType::TTS, fixed_time(), "wav"), "notes_TTS_20240305T060708Z.wav");
}

TEST(Execute, ReservationNeverCollides) {
  TempDir dir;
  const auto a = reserve_output_path(dir.path(), "x", TaskType::STT, fixed_time(), "txt");
  const auto b = reserve_output_path(dir.path(), "x", TaskType::STT, fixed_time(), "txt");
  EXPECT_EQ(a.filename(), "x_STT_20240305T060708Z.txt");
  EXPECT_EQ(b.filename(), "x_1_STT_20240305T060708Z.txt");

  std::vector<std::filesystem::path> got(16);
  std::vector<std::thread> threads;
  for (std::size_t i = 0; i < got.size(); ++i) {
    threads.emplace_back([&, i] { got[i] = reserve_output_path(dir.path(), "y", TaskType::STT, fixed_time(), "txt"); });
  }
  for (auto& t : threads) t.join();
  std::sort(got.begin(), got.end());
  EXPECT_EQ(std::unique(got.begin(), got.end()), got.end());
}

TEST(Execute, EveryExpertEveryExtension) {
  TempDir root;
  auto stub = std::make_shared<experts::StubBackend>();
  const auto set = experts::ConverterSet::uniform(stub);
  ExecuteOptions opts;
  opts.clock = fixed_time;
  for (const auto& spec : default_registry()) {
    for (const auto& ext : spec.accepted_input_extensions) {
      if (ext == kStdinMarker) continue;
      TempDir in_dir;
      const auto input = FileArtifact::from_path(mtest::write_text(in_dir / ("sample." + ext), "bytes"));
      const auto out_dir = root / (std::string(to_string(spec.task)) + "_" + ext);
      std::filesystem::create_directories(out_dir);
      stub->clear_log();
      const auto out = execute(spec, input, set, out_dir, opts);
      EXPECT_EQ(out.extension, spec.output_extension) << to_string(spec.task) << " ." << ext;
      EXPECT_EQ(out.path.parent_path(), out_dir);
      EXPECT_GT(out.byte_size, 0u);
      EXPECT_EQ(stub->invoked_stages(), plan_stages(spec, ext));
      // Only the final file remains.
      EXPECT_EQ(entries(out_dir), std::vector<std::filesystem::path>{out.path.filename()});
    }
  }
}

TEST(Execute, KeepIntermediates) {
  TempDir root, in_dir;
  const auto set = experts::ConverterSet::uniform(std::make_shared<experts::StubBackend>());
  const auto& ita = route(TaskType::ITA, default_registry());
  const auto input = FileArtifact::from_path(mtest::write_text(in_dir / "pic.png", "x"));
  ExecuteOptions opts;
  opts.keep_intermediates = true;
  opts.clock = fixed_time;
  const auto out = execute(ita, input, set, root.path(), opts);
  EXPECT_TRUE(std::filesystem::exists(out.path));
  const auto names = entries(root.path());
  ASSERT_EQ(names.size(), 2u);
  std::size_t scratch_files = 0;
  for (const auto& n : names) {
    if (std::filesystem::is_directory(root / n.string())) {
      scratch_files = static_cast<std::size_t>(
          std::distance(std::filesystem::directory_iterator(root / n.string()), {}));
    }
  }
  EXPECT_EQ(scratch_files, 2u);
}

TEST(Execute, FailureLeavesNothingBehind) {
  class Broken final : public experts::ConverterBackend {
   public:
    experts::BackendKind kind() const override { return experts::BackendKind::Stub; }
    bool supports(experts::StageId) const override { return true; }
    void produce(experts::StageId s, const FileArtifact&, const std::filesystem::path&) const override {
      throw experts::BackendFailure(s, "no GPU");
    }
  };
  TempDir root, in_dir;
  const auto set = experts::ConverterSet::uniform(std::make_shared<Broken>());
  const auto input = FileArtifact::from_path(mtest::write_text(in_dir / "a.txt", "x"));
  EXPECT_THROW(execute(route(TaskType::TTS, default_registry()), input, set, root.path()), experts::StageFailure);
  EXPECT_TRUE(entries(root.path()).empty());
}
