#include <gtest/gtest.h>

#include "mate/orchestrator/output_dir.hpp"
#include "mate/orchestrator/registry.hpp"
#include "mate/orchestrator/validation.hpp"
#include "test_support.hpp"

using namespace mate;
using namespace mate::orchestrator;
using experts::StageId;
using mtest::TempDir;

TEST(Registry, OneExpertPerSupportedTask) {
  const auto& reg = default_registry();
  ASSERT_EQ(reg.size(), 7u);
  std::set<TaskType> seen;
  for (const auto& spec : reg) {
    EXPECT_TRUE(is_supported(spec.task));
    EXPECT_TRUE(seen.insert(spec.task).second);
    EXPECT_EQ(&route(spec.task, reg), &spec);
    EXPECT_TRUE(experts::chain_compatible(spec.stages));
  }
  for (TaskType t : {TaskType::TTV, TaskType::ATV, TaskType::UNK}) {
    EXPECT_THROW(route(t, reg), UnsupportedTask);
  }
}

TEST(Registry, ExpertTableRows) {
  const auto& reg = default_registry();
  const auto& tts = route(TaskType::TTS, reg);
  EXPECT_EQ(tts.output_extension, "wav");
  EXPECT_TRUE(tts.accepts_stdin());
  EXPECT_TRUE(tts.accepts_extension("PDF"));
  EXPECT_EQ(route(TaskType::ATI, reg).stages, (std::vector<StageId>{StageId::STT, StageId::TTI}));
  EXPECT_EQ(route(TaskType::ITA, reg).stages, (std::vector<StageId>{StageId::ITT, StageId::TTS}));
  EXPECT_EQ(route(TaskType::VTT, reg).output_extension, "txt");
  EXPECT_FALSE(route(TaskType::ITT, reg).accepts_stdin());
  EXPECT_EQ(route(TaskType::ITT, reg).describe_inputs(), ".jpeg, .jpg, .png");
}

TEST(Registry, PlanStagesAddsExtraction) {
  const auto& reg = default_registry();
  EXPECT_EQ(plan_stages(route(TaskType::TTS, reg), "pdf"), (std::vector<StageId>{StageId::TEXTX, StageId::TTS}));
  EXPECT_EQ(plan_stages(route(TaskType::TTS, reg), "txt"), (std::vector<StageId>{StageId::TTS}));
  EXPECT_EQ(plan_stages(route(TaskType::STT, reg), "mp4"), (std::vector<StageId>{StageId::ADEMUX, StageId::STT}));
  EXPECT_EQ(plan_stages(route(TaskType::STT, reg), "mp3"), (std::vector<StageId>{StageId::STT}));
  EXPECT_EQ(plan_stages(route(TaskType::VTT, reg), "webm"), (std::vector<StageId>{StageId::ADEMUX, StageId::STT}));
}

TEST(OutputDir, PrefersFirstExistingCandidate) {
  TempDir root;
  std::filesystem::create_directories(root / "data");
  std::filesystem::create_directories(root / "output");
  EXPECT_EQ(resolve_output_dir(root.path()), std::filesystem::absolute(root / "data"));
  std::filesystem::create_directories(root / "agents output");
  EXPECT_EQ(resolve_output_dir(root.path()), std::filesystem::absolute(root / "agents output"));
}

TEST(OutputDir, CreatesFallback) {
  TempDir root;
  mtest::write_text(root / "data", "a file, not a directory");
  const auto dir = resolve_output_dir(root.path());
  EXPECT_EQ(dir, std::filesystem::absolute(root / "agents_output"));
  EXPECT_TRUE(std::filesystem::is_directory(dir));
  EXPECT_TRUE(dir.is_absolute());
  EXPECT_THROW(resolve_output_dir(root / "missing"), std::invalid_argument);
}

TEST(Validation, FileChecks) {
  TempDir dir;
  const auto& itt = route(TaskType::ITT, default_registry());
  auto expect_kind = [&](const std::filesystem::path& p, ValidationErrorKind kind) {
    try {
      validate_input(p, itt);
      ADD_FAILURE() << p;
    } catch (const ValidationError& e) {
      EXPECT_EQ(e.kind(), kind) << e.what();
      EXPECT_EQ(e.expected(), (std::set<std::string>{"jpeg", "jpg", "png"}));
    }
  };
  expect_kind(dir / "nope.png", ValidationErrorKind::MissingFile);
  expect_kind(mtest::write_text(dir / "a.txt", "x"), ValidationErrorKind::WrongExtension);
  expect_kind(mtest::write_text(dir / "empty.png", ""), ValidationErrorKind::EmptyFile);
  EXPECT_EQ(validate_input(mtest::write_text(dir / "UP.JPG", "x"), itt).extension, "jpg");
  try {
    validate_input(dir / "a.txt", itt);
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find(".png"), std::string::npos) << e.what();
  }
}

TEST(Validation, TypedTextOnlyWhereStdinIsAccepted) {
  TempDir dir;
  const auto& tts = route(TaskType::TTS, default_registry());
  const auto a = validate_input(InputSource{StdinText{"Hello there"}}, tts, dir.path());
  const auto b = validate_input(InputSource{StdinText{"Again"}}, tts, dir.path());
  EXPECT_EQ(a.extension, "txt");
  EXPECT_NE(a.path, b.path);
  EXPECT_EQ(mtest::read_text(a.path), "Hello there");
  EXPECT_THROW(validate_input(InputSource{StdinText{"x"}}, route(TaskType::STT, default_registry()), dir.path()),
               ValidationError);
  EXPECT_THROW(validate_input(InputSource{StdinText{""}}, tts, dir.path()), ValidationError);
}
