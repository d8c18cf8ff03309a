#include <gtest/gtest.h>

#include "mate/experts/stub_backend.hpp"
#include "mate/orchestrator/session.hpp"
#include "test_support.hpp"

using namespace mate;
using namespace mate::orchestrator;
using mtest::ScriptedBackend;
using mtest::TempDir;

namespace {

// Answers from the first keyword found; anything else is UNK.
std::string keyword_label(std::string_view p) {
  if (p.find("aloud") != std::string_view::npos) return "TTS";
  if (p.find("caption") != std::string_view::npos) return "ITT";
  if (p.find("movie") != std::string_view::npos) return "TTV";
  if (p.find("gibberish") != std::string_view::npos) return "The answer is TTS";
  return "UNK";
}

struct Harness {
  TempDir dir;
  ScriptedBackend interp{keyword_label};
  std::shared_ptr<experts::StubBackend> stub = std::make_shared<experts::StubBackend>();
  experts::ConverterSet converters = experts::ConverterSet::uniform(stub);
  SessionConfig config;
  Session session;

  Harness() {
    config.base_dir = dir.path();
    std::filesystem::create_directories(dir / "out");
    session = Session::start(dir / "out");
  }

  std::string say(std::string_view msg) {
    StepContext ctx{interp, default_registry(), converters, config};
    auto [next, reply] = step(std::move(session), msg, ctx);
    session = std::move(next);
    return reply;
  }
};

}  // namespace

TEST(Session, HappyPathWithFile) {
  Harness h;
  mtest::write_text(h.dir / "essay.txt", "Four score and seven years ago");
  const auto r1 = h.say("please read my essay aloud");
  EXPECT_EQ(h.session.state, SessionState::AwaitFile);
  EXPECT_EQ(h.session.task, TaskType::TTS);
  EXPECT_NE(r1.find("Task identified: TTS"), std::string::npos) << r1;
  const auto r2 = h.say("essay.txt");
  ASSERT_EQ(h.session.state, SessionState::Done) << r2;
  ASSERT_TRUE(h.session.output.has_value());
  EXPECT_EQ(r2, "Output file: " + h.session.output->path.string());
  EXPECT_TRUE(std::filesystem::exists(h.session.output->path));
  EXPECT_EQ(h.session.output->extension, "wav");
  EXPECT_EQ(h.session.transcript.size(), 4u);
  EXPECT_THROW(h.say("more"), std::logic_error);
}

TEST(Session, UnknownRequestReprompts) {
  Harness h;
  const auto r = h.say("what's the weather tomorrow?");
  EXPECT_EQ(h.session.state, SessionState::AwaitPrompt);
  EXPECT_NE(r.find("re-enter your query"), std::string::npos) << r;
  EXPECT_EQ(h.session.consecutive_reprompts, 1u);
}

TEST(Session, UnparsableAndUnsupportedReprompt) {
  Harness h;
  EXPECT_NE(h.say("gibberish").find("re-enter"), std::string::npos);
  const auto r = h.say("make a movie of my essay");
  EXPECT_NE(r.find("TTV"), std::string::npos);
  EXPECT_NE(r.find("not supported"), std::string::npos);
  EXPECT_EQ(h.session.state, SessionState::AwaitPrompt);
}

TEST(Session, MenuAfterRepeatedReprompts) {
  Harness h;
  h.config.menu_after_reprompts = 3;
  EXPECT_EQ(h.say("hmm").find("Supported tasks:"), std::string::npos);
  EXPECT_EQ(h.say("hmm").find("Supported tasks:"), std::string::npos);
  const auto third = h.say("hmm");
  EXPECT_NE(third.find("Supported tasks:"), std::string::npos);
  EXPECT_NE(third.find("ITA"), std::string::npos);
  h.say("read it aloud");
  EXPECT_EQ(h.session.consecutive_reprompts, 0u);
}

TEST(Session, WrongExtensionNamesExpectedTypes) {
  Harness h;
  mtest::write_text(h.dir / "song.mp3", "ID3");
  h.say("write a caption for my photo");
  const auto r = h.say("song.mp3");
  EXPECT_EQ(h.session.state, SessionState::AwaitFile);
  EXPECT_NE(r.find(".png"), std::string::npos) << r;
  EXPECT_NE(r.find("Please modify the file path accordingly."), std::string::npos) << r;
  mtest::write_text(h.dir / "pic.png", "PNG");
  EXPECT_NE(h.say("pic.png").find("Output file: "), std::string::npos);
  EXPECT_EQ(h.session.output->extension, "txt");
}

TEST(Session, MissingFileStaysInAwaitFile) {
  Harness h;
  h.say("write a caption for my photo");
  const auto r = h.say("nowhere.png");
  EXPECT_EQ(h.session.state, SessionState::AwaitFile);
  EXPECT_NE(r.find("not found"), std::string::npos) << r;
}

TEST(Session, TypedTextAndInlineMarker) {
  Harness h;
  h.say("read this aloud");
  h.say("Hello from the keyboard");
  ASSERT_EQ(h.session.state, SessionState::Done);
  EXPECT_EQ(h.stub->invoked_stages(), std::vector<experts::StageId>{experts::StageId::TTS});

  Harness g;
  const auto r = g.say("read this aloud <<< Good morning");
  EXPECT_EQ(g.session.state, SessionState::Done) << r;
  // Spool files never land next to the output.
  std::size_t n = 0;
  for ([[maybe_unused]] const auto& e : std::filesystem::directory_iterator(g.dir / "out")) ++n;
  EXPECT_EQ(n, 1u);
}

TEST(Session, TransportErrorReprompts) {
  Harness h;
  ScriptedBackend down([](std::string_view) -> std::string { throw interpreter::TransportError("down"); });
  StepContext ctx{down, default_registry(), h.converters, h.config};
  auto [s, reply] = step(Session::start(h.dir / "out"), "read aloud", ctx);
  EXPECT_EQ(s.state, SessionState::AwaitPrompt);
  EXPECT_NE(reply.find("re-enter"), std::string::npos);
}

TEST(Session, StageFailureEndsInFailed) {
  class Broken final : public experts::ConverterBackend {
   public:
    experts::BackendKind kind() const override { return experts::BackendKind::Stub; }
    bool supports(experts::StageId) const override { return true; }
    void produce(experts::StageId s, const FileArtifact&, const std::filesystem::path&) const override {
      throw experts::BackendFailure(s, "out of memory");
    }
  };
  Harness h;
  h.converters = experts::ConverterSet::uniform(std::make_shared<Broken>());
  h.say("read aloud");
  const auto r = h.say("some typed words");
  EXPECT_EQ(h.session.state, SessionState::Failed);
  EXPECT_NE(r.find("Conversion failed at stage TTS"), std::string::npos) << r;
  EXPECT_NE(r.find("out of memory"), std::string::npos) << r;
}
