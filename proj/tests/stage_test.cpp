#include <gtest/gtest.h>

#include "mate/experts/stage.hpp"

using namespace mate::experts;

TEST(Stage, ParseRoundTrip) {
  for (StageId s : kAllStages) EXPECT_EQ(parse_stage(to_string(s)), s);
  EXPECT_EQ(parse_stage("tts"), StageId::TTS);
  EXPECT_FALSE(parse_stage("TTV").has_value());
}

TEST(Stage, ExtensionKinds) {
  EXPECT_EQ(kind_of_extension("txt"), MediaKind::Text);
  EXPECT_EQ(kind_of_extension("PDF"), MediaKind::Document);
  EXPECT_EQ(kind_of_extension("docx"), MediaKind::Document);
  for (const char* a : {"mp3", "mpeg", "mpga", "m4a", "wav"}) EXPECT_EQ(kind_of_extension(a), MediaKind::Audio) << a;
  for (const char* v : {"mp4", "webm"}) EXPECT_EQ(kind_of_extension(v), MediaKind::Video) << v;
  for (const char* i : {"png", "jpeg", "JPG"}) EXPECT_EQ(kind_of_extension(i), MediaKind::Image) << i;
  EXPECT_FALSE(kind_of_extension("exe").has_value());
  EXPECT_EQ(canonical_extension(MediaKind::Audio), "wav");
  EXPECT_EQ(canonical_extension(MediaKind::Image), "png");
  EXPECT_EQ(canonical_extension(MediaKind::Text), "txt");
}

TEST(Stage, ChainCompatibility) {
  const std::vector<StageId> ati = {StageId::STT, StageId::TTI};
  const std::vector<StageId> ita = {StageId::ITT, StageId::TTS};
  const std::vector<StageId> vtt = {StageId::ADEMUX, StageId::STT};
  const std::vector<StageId> bad = {StageId::TTS, StageId::TTI};
  EXPECT_TRUE(chain_compatible(ati));
  EXPECT_TRUE(chain_compatible(ita));
  EXPECT_TRUE(chain_compatible(vtt));
  EXPECT_FALSE(chain_compatible(bad));
  EXPECT_TRUE(stage_accepts(StageId::TEXTX, MediaKind::Text));
  EXPECT_TRUE(stage_accepts(StageId::TEXTX, MediaKind::Document));
  EXPECT_FALSE(stage_accepts(StageId::STT, MediaKind::Video));
}
