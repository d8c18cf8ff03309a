#include "mate/eval/fixture.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <set>
#include <stdexcept>

#include "mate/core/text.hpp"

namespace mate::eval {

namespace {

struct ClassTemplates {
  TaskType label;
  std::vector<std::string> keys;
  const std::vector<std::string>* objects;
};

const std::vector<std::string> kTextObjects = {"my essay", "this article", "the lecture notes",
                                               "the bedtime story", "this recipe"};
const std::vector<std::string> kAudioObjects = {"this podcast episode", "the voicemail",
                                                "my lecture recording", "this song", "my voice memo"};
const std::vector<std::string> kImageObjects = {"this photo", "the diagram", "the screenshot",
                                                "this chart", "my selfie"};
const std::vector<std::string> kVideoObjects = {"this video", "the tutorial clip", "the movie scene",
                                                "my vlog", "the news broadcast"};
const std::vector<std::string> kNoObjects = {""};

const std::vector<ClassTemplates>& templates() {
  static const std::vector<ClassTemplates> t = {
      {TaskType::TTS,
       {"convert text to audio", "read aloud", "turn into speech", "make an audio version of"},
       &kTextObjects},
      {TaskType::STT,
       {"transcribe the speech in", "convert speech to text", "turn the audio into text",
        "make a transcript of"},
       &kAudioObjects},
      {TaskType::ITT,
       {"describe in words", "write a caption for", "convert image to text",
        "extract a text description of"},
       &kImageObjects},
      {TaskType::ITA,
       {"describe out loud", "give me an audio description of", "convert image to audio",
        "make a spoken description of"},
       &kImageObjects},
      {TaskType::VTT,
       {"transcribe the footage of", "convert video to text", "give me subtitles for",
        "summarize in text"},
       &kVideoObjects},
      {TaskType::TTI,
       {"draw a picture of", "generate an image from", "convert text to image", "illustrate"},
       &kTextObjects},
      {TaskType::ATI,
       {"visualize the sound of", "convert audio to image", "make a picture that matches",
        "turn the sounds into a picture of"},
       &kAudioObjects},
      {TaskType::TTV,
       {"make a video from", "convert text to video", "animate", "turn into a movie"},
       &kTextObjects},
      {TaskType::ATV,
       {"make a music video for", "convert audio to video", "create moving visuals for",
        "turn the soundtrack into a video"},
       &kAudioObjects},
      {TaskType::UNK,
       {"what is the weather like tomorrow", "tell me a joke about penguins", "book a table for two",
        "how tall is mount everest", "recommend a good novel", "what time is it in tokyo",
        "help me fix my bicycle", "who won the game last night", "qwerty asdf",
        "is it healthy to skip breakfast", "remind me to call mom", "what should i cook tonight"},
       &kNoObjects},
  };
  return t;
}

const std::vector<std::string> kPrefixes = {"",         "please ", "could you ", "i need you to ",
                                            "can you ", "hey, "};
const std::vector<std::string> kSuffixes = {"", " please", " for me", " today", " now", " quickly", "."};

std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t r;
  do {
    r = rng();
  } while (r >= limit);
  return r % bound;
}

}  // namespace

const std::vector<std::pair<std::string, TaskType>>& fixture_key_phrases() {
  static const auto phrases = [] {
    std::vector<std::pair<std::string, TaskType>> out;
    for (const auto& c : templates()) {
      for (const auto& k : c.keys) out.emplace_back(k, c.label);
    }
    // Longest first, so a match is never shadowed by a shorter phrase it contains.
    std::stable_sort(out.begin(), out.end(),
                     [](const auto& a, const auto& b) { return a.first.size() > b.first.size(); });
    return out;
  }();
  return phrases;
}

LabeledDataset generate_synthetic_fixture(std::uint64_t seed, ModConTTVersion version) {
  std::mt19937_64 rng(seed);
  LabeledDataset out;
  for (TaskType label : kAllTaskTypes) {
    const auto& c = *std::find_if(templates().begin(), templates().end(),
                                  [label](const auto& t) { return t.label == label; });
    std::vector<std::string> pool;
    for (const auto& pre : kPrefixes) {
      for (const auto& key : c.keys) {
        for (const auto& obj : *c.objects) {
          for (const auto& suf : kSuffixes) {
            pool.push_back(pre + key + (obj.empty() ? "" : " " + obj) + suf);
          }
        }
      }
    }
    const std::size_t want = expected_count(version, label);
    if (pool.size() < want) throw std::logic_error("fixture template pool too small");
    // Partial Fisher-Yates: the first `want` slots become a uniform sample.
    for (std::size_t i = 0; i < want; ++i) {
      std::swap(pool[i], pool[i + bounded(rng, pool.size() - i)]);
      out.push_back({pool[i], label});
    }
  }
  return out;
}

namespace {

class KeywordBackend final : public interpreter::InterpreterBackend {
 public:
  std::string name() const override { return "keyword"; }
  std::string classify_raw(std::string_view prompt) const override {
    const auto lower = text::to_lower(prompt);
    for (const auto& [phrase, label] : fixture_key_phrases()) {
      if (lower.find(phrase) != std::string::npos) return std::string(to_string(label));
    }
    return std::string(to_string(TaskType::UNK));
  }
};

}  // namespace

interpreter::BackendPtr make_keyword_backend() { return std::make_shared<KeywordBackend>(); }

}  // namespace mate::eval
