#include <gtest/gtest.h>

#include "mate/eval/benchmark.hpp"
#include "mate/eval/dataset_io.hpp"
#include "mate/eval/fixture.hpp"
#include "test_support.hpp"

using namespace mate;
using namespace mate::eval;

TEST(Fixture, CountsMatchVersion) {
  for (auto v : {ModConTTVersion::V1, ModConTTVersion::V2}) {
    const auto d = generate_synthetic_fixture(7, v);
    EXPECT_EQ(d.size(), expected_total(v));
    EXPECT_NO_THROW(check_composition(d, v));
    mtest::TempDir dir;
    write_dataset_csv(d, dir / "f.csv");
    EXPECT_EQ(load_dataset(dir / "f.csv", v), d);
  }
}

TEST(Fixture, DeterministicPerSeed) {
  EXPECT_EQ(generate_synthetic_fixture(7, ModConTTVersion::V1), generate_synthetic_fixture(7, ModConTTVersion::V1));
  const auto a = generate_synthetic_fixture(7, ModConTTVersion::V1);
  const auto b = generate_synthetic_fixture(8, ModConTTVersion::V1);
  EXPECT_NE(prompts_of(a), prompts_of(b));
  EXPECT_EQ(label_counts(a), label_counts(b));
}

TEST(Fixture, KeywordBackendIsPerfect) {
  const auto kw = make_keyword_backend();
  for (auto v : {ModConTTVersion::V1, ModConTTVersion::V2}) {
    for (std::uint64_t seed : {1u, 7u, 42u, 1234u}) {
      const auto r = run_benchmark(*kw, generate_synthetic_fixture(seed, v), 4);
      EXPECT_EQ(r.accuracy, 1.0) << "seed " << seed;
      EXPECT_EQ(r.n_failed, 0u);
    }
  }
}

TEST(Fixture, KeyPhrasesDoNotNest) {
  const auto& phrases = fixture_key_phrases();
  for (const auto& [a, la] : phrases) {
    for (const auto& [b, lb] : phrases) {
      if (la != lb) {
        EXPECT_EQ(a.find(b), std::string::npos) << a << " contains " << b;
      }
    }
  }
}
