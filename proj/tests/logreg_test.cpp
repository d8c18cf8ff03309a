#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "mate/classifier/errors.hpp"
#include "mate/classifier/logreg.hpp"
#include "oracles.hpp"

using namespace mate;
using namespace mate::classifier;

using oracle::logreg_loss;
using oracle::random_logreg_instance;

TEST(Logreg, LossMatchesReference) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 10; ++t) {
    auto inst = random_logreg_instance(rng);
    const auto g = softmax_cross_entropy(inst.model, inst.rows, inst.targets, inst.l2);
    EXPECT_NEAR(g.loss, static_cast<double>(logreg_loss(inst.model, inst.rows, inst.targets, inst.l2)), 1e-12);
  }
}

TEST(Logreg, GradientMatchesCentralDifferences) {
  std::mt19937_64 rng(2024);
  for (int t = 0; t < 20; ++t) {
    const auto inst = random_logreg_instance(rng);
    EXPECT_LT(oracle::worst_gradient_error(inst), 1e-5) << "instance " << t;
  }
}

TEST(Logreg, SeparableToySetFitsWithin200Epochs) {
  const LabeledDataset train = {{"red apple", TaskType::TTS},
                                {"green apple", TaskType::TTS},
                                {"fast car", TaskType::STT},
                                {"slow car", TaskType::STT}};
  const auto tfidf = fit_tfidf(prompts_of(train));
  LogregHyper hyper;
  hyper.epochs = 200;
  const auto model = train_logreg(train, tfidf, hyper);
  EXPECT_EQ(model.classes, (std::vector<TaskType>{TaskType::TTS, TaskType::STT}));
  EXPECT_EQ(model.weights.size(), 2 * tfidf.dimension());
  for (const auto& e : train) EXPECT_EQ(predict(model, tfidf, e.prompt).label, e.label) << e.prompt;
}

TEST(Logreg, SingleClassIsDegenerate) {
  const LabeledDataset train = {{"a", TaskType::TTS}, {"b", TaskType::TTS}};
  const auto tfidf = fit_tfidf(prompts_of(train));
  EXPECT_THROW(train_logreg(train, tfidf, {}), DegenerateLabels);
}

TEST(Logreg, ZeroEpochsGivesUniformAndTieBreak) {
  const LabeledDataset train = {{"a", TaskType::STT}, {"b", TaskType::TTS}};
  const auto tfidf = fit_tfidf(prompts_of(train));
  LogregHyper hyper;
  hyper.epochs = 0;
  const auto model = train_logreg(train, tfidf, hyper);
  // Canonical order puts TTS before STT.
  const auto p = predict(model, tfidf, "a");
  EXPECT_EQ(p.label, TaskType::TTS);
  EXPECT_DOUBLE_EQ(p.probabilities[0], 0.5);
  EXPECT_DOUBLE_EQ(p.probabilities[1], 0.5);
}

TEST(Logreg, SingleClassModelPredictsWithCertainty) {
  const std::vector<std::string> corpus = {"anything"};
  const auto tfidf = fit_tfidf(corpus);
  const auto model = LinearModel::zeros({TaskType::TTS}, tfidf.dimension());
  const auto p = predict(model, tfidf, "whatever you like");
  EXPECT_EQ(p.label, TaskType::TTS);
  EXPECT_DOUBLE_EQ(p.probabilities.at(0), 1.0);
}

TEST(Logreg, ProbabilitiesFormADistribution) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 50; ++t) {
    auto inst = random_logreg_instance(rng);
    for (const auto& row : inst.rows) {
      const auto p = class_probabilities(inst.model, row);
      double s = 0;
      for (double v : p) {
        EXPECT_GE(v, 0.0);
        s += v;
      }
      EXPECT_NEAR(s, 1.0, 1e-9);
    }
  }
}

TEST(Logreg, DimensionMismatch) {
  const std::vector<std::string> corpus = {"a b c"};
  const auto tfidf = fit_tfidf(corpus);
  const auto model = LinearModel::zeros({TaskType::TTS, TaskType::STT}, 2);
  EXPECT_THROW(predict(model, tfidf, "a"), DimensionMismatch);
  EXPECT_THROW(class_probabilities(model, SparseVector{{5, 1.0}}), DimensionMismatch);
}
