#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "mate/classifier/dataset.hpp"
#include "mate/classifier/tfidf.hpp"

namespace mate::classifier {

inline constexpr std::size_t kDefaultK = 5;

struct KnnIndex {
  std::vector<std::vector<double>> embeddings;
  std::vector<TaskType> labels;
};

/// Cosine similarity, 0 when either vector is zero.
double cosine_similarity(std::span<const double> a, std::span<const double> b);

/// Majority label among the k most similar training vectors.
/// Similarity ties favour the lower training index; vote ties favour the
/// lexicographically smaller label code.
/// Throws EmptyTrainingSet, or KTooLarge when k is 0 or exceeds the index size.
TaskType knn_predict(const KnnIndex& index, std::span<const double> query, std::size_t k);

struct KnnModel {
  TfidfModel tfidf;
  LabeledDataset train;
  std::size_t k = kDefaultK;
  KnnIndex index;

  friend bool operator==(const KnnModel& a, const KnnModel& b) {
    return a.tfidf == b.tfidf && a.train == b.train && a.k == b.k;
  }
};

/// Embeds the training prompts and validates k.
KnnModel build_knn(LabeledDataset train, TfidfModel tfidf, std::size_t k = kDefaultK);

TaskType knn_predict(const KnnModel& model, std::string_view prompt);

}  // namespace mate::classifier
