#include "mate/classifier/knn.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <optional>
#include <string>

#include "mate/classifier/errors.hpp"

namespace mate::classifier {

double cosine_similarity(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw DimensionMismatch("cosine similarity of unequal lengths");
  double dot = 0.0, na = 0.0, nb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    dot += a[i] * b[i];
    na += a[i] * a[i];
    nb += b[i] * b[i];
  }
  if (na == 0.0 || nb == 0.0) return 0.0;
  return dot / (std::sqrt(na) * std::sqrt(nb));
}

TaskType knn_predict(const KnnIndex& index, std::span<const double> query, std::size_t k) {
  const std::size_t n = index.embeddings.size();
  if (n == 0) throw EmptyTrainingSet();
  if (k == 0 || k > n) {
    throw KTooLarge("k=" + std::to_string(k) + " must be in [1, " + std::to_string(n) + "]");
  }

  std::vector<std::pair<double, std::size_t>> ranked(n);
  for (std::size_t i = 0; i < n; ++i) {
    ranked[i] = {cosine_similarity(index.embeddings[i], query), i};
  }
  std::partial_sort(ranked.begin(), ranked.begin() + static_cast<std::ptrdiff_t>(k), ranked.end(),
                    [](const auto& a, const auto& b) {
                      return a.first != b.first ? a.first > b.first : a.second < b.second;
                    });

  std::array<std::size_t, kAllTaskTypes.size()> votes{};
  for (std::size_t r = 0; r < k; ++r) ++votes[index_of(index.labels[ranked[r].second])];

  std::optional<TaskType> best;
  for (TaskType t : kAllTaskTypes) {
    const auto v = votes[index_of(t)];
    if (v == 0) continue;
    if (!best || v > votes[index_of(*best)] ||
        (v == votes[index_of(*best)] && to_string(t) < to_string(*best))) {
      best = t;
    }
  }
  return *best;
}

KnnModel build_knn(LabeledDataset train, TfidfModel tfidf, std::size_t k) {
  if (train.empty()) throw EmptyTrainingSet();
  if (k == 0 || k > train.size()) {
    throw KTooLarge("k=" + std::to_string(k) + " must be in [1, " +
                    std::to_string(train.size()) + "]");
  }
  KnnModel m;
  m.index.embeddings.reserve(train.size());
  for (const auto& e : train) {
    m.index.embeddings.push_back(embed(tfidf, e.prompt));
    m.index.labels.push_back(e.label);
  }
  m.tfidf = std::move(tfidf);
  m.train = std::move(train);
  m.k = k;
  return m;
}

TaskType knn_predict(const KnnModel& model, std::string_view prompt) {
  return knn_predict(model.index, embed(model.tfidf, prompt), model.k);
}

}  // namespace mate::classifier
