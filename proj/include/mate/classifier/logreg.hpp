#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "mate/classifier/dataset.hpp"
#include "mate/classifier/tfidf.hpp"
#include "mate/core/task_type.hpp"

namespace mate::classifier {

struct LogregHyper {
  double learning_rate = 0.5;
  int epochs = 300;
  double l2_penalty = 1e-4;
  // Full-batch descent from zero weights does not consume randomness; the seed is
  // kept so the persisted model records the complete training configuration.
  std::uint64_t seed = 0;

  friend bool operator==(const LogregHyper&, const LogregHyper&) = default;
};

/// Multinomial logistic regression parameters. `weights` is C x V, row-major.
struct LinearModel {
  std::vector<TaskType> classes;
  std::size_t n_features = 0;
  std::vector<double> weights;
  std::vector<double> bias;

  static LinearModel zeros(std::vector<TaskType> classes, std::size_t n_features);

  std::size_t n_classes() const noexcept { return classes.size(); }
  double& weight(std::size_t c, std::size_t j) { return weights[c * n_features + j]; }
  double weight(std::size_t c, std::size_t j) const { return weights[c * n_features + j]; }

  friend bool operator==(const LinearModel&, const LinearModel&) = default;
};

struct Prediction {
  TaskType label = TaskType::UNK;
  std::vector<double> probabilities;  // aligned with LinearModel::classes
};

/// Mean softmax cross-entropy plus (l2 / 2) * ||W||^2 and its gradient.
/// The bias is not penalized.
struct LossAndGradient {
  double loss = 0.0;
  std::vector<double> grad_weights;
  std::vector<double> grad_bias;
};

LossAndGradient softmax_cross_entropy(const LinearModel& model, std::span<const SparseVector> rows,
                                      std::span<const std::size_t> targets, double l2_penalty);

/// Softmax over class scores. Throws DimensionMismatch if x has a feature index >= n_features.
std::vector<double> class_probabilities(const LinearModel& model, const SparseVector& x);

/// Full-batch gradient descent from zero initialization.
LinearModel train_logreg(std::span<const SparseVector> rows, std::span<const std::size_t> targets,
                         std::vector<TaskType> classes, std::size_t n_features,
                         const LogregHyper& hyper);

/// Embeds `train` under `tfidf` and fits. Classes are the distinct labels in canonical order.
/// Throws DegenerateLabels when fewer than two labels are present.
LinearModel train_logreg(const LabeledDataset& train, const TfidfModel& tfidf,
                         const LogregHyper& hyper);

/// Argmax of class probabilities; ties go to the earliest class in the model's list.
Prediction predict(const LinearModel& model, const TfidfModel& tfidf, std::string_view prompt);

}  // namespace mate::classifier
