#include "mate/classifier/logreg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mate/classifier/errors.hpp"

namespace mate::classifier {

LinearModel LinearModel::zeros(std::vector<TaskType> classes, std::size_t n_features) {
  LinearModel m;
  m.n_features = n_features;
  m.weights.assign(classes.size() * n_features, 0.0);
  m.bias.assign(classes.size(), 0.0);
  m.classes = std::move(classes);
  return m;
}

namespace {

void check_row(const LinearModel& model, const SparseVector& x) {
  for (const auto& [idx, _] : x) {
    if (idx >= model.n_features) {
      throw DimensionMismatch("feature index " + std::to_string(idx) + " outside model width " +
                              std::to_string(model.n_features));
    }
  }
}

// In-place softmax of raw scores.
void softmax(std::vector<double>& z) {
  const double zmax = *std::max_element(z.begin(), z.end());
  double sum = 0.0;
  for (double& v : z) {
    v = std::exp(v - zmax);
    sum += v;
  }
  for (double& v : z) v /= sum;
}

std::vector<double> scores(const LinearModel& model, const SparseVector& x) {
  std::vector<double> z(model.bias);
  for (std::size_t c = 0; c < model.n_classes(); ++c) {
    const double* row = &model.weights[c * model.n_features];
    for (const auto& [idx, v] : x) z[c] += row[idx] * v;
  }
  return z;
}

}  // namespace

std::vector<double> class_probabilities(const LinearModel& model, const SparseVector& x) {
  if (model.classes.empty()) throw DimensionMismatch("model has no classes");
  check_row(model, x);
  auto z = scores(model, x);
  softmax(z);
  return z;
}

LossAndGradient softmax_cross_entropy(const LinearModel& model, std::span<const SparseVector> rows,
                                      std::span<const std::size_t> targets, double l2_penalty) {
  if (rows.size() != targets.size()) throw DimensionMismatch("rows and targets differ in length");
  const std::size_t C = model.n_classes();
  const std::size_t V = model.n_features;
  LossAndGradient out;
  out.grad_weights.assign(C * V, 0.0);
  out.grad_bias.assign(C, 0.0);
  if (rows.empty()) return out;

  const double inv_n = 1.0 / static_cast<double>(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    check_row(model, rows[i]);
    auto z = scores(model, rows[i]);
    const double zmax = *std::max_element(z.begin(), z.end());
    double sum = 0.0;
    for (double v : z) sum += std::exp(v - zmax);
    out.loss += (std::log(sum) + zmax - z[targets[i]]) * inv_n;

    for (std::size_t c = 0; c < C; ++c) {
      const double p = std::exp(z[c] - zmax) / sum;
      const double delta = (p - (c == targets[i] ? 1.0 : 0.0)) * inv_n;
      out.grad_bias[c] += delta;
      double* g = &out.grad_weights[c * V];
      for (const auto& [idx, v] : rows[i]) g[idx] += delta * v;
    }
  }
  if (l2_penalty != 0.0) {
    double sq = 0.0;
    for (std::size_t k = 0; k < model.weights.size(); ++k) {
      sq += model.weights[k] * model.weights[k];
      out.grad_weights[k] += l2_penalty * model.weights[k];
    }
    out.loss += 0.5 * l2_penalty * sq;
  }
  return out;
}

LinearModel train_logreg(std::span<const SparseVector> rows, std::span<const std::size_t> targets,
                         std::vector<TaskType> classes, std::size_t n_features,
                         const LogregHyper& hyper) {
  if (classes.size() < 2) throw DegenerateLabels();
  LinearModel model = LinearModel::zeros(std::move(classes), n_features);
  for (int epoch = 0; epoch < hyper.epochs; ++epoch) {
    const auto g = softmax_cross_entropy(model, rows, targets, hyper.l2_penalty);
    for (std::size_t k = 0; k < model.weights.size(); ++k) {
      model.weights[k] -= hyper.learning_rate * g.grad_weights[k];
    }
    for (std::size_t c = 0; c < model.bias.size(); ++c) {
      model.bias[c] -= hyper.learning_rate * g.grad_bias[c];
    }
  }
  return model;
}

LinearModel train_logreg(const LabeledDataset& train, const TfidfModel& tfidf,
                         const LogregHyper& hyper) {
  std::vector<TaskType> classes;
  for (TaskType t : kAllTaskTypes) {
    if (std::any_of(train.begin(), train.end(), [t](const auto& e) { return e.label == t; })) {
      classes.push_back(t);
    }
  }
  if (classes.size() < 2) throw DegenerateLabels();

  std::vector<SparseVector> rows;
  std::vector<std::size_t> targets;
  rows.reserve(train.size());
  targets.reserve(train.size());
  for (const auto& e : train) {
    rows.push_back(embed_sparse(tfidf, e.prompt));
    targets.push_back(static_cast<std::size_t>(
        std::find(classes.begin(), classes.end(), e.label) - classes.begin()));
  }
  return train_logreg(rows, targets, std::move(classes), tfidf.dimension(), hyper);
}

Prediction predict(const LinearModel& model, const TfidfModel& tfidf, std::string_view prompt) {
  if (model.n_features != tfidf.dimension()) {
    throw DimensionMismatch("model width " + std::to_string(model.n_features) +
                            " != vocabulary size " + std::to_string(tfidf.dimension()));
  }
  Prediction p;
  p.probabilities = class_probabilities(model, embed_sparse(tfidf, prompt));
  // max_element returns the first maximum, i.e. the earliest class on ties.
  const auto best = std::max_element(p.probabilities.begin(), p.probabilities.end());
  p.label = model.classes[static_cast<std::size_t>(best - p.probabilities.begin())];
  return p;
}

}  // namespace mate::classifier
