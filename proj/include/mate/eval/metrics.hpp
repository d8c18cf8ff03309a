#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "mate/core/task_type.hpp"
#include "mate/interpreter/backend.hpp"

namespace mate::eval {

/// Column name for failed (unparsable) predictions.
inline constexpr std::string_view kInvalidColumn = "INVALID";

/// Gold rows x predicted columns over the labels seen in either, plus an INVALID column.
struct ConfusionMatrix {
  std::vector<TaskType> labels;
  std::vector<std::vector<std::size_t>> counts;
  std::vector<std::size_t> invalid;

  std::size_t row_total(std::size_t row) const;
  std::size_t total() const;
  std::size_t trace() const;
  bool has_invalid() const;

  friend bool operator==(const ConfusionMatrix&, const ConfusionMatrix&) = default;
};

struct ClassMetrics {
  TaskType label = TaskType::UNK;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  std::size_t support = 0;

  friend bool operator==(const ClassMetrics&, const ClassMetrics&) = default;
};

struct EvalReport {
  std::string backend;
  std::string dataset_fingerprint;
  std::string timestamp;
  std::size_t n = 0;
  std::size_t n_failed = 0;
  double accuracy = 0.0;
  double weighted_precision = 0.0;
  double weighted_recall = 0.0;
  double weighted_f1 = 0.0;
  double failure_rate = 0.0;
  std::vector<ClassMetrics> per_class;
  ConfusionMatrix confusion;

  friend bool operator==(const EvalReport&, const EvalReport&) = default;
};

class LengthMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};
class EmptyInput : public std::invalid_argument {
 public:
  EmptyInput() : std::invalid_argument("no predictions to score") {}
};

/// Failed outcomes land in the INVALID column and never count as correct. Per-class
/// precision, recall and F1 are 0 when their denominator is 0; weighted aggregates use
/// support / N as weights.
EvalReport compute_metrics(std::span<const TaskType> gold,
                           std::span<const interpreter::ClassificationOutcome> outcomes);

}  // namespace mate::eval
