#pragma once

#include <string>
#include <vector>

#include "mate/core/task_type.hpp"

namespace mate {

struct LabeledExample {
  std::string prompt;
  TaskType label = TaskType::UNK;

  friend bool operator==(const LabeledExample&, const LabeledExample&) = default;
};

/// Prompt/label pairs; prompts are never blank.
using LabeledDataset = std::vector<LabeledExample>;

std::vector<std::string> prompts_of(const LabeledDataset& d);
std::vector<TaskType> labels_of(const LabeledDataset& d);

}  // namespace mate
