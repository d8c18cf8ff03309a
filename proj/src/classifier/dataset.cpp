#include "mate/classifier/dataset.hpp"

namespace mate {

std::vector<std::string> prompts_of(const LabeledDataset& d) {
  std::vector<std::string> out;
  out.reserve(d.size());
  for (const auto& e : d) out.push_back(e.prompt);
  return out;
}

std::vector<TaskType> labels_of(const LabeledDataset& d) {
  std::vector<TaskType> out;
  out.reserve(d.size());
  for (const auto& e : d) out.push_back(e.label);
  return out;
}

}  // namespace mate
