#include "mate/eval/metrics.hpp"

#include <algorithm>
#include <array>

namespace mate::eval {

std::size_t ConfusionMatrix::row_total(std::size_t row) const {
  std::size_t s = invalid[row];
  for (auto c : counts[row]) s += c;
  return s;
}

std::size_t ConfusionMatrix::total() const {
  std::size_t s = 0;
  for (std::size_t r = 0; r < labels.size(); ++r) s += row_total(r);
  return s;
}

std::size_t ConfusionMatrix::trace() const {
  std::size_t s = 0;
  for (std::size_t r = 0; r < labels.size(); ++r) s += counts[r][r];
  return s;
}

bool ConfusionMatrix::has_invalid() const {
  return std::any_of(invalid.begin(), invalid.end(), [](auto v) { return v > 0; });
}

EvalReport compute_metrics(std::span<const TaskType> gold,
                           std::span<const interpreter::ClassificationOutcome> outcomes) {
  if (gold.size() != outcomes.size()) {
    throw LengthMismatch("gold has " + std::to_string(gold.size()) + " labels but there are " +
                         std::to_string(outcomes.size()) + " outcomes");
  }
  if (gold.empty()) throw EmptyInput();

  std::array<bool, kAllTaskTypes.size()> present{};
  for (TaskType g : gold) present[index_of(g)] = true;
  for (const auto& o : outcomes) {
    if (o.parsed) present[index_of(*o.parsed)] = true;
  }

  EvalReport r;
  auto& cm = r.confusion;
  std::array<std::size_t, kAllTaskTypes.size()> pos{};
  for (TaskType t : kAllTaskTypes) {
    if (!present[index_of(t)]) continue;
    pos[index_of(t)] = cm.labels.size();
    cm.labels.push_back(t);
  }
  const std::size_t L = cm.labels.size();
  cm.counts.assign(L, std::vector<std::size_t>(L, 0));
  cm.invalid.assign(L, 0);

  for (std::size_t i = 0; i < gold.size(); ++i) {
    const std::size_t row = pos[index_of(gold[i])];
    if (outcomes[i].parsed) {
      ++cm.counts[row][pos[index_of(*outcomes[i].parsed)]];
    } else {
      ++cm.invalid[row];
      ++r.n_failed;
    }
  }

  r.n = gold.size();
  const double n = static_cast<double>(r.n);
  r.accuracy = static_cast<double>(cm.trace()) / n;
  r.failure_rate = static_cast<double>(r.n_failed) / n;

  for (std::size_t c = 0; c < L; ++c) {
    std::size_t tp = cm.counts[c][c], predicted = 0;
    for (std::size_t row = 0; row < L; ++row) predicted += cm.counts[row][c];
    const std::size_t support = cm.row_total(c);

    ClassMetrics m;
    m.label = cm.labels[c];
    m.support = support;
    m.precision = predicted ? static_cast<double>(tp) / static_cast<double>(predicted) : 0.0;
    m.recall = support ? static_cast<double>(tp) / static_cast<double>(support) : 0.0;
    m.f1 = (m.precision + m.recall) > 0.0
               ? 2.0 * m.precision * m.recall / (m.precision + m.recall)
               : 0.0;
    const double w = static_cast<double>(support) / n;
    r.weighted_precision += w * m.precision;
    r.weighted_recall += w * m.recall;
    r.weighted_f1 += w * m.f1;
    r.per_class.push_back(m);
  }
  return r;
}

}  // namespace mate::eval
