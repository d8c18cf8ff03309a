#include "mate/eval/benchmark.hpp"

#include <algorithm>
#include <atomic>
#include <ctime>
#include <thread>

#include "mate/eval/dataset_io.hpp"

namespace mate::eval {

std::vector<interpreter::ClassificationOutcome> collect_outcomes(
    const interpreter::InterpreterBackend& backend, const LabeledDataset& dataset,
    std::size_t max_in_flight) {
  std::vector<interpreter::ClassificationOutcome> outcomes(dataset.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next.fetch_add(1); i < dataset.size(); i = next.fetch_add(1)) {
      try {
        outcomes[i] = interpreter::classify(backend, dataset[i].prompt);
      } catch (const std::exception& e) {
        outcomes[i] = interpreter::ClassificationOutcome::transport_failure(e.what());
      }
    }
  };
  const std::size_t n_workers = std::clamp<std::size_t>(max_in_flight, 1, std::max<std::size_t>(1, dataset.size()));
  if (n_workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(n_workers);
    for (std::size_t w = 0; w < n_workers; ++w) pool.emplace_back(worker);
  }
  return outcomes;
}

std::string utc_timestamp() {
  const std::time_t t = std::time(nullptr);
  std::tm utc{};
  gmtime_r(&t, &utc);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &utc);
  return buf;
}

EvalReport run_benchmark(const interpreter::InterpreterBackend& backend,
                         const LabeledDataset& dataset, std::size_t max_in_flight) {
  const auto outcomes = collect_outcomes(backend, dataset, max_in_flight);
  const auto gold = labels_of(dataset);
  EvalReport report = compute_metrics(gold, outcomes);
  report.backend = backend.name();
  report.dataset_fingerprint = dataset_fingerprint(dataset);
  report.timestamp = utc_timestamp();
  return report;
}

}  // namespace mate::eval
