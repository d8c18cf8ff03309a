#include "mate/interpreter/backend.hpp"

#include <algorithm>

#include "mate/core/file_artifact.hpp"
#include "mate/core/text.hpp"

namespace mate::interpreter {

ClassificationOutcome ClassificationOutcome::from_raw(std::string raw) {
  ClassificationOutcome o;
  o.parsed = try_parse_task_label(raw);
  o.raw_output = std::move(raw);
  return o;
}

ClassificationOutcome ClassificationOutcome::transport_failure(std::string_view what) {
  ClassificationOutcome o;
  o.raw_output = std::string(kTransportErrorPrefix) + std::string(what);
  return o;
}

ClassificationOutcome classify(const InterpreterBackend& backend, std::string_view prompt) {
  if (text::trim(prompt).empty()) throw InvalidRequest("prompt is empty");
  try {
    return ClassificationOutcome::from_raw(backend.classify_raw(prompt));
  } catch (const TransportError& e) {
    return ClassificationOutcome::transport_failure(e.what());
  }
}

double failure_rate(std::span<const ClassificationOutcome> outcomes) {
  if (outcomes.empty()) throw EmptyList();
  const auto failed = std::count_if(outcomes.begin(), outcomes.end(),
                                    [](const auto& o) { return o.failed(); });
  return static_cast<double>(failed) / static_cast<double>(outcomes.size());
}

}  // namespace mate::interpreter
