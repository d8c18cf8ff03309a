#pragma once

#include <cstddef>
#include <vector>

#include "mate/classifier/dataset.hpp"
#include "mate/eval/metrics.hpp"
#include "mate/interpreter/backend.hpp"

namespace mate::eval {

/// Classifies every prompt once with up to max_in_flight concurrent calls; outcome i
/// always belongs to prompt i.
std::vector<interpreter::ClassificationOutcome> collect_outcomes(
    const interpreter::InterpreterBackend& backend, const LabeledDataset& dataset,
    std::size_t max_in_flight);

/// compute_metrics over collect_outcomes, stamped with backend name, dataset fingerprint
/// and UTC time.
EvalReport run_benchmark(const interpreter::InterpreterBackend& backend,
                         const LabeledDataset& dataset, std::size_t max_in_flight = 4);

std::string utc_timestamp();

}  // namespace mate::eval
