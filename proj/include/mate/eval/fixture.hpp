#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "mate/classifier/dataset.hpp"
#include "mate/eval/dataset_io.hpp"
#include "mate/interpreter/backend.hpp"

namespace mate::eval {

/// Key phrases the synthetic prompts are built around. No phrase occurs inside a prompt
/// of another class, so matching them recovers the label exactly.
const std::vector<std::pair<std::string, TaskType>>& fixture_key_phrases();

/// Template-generated stand-in for ModConTT with the version's exact class counts.
/// Deterministic per seed; different seeds pick different prompts.
LabeledDataset generate_synthetic_fixture(std::uint64_t seed, ModConTTVersion version);

/// Answers with the label of the longest key phrase found in the prompt, or UNK.
interpreter::BackendPtr make_keyword_backend();

}  // namespace mate::eval
