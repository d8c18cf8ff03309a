#pragma once

#include <cstdint>

#include "mate/classifier/dataset.hpp"

namespace mate::classifier {

struct Split {
  LabeledDataset train;
  LabeledDataset test;
};

/// Stratified split. Each label contributes floor(n * test_fraction) examples to the test
/// side, at least one when it has two or more. Selection uses a seeded shuffle; both sides
/// keep the input order. Throws InvalidFraction unless 0 < test_fraction < 1.
Split split_dataset(const LabeledDataset& d, double test_fraction, std::uint64_t seed);

/// Number of test examples a label with n examples contributes.
std::size_t stratum_test_size(std::size_t n, double test_fraction);

}  // namespace mate::classifier
