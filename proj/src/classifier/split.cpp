#include "mate/classifier/split.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <random>
#include <string>

#include "mate/classifier/errors.hpp"

namespace mate::classifier {

namespace {

// Unbiased draw in [0, bound) from raw engine output; std::uniform_int_distribution
// is implementation-defined, which would make splits differ across standard libraries.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t r;
  do {
    r = rng();
  } while (r >= limit);
  return r % bound;
}

void shuffle(std::vector<std::size_t>& v, std::mt19937_64& rng) {
  for (std::size_t i = v.size(); i > 1; --i) {
    std::swap(v[i - 1], v[bounded(rng, i)]);
  }
}

}  // namespace

std::size_t stratum_test_size(std::size_t n, double test_fraction) {
  auto t = static_cast<std::size_t>(std::floor(static_cast<double>(n) * test_fraction));
  if (t == 0 && n >= 2) t = 1;
  return t;
}

Split split_dataset(const LabeledDataset& d, double test_fraction, std::uint64_t seed) {
  if (!(test_fraction > 0.0 && test_fraction < 1.0)) {
    throw InvalidFraction("test fraction must lie strictly between 0 and 1, got " +
                          std::to_string(test_fraction));
  }
  std::mt19937_64 rng(seed);
  std::vector<bool> in_test(d.size(), false);
  for (TaskType t : kAllTaskTypes) {
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < d.size(); ++i) {
      if (d[i].label == t) members.push_back(i);
    }
    if (members.empty()) continue;
    shuffle(members, rng);
    const std::size_t n_test = stratum_test_size(members.size(), test_fraction);
    for (std::size_t i = 0; i < n_test; ++i) in_test[members[i]] = true;
  }
  Split s;
  for (std::size_t i = 0; i < d.size(); ++i) (in_test[i] ? s.test : s.train).push_back(d[i]);
  return s;
}

}  // namespace mate::classifier
