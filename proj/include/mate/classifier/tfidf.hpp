#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace mate::classifier {

/// (feature index, value) pairs in ascending index order.
using SparseVector = std::vector<std::pair<std::uint32_t, double>>;

/// Dense token -> index map. Indices follow lexicographic token order.
class Vocabulary {
 public:
  Vocabulary() = default;
  /// Builds from distinct tokens; duplicates are dropped and the rest sorted.
  explicit Vocabulary(std::vector<std::string> tokens);

  std::size_t size() const noexcept { return tokens_.size(); }
  const std::vector<std::string>& tokens() const noexcept { return tokens_; }
  std::optional<std::uint32_t> find(std::string_view token) const;

  friend bool operator==(const Vocabulary& a, const Vocabulary& b) { return a.tokens_ == b.tokens_; }

 private:
  std::vector<std::string> tokens_;
  std::unordered_map<std::string, std::uint32_t> index_;
};

/// Smoothed-idf TF-IDF with raw term counts and L2 row normalization.
///   idf[j] = ln((1 + n_docs) / (1 + df[j])) + 1
struct TfidfModel {
  Vocabulary vocabulary;
  std::vector<double> idf;
  std::size_t n_docs = 0;

  std::size_t dimension() const noexcept { return vocabulary.size(); }

  friend bool operator==(const TfidfModel&, const TfidfModel&) = default;
};

/// Throws EmptyCorpus.
TfidfModel fit_tfidf(std::span<const std::string> corpus);

/// Dense embedding of length V. Unknown tokens are ignored; all-unknown gives the zero vector.
std::vector<double> embed(const TfidfModel& m, std::string_view prompt);
SparseVector embed_sparse(const TfidfModel& m, std::string_view prompt);

}  // namespace mate::classifier
