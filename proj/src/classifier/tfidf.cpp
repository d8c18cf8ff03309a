#include "mate/classifier/tfidf.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "mate/classifier/errors.hpp"
#include "mate/classifier/tokenizer.hpp"

namespace mate::classifier {

Vocabulary::Vocabulary(std::vector<std::string> tokens) : tokens_(std::move(tokens)) {
  std::sort(tokens_.begin(), tokens_.end());
  tokens_.erase(std::unique(tokens_.begin(), tokens_.end()), tokens_.end());
  index_.reserve(tokens_.size());
  for (std::uint32_t i = 0; i < tokens_.size(); ++i) index_.emplace(tokens_[i], i);
}

std::optional<std::uint32_t> Vocabulary::find(std::string_view token) const {
  auto it = index_.find(std::string(token));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

TfidfModel fit_tfidf(std::span<const std::string> corpus) {
  if (corpus.empty()) throw EmptyCorpus();

  std::map<std::string, std::size_t> doc_freq;
  for (const auto& doc : corpus) {
    auto toks = tokenize(doc);
    std::set<std::string> distinct(toks.begin(), toks.end());
    for (const auto& t : distinct) ++doc_freq[t];
  }

  std::vector<std::string> tokens;
  tokens.reserve(doc_freq.size());
  for (const auto& [tok, _] : doc_freq) tokens.push_back(tok);

  TfidfModel m;
  m.vocabulary = Vocabulary(std::move(tokens));
  m.n_docs = corpus.size();
  m.idf.resize(m.vocabulary.size());
  const double n = static_cast<double>(corpus.size());
  // std::map iteration order matches the sorted vocabulary.
  std::size_t j = 0;
  for (const auto& [tok, df] : doc_freq) {
    m.idf[j++] = std::log((1.0 + n) / (1.0 + static_cast<double>(df))) + 1.0;
  }
  return m;
}

SparseVector embed_sparse(const TfidfModel& m, std::string_view prompt) {
  std::map<std::uint32_t, double> counts;
  for (const auto& tok : tokenize(prompt)) {
    if (auto idx = m.vocabulary.find(tok)) counts[*idx] += 1.0;
  }
  SparseVector v;
  v.reserve(counts.size());
  double norm_sq = 0.0;
  for (const auto& [idx, tf] : counts) {
    const double w = tf * m.idf[idx];
    v.emplace_back(idx, w);
    norm_sq += w * w;
  }
  if (norm_sq > 0.0) {
    const double norm = std::sqrt(norm_sq);
    for (auto& [idx, w] : v) w /= norm;
  }
  return v;
}

std::vector<double> embed(const TfidfModel& m, std::string_view prompt) {
  std::vector<double> dense(m.dimension(), 0.0);
  for (const auto& [idx, w] : embed_sparse(m, prompt)) dense[idx] = w;
  return dense;
}

}  // namespace mate::classifier
