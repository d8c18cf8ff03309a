#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <variant>

#include "mate/classifier/knn.hpp"
#include "mate/classifier/logreg.hpp"

namespace mate::classifier {

struct LogregClassifier {
  TfidfModel tfidf;
  LinearModel linear;
  LogregHyper hyper;

  friend bool operator==(const LogregClassifier&, const LogregClassifier&) = default;
};

using NativeModel = std::variant<LogregClassifier, KnnModel>;

inline constexpr int kModelFormatVersion = 1;

TaskType predict_label(const NativeModel& model, std::string_view prompt);
std::string_view algorithm_name(const NativeModel& model);

/// Self-describing JSON document. Doubles are written in shortest round-trip form,
/// so serialize(deserialize(s)) == s.
std::string serialize_model(const NativeModel& model);
/// Throws ModelFormatError.
NativeModel deserialize_model(std::string_view document);

void save_model(const NativeModel& model, const std::filesystem::path& path);
NativeModel load_model(const std::filesystem::path& path);

}  // namespace mate::classifier
