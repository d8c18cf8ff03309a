#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mate/classifier/dataset.hpp"

namespace mate::eval {

/// V1: 20 per conversion class + 50 UNK = 230. V2: 50 per conversion class + 150 UNK = 600.
enum class ModConTTVersion { V1, V2 };

std::size_t expected_count(ModConTTVersion v, TaskType t);
std::size_t expected_total(ModConTTVersion v);
std::string_view to_string(ModConTTVersion v);
/// Accepts "v1"/"V1"/"1" and likewise for v2.
std::optional<ModConTTVersion> parse_version(std::string_view s);

class DatasetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// `line` is the 1-based line where the offending record starts (the header is line 1).
class DatasetParseError : public DatasetError {
 public:
  DatasetParseError(std::size_t line, const std::string& reason)
      : DatasetError("line " + std::to_string(line) + ": " + reason), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

struct CountDiscrepancy {
  std::optional<TaskType> label;  // empty for the grand total
  std::size_t expected = 0;
  std::size_t found = 0;
};

class CountMismatch : public DatasetError {
 public:
  explicit CountMismatch(std::vector<CountDiscrepancy> d);
  const std::vector<CountDiscrepancy>& discrepancies() const noexcept { return d_; }

 private:
  std::vector<CountDiscrepancy> d_;
};

class DuplicatePrompt : public DatasetError {
 public:
  DuplicatePrompt(std::string prompt, std::size_t first_line, std::size_t second_line);
  const std::string& prompt() const noexcept { return prompt_; }
  std::size_t first_line() const noexcept { return first_; }
  std::size_t second_line() const noexcept { return second_; }

 private:
  std::string prompt_;
  std::size_t first_, second_;
};

/// CSV with header "prompt,label" (RFC 4180 quoting). Labels are strict codes.
LabeledDataset parse_dataset_csv(std::string_view content);
/// One {"prompt": ..., "label": ...} object per line; blank lines ignored.
LabeledDataset parse_dataset_jsonl(std::string_view content);

/// Chooses the parser by extension (.jsonl/.ndjson, otherwise CSV), rejects duplicate
/// prompts, and checks the version's composition when one is given.
LabeledDataset load_dataset(const std::filesystem::path& path,
                            std::optional<ModConTTVersion> expected = std::nullopt);

std::map<TaskType, std::size_t> label_counts(const LabeledDataset& d);
/// Throws CountMismatch listing every class (and the total) that is off.
void check_composition(const LabeledDataset& d, ModConTTVersion v);

std::string to_csv(const LabeledDataset& d);
void write_dataset_csv(const LabeledDataset& d, const std::filesystem::path& path);

/// Hex SHA-256 over the sorted "prompt\tlabel\n" records; independent of row order.
std::string dataset_fingerprint(const LabeledDataset& d);

}  // namespace mate::eval
