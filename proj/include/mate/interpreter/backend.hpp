#pragma once

#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

#include "mate/core/task_type.hpp"

namespace mate::interpreter {

/// A backend could not produce an answer at all (network, HTTP status, malformed envelope).
class TransportError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Maps a free-text request to raw label text. Implementations must tolerate concurrent
/// calls; the raw output for a given prompt need not be stable.
class InterpreterBackend {
 public:
  virtual ~InterpreterBackend() = default;
  virtual std::string name() const = 0;
  /// Throws TransportError when no answer was obtained.
  virtual std::string classify_raw(std::string_view prompt) const = 0;
};

using BackendPtr = std::shared_ptr<const InterpreterBackend>;

struct ClassificationOutcome {
  std::string raw_output;
  std::optional<TaskType> parsed;

  bool failed() const noexcept { return !parsed.has_value(); }

  static ClassificationOutcome from_raw(std::string raw);
  static ClassificationOutcome transport_failure(std::string_view what);

  friend bool operator==(const ClassificationOutcome&, const ClassificationOutcome&) = default;
};

inline constexpr std::string_view kTransportErrorPrefix = "transport error: ";

/// Runs the backend and parses strictly. Transport errors become failed outcomes whose
/// raw_output starts with kTransportErrorPrefix. Throws InvalidRequest on a blank prompt.
ClassificationOutcome classify(const InterpreterBackend& backend, std::string_view prompt);

class EmptyList : public std::invalid_argument {
 public:
  EmptyList() : std::invalid_argument("failure rate of an empty outcome list") {}
};

/// Fraction of outcomes without a valid label.
double failure_rate(std::span<const ClassificationOutcome> outcomes);

}  // namespace mate::interpreter
