#pragma once

#include <chrono>
#include <set>
#include <string>

#include "mate/experts/converter.hpp"

namespace mate::experts {

struct HttpBackendConfig {
  std::string endpoint;
  std::chrono::milliseconds timeout{120000};
  /// Stages the server claims; empty means all of them.
  std::set<StageId> stages;
};

/// POST <endpoint>/convert {"stage","input_name","input_base64"} -> {"output_base64"}.
/// Throws InvalidUrl on a malformed endpoint.
ConverterPtr make_http_backend(HttpBackendConfig config);

}  // namespace mate::experts
