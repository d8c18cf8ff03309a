#pragma once

#include <memory>
#include <string>

#include "mate/classifier/model_io.hpp"
#include "mate/interpreter/backend.hpp"

namespace mate::interpreter {

/// Emits the predicted code directly, so parsing never fails.
BackendPtr make_native_backend(std::shared_ptr<const classifier::NativeModel> model,
                               std::string name = {});

}  // namespace mate::interpreter
