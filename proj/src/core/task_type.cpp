#include "mate/core/task_type.hpp"

#include "mate/core/text.hpp"

namespace mate {

std::optional<TaskType> try_parse_task_label(std::string_view raw) {
  const std::string code = text::to_upper(text::trim(raw));
  for (TaskType t : kAllTaskTypes) {
    if (code == to_string(t)) return t;
  }
  return std::nullopt;
}

TaskType parse_task_label(std::string_view raw) {
  if (auto t = try_parse_task_label(raw)) return *t;
  throw ParseFailure(std::string(raw));
}

}  // namespace mate
