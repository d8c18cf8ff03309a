#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "mate/eval/metrics.hpp"

namespace mate::eval {

enum class ReportFormat { Json, Csv, Markdown };
std::optional<ReportFormat> parse_report_format(std::string_view s);

/// json: every field, losslessly. csv: the confusion matrix with label headers (INVALID
/// column only when non-empty). markdown: a metrics row plus per-class and confusion tables.
std::string render_report(const EvalReport& report, ReportFormat format);
void emit_report(const EvalReport& report, ReportFormat format, const std::filesystem::path& path);

EvalReport report_from_json(std::string_view json_text);

/// "| backend | acc | P | R | F1 | failed/N |" with three decimals.
std::string markdown_metrics_row(const EvalReport& report);
/// One line for terminals.
std::string summary_line(const EvalReport& report);

}  // namespace mate::eval
