#include "mate/eval/report.hpp"

#include <cstdio>

#include <nlohmann/json.hpp>

#include "mate/core/file_artifact.hpp"
#include "mate/core/text.hpp"

namespace mate::eval {

using nlohmann::json;

std::optional<ReportFormat> parse_report_format(std::string_view s) {
  const auto f = text::to_lower(text::trim(s));
  if (f == "json") return ReportFormat::Json;
  if (f == "csv") return ReportFormat::Csv;
  if (f == "markdown" || f == "md") return ReportFormat::Markdown;
  return std::nullopt;
}

namespace {

std::string fixed3(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

json labels_json(const std::vector<TaskType>& labels) {
  json a = json::array();
  for (TaskType t : labels) a.push_back(std::string(to_string(t)));
  return a;
}

TaskType label_from(const json& j) { return parse_task_label(j.get<std::string>()); }

json to_json(const EvalReport& r) {
  json per_class = json::array();
  for (const auto& m : r.per_class) {
    per_class.push_back({{"label", std::string(to_string(m.label))},
                         {"precision", m.precision},
                         {"recall", m.recall},
                         {"f1", m.f1},
                         {"support", m.support}});
  }
  return json{{"backend", r.backend},
              {"dataset_fingerprint", r.dataset_fingerprint},
              {"timestamp", r.timestamp},
              {"n", r.n},
              {"n_failed", r.n_failed},
              {"accuracy", r.accuracy},
              {"weighted_precision", r.weighted_precision},
              {"weighted_recall", r.weighted_recall},
              {"weighted_f1", r.weighted_f1},
              {"failure_rate", r.failure_rate},
              {"per_class", std::move(per_class)},
              {"confusion",
               {{"labels", labels_json(r.confusion.labels)},
                {"counts", r.confusion.counts},
                {"invalid", r.confusion.invalid}}}};
}

std::string render_csv(const EvalReport& r) {
  const auto& cm = r.confusion;
  const bool inv = cm.has_invalid();
  std::string out = "gold\\predicted";
  for (TaskType t : cm.labels) out += "," + std::string(to_string(t));
  if (inv) out += "," + std::string(kInvalidColumn);
  out += "\n";
  for (std::size_t row = 0; row < cm.labels.size(); ++row) {
    out += std::string(to_string(cm.labels[row]));
    for (auto c : cm.counts[row]) out += "," + std::to_string(c);
    if (inv) out += "," + std::to_string(cm.invalid[row]);
    out += "\n";
  }
  return out;
}

std::string render_markdown(const EvalReport& r) {
  std::string out =
      "| Interpreter | Accuracy | Precision | Recall | F1-Score | Failure Rate |\n"
      "|---|---|---|---|---|---|\n" +
      markdown_metrics_row(r) + "\n\n";

  out += "| Class | Precision | Recall | F1-Score | Support |\n|---|---|---|---|---|\n";
  for (const auto& m : r.per_class) {
    out += "| " + std::string(to_string(m.label)) + " | " + fixed3(m.precision) + " | " +
           fixed3(m.recall) + " | " + fixed3(m.f1) + " | " + std::to_string(m.support) + " |\n";
  }

  const auto& cm = r.confusion;
  const bool inv = cm.has_invalid();
  out += "\n| gold \\ predicted |";
  std::string rule = "|---|";
  for (TaskType t : cm.labels) {
    out += " " + std::string(to_string(t)) + " |";
    rule += "---|";
  }
  if (inv) {
    out += " " + std::string(kInvalidColumn) + " |";
    rule += "---|";
  }
  out += "\n" + rule + "\n";
  for (std::size_t row = 0; row < cm.labels.size(); ++row) {
    out += "| " + std::string(to_string(cm.labels[row])) + " |";
    for (auto c : cm.counts[row]) out += " " + std::to_string(c) + " |";
    if (inv) out += " " + std::to_string(cm.invalid[row]) + " |";
    out += "\n";
  }
  return out;
}

}  // namespace

std::string markdown_metrics_row(const EvalReport& r) {
  return "| " + r.backend + " | " + fixed3(r.accuracy) + " | " + fixed3(r.weighted_precision) +
         " | " + fixed3(r.weighted_recall) + " | " + fixed3(r.weighted_f1) + " | " +
         std::to_string(r.n_failed) + "/" + std::to_string(r.n) + " |";
}

std::string summary_line(const EvalReport& r) {
  return r.backend + ": accuracy " + fixed3(r.accuracy) + ", precision " +
         fixed3(r.weighted_precision) + ", recall " + fixed3(r.weighted_recall) + ", F1 " +
         fixed3(r.weighted_f1) + ", failure rate " + std::to_string(r.n_failed) + "/" +
         std::to_string(r.n);
}

std::string render_report(const EvalReport& report, ReportFormat format) {
  switch (format) {
    case ReportFormat::Json: return to_json(report).dump(2) + "\n";
    case ReportFormat::Csv: return render_csv(report);
    case ReportFormat::Markdown: return render_markdown(report);
  }
  return {};
}

void emit_report(const EvalReport& report, ReportFormat format, const std::filesystem::path& path) {
  write_file_bytes(path, render_report(report, format));
}

EvalReport report_from_json(std::string_view json_text) {
  const json j = json::parse(json_text);
  EvalReport r;
  r.backend = j.at("backend").get<std::string>();
  r.dataset_fingerprint = j.at("dataset_fingerprint").get<std::string>();
  r.timestamp = j.at("timestamp").get<std::string>();
  r.n = j.at("n").get<std::size_t>();
  r.n_failed = j.at("n_failed").get<std::size_t>();
  r.accuracy = j.at("accuracy").get<double>();
  r.weighted_precision = j.at("weighted_precision").get<double>();
  r.weighted_recall = j.at("weighted_recall").get<double>();
  r.weighted_f1 = j.at("weighted_f1").get<double>();
  r.failure_rate = j.at("failure_rate").get<double>();
  for (const auto& m : j.at("per_class")) {
    r.per_class.push_back({label_from(m.at("label")), m.at("precision").get<double>(),
                           m.at("recall").get<double>(), m.at("f1").get<double>(),
                           m.at("support").get<std::size_t>()});
  }
  const auto& cm = j.at("confusion");
  for (const auto& l : cm.at("labels")) r.confusion.labels.push_back(label_from(l));
  r.confusion.counts = cm.at("counts").get<std::vector<std::vector<std::size_t>>>();
  r.confusion.invalid = cm.at("invalid").get<std::vector<std::size_t>>();
  return r;
}

}  // namespace mate::eval
