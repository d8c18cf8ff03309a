#include "mate/eval/dataset_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include <nlohmann/json.hpp>

#include "mate/core/file_artifact.hpp"
#include "mate/core/hash.hpp"
#include "mate/core/text.hpp"

namespace fs = std::filesystem;

namespace mate::eval {

std::size_t expected_count(ModConTTVersion v, TaskType t) {
  if (v == ModConTTVersion::V1) return t == TaskType::UNK ? 50 : 20;
  return t == TaskType::UNK ? 150 : 50;
}

std::size_t expected_total(ModConTTVersion v) {
  std::size_t n = 0;
  for (TaskType t : kAllTaskTypes) n += expected_count(v, t);
  return n;
}

std::string_view to_string(ModConTTVersion v) { return v == ModConTTVersion::V1 ? "v1" : "v2"; }

std::optional<ModConTTVersion> parse_version(std::string_view s) {
  const auto v = text::to_lower(text::trim(s));
  if (v == "v1" || v == "1") return ModConTTVersion::V1;
  if (v == "v2" || v == "2") return ModConTTVersion::V2;
  return std::nullopt;
}

namespace {

std::string describe(const std::vector<CountDiscrepancy>& d) {
  std::string s = "class counts do not match:";
  for (const auto& x : d) {
    s += " " + (x.label ? std::string(to_string(*x.label)) : std::string("total")) + " expected " +
         std::to_string(x.expected) + " found " + std::to_string(x.found) + ";";
  }
  s.pop_back();
  return s;
}

struct Record {
  std::vector<std::string> fields;
  std::size_t line = 0;
};

// RFC 4180: comma separators, optional double-quoted fields with "" escapes,
// CRLF or LF line ends, quoted fields may span lines.
std::vector<Record> parse_csv_records(std::string_view in) {
  if (in.starts_with("\xEF\xBB\xBF")) in.remove_prefix(3);
  std::vector<Record> records;
  Record cur;
  std::string field;
  std::size_t line = 1;
  cur.line = 1;
  bool in_quotes = false, quoted = false, any = false;

  auto end_field = [&] {
    cur.fields.push_back(std::move(field));
    field.clear();
    quoted = false;
  };
  auto end_record = [&] {
    end_field();
    const bool blank = cur.fields.size() == 1 && cur.fields[0].empty() && !any;
    if (!blank) records.push_back(std::move(cur));
    cur = Record{};
    any = false;
  };

  for (std::size_t i = 0; i < in.size(); ++i) {
    const char c = in[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < in.size() && in[i + 1] == '"') {
          field.push_back('"');
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        if (c == '\n') ++line;
        field.push_back(c);
      }
      continue;
    }
    switch (c) {
      case '"':
        if (!field.empty() || quoted) throw DatasetParseError(cur.line, "stray quote inside field");
        in_quotes = quoted = any = true;
        break;
      case ',':
        any = true;
        end_field();
        break;
      case '\r':
        if (i + 1 < in.size() && in[i + 1] == '\n') break;
        [[fallthrough]];
      case '\n':
        end_record();
        cur.line = ++line;
        break;
      default:
        if (quoted) throw DatasetParseError(cur.line, "text after closing quote");
        any = true;
        field.push_back(c);
    }
  }
  if (in_quotes) throw DatasetParseError(cur.line, "unterminated quoted field");
  end_record();
  return records;
}

LabeledExample make_example(std::string prompt, std::string_view label, std::size_t line) {
  if (text::trim(prompt).empty()) throw DatasetParseError(line, "empty prompt");
  auto t = try_parse_task_label(label);
  if (!t) throw DatasetParseError(line, "unknown label \"" + std::string(label) + "\"");
  return {std::move(prompt), *t};
}

void reject_duplicates(const LabeledDataset& d, const std::vector<std::size_t>& lines) {
  std::unordered_map<std::string, std::size_t> seen;
  for (std::size_t i = 0; i < d.size(); ++i) {
    auto key = std::string(text::trim(d[i].prompt));
    auto [it, fresh] = seen.emplace(std::move(key), i);
    if (!fresh) throw DuplicatePrompt(d[i].prompt, lines[it->second], lines[i]);
  }
}

std::string read_all(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DatasetError("cannot open dataset " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

CountMismatch::CountMismatch(std::vector<CountDiscrepancy> d)
    : DatasetError(describe(d)), d_(std::move(d)) {}

DuplicatePrompt::DuplicatePrompt(std::string prompt, std::size_t first_line, std::size_t second_line)
    : DatasetError("duplicate prompt on lines " + std::to_string(first_line) + " and " +
                   std::to_string(second_line) + ": \"" + prompt + "\""),
      prompt_(std::move(prompt)),
      first_(first_line),
      second_(second_line) {}

namespace {

std::pair<LabeledDataset, std::vector<std::size_t>> csv_with_lines(std::string_view content) {
  auto records = parse_csv_records(content);
  if (records.empty()) throw DatasetParseError(1, "missing header \"prompt,label\"");
  const auto& header = records.front().fields;
  if (header.size() != 2 || text::to_lower(text::trim(header[0])) != "prompt" ||
      text::to_lower(text::trim(header[1])) != "label") {
    throw DatasetParseError(records.front().line, "header must be \"prompt,label\"");
  }
  LabeledDataset d;
  std::vector<std::size_t> lines;
  for (std::size_t r = 1; r < records.size(); ++r) {
    auto& rec = records[r];
    if (rec.fields.size() != 2) {
      throw DatasetParseError(rec.line, "expected 2 fields, found " + std::to_string(rec.fields.size()));
    }
    d.push_back(make_example(std::move(rec.fields[0]), rec.fields[1], rec.line));
    lines.push_back(rec.line);
  }
  return {std::move(d), std::move(lines)};
}

std::pair<LabeledDataset, std::vector<std::size_t>> jsonl_with_lines(std::string_view content) {
  LabeledDataset d;
  std::vector<std::size_t> lines;
  std::size_t line_no = 0, start = 0;
  while (start <= content.size()) {
    auto end = content.find('\n', start);
    if (end == std::string_view::npos) end = content.size();
    ++line_no;
    const auto line = text::trim(content.substr(start, end - start));
    start = end + 1;
    if (line.empty()) continue;
    nlohmann::json obj;
    try {
      obj = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error&) {
      throw DatasetParseError(line_no, "invalid JSON");
    }
    if (!obj.is_object() || !obj.contains("prompt") || !obj.contains("label") ||
        !obj["prompt"].is_string() || !obj["label"].is_string()) {
      throw DatasetParseError(line_no, "expected {\"prompt\": string, \"label\": string}");
    }
    d.push_back(make_example(obj["prompt"].get<std::string>(), obj["label"].get<std::string>(), line_no));
    lines.push_back(line_no);
  }
  return {std::move(d), std::move(lines)};
}

}  // namespace

LabeledDataset parse_dataset_csv(std::string_view content) { return csv_with_lines(content).first; }

LabeledDataset parse_dataset_jsonl(std::string_view content) {
  return jsonl_with_lines(content).first;
}

LabeledDataset load_dataset(const fs::path& path, std::optional<ModConTTVersion> expected) {
  const std::string content = read_all(path);
  const auto ext = extension_of(path);
  auto [d, lines] = (ext == "jsonl" || ext == "ndjson") ? jsonl_with_lines(content)
                                                         : csv_with_lines(content);
  reject_duplicates(d, lines);
  if (expected) check_composition(d, *expected);
  return std::move(d);
}

std::map<TaskType, std::size_t> label_counts(const LabeledDataset& d) {
  std::map<TaskType, std::size_t> counts;
  for (TaskType t : kAllTaskTypes) counts[t] = 0;
  for (const auto& e : d) ++counts[e.label];
  return counts;
}

void check_composition(const LabeledDataset& d, ModConTTVersion v) {
  std::vector<CountDiscrepancy> bad;
  const auto counts = label_counts(d);
  for (TaskType t : kAllTaskTypes) {
    if (counts.at(t) != expected_count(v, t)) bad.push_back({t, expected_count(v, t), counts.at(t)});
  }
  if (d.size() != expected_total(v)) bad.push_back({std::nullopt, expected_total(v), d.size()});
  if (!bad.empty()) throw CountMismatch(std::move(bad));
}

std::string to_csv(const LabeledDataset& d) {
  std::string out = "prompt,label\n";
  for (const auto& e : d) {
    const bool quote = e.prompt.find_first_of(",\"\r\n") != std::string::npos;
    out += quote ? "\"" + text::replace_all(e.prompt, "\"", "\"\"") + "\"" : e.prompt;
    out += ",";
    out += to_string(e.label);
    out += "\n";
  }
  return out;
}

void write_dataset_csv(const LabeledDataset& d, const fs::path& path) {
  write_file_bytes(path, to_csv(d));
}

std::string dataset_fingerprint(const LabeledDataset& d) {
  std::vector<std::string> recs;
  recs.reserve(d.size());
  for (const auto& e : d) recs.push_back(e.prompt + "\t" + std::string(to_string(e.label)) + "\n");
  std::sort(recs.begin(), recs.end());
  std::string all;
  for (const auto& r : recs) all += r;
  const auto digest = hash::sha256(all);
  return hash::to_hex(digest);
}

}  // namespace mate::eval
