#include "mate/classifier/model_io.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "mate/classifier/errors.hpp"

namespace mate::classifier {

using nlohmann::json;

namespace {

constexpr std::string_view kFormatName = "mate-native-classifier";

json tfidf_to_json(const TfidfModel& m) {
  return json{{"vocabulary", m.vocabulary.tokens()}, {"idf", m.idf}, {"n_docs", m.n_docs}};
}

TfidfModel tfidf_from_json(const json& j) {
  TfidfModel m;
  auto tokens = j.at("vocabulary").get<std::vector<std::string>>();
  const auto n_tokens = tokens.size();
  m.vocabulary = Vocabulary(std::move(tokens));
  if (m.vocabulary.size() != n_tokens) throw ModelFormatError("vocabulary has duplicate tokens");
  m.idf = j.at("idf").get<std::vector<double>>();
  m.n_docs = j.at("n_docs").get<std::size_t>();
  if (m.idf.size() != m.vocabulary.size()) throw ModelFormatError("idf length != vocabulary size");
  return m;
}

json labels_to_json(const std::vector<TaskType>& labels) {
  json arr = json::array();
  for (TaskType t : labels) arr.push_back(std::string(to_string(t)));
  return arr;
}

std::vector<TaskType> labels_from_json(const json& arr) {
  std::vector<TaskType> out;
  for (const auto& v : arr) {
    auto t = try_parse_task_label(v.get<std::string>());
    if (!t) throw ModelFormatError("unknown label in model file: " + v.get<std::string>());
    out.push_back(*t);
  }
  return out;
}

json to_json(const LogregClassifier& m) {
  json weights = json::array();
  for (std::size_t c = 0; c < m.linear.n_classes(); ++c) {
    auto first = m.linear.weights.begin() + static_cast<std::ptrdiff_t>(c * m.linear.n_features);
    weights.push_back(std::vector<double>(first, first + static_cast<std::ptrdiff_t>(m.linear.n_features)));
  }
  return json{{"algorithm", "logreg"},
              {"tfidf", tfidf_to_json(m.tfidf)},
              {"classes", labels_to_json(m.linear.classes)},
              {"weights", std::move(weights)},
              {"bias", m.linear.bias},
              {"hyperparameters",
               {{"learning_rate", m.hyper.learning_rate},
                {"epochs", m.hyper.epochs},
                {"l2_penalty", m.hyper.l2_penalty},
                {"seed", m.hyper.seed}}}};
}

json to_json(const KnnModel& m) {
  json prompts = json::array();
  for (const auto& e : m.train) prompts.push_back(e.prompt);
  return json{{"algorithm", "knn"},
              {"tfidf", tfidf_to_json(m.tfidf)},
              {"hyperparameters", {{"k", m.k}}},
              {"train_prompts", std::move(prompts)},
              {"train_labels", labels_to_json(labels_of(m.train))}};
}

LogregClassifier logreg_from_json(const json& j) {
  LogregClassifier m;
  m.tfidf = tfidf_from_json(j.at("tfidf"));
  m.linear.classes = labels_from_json(j.at("classes"));
  m.linear.n_features = m.tfidf.dimension();
  const auto& rows = j.at("weights");
  if (rows.size() != m.linear.n_classes()) throw ModelFormatError("weight rows != class count");
  for (const auto& row : rows) {
    auto r = row.get<std::vector<double>>();
    if (r.size() != m.linear.n_features) throw ModelFormatError("weight row width != vocabulary size");
    m.linear.weights.insert(m.linear.weights.end(), r.begin(), r.end());
  }
  m.linear.bias = j.at("bias").get<std::vector<double>>();
  if (m.linear.bias.size() != m.linear.n_classes()) throw ModelFormatError("bias length != class count");
  const auto& h = j.at("hyperparameters");
  m.hyper.learning_rate = h.at("learning_rate").get<double>();
  m.hyper.epochs = h.at("epochs").get<int>();
  m.hyper.l2_penalty = h.at("l2_penalty").get<double>();
  m.hyper.seed = h.at("seed").get<std::uint64_t>();
  return m;
}

KnnModel knn_from_json(const json& j) {
  auto prompts = j.at("train_prompts").get<std::vector<std::string>>();
  auto labels = labels_from_json(j.at("train_labels"));
  if (prompts.size() != labels.size()) throw ModelFormatError("train prompts/labels length mismatch");
  LabeledDataset train;
  for (std::size_t i = 0; i < prompts.size(); ++i) train.push_back({std::move(prompts[i]), labels[i]});
  return build_knn(std::move(train), tfidf_from_json(j.at("tfidf")),
                   j.at("hyperparameters").at("k").get<std::size_t>());
}

}  // namespace

TaskType predict_label(const NativeModel& model, std::string_view prompt) {
  return std::visit(
      [&](const auto& m) -> TaskType {
        using M = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<M, LogregClassifier>) {
          return predict(m.linear, m.tfidf, prompt).label;
        } else {
          return knn_predict(m, prompt);
        }
      },
      model);
}

std::string_view algorithm_name(const NativeModel& model) {
  return std::holds_alternative<LogregClassifier>(model) ? "logreg" : "knn";
}

std::string serialize_model(const NativeModel& model) {
  json body = std::visit([](const auto& m) { return to_json(m); }, model);
  json doc{{"format", kFormatName}, {"version", kModelFormatVersion}};
  doc.update(body);
  return doc.dump(1) + "\n";
}

NativeModel deserialize_model(std::string_view document) {
  json doc;
  try {
    doc = json::parse(document);
  } catch (const json::parse_error& e) {
    throw ModelFormatError(std::string("model file is not valid JSON: ") + e.what());
  }
  try {
    if (doc.value("format", "") != kFormatName) throw ModelFormatError("not a mate classifier model");
    const int version = doc.at("version").get<int>();
    if (version != kModelFormatVersion) {
      throw ModelFormatError("unsupported model format version " + std::to_string(version));
    }
    const auto algo = doc.at("algorithm").get<std::string>();
    if (algo == "logreg") return logreg_from_json(doc);
    if (algo == "knn") return knn_from_json(doc);
    throw ModelFormatError("unknown algorithm '" + algo + "'");
  } catch (const json::exception& e) {
    throw ModelFormatError(std::string("malformed model file: ") + e.what());
  } catch (const ClassifierError& e) {
    if (dynamic_cast<const ModelFormatError*>(&e)) throw;
    throw ModelFormatError(std::string("inconsistent model file: ") + e.what());
  }
}

void save_model(const NativeModel& model, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write model to " + path.string());
  out << serialize_model(model);
}

NativeModel load_model(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ModelFormatError("cannot open model file " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return deserialize_model(ss.str());
}

}  // namespace mate::classifier
