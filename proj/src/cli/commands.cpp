#include "mate/cli/commands.hpp"

#include <cstdio>
#include <iomanip>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "mate/classifier/errors.hpp"
#include "mate/classifier/model_io.hpp"
#include "mate/classifier/split.hpp"
#include "mate/cli/config.hpp"
#include "mate/core/text.hpp"
#include "mate/eval/benchmark.hpp"
#include "mate/eval/dataset_io.hpp"
#include "mate/eval/fixture.hpp"
#include "mate/eval/report.hpp"
#include "mate/interpreter/native_backend.hpp"
#include "mate/orchestrator/session.hpp"

namespace fs = std::filesystem;

namespace mate::cli {

namespace {

struct RunOptions {
  fs::path config;
  bool keep_intermediates = false;
};

struct EvalOptions {
  fs::path config;
  fs::path dataset;
  std::string expect_version;
  fs::path report;
  std::string format;
  std::size_t max_in_flight = 0;
};

struct TrainOptions {
  fs::path dataset;
  std::string algo = "logreg";
  fs::path model_out;
  std::uint64_t seed = 7;
  double test_fraction = 0.10;
  double learning_rate = classifier::LogregHyper{}.learning_rate;
  int epochs = classifier::LogregHyper{}.epochs;
  double l2 = classifier::LogregHyper{}.l2_penalty;
  std::size_t k = classifier::kDefaultK;
  std::string expect_version;
  fs::path report;
};

struct ValidateOptions {
  fs::path dataset;
  std::string expect_version;
};

struct FixtureOptions {
  std::string version = "v2";
  std::uint64_t seed = 7;
  fs::path out;
};

std::optional<eval::ModConTTVersion> version_flag(const std::string& s) {
  if (s.empty()) return std::nullopt;
  auto v = eval::parse_version(s);
  if (!v) throw ConfigError("--expect-version must be v1 or v2, got '" + s + "'");
  return v;
}

bool is_quit(std::string_view line) {
  return text::iequals(line, "quit") || text::iequals(line, "exit");
}

int cmd_run(const RunOptions& o, std::istream& in, std::ostream& out, std::ostream& err) {
  Config config;
  interpreter::BackendPtr interp;
  experts::ConverterSet converters;
  fs::path output_dir;
  try {
    config = load_config(o.config);
    interp = build_interpreter(config);
    converters = build_converters(config);
    output_dir = orchestrator::resolve_output_dir(config.output_root, config.output_policy);
  } catch (const std::exception& e) {
    err << "mate: " << e.what() << "\n";
    return kExitUserError;
  }

  orchestrator::SessionConfig sc;
  sc.menu_after_reprompts = config.menu_after;
  sc.keep_intermediates = config.keep_intermediates || o.keep_intermediates;
  const orchestrator::StepContext ctx{*interp, orchestrator::default_registry(), converters, sc};

  out << "MATE ready. Output directory: " << output_dir.string() << "\n"
      << "Describe the conversion you need (type 'quit' to leave).\n"
      << std::flush;

  auto session = orchestrator::Session::start(output_dir);
  std::string line;
  while (std::getline(in, line)) {
    const auto msg = text::trim(line);
    if (msg.empty()) continue;
    if (is_quit(msg)) break;
    std::string reply;
    try {
      std::tie(session, reply) = orchestrator::step(std::move(session), msg, ctx);
    } catch (const std::exception& e) {
      reply = std::string("Something went wrong: ") + e.what() + ". Please try again.";
      session = orchestrator::Session::start(output_dir);
    }
    out << reply << "\n" << std::flush;
    if (session.finished()) session = orchestrator::Session::start(output_dir);
  }
  return kExitOk;
}

int cmd_eval(const EvalOptions& o, std::ostream& out, std::ostream& err) {
  Config config;
  interpreter::BackendPtr interp;
  std::optional<eval::ModConTTVersion> version;
  eval::ReportFormat format = eval::ReportFormat::Json;
  try {
    version = version_flag(o.expect_version);
    if (!o.format.empty()) {
      auto f = eval::parse_report_format(o.format);
      if (!f) throw ConfigError("--format must be json, csv or markdown");
      format = *f;
    }
    config = load_config(o.config);
    interp = build_interpreter(config);
  } catch (const std::exception& e) {
    err << "mate eval: " << e.what() << "\n";
    return kExitUserError;
  }

  LabeledDataset data;
  try {
    data = eval::load_dataset(o.dataset, version);
  } catch (const eval::DatasetError& e) {
    err << "mate eval: " << o.dataset.string() << ": " << e.what() << "\n";
    return kExitValidation;
  }

  const std::size_t in_flight = o.max_in_flight ? o.max_in_flight : config.interpreter.max_in_flight;
  const auto report = eval::run_benchmark(*interp, data, in_flight);
  if (!o.report.empty()) {
    try {
      eval::emit_report(report, format, o.report);
    } catch (const std::exception& e) {
      err << "mate eval: " << e.what() << "\n";
      return kExitUserError;
    }
  }
  out << eval::summary_line(report) << "\n";

  // Every prompt failing in transport means the backend was never reachable.
  const auto outcomes_all_transport = report.n_failed == report.n && config.interpreter.backend != "native" &&
                                      config.interpreter.backend != "keyword";
  if (outcomes_all_transport) {
    err << "mate eval: every request failed; is the interpreter endpoint reachable?\n";
    return kExitBackend;
  }
  return kExitOk;
}

int cmd_train(const TrainOptions& o, std::ostream& out, std::ostream& err) {
  if (o.algo != "logreg" && o.algo != "knn") {
    err << "mate train: --algo must be logreg or knn\n";
    return kExitUserError;
  }
  LabeledDataset data;
  try {
    data = eval::load_dataset(o.dataset, version_flag(o.expect_version));
  } catch (const eval::DatasetError& e) {
    err << "mate train: " << o.dataset.string() << ": " << e.what() << "\n";
    return kExitValidation;
  } catch (const ConfigError& e) {
    err << "mate train: " << e.what() << "\n";
    return kExitUserError;
  }

  try {
    const auto split = classifier::split_dataset(data, o.test_fraction, o.seed);
    const auto tfidf = classifier::fit_tfidf(prompts_of(split.train));

    classifier::NativeModel model;
    if (o.algo == "logreg") {
      classifier::LogregHyper hyper{o.learning_rate, o.epochs, o.l2, o.seed};
      auto linear = classifier::train_logreg(split.train, tfidf, hyper);
      model = classifier::LogregClassifier{tfidf, std::move(linear), hyper};
    } else {
      model = classifier::build_knn(split.train, tfidf, o.k);
    }
    auto shared = std::make_shared<const classifier::NativeModel>(std::move(model));

    out << "train " << split.train.size() << " examples, test " << split.test.size()
        << " examples, vocabulary " << tfidf.dimension() << " tokens\n";
    if (!o.model_out.empty()) {
      classifier::save_model(*shared, o.model_out);
      out << "model written to " << o.model_out.string() << "\n";
    }
    if (!split.test.empty()) {
      const auto backend = interpreter::make_native_backend(shared);
      const auto outcomes = eval::collect_outcomes(*backend, split.test, 1);
      auto report = eval::compute_metrics(labels_of(split.test), outcomes);
      report.backend = backend->name();
      report.dataset_fingerprint = eval::dataset_fingerprint(split.test);
      out << "test " << eval::summary_line(report) << "\n";
      if (!o.report.empty()) eval::emit_report(report, eval::ReportFormat::Json, o.report);
    }
  } catch (const classifier::ClassifierError& e) {
    err << "mate train: " << e.what() << "\n";
    return kExitUserError;
  } catch (const std::exception& e) {
    err << "mate train: " << e.what() << "\n";
    return kExitUserError;
  }
  return kExitOk;
}

int cmd_validate(const ValidateOptions& o, std::ostream& out, std::ostream& err) {
  std::optional<eval::ModConTTVersion> version;
  try {
    version = version_flag(o.expect_version);
  } catch (const ConfigError& e) {
    err << "mate validate-data: " << e.what() << "\n";
    return kExitUserError;
  }
  LabeledDataset data;
  try {
    data = eval::load_dataset(o.dataset);
  } catch (const eval::DatasetError& e) {
    err << "mate validate-data: " << o.dataset.string() << ": " << e.what() << "\n";
    return kExitValidation;
  }

  const auto counts = eval::label_counts(data);
  out << std::left << std::setw(8) << "label" << std::right << std::setw(8) << "count";
  if (version) out << std::setw(10) << "expected";
  out << "\n";
  for (TaskType t : kAllTaskTypes) {
    out << std::left << std::setw(8) << to_string(t) << std::right << std::setw(8) << counts.at(t);
    if (version) out << std::setw(10) << eval::expected_count(*version, t);
    out << "\n";
  }
  out << std::left << std::setw(8) << "total" << std::right << std::setw(8) << data.size();
  if (version) out << std::setw(10) << eval::expected_total(*version);
  out << "\n";

  if (version) {
    try {
      eval::check_composition(data, *version);
    } catch (const eval::CountMismatch& e) {
      err << "mate validate-data: " << e.what() << "\n";
      return kExitValidation;
    }
    out << "valid ModConTT " << eval::to_string(*version) << " composition\n";
  }
  return kExitOk;
}

int cmd_fixture(const FixtureOptions& o, std::ostream& out, std::ostream& err) {
  const auto v = eval::parse_version(o.version);
  if (!v) {
    err << "mate gen-fixture: --version must be v1 or v2\n";
    return kExitUserError;
  }
  const auto data = eval::generate_synthetic_fixture(o.seed, *v);
  try {
    eval::write_dataset_csv(data, o.out);
  } catch (const std::exception& e) {
    err << "mate gen-fixture: " << e.what() << "\n";
    return kExitUserError;
  }
  out << "wrote " << data.size() << " rows to " << o.out.string() << "\n";
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"mate: modality-conversion assistant, task classifier and benchmark harness"};
  app.require_subcommand(1);

  RunOptions run;
  auto* run_cmd = app.add_subcommand("run", "Interactive conversion session on stdin/stdout");
  run_cmd->add_option("--config", run.config, "Config file")->required();
  run_cmd->add_flag("--keep-intermediates", run.keep_intermediates, "Keep pipeline scratch files");

  EvalOptions ev;
  auto* eval_cmd = app.add_subcommand("eval", "Benchmark the configured interpreter on a dataset");
  eval_cmd->add_option("--config", ev.config, "Config file")->required();
  eval_cmd->add_option("--dataset", ev.dataset, "Dataset (.csv or .jsonl)")->required();
  eval_cmd->add_option("--expect-version", ev.expect_version, "Check v1/v2 composition");
  eval_cmd->add_option("--report", ev.report, "Report output path");
  eval_cmd->add_option("--format", ev.format, "json | csv | markdown")->default_str("json");
  eval_cmd->add_option("--max-in-flight", ev.max_in_flight, "Concurrent requests");

  TrainOptions tr;
  auto* train_cmd = app.add_subcommand("train", "Train a native classifier with a held-out split");
  train_cmd->add_option("--dataset", tr.dataset, "Dataset (.csv or .jsonl)")->required();
  train_cmd->add_option("--algo", tr.algo, "logreg | knn")->capture_default_str();
  train_cmd->add_option("--model-out", tr.model_out, "Where to write the model");
  train_cmd->add_option("--seed", tr.seed, "Split seed")->capture_default_str();
  train_cmd->add_option("--test-fraction", tr.test_fraction, "Held-out fraction")->capture_default_str();
  train_cmd->add_option("--learning-rate", tr.learning_rate, "logreg step size")->capture_default_str();
  train_cmd->add_option("--epochs", tr.epochs, "logreg epochs")->capture_default_str();
  train_cmd->add_option("--l2", tr.l2, "logreg L2 penalty")->capture_default_str();
  train_cmd->add_option("-k,--k", tr.k, "knn neighbours")->capture_default_str();
  train_cmd->add_option("--expect-version", tr.expect_version, "Check v1/v2 composition");
  train_cmd->add_option("--report", tr.report, "Write the held-out report (json)");

  ValidateOptions va;
  auto* val_cmd = app.add_subcommand("validate-data", "Check a dataset file and print class counts");
  val_cmd->add_option("--dataset", va.dataset, "Dataset (.csv or .jsonl)")->required();
  val_cmd->add_option("--expect-version", va.expect_version, "v1 | v2");

  FixtureOptions fx;
  auto* fix_cmd = app.add_subcommand("gen-fixture", "Write a synthetic dataset with ModConTT class counts");
  fix_cmd->add_option("--version", fx.version, "v1 | v2")->capture_default_str();
  fix_cmd->add_option("--seed", fx.seed, "Generator seed")->capture_default_str();
  fix_cmd->add_option("--out", fx.out, "Output CSV")->required();

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << "mate: " << e.what() << "\n";
    return kExitUserError;
  }

  if (*run_cmd) return cmd_run(run, in, out, err);
  if (*eval_cmd) return cmd_eval(ev, out, err);
  if (*train_cmd) return cmd_train(tr, out, err);
  if (*val_cmd) return cmd_validate(va, out, err);
  if (*fix_cmd) return cmd_fixture(fx, out, err);
  return kExitUserError;
}

}  // namespace mate::cli
