// Acceptance suite: one PASS/FAIL line per primary criterion, with tolerance and runtime.
// Set MATE_MODCONTT_V2=/path/to/modcontt_v2.csv to score the native classifiers on the
// real dataset; without it the synthetic-fixture variant runs.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>

#include "mate/classifier/model_io.hpp"
#include "mate/classifier/split.hpp"
#include "mate/cli/commands.hpp"
#include "mate/eval/benchmark.hpp"
#include "mate/eval/dataset_io.hpp"
#include "mate/eval/fixture.hpp"
#include "mate/eval/metrics.hpp"
#include "mate/eval/report.hpp"
#include "mate/experts/stub_backend.hpp"
#include "mate/interpreter/native_backend.hpp"
#include "mate/orchestrator/execute.hpp"
#include "mate/orchestrator/output_dir.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

using namespace mate;
namespace fs = std::filesystem;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

struct Criterion {
  std::string name;
  std::string tolerance;
  double budget_s;
  std::function<Verdict()> run;
};

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", v);
  return buf;
}

std::string fmt(double v, int digits = 4) {
  std::ostringstream s;
  s.precision(digits);
  s << std::fixed << v;
  return s.str();
}

Verdict metric_oracle() {
  Verdict v;
  const std::vector<TaskType> gold = {TaskType::TTS, TaskType::TTS, TaskType::STT, TaskType::STT};
  std::vector<interpreter::ClassificationOutcome> pred;
  for (const char* p : {"TTS", "STT", "STT", "STT"}) pred.push_back(interpreter::ClassificationOutcome::from_raw(p));
  const auto hand = eval::compute_metrics(gold, pred);
  v.require(hand.accuracy == 0.75, "hand example accuracy " + fmt(hand.accuracy, 17));
  const double f1 = 0.5 * (2.0 / 3.0) + 0.5 * (4.0 / 5.0);
  v.require(std::abs(hand.weighted_f1 - f1) <= 1e-15, "hand example weighted F1 " + fmt(hand.weighted_f1, 17));

  std::mt19937_64 rng(20240601);
  double worst = 0;
  for (int t = 0; t < 100; ++t) {
    const auto inst = oracle::random_metric_instance(rng);
    const auto r = eval::compute_metrics(inst.gold, inst.outcomes);
    const auto o = oracle::brute_force_metrics(inst.gold, inst.pred);
    for (auto [a, b] : {std::pair{r.accuracy, o.accuracy}, {r.weighted_precision, o.precision},
                        {r.weighted_recall, o.recall}, {r.weighted_f1, o.f1}}) {
      worst = std::max(worst, std::abs(a - b));
    }
  }
  v.require(worst <= 1e-9, "max deviation " + std::to_string(worst));
  if (v.pass) v.detail = "100 instances, max |diff| " + sci(worst) + "; hand example 0.75 / " + fmt(f1, 4);
  return v;
}

Verdict failure_rate_exactness() {
  Verdict v;
  LabeledDataset data;
  for (int i = 0; i < 230; ++i) data.push_back({"request " + std::to_string(i), TaskType::STT});
  std::string seen;
  for (int bad : {9, 1}) {
    mtest::ScriptedBackend backend([bad](std::string_view p) {
      return std::stoi(std::string(p.substr(8))) < bad ? std::string("Label: STT") : std::string("STT");
    });
    const auto r = eval::run_benchmark(backend, data, 4);
    v.require(r.failure_rate == static_cast<double>(bad) / 230.0 && r.n_failed == static_cast<std::size_t>(bad),
              "expected " + std::to_string(bad) + "/230, got " + std::to_string(r.n_failed) + "/" + std::to_string(r.n));
    seen += (seen.empty() ? "" : ", ") + std::to_string(r.n_failed) + "/" + std::to_string(r.n);
  }
  if (v.pass) v.detail = "failure rates " + seen + " exact";
  return v;
}

Verdict gradient_check() {
  Verdict v;
  std::mt19937_64 rng(4242);
  double worst = 0;
  for (int t = 0; t < 20; ++t) worst = std::max(worst, oracle::worst_gradient_error(oracle::random_logreg_instance(rng)));
  v.require(worst < 1e-5, "worst relative error " + std::to_string(worst));
  if (v.pass) v.detail = "20 instances, worst relative error " + sci(worst);
  return v;
}

double held_out_accuracy(const classifier::NativeModel& model, const LabeledDataset& test) {
  const auto backend = interpreter::make_native_backend(std::make_shared<const classifier::NativeModel>(model));
  return eval::run_benchmark(*backend, test, 1).accuracy;
}

Verdict native_quality() {
  Verdict v;
  const char* real = std::getenv("MATE_MODCONTT_V2");
  const bool use_real = real && *real;
  LabeledDataset data;
  try {
    data = use_real ? eval::load_dataset(real, eval::ModConTTVersion::V2)
                    : eval::generate_synthetic_fixture(7, eval::ModConTTVersion::V2);
  } catch (const std::exception& e) {
    v.require(false, std::string("dataset: ") + e.what());
    return v;
  }
  const auto split = classifier::split_dataset(data, 0.10, 7);
  const auto tfidf = classifier::fit_tfidf(prompts_of(split.train));
  const classifier::LogregHyper hyper;
  const classifier::NativeModel logreg =
      classifier::LogregClassifier{tfidf, classifier::train_logreg(split.train, tfidf, hyper), hyper};
  const classifier::NativeModel knn = classifier::build_knn(split.train, tfidf);
  const double acc_lr = held_out_accuracy(logreg, split.test);
  const double acc_knn = held_out_accuracy(knn, split.test);

  if (use_real) {
    v.require(acc_lr >= 0.45, "logreg " + fmt(acc_lr) + " < 0.45");
    v.require(std::abs(acc_lr - 0.617) <= 0.15, "logreg " + fmt(acc_lr) + " outside 0.617 +/- 0.15");
    v.require(acc_knn >= 0.35, "knn " + fmt(acc_knn) + " < 0.35");
    v.require(acc_lr > 0.25 && acc_knn > 0.25, "not above the 0.25 majority baseline");
    v.detail = (v.pass ? "" : v.detail + "; ") + "real v2 (" + std::to_string(split.test.size()) +
               " held out): logreg " + fmt(acc_lr, 3) + ", knn " + fmt(acc_knn, 3);
    return v;
  }
  const double acc_kw = eval::run_benchmark(*eval::make_keyword_backend(), data, 4).accuracy;
  v.require(acc_kw == 1.0, "keyword stub " + fmt(acc_kw));
  v.require(acc_lr >= 0.9, "logreg " + fmt(acc_lr) + " < 0.9");
  v.detail = (v.pass ? "" : v.detail + "; ") + "synthetic v2 fixture (real dataset not provided): keyword " +
             fmt(acc_kw, 3) + ", logreg " + fmt(acc_lr, 3) + " on " + std::to_string(split.test.size()) +
             " held out, knn " + fmt(acc_knn, 3);
  return v;
}

Verdict dataset_validation() {
  Verdict v;
  for (auto version : {eval::ModConTTVersion::V1, eval::ModConTTVersion::V2}) {
    const auto base = eval::generate_synthetic_fixture(11, version);
    v.require(base.size() == eval::expected_total(version), "fixture size");
    try {
      eval::check_composition(base, version);
    } catch (const std::exception& e) {
      v.require(false, e.what());
    }
    for (TaskType t : kAllTaskTypes) {
      for (int delta : {-1, +1}) {
        auto d = base;
        if (delta < 0) {
          d.erase(std::find_if(d.begin(), d.end(), [t](const auto& e) { return e.label == t; }));
        } else {
          d.push_back({"one extra prompt", t});
        }
        try {
          eval::check_composition(d, version);
          v.require(false, "off-by-one in " + std::string(to_string(t)) + " accepted");
        } catch (const eval::CountMismatch& e) {
          const auto& first = e.discrepancies().front();
          v.require(first.label == t && first.found == eval::expected_count(version, t) + delta &&
                        std::string(e.what()).find(std::string(to_string(t)) + " expected") != std::string::npos,
                    "wrong class named for " + std::string(to_string(t)));
        }
      }
    }
  }
  if (v.pass) v.detail = "230 / 600 compositions accepted; 40 off-by-one corruptions caught, class named";
  return v;
}

Verdict routing_conformance() {
  Verdict v;
  mtest::TempDir root;
  fs::create_directories(root / "data");
  const auto out_dir = orchestrator::resolve_output_dir(root.path());
  v.require(out_dir == fs::absolute(root / "data"), "output dir resolved to " + out_dir.string());
  auto stub = std::make_shared<experts::StubBackend>();
  const auto set = experts::ConverterSet::uniform(stub);
  mtest::TempDir inputs;
  int runs = 0;
  for (const auto& spec : orchestrator::default_registry()) {
    for (const auto& ext : spec.accepted_input_extensions) {
      if (ext == orchestrator::kStdinMarker) continue;
      const auto input = FileArtifact::from_path(mtest::write_text(inputs / ("in_" + ext + "." + ext), "sample"));
      stub->clear_log();
      try {
        const auto out = orchestrator::execute(spec, input, set, out_dir);
        const std::string tag = std::string(to_string(spec.task)) + " ." + ext;
        v.require(out.extension == spec.output_extension, tag + " produced ." + out.extension);
        v.require(out.path.parent_path() == out_dir && fs::exists(out.path), tag + " output misplaced");
        const auto stages = stub->invoked_stages();
        v.require(stages == orchestrator::plan_stages(spec, ext), tag + " ran unexpected stages");
        using experts::StageId;
        if (spec.task == TaskType::ATI && ext == "wav") {
          v.require(stages == std::vector<StageId>{StageId::STT, StageId::TTI}, "ATI stages");
        }
        if (spec.task == TaskType::ITA) {
          v.require(stages == std::vector<StageId>{StageId::ITT, StageId::TTS}, "ITA stages");
        }
        ++runs;
      } catch (const std::exception& e) {
        v.require(false, std::string(to_string(spec.task)) + " ." + ext + ": " + e.what());
      }
    }
  }
  if (v.pass) v.detail = std::to_string(runs) + " expert/extension runs; ATI [STT,TTI], ITA [ITT,TTS]";
  return v;
}

Verdict session_transcript() {
  Verdict v;
  mtest::TempDir dir;
  fs::create_directories(dir / "agents_output");
  mtest::write_text(dir / "mate.ini", "[interpreter]\nbackend = keyword\n[output]\nroot = .\n");
  mtest::write_text(dir / "lecture.txt", "Photosynthesis converts light into chemical energy.");
  mtest::write_text(dir / "song.mp3", "ID3");
  const std::string script = "qwerty asdf\n"
                             "please convert text to audio for me\n" +
                             (dir / "song.mp3").string() + "\n" + (dir / "lecture.txt").string() + "\nquit\n";
  std::istringstream in(script);
  std::ostringstream out, err;
  const int code = cli::run_cli({"mate", "run", "--config", (dir / "mate.ini").string()}, in, out, err);
  const auto text = out.str();
  v.require(code == 0, "exit code " + std::to_string(code) + ": " + err.str());
  v.require(text.find("Please re-enter your query") != std::string::npos, "no re-prompt after UNK request");
  v.require(text.find("unsupported file type '.mp3'") != std::string::npos &&
                text.find(".txt") != std::string::npos &&
                text.find("Please modify the file path accordingly.") != std::string::npos,
            "no expected-extension message for .mp3");
  const auto at = text.find("Output file: ");
  if (at == std::string::npos) {
    v.require(false, "never reached Done");
  } else {
    const fs::path p = text.substr(at + 13, text.find('\n', at) - at - 13);
    v.require(fs::exists(p) && p.extension() == ".wav" && p.parent_path() == fs::absolute(dir / "agents_output"),
              "reported output " + p.string() + " missing or misplaced");
  }
  if (v.pass) v.detail = "UNK re-prompt, wrong-extension message, Done with existing .wav";
  return v;
}

Verdict determinism() {
  Verdict v;
  mtest::TempDir dir;
  const auto csv = (dir / "v2.csv").string();
  eval::write_dataset_csv(eval::generate_synthetic_fixture(7, eval::ModConTTVersion::V2), csv);
  std::string metrics[2];
  for (int i = 0; i < 2; ++i) {
    std::istringstream in;
    std::ostringstream out, err;
    const auto model = (dir / ("m" + std::to_string(i) + ".json")).string();
    const int code = cli::run_cli({"mate", "train", "--dataset", csv, "--algo", "logreg", "--seed", "7",
                                   "--model-out", model, "--report", model + ".report"},
                                  in, out, err);
    v.require(code == 0, "train exit " + std::to_string(code) + ": " + err.str());
    auto r = eval::report_from_json(mtest::read_text(model + ".report"));
    r.timestamp.clear();
    metrics[i] = eval::render_report(r, eval::ReportFormat::Json);
  }
  const auto a = mtest::read_text(dir / "m0.json"), b = mtest::read_text(dir / "m1.json");
  v.require(!a.empty() && a == b, "persisted models differ");
  v.require(metrics[0] == metrics[1], "reported metrics differ");
  if (v.pass) v.detail = "two runs: models bit-identical (" + std::to_string(a.size()) + " bytes), metrics identical";
  return v;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"metric-oracle-equivalence", "|diff| <= 1e-9", 5, metric_oracle},
      {"failure-rate-exactness", "exact 9/230 and 1/230", 5, failure_rate_exactness},
      {"gradient-check", "rel err < 1e-5", 10, gradient_check},
      {"native-classifier-quality", "real: lr >= 0.45 and 0.617+/-0.15, knn >= 0.35; synthetic: kw = 1.0, lr >= 0.9",
       60, native_quality},
      {"dataset-validation", "exact counts", 1, dataset_validation},
      {"routing-pipeline-conformance", "exact extension and stages", 10, routing_conformance},
      {"session-transcript", "Done, re-prompt, extension message", 5, session_transcript},
      {"determinism", "bit-identical", 60, determinism},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v.pass = false;
      v.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > c.budget_s) v.require(false, "runtime over " + fmt(c.budget_s, 0) + " s budget");
    failed += !v.pass;
    std::printf("%s  %-30s [%s] %.3fs  %s\n", v.pass ? "PASS" : "FAIL", c.name.c_str(), c.tolerance.c_str(), secs,
                v.detail.c_str());
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - static_cast<std::size_t>(failed), criteria.size());
  return failed == 0 ? 0 : 1;
}
