#include "mate/orchestrator/session.hpp"

#include <stdexcept>
#include <system_error>

#include "mate/core/text.hpp"
#include "mate/experts/pipeline.hpp"
#include "mate/orchestrator/validation.hpp"

namespace fs = std::filesystem;

namespace mate::orchestrator {

std::string_view to_string(SessionState s) {
  switch (s) {
    case SessionState::AwaitPrompt: return "AwaitPrompt";
    case SessionState::AwaitFile: return "AwaitFile";
    case SessionState::Executing: return "Executing";
    case SessionState::Done: return "Done";
    case SessionState::Failed: return "Failed";
  }
  return "?";
}

Session Session::start(fs::path output_dir) {
  Session s;
  s.output_dir = std::move(output_dir);
  return s;
}

std::string task_menu(std::span<const ExpertSpec> registry) {
  std::string menu = "Supported tasks:";
  for (const auto& spec : registry) {
    menu += "\n  " + std::string(to_string(spec.task)) + " - " + std::string(describe(spec.task)) +
            " (" + spec.describe_inputs() + (spec.accepts_stdin() ? ", typed text" : "") + " -> ." +
            spec.output_extension + ")";
  }
  menu += "\nNot supported yet: TTV - text to video, ATV - audio to video.";
  return menu;
}

namespace {

std::string file_request(const ExpertSpec& spec) {
  std::string s = "Task identified: " + std::string(to_string(spec.task)) + " (" +
                  std::string(describe(spec.task)) + "). Please provide the input file path (" +
                  spec.describe_inputs() + ")";
  if (spec.accepts_stdin()) s += " or type the text directly";
  return s + ".";
}

// A message is a path when the file exists or its extension names a media type.
bool looks_like_path(std::string_view msg, const fs::path& resolved) {
  std::error_code ec;
  if (fs::exists(resolved, ec)) return true;
  const auto ext = extension_of(fs::path(std::string(msg)));
  return experts::kind_of_extension(ext).has_value();
}

class Stepper {
 public:
  Stepper(Session s, const StepContext& ctx) : s_(std::move(s)), ctx_(ctx) {}

  std::pair<Session, std::string> run(std::string_view msg) {
    s_.transcript.push_back({Message::Role::User, std::string(msg)});
    std::string reply;
    switch (s_.state) {
      case SessionState::AwaitPrompt: reply = on_prompt(msg); break;
      case SessionState::AwaitFile: reply = on_input(text::trim(msg)); break;
      default: reply = "Internal error: unexpected state " + std::string(to_string(s_.state)); break;
    }
    s_.transcript.push_back({Message::Role::System, reply});
    return {std::move(s_), std::move(reply)};
  }

 private:
  std::string reprompt(std::string why) {
    ++s_.consecutive_reprompts;
    s_.state = SessionState::AwaitPrompt;
    why += " Please re-enter your query, describing what you want converted and into which format.";
    if (s_.consecutive_reprompts >= ctx_.config.menu_after_reprompts) {
      why += "\n" + task_menu(ctx_.registry);
    }
    return why;
  }

  std::string on_prompt(std::string_view msg) {
    std::string_view request = msg;
    std::optional<std::string> inline_input;
    if (auto pos = msg.find(kInlineMarker); pos != std::string_view::npos) {
      request = msg.substr(0, pos);
      inline_input = std::string(text::trim(msg.substr(pos + kInlineMarker.size())));
    }
    if (text::trim(request).empty()) return reprompt("The request is empty.");

    interpreter::ClassificationOutcome outcome;
    try {
      outcome = interpreter::classify(ctx_.interpreter, request);
    } catch (const std::exception& e) {
      outcome = interpreter::ClassificationOutcome::transport_failure(e.what());
    }
    if (outcome.failed()) {
      return reprompt("I could not determine the conversion task for that request.");
    }
    const TaskType t = *outcome.parsed;
    if (t == TaskType::UNK) {
      return reprompt("That request does not describe a modality conversion I can identify.");
    }
    if (!is_supported(t)) {
      return reprompt(std::string(to_string(t)) + " (" + std::string(describe(t)) +
                      ") is not supported yet.");
    }
    const ExpertSpec* spec = nullptr;
    try {
      spec = &route(t, ctx_.registry);
    } catch (const UnsupportedTask&) {
      return reprompt("No expert is registered for " + std::string(to_string(t)) + ".");
    }

    s_.consecutive_reprompts = 0;
    s_.task = t;
    s_.expert = *spec;
    s_.state = SessionState::AwaitFile;
    if (inline_input && !inline_input->empty()) return on_input(*inline_input);
    return file_request(*spec);
  }

  std::string on_input(std::string_view msg) {
    const ExpertSpec& spec = *s_.expert;
    if (msg.empty()) return "Please provide the input file path (" + spec.describe_inputs() + ").";

    fs::path resolved = fs::path(std::string(msg));
    if (resolved.is_relative()) resolved = ctx_.config.base_dir / resolved;
    resolved = resolved.lexically_normal();

    const bool typed = spec.accepts_stdin() && !looks_like_path(msg, resolved);
    fs::path spool;
    FileArtifact input;
    try {
      if (typed) {
        spool = make_scratch_dir(s_.output_dir);
        input = validate_input(InputSource{StdinText{std::string(msg)}}, spec, spool);
      } else {
        input = validate_input(resolved, spec);
      }
    } catch (const ValidationError& e) {
      remove_spool(spool);
      return std::string(e.what()) + ". Please modify the file path accordingly.";
    }

    s_.state = SessionState::Executing;
    std::string reply;
    try {
      ExecuteOptions opts;
      opts.keep_intermediates = ctx_.config.keep_intermediates;
      opts.clock = ctx_.config.clock;
      s_.output = execute(spec, input, ctx_.converters, s_.output_dir, opts);
      s_.state = SessionState::Done;
      reply = "Output file: " + fs::absolute(s_.output->path).string();
    } catch (const experts::StageFailure& e) {
      s_.state = SessionState::Failed;
      reply = "Conversion failed at stage " + std::string(experts::to_string(e.stage())) + ": " +
              e.diagnostics();
    } catch (const std::exception& e) {
      s_.state = SessionState::Failed;
      reply = std::string("Conversion failed: ") + e.what();
    }
    remove_spool(spool);
    return reply;
  }

  void remove_spool(const fs::path& spool) const {
    if (spool.empty() || ctx_.config.keep_intermediates) return;
    std::error_code ec;
    fs::remove_all(spool, ec);
  }

  Session s_;
  const StepContext& ctx_;
};

}  // namespace

std::pair<Session, std::string> step(Session session, std::string_view user_message,
                                     const StepContext& ctx) {
  if (session.finished()) throw std::logic_error("session already finished");
  return Stepper(std::move(session), ctx).run(user_message);
}

}  // namespace mate::orchestrator
