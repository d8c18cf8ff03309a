#include "mate/experts/pipeline.hpp"

#include <system_error>
#include <vector>

namespace fs = std::filesystem;

namespace mate::experts {

FileArtifact run_pipeline(std::span<const StageId> stages, const FileArtifact& input,
                          const ConverterSet& converters, const fs::path& workdir) {
  if (stages.empty()) throw IncompatibleChain("pipeline has no stages");
  const auto in_kind = kind_of_extension(input.extension);
  if (!in_kind || !stage_accepts(stages.front(), *in_kind)) {
    throw IncompatibleChain("stage " + std::string(to_string(stages.front())) +
                            " cannot consume '." + input.extension + "' input");
  }
  if (!chain_compatible(stages)) throw IncompatibleChain("stage kinds do not chain");
  for (StageId s : stages) {
    if (!converters.find(s)) throw StageFailure(s, "no converter backend bound to this stage");
  }

  std::vector<fs::path> written;
  auto cleanup = [&] {
    std::error_code ec;
    for (const auto& p : written) fs::remove(p, ec);
  };

  const std::string stem = input.path.stem().string();
  FileArtifact current = input;
  for (std::size_t i = 0; i < stages.size(); ++i) {
    const StageId s = stages[i];
    const fs::path out = workdir / (stem + "." + std::to_string(i + 1) + "_" +
                                    std::string(to_string(s)) + "." +
                                    std::string(canonical_extension(signature(s).output)));
    written.push_back(out);
    try {
      current = convert(*converters.find(s), s, current, out);
    } catch (const ConversionError& e) {
      cleanup();
      throw StageFailure(s, e.what());
    } catch (const std::exception& e) {
      cleanup();
      throw StageFailure(s, e.what());
    }
  }
  return current;
}

}  // namespace mate::experts
