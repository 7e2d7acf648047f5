#include "ivdft/run.hpp"

#include <fstream>
#include <ostream>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "ivdft/error.hpp"
#include "ivdft/verify.hpp"

namespace ivdft {
namespace {

// Files written by one run; removed again unless the run commits.
class OutputSet {
public:
  OutputSet() = default;
  OutputSet(const OutputSet&) = delete;
  OutputSet& operator=(const OutputSet&) = delete;
  ~OutputSet() {
    if (committed_) return;
    std::error_code ec;
    for (const auto& p : written_) std::filesystem::remove(p, ec);
  }

  void write(const std::filesystem::path& path, std::string_view content) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw InputError(fmt::format("cannot write output file '{}'", path.string()));
    written_.push_back(path);
    f << content;
    if (!f.flush()) throw InputError(fmt::format("failed writing '{}'", path.string()));
  }

  void commit() { committed_ = true; }

private:
  std::vector<std::filesystem::path> written_;
  bool committed_ = false;
};

std::filesystem::path sibling(const std::filesystem::path& output, std::string_view suffix) {
  auto stem = output;
  stem.replace_extension();
  return std::filesystem::path(stem.string() + std::string(suffix));
}

std::string extension(OutputFormat f) { return f == OutputFormat::csv ? ".csv" : ".json"; }

std::string render(const BoundedSpectrum& s, const RunConfig& config, const RunInfo& info) {
  return config.format == OutputFormat::csv ? spectrum_csv(s) : spectrum_json(s, info).dump(2) + "\n";
}

int execute(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const bool multi_file =
      config.method == RunMethod::both || config.plot || config.mc_samples > 0;
  if (config.output.empty() && multi_file) {
    throw InputError("--output is required with --method both, --plot or --mc-samples");
  }

  const auto signal = ingest(config.input, config.schema, config.precision);
  const auto range = resolve_range(config, signal.size());
  const RunInfo info{config.seed,
                     config.paper_compat_min ? MinimumRule::vertex_argmin : MinimumRule::exact};
  const SpectrumOptions options{info.rule, config.workers};

  std::vector<BoundedSpectrum> spectra;
  switch (config.method) {
    case RunMethod::box:
      spectra.push_back(spectrum_bounds(signal, Method::box, range, options));
      break;
    case RunMethod::selective:
      spectra.push_back(spectrum_bounds(signal, Method::selective, range, options));
      break;
    case RunMethod::brute:
      spectra.push_back(spectrum_bounds(signal, Method::brute, range, options));
      break;
    case RunMethod::both:
      spectra.push_back(spectrum_bounds(signal, Method::box, range, options));
      spectra.push_back(spectrum_bounds(signal, Method::selective, range, options));
      break;
  }

  if (config.output.empty()) {
    out << render(spectra.front(), config, info);
    return kExitOk;
  }

  OutputSet files;
  const auto ext = extension(config.format);
  if (config.method == RunMethod::both) {
    files.write(sibling(config.output, ".box" + ext), render(spectra[0], config, info));
    files.write(sibling(config.output, ".selective" + ext), render(spectra[1], config, info));
    const auto rows = compare_methods(spectra[0], spectra[1]);
    files.write(sibling(config.output, ".comparison" + ext),
                config.format == OutputFormat::csv
                    ? comparison_csv(rows)
                    : comparison_json(rows, signal.size(), info).dump(2) + "\n");
  } else {
    files.write(config.output, render(spectra.front(), config, info));
  }

  if (config.plot) {
    std::vector<const BoundedSpectrum*> curves;
    for (const auto& s : spectra) curves.push_back(&s);
    std::string title = fmt::format("Amplitude bounds, N = {}", signal.size());
    if (signal.precision()) title += fmt::format(", precision {}", *signal.precision());
    files.write(sibling(config.output, ".svg"), spectrum_svg(curves, title));
  }

  int status = kExitOk;
  if (config.mc_samples > 0) {
    const auto report =
        verify_signal(signal, range, {config.mc_samples, config.seed, info.rule});
    if (config.format == OutputFormat::csv) {
      files.write(sibling(config.output, ".verify.txt"), report.to_text());
    } else {
      files.write(sibling(config.output, ".verify.json"), report.to_json().dump(2) + "\n");
    }
    if (!report.ok()) {
      err << fmt::format("verification failed: {} of {} checks\n", report.failed(),
                         report.checks.size());
      status = kExitInternal;
    }
  }
  files.commit();
  return status;
}

}  // namespace

KRange resolve_range(const RunConfig& config, std::size_t n) {
  const bool interior = n >= 4;
  return {config.k_min.value_or(interior ? 1 : 0), config.k_max.value_or(interior ? n / 2 - 1 : n / 2)};
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    return execute(config, out, err);
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const ResourceError& e) {
    err << "refused: " << e.what() << '\n';
    return kExitResourceCap;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}

}  // namespace ivdft
