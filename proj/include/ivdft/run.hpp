#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>

#include "ivdft/amplitude.hpp"
#include "ivdft/io.hpp"

namespace ivdft {

enum class RunMethod { box, selective, brute, both };
enum class OutputFormat { csv, json };

// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitResourceCap = 2;
inline constexpr int kExitInternal = 3;

struct RunConfig {
  std::filesystem::path input;
  Schema schema = Schema::lo_hi;
  std::optional<double> precision;
  RunMethod method = RunMethod::selective;
  // Unset bounds default to 1 and N/2 - 1.
  std::optional<std::size_t> k_min;
  std::optional<std::size_t> k_max;
  OutputFormat format = OutputFormat::csv;
  bool plot = false;
  bool paper_compat_min = false;
  std::size_t mc_samples = 0;
  std::uint64_t seed = 0;
  /// Empty means stdout; only allowed when a single file would be written.
  std::filesystem::path output;
  unsigned workers = 0;
};

/// The frequency range a config resolves to for a signal of length n.
KRange resolve_range(const RunConfig& config, std::size_t n);

/// Executes a run and returns the process exit code. Diagnostics go to `err`;
/// `out` receives the spectrum when no output path is configured. On failure
/// every file this run created is removed.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace ivdft
