#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ivdft/amplitude.hpp"
#include "ivdft/interval.hpp"
#include "ivdft/transforms.hpp"

namespace ivdft {

/// Where a check's worst discrepancy occurred. Unset fields do not apply.
struct Locus {
  std::optional<std::size_t> k;
  std::optional<std::size_t> n;
  std::optional<std::size_t> sample;
};

struct CheckResult {
  std::string name;
  bool passed = false;
  double discrepancy = 0.0;  // always reported, passes included
  double tolerance = 0.0;
  Locus locus;
  std::string detail;
};

struct VerificationReport {
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;

  std::size_t passed() const;
  std::size_t failed() const { return checks.size() - passed(); }
  bool ok() const { return failed() == 0; }

  /// Stable order: check name, then k.
  void sort();
  std::string to_text() const;
  nlohmann::json to_json() const;
};

/// Selective final region against the hull of the brute-force cloud.
/// Tolerance: 1e-9 relative vertex mismatch. ResourceError above the cap.
CheckResult verify_selective_vs_brute(const IntervalSignal& signal, const FrequencyIndex& freq);

/// Bounding-box final box against componentwise brute-force extremes,
/// 1e-12 relative.
CheckResult verify_box_vs_brute(const IntervalSignal& signal, const FrequencyIndex& freq);

/// Every per-iteration hull vertex inside the per-iteration box, and every
/// edge of the final box touched by a hull vertex; 1e-9 relative to the box
/// diagonal.
CheckResult verify_hull_in_box(const IntervalSignal& signal, const FrequencyIndex& freq);

/// Draws `samples` crisp signals uniformly from the intervals and checks
/// that each amplitude lies in both the box and the selective bounds, with
/// slack 1e-9 * (1 + hi).
CheckResult verify_mc_enclosure(const IntervalSignal& signal, KRange range, std::size_t samples,
                                std::uint64_t seed, MinimumRule rule = MinimumRule::exact);

struct VerifyOptions {
  std::size_t mc_samples = 1000;
  std::uint64_t seed = 0;
  MinimumRule rule = MinimumRule::exact;
};

/// Nesting checks for every k in range, brute-force oracle checks when the
/// signal is within the brute-force cap, and one Monte-Carlo check.
VerificationReport verify_signal(const IntervalSignal& signal, KRange range,
                                 const VerifyOptions& options);

}  // namespace ivdft
