#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "ivdft/geometry.hpp"
#include "ivdft/interval.hpp"
#include "ivdft/transforms.hpp"

namespace ivdft {

enum class Method { selective, box, brute };

std::string_view to_string(Method m);

/// How the lower amplitude bound is taken from a hull.
enum class MinimumRule {
  exact,           // true distance from the origin to the region
  vertex_argmin,   // smallest vertex norm, as a vertex-only search reports it
};

/// Bounds [lo, hi] on |z_k|, with 0 <= lo <= hi.
struct AmplitudeBounds {
  double lo = 0.0;
  double hi = 0.0;
  Method method = Method::selective;
  bool origin_enclosed = false;

  Interval as_interval() const { return {lo, hi}; }
  bool contains(double amplitude, double slack = 0.0) const {
    return lo - slack <= amplitude && amplitude <= hi + slack;
  }
};

AmplitudeBounds amplitude_bounds_selective(const ConvexRegion& region,
                                           MinimumRule rule = MinimumRule::exact);
AmplitudeBounds amplitude_bounds_box(const ComplexInterval& box);
AmplitudeBounds amplitude_bounds_brute(const EndpointCloud& cloud,
                                       MinimumRule rule = MinimumRule::exact);

/// Inclusive frequency range.
struct KRange {
  std::size_t k_min = 0;
  std::size_t k_max = 0;

  std::size_t size() const { return k_max - k_min + 1; }
  /// 0..floor(N/2).
  static KRange full(std::size_t n) { return {0, n / 2}; }
  /// 1..N/2 - 1, the interior of the half spectrum. Empty-safe only for N >= 4.
  static KRange interior(std::size_t n) { return {1, n / 2 - 1}; }
};

struct SpectrumEntry {
  std::size_t k = 0;
  AmplitudeBounds bounds;
};

struct BoundedSpectrum {
  std::size_t length = 0;
  Method method = Method::selective;
  std::optional<double> precision;
  std::vector<SpectrumEntry> entries;
};

struct SpectrumOptions {
  MinimumRule rule = MinimumRule::exact;
  /// Worker threads for the per-k fan-out. 0 picks hardware concurrency.
  unsigned workers = 1;
};

/// Bounds for every k in `range` by one method. Throws InputError when the
/// range is empty or leaves 0..N/2, ResourceError for brute force above the cap.
BoundedSpectrum spectrum_bounds(const IntervalSignal& signal, Method method, KRange range,
                                const SpectrumOptions& options = {});

/// Box and selective bounds side by side.
struct ComparisonRow {
  std::size_t k = 0;
  AmplitudeBounds box;
  AmplitudeBounds selective;

  double box_width() const { return box.hi - box.lo; }
  double hull_width() const { return selective.hi - selective.lo; }
  /// selective bounds inside box bounds, up to `slack`.
  bool nested(double slack) const {
    return box.lo <= selective.lo + slack && selective.hi <= box.hi + slack;
  }
};

std::vector<ComparisonRow> compare_methods(const BoundedSpectrum& box,
                                           const BoundedSpectrum& selective);

}  // namespace ivdft
