#include "ivdft/amplitude.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <thread>

#include <fmt/format.h>

#include "ivdft/error.hpp"

namespace ivdft {

std::string_view to_string(Method m) {
  switch (m) {
    case Method::selective:
      return "selective";
    case Method::box:
      return "box";
    case Method::brute:
      return "brute";
  }
  return "unknown";
}

AmplitudeBounds amplitude_bounds_selective(const ConvexRegion& region, MinimumRule rule) {
  AmplitudeBounds b;
  b.method = Method::selective;
  b.hi = max_distance_to_origin(region);
  b.origin_enclosed = origin_in_region(region);
  if (b.origin_enclosed) {
    b.lo = 0.0;
  } else if (rule == MinimumRule::exact) {
    b.lo = min_distance_to_origin(region);
  } else {
    b.lo = min_vertex_distance_to_origin(region);
  }
  b.lo = std::min(b.lo, b.hi);
  return b;
}

AmplitudeBounds amplitude_bounds_box(const ComplexInterval& box) {
  AmplitudeBounds b;
  b.method = Method::box;
  const double cx = std::clamp(0.0, box.re.lo(), box.re.hi());
  const double cy = std::clamp(0.0, box.im.lo(), box.im.hi());
  b.origin_enclosed = cx == 0.0 && cy == 0.0;
  b.lo = b.origin_enclosed ? 0.0 : std::hypot(cx, cy);
  const double fx = std::max(std::abs(box.re.lo()), std::abs(box.re.hi()));
  const double fy = std::max(std::abs(box.im.lo()), std::abs(box.im.hi()));
  b.hi = std::hypot(fx, fy);
  return b;
}

AmplitudeBounds amplitude_bounds_brute(const EndpointCloud& cloud, MinimumRule rule) {
  auto b = amplitude_bounds_selective(convex_hull(std::span(cloud.final())), rule);
  b.method = Method::brute;
  return b;
}

namespace {

AmplitudeBounds bounds_at(const IntervalSignal& signal, Method method, std::size_t k,
                          MinimumRule rule) {
  const FrequencyIndex freq(k, signal.size());
  switch (method) {
    case Method::selective:
      return amplitude_bounds_selective(selective(signal, freq).final(), rule);
    case Method::box:
      return amplitude_bounds_box(bounding_box(signal, freq).final());
    case Method::brute:
      return amplitude_bounds_brute(brute_force(signal, freq), rule);
  }
  throw InvariantError("unknown method");
}

}  // namespace

BoundedSpectrum spectrum_bounds(const IntervalSignal& signal, Method method, KRange range,
                                const SpectrumOptions& options) {
  const std::size_t n = signal.size();
  if (range.k_min > range.k_max || range.k_max > n / 2) {
    throw InputError(fmt::format("frequency range {}..{} is empty or outside 0..{}", range.k_min,
                                 range.k_max, n / 2));
  }
  if (method == Method::brute && n > kBruteForceCap) {
    throw ResourceError(fmt::format(
        "brute force refused for N = {}: enumeration needs 2^{} endpoint combinations "
        "and the cap is N <= {}",
        n, n, kBruteForceCap));
  }

  BoundedSpectrum out;
  out.length = n;
  out.method = method;
  out.precision = signal.precision();
  out.entries.resize(range.size());

  unsigned workers = options.workers == 0 ? std::max(1u, std::thread::hardware_concurrency())
                                          : options.workers;
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, range.size()));

  // Each worker fills a strided subset of the preallocated entries; the
  // result order is fixed by k regardless of scheduling.
  auto fill = [&](unsigned worker) {
    for (std::size_t i = worker; i < range.size(); i += workers) {
      const std::size_t k = range.k_min + i;
      out.entries[i] = {k, bounds_at(signal, method, k, options.rule)};
    }
  };
  if (workers <= 1) {
    fill(0);
  } else {
    std::vector<std::future<void>> jobs;
    for (unsigned w = 0; w < workers; ++w) jobs.push_back(std::async(std::launch::async, fill, w));
    for (auto& j : jobs) j.get();
  }
  return out;
}

std::vector<ComparisonRow> compare_methods(const BoundedSpectrum& box,
                                           const BoundedSpectrum& selective) {
  if (box.entries.size() != selective.entries.size()) {
    throw InvariantError("spectra cover different frequency ranges");
  }
  std::vector<ComparisonRow> rows;
  rows.reserve(box.entries.size());
  for (std::size_t i = 0; i < box.entries.size(); ++i) {
    if (box.entries[i].k != selective.entries[i].k) {
      throw InvariantError(fmt::format("frequency mismatch at row {}", i));
    }
    rows.push_back({box.entries[i].k, box.entries[i].bounds, selective.entries[i].bounds});
  }
  return rows;
}

}  // namespace ivdft
