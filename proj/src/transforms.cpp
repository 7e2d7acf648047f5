#include "ivdft/transforms.hpp"

#include <cstdint>
#include <numbers>

#include <fmt/format.h>

#include "ivdft/error.hpp"

namespace ivdft {

FrequencyIndex::FrequencyIndex(std::size_t k, std::size_t n_samples) : k_(k), n_(n_samples) {
  if (n_samples == 0) throw InputError("transform length must be at least 1");
  if (n_samples > (std::size_t{1} << 31)) {
    throw InputError(fmt::format("transform length {} is too large", n_samples));
  }
}

std::complex<double> twiddle(const FrequencyIndex& freq, std::size_t n) {
  const std::uint64_t len = freq.length();
  std::uint64_t r = (static_cast<std::uint64_t>(freq.k() % len) * (n % len)) % len;
  // Map r into (-N/2, N/2] so that twiddle(N - k, n) == conj(twiddle(k, n)) bit for bit.
  const double turns = 2 * r > len ? -static_cast<double>(len - r) : static_cast<double>(r);
  const double theta = 2.0 * std::numbers::pi * turns / static_cast<double>(len);
  return {std::cos(theta), -std::sin(theta)};
}

std::complex<double> dft_crisp_at(std::span<const double> signal, const FrequencyIndex& freq) {
  std::complex<double> z = 0.0;
  for (std::size_t n = 0; n < signal.size(); ++n) z += signal[n] * twiddle(freq, n);
  return z;
}

std::vector<std::complex<double>> dft_crisp(std::span<const double> signal, std::size_t k_max) {
  if (signal.empty()) throw InputError("DFT of an empty signal");
  std::vector<std::complex<double>> out;
  out.reserve(k_max + 1);
  for (std::size_t k = 0; k <= k_max; ++k) out.push_back(dft_crisp_at(signal, {k, signal.size()}));
  return out;
}

EndpointCloud brute_force(const IntervalSignal& signal, const FrequencyIndex& freq,
                          std::size_t limit) {
  if (limit > kBruteForceCap) {
    throw ResourceError(fmt::format(
        "brute force over {} samples needs 2^{} endpoint combinations; the cap is {} samples",
        limit, limit, kBruteForceCap));
  }
  if (limit == 0 || limit > signal.size()) {
    throw InputError(fmt::format("brute-force limit {} must be in 1..{}", limit, signal.size()));
  }

  EndpointCloud cloud;
  cloud.levels.reserve(limit);
  const auto tw0 = twiddle(freq, 0);
  cloud.levels.push_back({tw0 * signal[0].lo(), tw0 * signal[0].hi()});
  for (std::size_t n = 1; n < limit; ++n) {
    const auto tw = twiddle(freq, n);
    const auto lo = tw * signal[n].lo();
    const auto hi = tw * signal[n].hi();
    const auto& prev = cloud.levels.back();
    std::vector<std::complex<double>> next;
    next.reserve(2 * prev.size());
    for (auto p : prev) next.push_back(lo + p);
    for (auto p : prev) next.push_back(hi + p);
    cloud.levels.push_back(std::move(next));
  }
  return cloud;
}

EndpointCloud brute_force(const IntervalSignal& signal, const FrequencyIndex& freq) {
  return brute_force(signal, freq, signal.size());
}

HullTrace selective(const IntervalSignal& signal, const FrequencyIndex& freq) {
  HullTrace trace;
  trace.regions.reserve(signal.size());
  const auto tw0 = twiddle(freq, 0);
  const std::complex<double> first[] = {tw0 * signal[0].lo(), tw0 * signal[0].hi()};
  trace.regions.push_back(convex_hull(std::span<const std::complex<double>>(first)));

  std::vector<PlanarPoint> candidates;
  for (std::size_t n = 1; n < signal.size(); ++n) {
    const auto seg = scale(twiddle(freq, n), signal[n]);
    const auto& prev = trace.regions.back().vertices();
    candidates.clear();
    candidates.reserve(2 * prev.size());
    for (const auto& v : prev) {
      candidates.push_back(PlanarPoint::from(v.as_complex() + seg.from));
      candidates.push_back(PlanarPoint::from(v.as_complex() + seg.to));
    }
    trace.regions.push_back(convex_hull(candidates));
  }
  return trace;
}

BoxTrace bounding_box(const IntervalSignal& signal, const FrequencyIndex& freq) {
  BoxTrace trace;
  trace.boxes.reserve(signal.size());
  trace.boxes.push_back(scale(twiddle(freq, 0), signal[0]).box);
  for (std::size_t n = 1; n < signal.size(); ++n) {
    trace.boxes.push_back(trace.boxes.back() + scale(twiddle(freq, n), signal[n]).box);
  }
  return trace;
}

UnitUncertainty unit_uncertainty(const FrequencyIndex& freq) {
  const std::vector<Interval> unit(freq.length(), Interval::unit());
  const IntervalSignal signal(unit, 1.0);
  return {selective(signal, freq).final(), bounding_box(signal, freq).final()};
}

CentredForm centred_form(std::span<const double> values, double precision,
                         const FrequencyIndex& freq, const UnitUncertainty& unit) {
  if (!(precision >= 0.0)) {
    throw InputError(fmt::format("precision must be >= 0, got {}", precision));
  }
  if (values.size() != freq.length()) {
    throw InputError(fmt::format("signal length {} does not match transform length {}",
                                 values.size(), freq.length()));
  }
  return {dft_crisp_at(values, freq), unit.region.scaled(precision),
          {scale(precision, unit.box.re), scale(precision, unit.box.im)}};
}

CentredForm centred_form(std::span<const double> values, double precision,
                         const FrequencyIndex& freq) {
  return centred_form(values, precision, freq, unit_uncertainty(freq));
}

}  // namespace ivdft
