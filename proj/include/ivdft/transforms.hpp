#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "ivdft/geometry.hpp"
#include "ivdft/interval.hpp"

namespace ivdft {

/// Frequency k of an N-point transform. Any k >= 0 is accepted; the twiddle
/// factors depend only on k mod N, so k and k + N name the same harmonic.
class FrequencyIndex {
public:
  FrequencyIndex(std::size_t k, std::size_t n_samples);

  std::size_t k() const noexcept { return k_; }
  std::size_t length() const noexcept { return n_; }
  /// True for 0 <= k <= N/2, the range a real signal's spectrum is reported on.
  bool in_half_spectrum() const noexcept { return k_ <= n_ / 2; }

private:
  std::size_t k_;
  std::size_t n_;
};

/// exp(-i 2 pi k n / N). k*n is reduced mod N in integer arithmetic before
/// the angle is formed.
std::complex<double> twiddle(const FrequencyIndex& freq, std::size_t n);

/// Direct O(N) sum for each k = 0..k_max.
std::vector<std::complex<double>> dft_crisp(std::span<const double> signal, std::size_t k_max);
std::complex<double> dft_crisp_at(std::span<const double> signal, const FrequencyIndex& freq);

/// Largest `limit` brute_force() accepts: 2^20 points in the final level.
inline constexpr std::size_t kBruteForceCap = 20;

/// Partial sums over every endpoint choice. levels[n] holds 2^(n+1) points.
struct EndpointCloud {
  std::vector<std::vector<std::complex<double>>> levels;

  const std::vector<std::complex<double>>& final() const { return levels.back(); }
};

/// Per-iteration convex regions of the selective method.
struct HullTrace {
  std::vector<ConvexRegion> regions;

  const ConvexRegion& final() const { return regions.back(); }
};

/// Per-iteration complex-interval boxes of the bounding-box method.
struct BoxTrace {
  std::vector<ComplexInterval> boxes;

  const ComplexInterval& final() const { return boxes.back(); }
};

/// Enumerates all 2^limit endpoint combinations of the first `limit`
/// samples. Throws ResourceError when limit > kBruteForceCap, InputError when
/// limit is 0 or exceeds the signal length.
EndpointCloud brute_force(const IntervalSignal& signal, const FrequencyIndex& freq,
                          std::size_t limit);
EndpointCloud brute_force(const IntervalSignal& signal, const FrequencyIndex& freq);

/// Propagates only the hull vertices: each step adds the segment
/// twiddle(k, n) * x_n to the previous region and rehulls.
HullTrace selective(const IntervalSignal& signal, const FrequencyIndex& freq);

/// Complex-interval accumulation of twiddle(k, n) * x_n. Tight, because each
/// sample appears exactly once.
BoxTrace bounding_box(const IntervalSignal& signal, const FrequencyIndex& freq);

/// Splits a same-precision signal into its crisp coefficient and a
/// zero-centred uncertainty set that depends only on (precision, k, N).
struct CentredForm {
  std::complex<double> centre;
  ConvexRegion uncertainty;     // exact reachable set of sum precision * [-1, 1] * twiddle
  ComplexInterval uncertainty_box;

  /// centre + uncertainty, the full reachable set.
  ConvexRegion region() const { return uncertainty.translated(centre); }
  ComplexInterval box() const { return uncertainty_box + ComplexInterval::point(centre); }
};

/// Uncertainty set for precision 1; scale it by any precision >= 0.
struct UnitUncertainty {
  ConvexRegion region;
  ComplexInterval box;
};
UnitUncertainty unit_uncertainty(const FrequencyIndex& freq);

CentredForm centred_form(std::span<const double> values, double precision,
                         const FrequencyIndex& freq);
CentredForm centred_form(std::span<const double> values, double precision,
                         const FrequencyIndex& freq, const UnitUncertainty& unit);

}  // namespace ivdft
