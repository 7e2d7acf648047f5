#include "ivdft/interval.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <fmt/format.h>

#include "ivdft/error.hpp"

namespace ivdft {

Interval::Interval(double lo, double hi) : lo_(lo), hi_(hi) {
  if (!std::isfinite(lo) || !std::isfinite(hi)) {
    throw InputError(fmt::format("interval endpoints must be finite, got [{}, {}]", lo, hi));
  }
  if (lo > hi) {
    throw InputError(fmt::format("reversed interval endpoints [{}, {}]", lo, hi));
  }
}

Interval Interval::centred(double centre, double halfwidth) {
  if (!(halfwidth >= 0.0)) {
    throw InputError(fmt::format("negative half-width {}", halfwidth));
  }
  return {centre - halfwidth, centre + halfwidth};
}

Interval add(const Interval& a, const Interval& b) {
  return Interval(a.lo() + b.lo(), a.hi() + b.hi());
}

Interval scale(double a, const Interval& x) {
  if (a > 0.0) return Interval(a * x.lo(), a * x.hi());
  if (a < 0.0) return Interval(a * x.hi(), a * x.lo());
  return Interval::point(0.0);
}

Interval square(const Interval& x) {
  const double l2 = x.lo() * x.lo();
  const double h2 = x.hi() * x.hi();
  if (x.lo() >= 0.0) return Interval(l2, h2);
  if (x.hi() < 0.0) return Interval(h2, l2);
  return Interval(0.0, std::max(l2, h2));
}

Interval sqrt(const Interval& x) {
  if (x.lo() < 0.0) {
    throw std::domain_error(fmt::format("sqrt of interval with negative lower bound {}", x.lo()));
  }
  return Interval(std::sqrt(x.lo()), std::sqrt(x.hi()));
}

double ComplexInterval::diagonal() const noexcept {
  return std::hypot(re.width(), im.width());
}

ComplexInterval add(const ComplexInterval& a, const ComplexInterval& b) {
  return {a.re + b.re, a.im + b.im};
}

ScaledSegment scale(std::complex<double> c, const Interval& x) {
  return {c * x.lo(), c * x.hi(), {scale(c.real(), x), scale(c.imag(), x)}};
}

IntervalSignal::IntervalSignal(std::vector<Interval> samples, std::optional<double> precision)
    : samples_(std::move(samples)), precision_(precision) {
  if (samples_.empty()) {
    throw InputError("interval signal must have at least one sample");
  }
  if (precision_) {
    const double xi = *precision_;
    if (!std::isfinite(xi) || xi < 0.0) {
      throw InputError(fmt::format("precision must be finite and >= 0, got {}", xi));
    }
    for (std::size_t n = 0; n < samples_.size(); ++n) {
      const auto& s = samples_[n];
      const double tol = 1e-12 * std::max({1.0, std::abs(s.lo()), std::abs(s.hi())});
      if (std::abs(s.width() - 2.0 * xi) > tol) {
        throw InputError(fmt::format("sample {} has width {} but precision {} requires {}", n,
                                     s.width(), xi, 2.0 * xi));
      }
    }
  }
}

IntervalSignal IntervalSignal::from_values(std::span<const double> values, double precision) {
  std::vector<Interval> samples;
  samples.reserve(values.size());
  for (double v : values) samples.push_back(Interval::centred(v, precision));
  return IntervalSignal(std::move(samples), precision);
}

IntervalSignal IntervalSignal::crisp(std::span<const double> values) {
  return from_values(values, 0.0);
}

std::vector<double> IntervalSignal::midpoints() const {
  std::vector<double> mids;
  mids.reserve(samples_.size());
  for (const auto& s : samples_) mids.push_back(s.mid());
  return mids;
}

IntervalSignal IntervalSignal::scaled(double a) const {
  std::vector<Interval> out;
  out.reserve(samples_.size());
  for (const auto& s : samples_) out.push_back(scale(a, s));
  std::optional<double> xi;
  if (precision_) xi = std::abs(a) * *precision_;
  return IntervalSignal(std::move(out), xi);
}

}  // namespace ivdft
