#pragma once

#include <complex>
#include <optional>
#include <span>
#include <vector>

namespace ivdft {

/// Closed, bounded, non-empty real interval [lo, hi].
///
/// Construction rejects NaN, infinities and reversed endpoints with
/// InputError. Arithmetic results are re-validated, so an overflow to
/// infinity surfaces as an error rather than a silently unbounded interval.
class Interval {
public:
  constexpr Interval() = default;
  Interval(double lo, double hi);

  /// Degenerate interval [v, v].
  static Interval point(double v) { return {v, v}; }
  /// The unit interval [-1, 1].
  static Interval unit() { return {-1.0, 1.0}; }
  /// [centre - halfwidth, centre + halfwidth]; halfwidth must be >= 0.
  static Interval centred(double centre, double halfwidth);

  double lo() const noexcept { return lo_; }
  double hi() const noexcept { return hi_; }
  double width() const noexcept { return hi_ - lo_; }
  double mid() const noexcept { return 0.5 * (lo_ + hi_); }
  double radius() const noexcept { return 0.5 * (hi_ - lo_); }

  bool contains(double t) const noexcept { return lo_ <= t && t <= hi_; }
  bool contains(const Interval& other) const noexcept {
    return lo_ <= other.lo_ && other.hi_ <= hi_;
  }
  bool is_degenerate() const noexcept { return lo_ == hi_; }

  friend bool operator==(const Interval&, const Interval&) = default;

private:
  double lo_ = 0.0;
  double hi_ = 0.0;
};

Interval add(const Interval& a, const Interval& b);
Interval scale(double a, const Interval& x);
/// Exact range {t^2 : t in x}, not x*x.
Interval square(const Interval& x);
/// Requires x.lo() >= 0; throws std::domain_error otherwise.
Interval sqrt(const Interval& x);

inline Interval operator+(const Interval& a, const Interval& b) { return add(a, b); }
inline Interval operator*(double a, const Interval& x) { return scale(a, x); }

/// Axis-aligned rectangle re x im in the complex plane.
struct ComplexInterval {
  Interval re;
  Interval im;

  static ComplexInterval point(std::complex<double> z) {
    return {Interval::point(z.real()), Interval::point(z.imag())};
  }

  bool contains(std::complex<double> z) const noexcept {
    return re.contains(z.real()) && im.contains(z.imag());
  }
  std::complex<double> centre() const noexcept { return {re.mid(), im.mid()}; }
  double diagonal() const noexcept;

  friend bool operator==(const ComplexInterval&, const ComplexInterval&) = default;
};

ComplexInterval add(const ComplexInterval& a, const ComplexInterval& b);
inline ComplexInterval operator+(const ComplexInterval& a, const ComplexInterval& b) {
  return add(a, b);
}

/// Image of a real interval under multiplication by a crisp complex number.
///
/// The exact image is the segment from c*lo to c*hi; `box` is its axis-aligned
/// enclosure, which is exact only when c is purely real or purely imaginary.
struct ScaledSegment {
  std::complex<double> from;  // c * x.lo()
  std::complex<double> to;    // c * x.hi()
  ComplexInterval box;
};

ScaledSegment scale(std::complex<double> c, const Interval& x);

/// Ordered sequence of interval samples with an optional shared precision.
class IntervalSignal {
public:
  explicit IntervalSignal(std::vector<Interval> samples,
                          std::optional<double> precision = std::nullopt);

  /// Every sample becomes [v - precision, v + precision].
  static IntervalSignal from_values(std::span<const double> values, double precision);
  /// Width-zero signal.
  static IntervalSignal crisp(std::span<const double> values);

  std::size_t size() const noexcept { return samples_.size(); }
  const Interval& operator[](std::size_t n) const { return samples_[n]; }
  std::span<const Interval> samples() const noexcept { return samples_; }
  std::optional<double> precision() const noexcept { return precision_; }

  std::vector<double> midpoints() const;
  /// Multiplies every sample by a scalar; precision scales by |a|.
  IntervalSignal scaled(double a) const;

private:
  std::vector<Interval> samples_;
  std::optional<double> precision_;
};

}  // namespace ivdft
