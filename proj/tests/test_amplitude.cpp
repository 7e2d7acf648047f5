#include <doctest.h>

#include <cmath>
#include <random>

#include "ivdft/amplitude.hpp"
#include "ivdft/error.hpp"
#include "oracles.hpp"

using namespace ivdft;

namespace {

ConvexRegion hull_of(std::initializer_list<PlanarPoint> pts) {
  return convex_hull(std::span<const PlanarPoint>(pts.begin(), pts.size()));
}

}  // namespace

TEST_CASE("selective amplitude bounds") {
  SUBCASE("rectangle away from the origin") {
    const auto rect = hull_of({{0, -2}, {2, -2}, {2, -1}, {0, -1}});
    const auto b = amplitude_bounds_selective(rect);
    const double sampled = oracle::sampled_min_distance(as_complex(rect));
    CHECK(sampled == doctest::Approx(1.0));
    CHECK(b.lo == doctest::Approx(sampled).epsilon(1e-12));
    CHECK(b.hi == doctest::Approx(std::sqrt(8.0)));
    CHECK_FALSE(b.origin_enclosed);
  }
  SUBCASE("origin enclosed") {
    const auto b = amplitude_bounds_selective(hull_of({{-1, -1}, {1, -1}, {1, 1}, {-1, 1}}));
    CHECK(b.lo == 0.0);
    CHECK(b.origin_enclosed);
    CHECK(b.hi == doctest::Approx(std::sqrt(2.0)));
  }
  SUBCASE("crisp coefficient") {
    const auto b = amplitude_bounds_selective(hull_of({{3, 4}}));
    CHECK(b.lo == doctest::Approx(5.0));
    CHECK(b.hi == doctest::Approx(5.0));
  }
  SUBCASE("edge-interior minimum versus vertex argmin") {
    const auto sq = hull_of({{1, -1}, {3, -1}, {3, 1}, {1, 1}});
    CHECK(amplitude_bounds_selective(sq).lo == doctest::Approx(1.0));
    CHECK(amplitude_bounds_selective(sq, MinimumRule::vertex_argmin).lo ==
          doctest::Approx(std::sqrt(2.0)));
    // The vertex rule still reports 0 when the origin is enclosed.
    const auto around = hull_of({{-1, -1}, {1, -1}, {1, 1}, {-1, 1}});
    CHECK(amplitude_bounds_selective(around, MinimumRule::vertex_argmin).lo == 0.0);
  }
}

TEST_CASE("box amplitude bounds") {
  auto b = amplitude_bounds_box({{0, 2}, {-2, -1}});
  CHECK(b.lo == doctest::Approx(1.0));
  CHECK(b.hi == doctest::Approx(std::sqrt(8.0)));
  CHECK_FALSE(b.origin_enclosed);
  b = amplitude_bounds_box({{-1, 1}, {-1, 1}});
  CHECK(b.lo == 0.0);
  CHECK(b.origin_enclosed);
  CHECK(b.hi == doctest::Approx(std::sqrt(2.0)));
  b = amplitude_bounds_box({{3, 3}, {4, 4}});
  CHECK(b.lo == doctest::Approx(5.0));
  CHECK(b.hi == doctest::Approx(5.0));

  // Against the interval evaluation sqrt(re^2 + im^2) with the tight square.
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(-5, 5);
  for (int i = 0; i < 500; ++i) {
    double a = u(rng), c = u(rng), d = u(rng), e = u(rng);
    const ComplexInterval box{{std::min(a, c), std::max(a, c)}, {std::min(d, e), std::max(d, e)}};
    const auto via_intervals = ivdft::sqrt(square(box.re) + square(box.im));
    const auto direct = amplitude_bounds_box(box);
    CHECK(direct.lo == doctest::Approx(via_intervals.lo()).epsilon(1e-12).scale(1.0));
    CHECK(direct.hi == doctest::Approx(via_intervals.hi()).epsilon(1e-12));
  }
}

TEST_CASE("spectrum of a width-zero signal is the crisp amplitude") {
  const auto x = oracle::tone_signal(32);
  const auto s = IntervalSignal::crisp(x);
  for (Method m : {Method::box, Method::selective}) {
    const auto spec = spectrum_bounds(s, m, KRange::full(32));
    REQUIRE(spec.entries.size() == 17);
    for (const auto& e : spec.entries) {
      const double ref = std::abs(oracle::naive_dft(x, e.k));
      CHECK(e.bounds.lo == doctest::Approx(ref).epsilon(1e-10));
      CHECK(e.bounds.hi == doctest::Approx(ref).epsilon(1e-10));
    }
  }
}

TEST_CASE("brute, selective and box bounds are nested") {
  std::mt19937_64 rng(31);
  for (std::size_t N : {4u, 7u, 10u}) {
    for (int rep = 0; rep < 5; ++rep) {
      const auto s = oracle::random_signal(rng, N);
      const auto range = KRange::full(N);
      const auto brute = spectrum_bounds(s, Method::brute, range);
      const auto sel = spectrum_bounds(s, Method::selective, range);
      const auto box = spectrum_bounds(s, Method::box, range);
      for (std::size_t i = 0; i < range.size(); ++i) {
        const auto& b = brute.entries[i].bounds;
        const auto& h = sel.entries[i].bounds;
        const auto& x = box.entries[i].bounds;
        CHECK(b.lo == doctest::Approx(h.lo).epsilon(1e-9).scale(1.0));
        CHECK(b.hi == doctest::Approx(h.hi).epsilon(1e-9));
        CHECK(h.lo >= x.lo - 1e-9);
        CHECK(h.hi <= x.hi + 1e-9);
      }
    }
  }
}

TEST_CASE("spectrum bounds widen with the precision") {
  const auto x = oracle::tone_signal(128);
  std::vector<BoundedSpectrum> runs;
  for (double xi : {0.5, 1.0, 2.0}) {
    runs.push_back(spectrum_bounds(IntervalSignal::from_values(x, xi), Method::selective,
                                   KRange::interior(128)));
  }
  for (std::size_t i = 0; i < runs[0].entries.size(); ++i) {
    for (std::size_t r = 1; r < runs.size(); ++r) {
      CHECK(runs[r].entries[i].bounds.lo <= runs[r - 1].entries[i].bounds.lo + 1e-9);
      CHECK(runs[r].entries[i].bounds.hi >= runs[r - 1].entries[i].bounds.hi - 1e-9);
    }
  }
  CHECK(runs[2].precision == 2.0);
}

TEST_CASE("positive homogeneity and conjugate symmetry") {
  std::mt19937_64 rng(6);
  const std::size_t N = 24;
  const auto s = oracle::random_signal(rng, N);
  const auto scaled = s.scaled(3.5);
  for (Method m : {Method::box, Method::selective}) {
    const auto a = spectrum_bounds(s, m, KRange::full(N));
    const auto b = spectrum_bounds(scaled, m, KRange::full(N));
    for (std::size_t i = 0; i < a.entries.size(); ++i) {
      CHECK(b.entries[i].bounds.lo == doctest::Approx(3.5 * a.entries[i].bounds.lo).epsilon(1e-12));
      CHECK(b.entries[i].bounds.hi == doctest::Approx(3.5 * a.entries[i].bounds.hi).epsilon(1e-12));
    }
  }
  for (std::size_t k = 1; k < N / 2; ++k) {
    const auto a = amplitude_bounds_selective(selective(s, {k, N}).final());
    const auto b = amplitude_bounds_selective(selective(s, {N - k, N}).final());
    CHECK(a.lo == doctest::Approx(b.lo).epsilon(1e-9).scale(1.0));
    CHECK(a.hi == doctest::Approx(b.hi).epsilon(1e-9));
  }
}

TEST_CASE("Monte-Carlo amplitudes stay inside the bounds") {
  std::mt19937_64 rng(17);
  const std::size_t N = 48;
  const auto s = oracle::random_signal(rng, N, 2.0);
  const auto sel = spectrum_bounds(s, Method::selective, KRange::full(N));
  const auto box = spectrum_bounds(s, Method::box, KRange::full(N));
  std::uniform_real_distribution<double> u(0, 1);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<double> x(N);
    for (std::size_t n = 0; n < N; ++n) x[n] = s[n].lo() + u(rng) * s[n].width();
    for (std::size_t i = 0; i < sel.entries.size(); ++i) {
      const double amp = std::abs(oracle::naive_dft(x, sel.entries[i].k));
      CHECK(sel.entries[i].bounds.contains(amp, 1e-9 * (1 + sel.entries[i].bounds.hi)));
      CHECK(box.entries[i].bounds.contains(amp, 1e-9 * (1 + box.entries[i].bounds.hi)));
    }
  }
}

TEST_CASE("range validation, resource cap and worker determinism") {
  std::mt19937_64 rng(1);
  const auto s = oracle::random_signal(rng, 32);
  CHECK_THROWS_AS(spectrum_bounds(s, Method::box, {0, 17}), InputError);
  CHECK_THROWS_AS(spectrum_bounds(s, Method::box, {5, 4}), InputError);
  CHECK_THROWS_AS(spectrum_bounds(s, Method::brute, {1, 2}), ResourceError);

  const auto one = spectrum_bounds(s, Method::selective, KRange::full(32), {.workers = 1});
  const auto many = spectrum_bounds(s, Method::selective, KRange::full(32), {.workers = 4});
  REQUIRE(one.entries.size() == many.entries.size());
  for (std::size_t i = 0; i < one.entries.size(); ++i) {
    CHECK(one.entries[i].k == i);
    CHECK(many.entries[i].k == i);
    CHECK(one.entries[i].bounds.lo == many.entries[i].bounds.lo);
    CHECK(one.entries[i].bounds.hi == many.entries[i].bounds.hi);
  }
}

TEST_CASE("method comparison rows") {
  std::mt19937_64 rng(2);
  const auto s = oracle::random_signal(rng, 16);
  const auto box = spectrum_bounds(s, Method::box, KRange::interior(16));
  const auto sel = spectrum_bounds(s, Method::selective, KRange::interior(16));
  const auto rows = compare_methods(box, sel);
  REQUIRE(rows.size() == 7);
  for (const auto& r : rows) {
    CHECK(r.nested(1e-9));
    CHECK(r.hull_width() <= r.box_width() + 1e-9);
  }
  const auto other = spectrum_bounds(s, Method::box, {0, 3});
  CHECK_THROWS_AS(compare_methods(other, sel), InvariantError);
}
