#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "ivdft/error.hpp"
#include "ivdft/transforms.hpp"
#include "oracles.hpp"

using namespace ivdft;
using cplx = std::complex<double>;

namespace {

IntervalSignal rect_case() {
  return IntervalSignal({Interval(0, 1), Interval(1, 2), Interval(-1, 0), Interval(0, 0)});
}

IntervalSignal figure_signal(double precision, std::size_t n = 128) {
  return IntervalSignal::from_values(oracle::tone_signal(n), precision);
}

}  // namespace

TEST_CASE("twiddle factors") {
  for (std::size_t n = 0; n < 5; ++n) CHECK(twiddle({0, 5}, n) == cplx(1, 0));
  CHECK(std::abs(twiddle({1, 4}, 1) - cplx(0, -1)) < 1e-15);
  const auto w = twiddle({9, 8}, 7);
  CHECK(std::abs(w - std::polar(1.0, -7 * std::numbers::pi / 4)) < 1e-15);
  CHECK(w == twiddle({63 % 8, 8}, 1));
  // Large k*n stays accurate thanks to the integer reduction.
  CHECK(std::abs(twiddle({1'000'003, 1024}, 999) - oracle::naive_twiddle(1'000'003 % 1024, 999, 1024)) <
        1e-12);
  CHECK(twiddle({3, 10}, 7) == std::conj(twiddle({7, 10}, 7)));
}

TEST_CASE("crisp DFT") {
  const std::vector<double> impulse{1, 0, 0, 0}, dc{1, 1, 1, 1}, sine{0, 1, 0, -1};
  auto z = dft_crisp(impulse, 1);
  CHECK(z[0] == cplx(1, 0));
  CHECK(std::abs(z[1] - cplx(1, 0)) < 1e-15);
  z = dft_crisp(dc, 1);
  CHECK(z[0] == cplx(4, 0));
  CHECK(std::abs(z[1]) < 1e-15);
  z = dft_crisp(sine, 1);
  CHECK(std::abs(z[1] - cplx(0, -2)) < 1e-15);

  const auto x = oracle::tone_signal(50);
  const auto all = dft_crisp(x, 25);
  for (std::size_t k = 0; k <= 25; ++k) CHECK(std::abs(all[k] - oracle::naive_dft(x, k)) < 1e-10);
  CHECK_THROWS_AS(dft_crisp(std::vector<double>{}, 0), InputError);
}

TEST_CASE("brute force") {
  SUBCASE("level sizes and width-zero signal") {
    const std::vector<double> x{1.0, -2.0, 0.5, 3.0};
    const auto cloud = brute_force(IntervalSignal::crisp(x), {1, 4});
    cplx partial = 0.0;
    for (std::size_t n = 0; n < 4; ++n) {
      CHECK(cloud.levels[n].size() == (std::size_t{2} << n));
      partial += x[n] * twiddle({1, 4}, n);
      for (auto p : cloud.levels[n]) CHECK(std::abs(p - partial) < 1e-14);
    }
  }
  SUBCASE("two samples at k = 0") {
    const auto cloud = brute_force(IntervalSignal({Interval(0, 1), Interval(0, 1)}), {0, 2});
    std::vector<double> re;
    for (auto p : cloud.final()) {
      CHECK(p.imag() == 0.0);
      re.push_back(p.real());
    }
    std::sort(re.begin(), re.end());
    CHECK(re == std::vector<double>{0, 1, 1, 2});
  }
  SUBCASE("rectangle case extremes") {
    const auto pts = brute_force(rect_case(), {1, 4}).final();
    REQUIRE(pts.size() == 16);
    double rl = INFINITY, rh = -INFINITY, il = INFINITY, ih = -INFINITY;
    for (auto p : pts) {
      rl = std::min(rl, p.real());
      rh = std::max(rh, p.real());
      il = std::min(il, p.imag());
      ih = std::max(ih, p.imag());
    }
    CHECK(rl == doctest::Approx(0.0).scale(1));
    CHECK(rh == doctest::Approx(2.0));
    CHECK(il == doctest::Approx(-2.0));
    CHECK(ih == doctest::Approx(-1.0));
  }
  SUBCASE("partial limit and guards") {
    std::mt19937_64 rng(5);
    const auto s = oracle::random_signal(rng, 24);
    CHECK(brute_force(s, {3, 24}, 6).levels.size() == 6);
    CHECK_THROWS_AS(brute_force(s, {3, 24}, 21), ResourceError);
    CHECK_THROWS_AS(brute_force(s, {3, 24}), ResourceError);
    CHECK_THROWS_AS(brute_force(s, {3, 24}, 0), InputError);
    CHECK_THROWS_AS(brute_force(rect_case(), {1, 4}, 5), InputError);
  }
}

TEST_CASE("selective method") {
  SUBCASE("width-zero signal traces the crisp partial sums as points") {
    const std::vector<double> x{1.0, -2.0, 0.5, 3.0, 2.0};
    const auto trace = selective(IntervalSignal::crisp(x), {2, 5});
    cplx partial = 0.0;
    for (std::size_t n = 0; n < x.size(); ++n) {
      partial += x[n] * twiddle({2, 5}, n);
      CHECK(trace.regions[n].shape() == RegionShape::point);
      CHECK(std::abs(trace.regions[n].vertices()[0].as_complex() - partial) < 1e-14);
    }
  }
  SUBCASE("rectangle case") {
    const auto region = selective(rect_case(), {1, 4}).final();
    REQUIRE(region.shape() == RegionShape::polygon);
    const std::vector<cplx> expected{{0, -2}, {2, -2}, {2, -1}, {0, -1}};
    CHECK(oracle::vertex_mismatch(as_complex(region), expected) < 1e-12);
    CHECK(region.size() == 4);
  }
  SUBCASE("N = 128 with precision 2 stays within the zonogon vertex bound") {
    const auto s = figure_signal(2.0);
    for (std::size_t k : {1u, 9u, 21u, 60u, 64u}) CHECK(selective(s, {k, 128}).final().size() <= 256);
  }
}

TEST_CASE("bounding-box method") {
  const auto box = bounding_box(rect_case(), {1, 4}).final();
  CHECK(box.re.lo() == doctest::Approx(0.0).scale(1));
  CHECK(box.re.hi() == doctest::Approx(2.0));
  CHECK(box.im.lo() == doctest::Approx(-2.0));
  CHECK(box.im.hi() == doctest::Approx(-1.0));

  const auto crisp = bounding_box(IntervalSignal::crisp(oracle::tone_signal(16)), {3, 16});
  for (const auto& b : crisp.boxes) {
    CHECK(b.re.width() == 0.0);
    CHECK(b.im.width() == 0.0);
  }

  const std::size_t N = 12;
  const auto dc = bounding_box(IntervalSignal(std::vector<Interval>(N, Interval::unit())), {0, N});
  CHECK(dc.final() == ComplexInterval{{-double(N), double(N)}, {0, 0}});
}

TEST_CASE("centred form") {
  const auto x = oracle::tone_signal(128);
  const FrequencyIndex freq(9, 128);

  const auto zero = centred_form(x, 0.0, freq);
  CHECK(zero.uncertainty.shape() == RegionShape::point);
  CHECK(std::abs(zero.uncertainty.vertices()[0].as_complex()) == 0.0);

  const auto one = centred_form(x, 1.0, freq);
  const auto two = centred_form(x, 2.0, freq);
  REQUIRE(one.uncertainty.size() == two.uncertainty.size());
  for (std::size_t i = 0; i < one.uncertainty.size(); ++i) {
    CHECK(std::abs(2.0 * one.uncertainty.vertices()[i].as_complex() -
                   two.uncertainty.vertices()[i].as_complex()) < 1e-12);
  }

  const auto direct = selective(IntervalSignal::from_values(x, 2.0), freq).final();
  const auto via_centre = two.region();
  CHECK(direct.size() == via_centre.size());
  CHECK(oracle::vertex_mismatch(as_complex(direct), as_complex(via_centre)) <
        1e-9 * direct.magnitude());
  const auto box = bounding_box(IntervalSignal::from_values(x, 2.0), freq).final();
  CHECK(std::abs(box.re.lo() - two.box().re.lo()) < 1e-9);
  CHECK(std::abs(box.im.hi() - two.box().im.hi()) < 1e-9);
  CHECK(std::abs(two.centre - oracle::naive_dft(x, 9)) < 1e-9);

  CHECK_THROWS_AS(centred_form(x, -1.0, freq), InputError);
}

TEST_CASE("small-N oracle equivalence") {
  std::mt19937_64 rng(2024);
  for (std::size_t N = 2; N <= 10; ++N) {
    for (int rep = 0; rep < 10; ++rep) {
      const auto s = oracle::random_signal(rng, N);
      const std::size_t k = std::uniform_int_distribution<std::size_t>(0, 2 * N)(rng);
      const auto pts = oracle::enumerate_endpoints(s, k);
      const auto ref = oracle::gift_wrap(pts);
      const auto region = selective(s, {k, N}).final();
      double scale = 1.0;
      for (auto p : ref) scale = std::max(scale, std::abs(p));
      CHECK(ref.size() == region.size());
      CHECK(oracle::vertex_mismatch(ref, as_complex(region)) <= 1e-9 * scale);

      const auto box = bounding_box(s, {k, N}).final();
      double rl = INFINITY, rh = -INFINITY, il = INFINITY, ih = -INFINITY;
      for (auto p : pts) {
        rl = std::min(rl, p.real());
        rh = std::max(rh, p.real());
        il = std::min(il, p.imag());
        ih = std::max(ih, p.imag());
      }
      CHECK(std::abs(box.re.lo() - rl) <= 1e-12 * scale);
      CHECK(std::abs(box.re.hi() - rh) <= 1e-12 * scale);
      CHECK(std::abs(box.im.lo() - il) <= 1e-12 * scale);
      CHECK(std::abs(box.im.hi() - ih) <= 1e-12 * scale);
    }
  }
}

TEST_CASE("hull nested in box at every iteration; zonogon bound") {
  std::mt19937_64 rng(11);
  for (std::size_t N : {5u, 16u, 37u, 64u}) {
    const auto s = oracle::random_signal(rng, N, 2.0);
    for (std::size_t k = 0; k <= N / 2; ++k) {
      const auto hulls = selective(s, {k, N});
      const auto boxes = bounding_box(s, {k, N});
      for (std::size_t n = 0; n < N; ++n) {
        const auto& b = boxes.boxes[n];
        const double tol = 1e-9 * (1.0 + b.diagonal());
        for (const auto& v : hulls.regions[n].vertices()) {
          CHECK(v.x >= b.re.lo() - tol);
          CHECK(v.x <= b.re.hi() + tol);
          CHECK(v.y >= b.im.lo() - tol);
          CHECK(v.y <= b.im.hi() + tol);
        }
        CHECK(hulls.regions[n].size() <= 2 * (n + 1));
      }
    }
  }
}

TEST_CASE("box centres follow the crisp DFT of the midpoints") {
  const auto s = IntervalSignal::from_values(oracle::tone_signal(40), 1.5);
  const auto mids = s.midpoints();
  const FrequencyIndex freq(7, 40);
  const auto boxes = bounding_box(s, freq);
  cplx partial = 0.0;
  for (std::size_t n = 0; n < 40; ++n) {
    partial += mids[n] * twiddle(freq, n);
    CHECK(std::abs(boxes.boxes[n].centre() - partial) < 1e-9);
  }
}

TEST_CASE("sampled crisp signals land inside the box and the hull") {
  std::mt19937_64 rng(99);
  const auto s = oracle::random_signal(rng, 32, 1.5);
  std::uniform_real_distribution<double> u(0, 1);
  for (std::size_t k : {1u, 5u, 16u}) {
    const FrequencyIndex freq(k, 32);
    const auto region = selective(s, freq).final();
    const auto box = bounding_box(s, freq).final();
    for (int trial = 0; trial < 1000; ++trial) {
      std::vector<double> x(32);
      for (std::size_t n = 0; n < 32; ++n) x[n] = s[n].lo() + u(rng) * s[n].width();
      const auto z = dft_crisp_at(x, freq);
      CHECK(region.distance_to(PlanarPoint::from(z)) <= 1e-9);
      CHECK(box.re.lo() - 1e-9 <= z.real());
      CHECK(z.real() <= box.re.hi() + 1e-9);
      CHECK(box.im.lo() - 1e-9 <= z.imag());
      CHECK(z.imag() <= box.im.hi() + 1e-9);
    }
  }
}

TEST_CASE("conjugate symmetry between k and N - k") {
  std::mt19937_64 rng(8);
  const std::size_t N = 20;
  const auto s = oracle::random_signal(rng, N);
  for (std::size_t k = 1; k < N / 2; ++k) {
    const auto a = selective(s, {k, N}).final();
    const auto b = selective(s, {N - k, N}).final();
    CHECK(oracle::vertex_mismatch(as_complex(a.mirrored()), as_complex(b)) < 1e-9);
    CHECK(max_distance_to_origin(a) == doctest::Approx(max_distance_to_origin(b)).epsilon(1e-12));
    CHECK(min_distance_to_origin(a) ==
          doctest::Approx(min_distance_to_origin(b)).epsilon(1e-12).scale(1.0));
  }
}
