#include "ivdft/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include <fmt/format.h>

#include "ivdft/geometry.hpp"

namespace ivdft {
namespace {

constexpr double kHullTol = 1e-9;
constexpr double kBoxTol = 1e-12;
constexpr double kNestTol = 1e-9;
constexpr double kMcTol = 1e-9;

double relative_to(double value, double scale) { return scale > 0.0 ? value / scale : value; }

// Largest distance from a vertex of one region to the nearest vertex of the
// other, in both directions.
double vertex_mismatch(const ConvexRegion& a, const ConvexRegion& b) {
  auto one_way = [](const ConvexRegion& from, const ConvexRegion& to) {
    double worst = 0.0;
    for (const auto& p : from.vertices()) {
      double best = std::numeric_limits<double>::infinity();
      for (const auto& q : to.vertices()) best = std::min(best, std::hypot(p.x - q.x, p.y - q.y));
      worst = std::max(worst, best);
    }
    return worst;
  };
  return std::max(one_way(a, b), one_way(b, a));
}

// Distance by which p lies outside box (0 when inside).
double box_excess(const ComplexInterval& box, PlanarPoint p) {
  const double dx = std::max({box.re.lo() - p.x, p.x - box.re.hi(), 0.0});
  const double dy = std::max({box.im.lo() - p.y, p.y - box.im.hi(), 0.0});
  return std::hypot(dx, dy);
}

double box_scale(const ComplexInterval& box) {
  const double diag = box.diagonal();
  if (diag > 0.0) return diag;
  return 1.0 + std::max({std::abs(box.re.lo()), std::abs(box.re.hi()), std::abs(box.im.lo()),
                         std::abs(box.im.hi())});
}

}  // namespace

std::size_t VerificationReport::passed() const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; }));
}

void VerificationReport::sort() {
  std::stable_sort(checks.begin(), checks.end(), [](const CheckResult& a, const CheckResult& b) {
    if (a.name != b.name) return a.name < b.name;
    const auto ka = a.locus.k.value_or(0);
    const auto kb = b.locus.k.value_or(0);
    return ka < kb;
  });
}

std::string VerificationReport::to_text() const {
  std::string out = fmt::format("verification report (seed {})\n", seed);
  for (const auto& c : checks) {
    std::string where;
    if (c.locus.k) where += fmt::format(" k={}", *c.locus.k);
    if (c.locus.n) where += fmt::format(" n={}", *c.locus.n);
    if (c.locus.sample) where += fmt::format(" sample={}", *c.locus.sample);
    out += fmt::format("  [{}] {:<22} discrepancy={:.3e} tol={:.1e}{}{}{}\n",
                       c.passed ? "PASS" : "FAIL", c.name, c.discrepancy, c.tolerance, where,
                       c.detail.empty() ? "" : "  ", c.detail);
  }
  out += fmt::format("{} checks, {} passed, {} failed\n", checks.size(), passed(), failed());
  return out;
}

nlohmann::json VerificationReport::to_json() const {
  nlohmann::json doc;
  doc["seed"] = seed;
  doc["counts"] = {{"total", checks.size()}, {"passed", passed()}, {"failed", failed()}};
  auto& arr = doc["checks"] = nlohmann::json::array();
  for (const auto& c : checks) {
    nlohmann::json j = {{"name", c.name},
                        {"passed", c.passed},
                        {"discrepancy", c.discrepancy},
                        {"tolerance", c.tolerance}};
    j["k"] = c.locus.k ? nlohmann::json(*c.locus.k) : nlohmann::json(nullptr);
    j["n"] = c.locus.n ? nlohmann::json(*c.locus.n) : nlohmann::json(nullptr);
    j["sample"] = c.locus.sample ? nlohmann::json(*c.locus.sample) : nlohmann::json(nullptr);
    if (!c.detail.empty()) j["detail"] = c.detail;
    arr.push_back(std::move(j));
  }
  return doc;
}

CheckResult verify_selective_vs_brute(const IntervalSignal& signal, const FrequencyIndex& freq) {
  const auto cloud = brute_force(signal, freq);
  const auto oracle = convex_hull(std::span(cloud.final()));
  const auto hull = selective(signal, freq).final();

  CheckResult r;
  r.name = "selective_vs_brute";
  r.tolerance = kHullTol;
  r.locus.k = freq.k();
  r.discrepancy =
      relative_to(vertex_mismatch(hull, oracle), std::max(oracle.magnitude(), oracle.extent()));
  const bool same_count = hull.size() == oracle.size();
  r.passed = same_count && r.discrepancy <= kHullTol;
  if (!same_count) {
    r.detail = fmt::format("vertex count {} vs brute-force hull {}", hull.size(), oracle.size());
  }
  return r;
}

CheckResult verify_box_vs_brute(const IntervalSignal& signal, const FrequencyIndex& freq) {
  const auto cloud = brute_force(signal, freq);
  const auto box = bounding_box(signal, freq).final();
  double re_lo = std::numeric_limits<double>::infinity(), re_hi = -re_lo;
  double im_lo = re_lo, im_hi = -re_lo;
  for (auto z : cloud.final()) {
    re_lo = std::min(re_lo, z.real());
    re_hi = std::max(re_hi, z.real());
    im_lo = std::min(im_lo, z.imag());
    im_hi = std::max(im_hi, z.imag());
  }
  const double diff = std::max({std::abs(box.re.lo() - re_lo), std::abs(box.re.hi() - re_hi),
                                std::abs(box.im.lo() - im_lo), std::abs(box.im.hi() - im_hi)});
  const double scale = std::max({1.0, std::abs(re_lo), std::abs(re_hi), std::abs(im_lo),
                                 std::abs(im_hi)});
  CheckResult r;
  r.name = "box_vs_brute";
  r.tolerance = kBoxTol;
  r.locus.k = freq.k();
  r.discrepancy = diff / scale;
  r.passed = r.discrepancy <= kBoxTol;
  return r;
}

CheckResult verify_hull_in_box(const IntervalSignal& signal, const FrequencyIndex& freq) {
  const auto hulls = selective(signal, freq);
  const auto boxes = bounding_box(signal, freq);

  CheckResult r;
  r.name = "hull_in_box";
  r.tolerance = kNestTol;
  r.locus.k = freq.k();
  double worst = 0.0;
  for (std::size_t n = 0; n < hulls.regions.size(); ++n) {
    const auto& box = boxes.boxes[n];
    const double scale = box_scale(box);
    for (const auto& v : hulls.regions[n].vertices()) {
      const double excess = box_excess(box, v) / scale;
      if (excess > worst) {
        worst = excess;
        r.locus.n = n;
      }
    }
  }

  // Each final box edge must be reached by some hull vertex.
  const auto& box = boxes.final();
  const auto& hull = hulls.final();
  const double inf = std::numeric_limits<double>::infinity();
  double gaps[4] = {inf, inf, inf, inf};
  for (const auto& v : hull.vertices()) {
    gaps[0] = std::min(gaps[0], std::abs(v.x - box.re.lo()));
    gaps[1] = std::min(gaps[1], std::abs(box.re.hi() - v.x));
    gaps[2] = std::min(gaps[2], std::abs(v.y - box.im.lo()));
    gaps[3] = std::min(gaps[3], std::abs(box.im.hi() - v.y));
  }
  const double touch = *std::max_element(std::begin(gaps), std::end(gaps)) / box_scale(box);
  if (touch > worst) {
    worst = touch;
    r.locus.n = hulls.regions.size() - 1;
    r.detail = "final box edge not touched";
  }
  r.discrepancy = worst;
  r.passed = worst <= kNestTol;
  if (r.passed) r.detail.clear();
  return r;
}

CheckResult verify_mc_enclosure(const IntervalSignal& signal, KRange range, std::size_t samples,
                                std::uint64_t seed, MinimumRule rule) {
  const std::size_t len = signal.size();
  const auto box = spectrum_bounds(signal, Method::box, range);
  const auto sel = spectrum_bounds(signal, Method::selective, range, {.rule = rule});

  std::vector<std::vector<std::complex<double>>> table(range.size());
  for (std::size_t i = 0; i < range.size(); ++i) {
    const FrequencyIndex freq(range.k_min + i, len);
    table[i].resize(len);
    for (std::size_t n = 0; n < len; ++n) table[i][n] = twiddle(freq, n);
  }

  CheckResult r;
  r.name = "mc_enclosure";
  r.tolerance = kMcTol;
  r.discrepancy = -std::numeric_limits<double>::infinity();

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> x(len);
  for (std::size_t s = 0; s < samples; ++s) {
    for (std::size_t n = 0; n < len; ++n) {
      const auto& iv = signal[n];
      x[n] = iv.is_degenerate() ? iv.lo() : std::min(iv.hi(), iv.lo() + unit(rng) * iv.width());
    }
    for (std::size_t i = 0; i < range.size(); ++i) {
      std::complex<double> z = 0.0;
      for (std::size_t n = 0; n < len; ++n) z += x[n] * table[i][n];
      const double amp = std::abs(z);
      for (const auto* b : {&box.entries[i].bounds, &sel.entries[i].bounds}) {
        const double violation = std::max(b->lo - amp, amp - b->hi) / (1.0 + b->hi);
        if (violation > r.discrepancy) {
          r.discrepancy = violation;
          r.locus.k = range.k_min + i;
          r.locus.sample = s;
          r.detail = fmt::format("worst against {} bounds", to_string(b->method));
        }
      }
    }
  }
  if (samples == 0) r.discrepancy = 0.0;
  r.passed = r.discrepancy <= kMcTol;
  return r;
}

VerificationReport verify_signal(const IntervalSignal& signal, KRange range,
                                 const VerifyOptions& options) {
  VerificationReport report;
  report.seed = options.seed;
  for (std::size_t k = range.k_min; k <= range.k_max; ++k) {
    const FrequencyIndex freq(k, signal.size());
    report.checks.push_back(verify_hull_in_box(signal, freq));
    if (signal.size() <= kBruteForceCap) {
      report.checks.push_back(verify_selective_vs_brute(signal, freq));
      report.checks.push_back(verify_box_vs_brute(signal, freq));
    }
  }
  if (options.mc_samples > 0) {
    report.checks.push_back(
        verify_mc_enclosure(signal, range, options.mc_samples, options.seed, options.rule));
  }
  report.sort();
  return report;
}

}  // namespace ivdft
