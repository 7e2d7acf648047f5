#include "ivdft/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <fmt/format.h>

#include "ivdft/error.hpp"

namespace ivdft {
namespace {

constexpr double kRelTol = 1e-12;

double cross(PlanarPoint o, PlanarPoint a, PlanarPoint b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

double dist(PlanarPoint a, PlanarPoint b) { return std::hypot(a.x - b.x, a.y - b.y); }

// Turn o->a->b is treated as collinear (or clockwise) unless the cross
// product clears a threshold that scales with both the operand lengths and
// the coordinate magnitude, so it tracks the rounding error of the inputs.
bool is_left_turn(PlanarPoint o, PlanarPoint a, PlanarPoint b, double coord_scale) {
  const double la = dist(o, a);
  const double lb = dist(o, b);
  const double len = std::max(la, lb);
  return cross(o, a, b) > kRelTol * len * std::max(len, coord_scale);
}

double coordinate_scale(std::span<const PlanarPoint> pts) {
  double s = 0.0;
  for (const auto& p : pts) s = std::max({s, std::abs(p.x), std::abs(p.y)});
  return s;
}

// Removes near-coincident neighbours and collinear middles from a closed CCW
// chain until none remain.
void simplify_cycle(std::vector<PlanarPoint>& v, double coord_scale) {
  const double dup_tol = kRelTol * std::max(coord_scale, std::numeric_limits<double>::min());
  bool changed = true;
  while (changed && v.size() > 1) {
    changed = false;
    for (std::size_t i = 0; i < v.size() && v.size() > 1; ++i) {
      const std::size_t j = (i + 1) % v.size();
      if (dist(v[i], v[j]) <= dup_tol) {
        // Keep the earlier vertex so that v[0] stays the lexicographic minimum.
        v.erase(v.begin() + static_cast<std::ptrdiff_t>(j == 0 ? i : j));
        changed = true;
        break;
      }
    }
    if (changed || v.size() < 3) continue;
    for (std::size_t i = 0; i < v.size(); ++i) {
      const std::size_t prev = (i + v.size() - 1) % v.size();
      const std::size_t next = (i + 1) % v.size();
      // Only a pass-through vertex is redundant. In a flat (collinear) cycle
      // the two extreme points are reversals and must survive.
      const double dot = (v[i].x - v[prev].x) * (v[next].x - v[i].x) +
                         (v[i].y - v[prev].y) * (v[next].y - v[i].y);
      if (dot > 0.0 && !is_left_turn(v[prev], v[i], v[next], coord_scale)) {
        v.erase(v.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
    }
  }
  if (v.size() == 2 && dist(v[0], v[1]) <= dup_tol) v.pop_back();
}

std::vector<PlanarPoint> rotate_to_lexicographic_min(std::vector<PlanarPoint> v) {
  auto it = std::min_element(v.begin(), v.end(), [](const PlanarPoint& a, const PlanarPoint& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  });
  std::rotate(v.begin(), it, v.end());
  return v;
}

}  // namespace

double PlanarPoint::norm() const { return std::hypot(x, y); }

double ConvexRegion::diameter() const {
  double d = 0.0;
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    for (std::size_t j = i + 1; j < vertices_.size(); ++j) d = std::max(d, dist(vertices_[i], vertices_[j]));
  return d;
}

double ConvexRegion::magnitude() const { return coordinate_scale(vertices_); }

double ConvexRegion::extent() const {
  double xmin = vertices_[0].x, xmax = xmin, ymin = vertices_[0].y, ymax = ymin;
  for (const auto& v : vertices_) {
    xmin = std::min(xmin, v.x);
    xmax = std::max(xmax, v.x);
    ymin = std::min(ymin, v.y);
    ymax = std::max(ymax, v.y);
  }
  return std::hypot(xmax - xmin, ymax - ymin);
}

bool ConvexRegion::contains(PlanarPoint p) const {
  const double tol = kRelTol * std::max({magnitude(), extent(), p.norm()});
  switch (shape_) {
    case RegionShape::point:
      return dist(p, vertices_[0]) <= tol;
    case RegionShape::segment:
      return segment_distance(p, vertices_[0], vertices_[1]) <= tol;
    case RegionShape::polygon:
      break;
  }
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    const auto& a = vertices_[i];
    const auto& b = vertices_[(i + 1) % vertices_.size()];
    // Signed distance of p from the edge line, positive on the inner side.
    if (cross(a, b, p) < -tol * dist(a, b)) return false;
  }
  return true;
}

double ConvexRegion::distance_to(PlanarPoint p) const {
  if (contains(p)) return 0.0;
  if (shape_ == RegionShape::point) return dist(p, vertices_[0]);
  double best = std::numeric_limits<double>::infinity();
  const std::size_t edges = shape_ == RegionShape::segment ? 1 : vertices_.size();
  for (std::size_t i = 0; i < edges; ++i) {
    best = std::min(best, segment_distance(p, vertices_[i], vertices_[(i + 1) % vertices_.size()]));
  }
  return best;
}

ConvexRegion ConvexRegion::scaled(double a) const {
  std::vector<PlanarPoint> pts(vertices_);
  for (auto& v : pts) v = {a * v.x, a * v.y};
  return convex_hull(pts);
}

ConvexRegion ConvexRegion::translated(std::complex<double> shift) const {
  std::vector<PlanarPoint> pts(vertices_);
  for (auto& v : pts) v = {v.x + shift.real(), v.y + shift.imag()};
  return convex_hull(pts);
}

ConvexRegion ConvexRegion::mirrored() const {
  std::vector<PlanarPoint> pts(vertices_);
  for (auto& v : pts) v.y = -v.y;
  return convex_hull(pts);
}

ConvexRegion convex_hull(std::span<const PlanarPoint> points) {
  if (points.empty()) throw InputError("convex hull of an empty point set");
  for (const auto& p : points) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
      throw InputError(fmt::format("non-finite point ({}, {}) passed to convex hull", p.x, p.y));
    }
  }

  std::vector<PlanarPoint> pts(points.begin(), points.end());
  std::sort(pts.begin(), pts.end(), [](const PlanarPoint& a, const PlanarPoint& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  });
  const double scale = coordinate_scale(pts);
  const double dup_tol = kRelTol * std::max(scale, std::numeric_limits<double>::min());
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [dup_tol](const PlanarPoint& a, const PlanarPoint& b) {
                          return std::abs(a.x - b.x) <= dup_tol && std::abs(a.y - b.y) <= dup_tol;
                        }),
            pts.end());

  if (pts.size() == 1) return ConvexRegion({pts[0]}, RegionShape::point);

  // Andrew's monotone chain with the plain sign test. A tolerance here would
  // let float noise in x reorder nearly vertical runs and pop true extremes;
  // near-collinear survivors are removed by simplify_cycle instead.
  std::vector<PlanarPoint> hull(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0.0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0.0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);  // last point repeats the first

  simplify_cycle(hull, scale);
  hull = rotate_to_lexicographic_min(std::move(hull));

  switch (hull.size()) {
    case 1:
      return ConvexRegion(std::move(hull), RegionShape::point);
    case 2:
      return ConvexRegion(std::move(hull), RegionShape::segment);
    default:
      return ConvexRegion(std::move(hull), RegionShape::polygon);
  }
}

ConvexRegion convex_hull(std::span<const std::complex<double>> points) {
  std::vector<PlanarPoint> pts;
  pts.reserve(points.size());
  for (auto z : points) pts.push_back(PlanarPoint::from(z));
  return convex_hull(std::span<const PlanarPoint>(pts));
}

std::vector<std::complex<double>> as_complex(const ConvexRegion& region) {
  std::vector<std::complex<double>> out;
  out.reserve(region.size());
  for (const auto& v : region.vertices()) out.push_back(v.as_complex());
  return out;
}

bool origin_in_region(const ConvexRegion& region) { return region.contains({0.0, 0.0}); }

double min_distance_to_origin(const ConvexRegion& region) { return region.distance_to({0.0, 0.0}); }

double min_vertex_distance_to_origin(const ConvexRegion& region) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& v : region.vertices()) best = std::min(best, v.norm());
  return best;
}

double max_distance_to_origin(const ConvexRegion& region) {
  double best = 0.0;
  for (const auto& v : region.vertices()) best = std::max(best, v.norm());
  return best;
}

double segment_distance(PlanarPoint p, PlanarPoint a, PlanarPoint b) {
  const double dx = b.x - a.x;
  const double dy = b.y - a.y;
  const double len2 = dx * dx + dy * dy;
  if (len2 == 0.0) return dist(p, a);
  const double t = std::clamp(((p.x - a.x) * dx + (p.y - a.y) * dy) / len2, 0.0, 1.0);
  return dist(p, {a.x + t * dx, a.y + t * dy});
}

}  // namespace ivdft
