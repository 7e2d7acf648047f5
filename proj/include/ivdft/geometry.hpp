#pragma once

#include <complex>
#include <span>
#include <vector>

namespace ivdft {

/// A point of the complex plane viewed as R^2.
struct PlanarPoint {
  double x = 0.0;
  double y = 0.0;

  static PlanarPoint from(std::complex<double> z) { return {z.real(), z.imag()}; }
  std::complex<double> as_complex() const { return {x, y}; }
  double norm() const;

  friend bool operator==(const PlanarPoint&, const PlanarPoint&) = default;
};

enum class RegionShape { point, segment, polygon };

/// Convex hull of a finite planar point set.
///
/// Vertices run counter-clockwise from the lexicographically smallest
/// (x, then y) vertex, with no three consecutive vertices collinear. A
/// segment stores its two endpoints, a point its single vertex. The only way
/// to obtain a region is convex_hull(), so these invariants always hold.
class ConvexRegion {
public:
  RegionShape shape() const noexcept { return shape_; }
  std::span<const PlanarPoint> vertices() const noexcept { return vertices_; }
  std::size_t size() const noexcept { return vertices_.size(); }

  /// Largest distance between two vertices.
  double diameter() const;
  /// Largest absolute coordinate over all vertices.
  double magnitude() const;

  /// Inside or on the boundary, with a scale-relative tolerance.
  bool contains(PlanarPoint p) const;
  /// Euclidean distance from p to the region; 0 when contained.
  double distance_to(PlanarPoint p) const;

  /// Bounding-box diagonal of the vertices; the length scale used by the
  /// tolerance of contains().
  double extent() const;

  // Affine images. Each result is rehulled, so the vertex-order invariants
  // hold for any factor, including 0 and negative ones.
  ConvexRegion scaled(double a) const;
  ConvexRegion translated(std::complex<double> shift) const;
  /// Complex conjugate, i.e. reflection across the real axis.
  ConvexRegion mirrored() const;

private:
  friend ConvexRegion convex_hull(std::span<const PlanarPoint>);
  ConvexRegion(std::vector<PlanarPoint> vertices, RegionShape shape)
      : vertices_(std::move(vertices)), shape_(shape) {}

  std::vector<PlanarPoint> vertices_;
  RegionShape shape_ = RegionShape::point;
};

/// Monotone-chain hull in O(M log M). Interior, collinear, and (near-)duplicate
/// points are dropped. Throws InputError on empty input or non-finite points.
ConvexRegion convex_hull(std::span<const PlanarPoint> points);
ConvexRegion convex_hull(std::span<const std::complex<double>> points);

std::vector<std::complex<double>> as_complex(const ConvexRegion& region);

bool origin_in_region(const ConvexRegion& region);

/// Exact distance from the origin to the region, including edge-interior
/// projections. Zero when the origin is enclosed.
double min_distance_to_origin(const ConvexRegion& region);

/// Smallest vertex norm. This is the minimum that a vertex-only search
/// reports; it can exceed the true distance when the nearest point lies
/// inside an edge.
double min_vertex_distance_to_origin(const ConvexRegion& region);

/// Largest vertex norm; exact, since the norm is convex.
double max_distance_to_origin(const ConvexRegion& region);

/// Distance from p to the closed segment [a, b].
double segment_distance(PlanarPoint p, PlanarPoint a, PlanarPoint b);

}  // namespace ivdft
