#pragma once

// Planar point sets: convex hulls, shape classification and sampled
// convexity verdicts.

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace berezin {

struct PlanarPoint {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const PlanarPoint&, const PlanarPoint&) = default;
};

enum class ShapeTag { Point, Segment, Region2D };
enum class Verdict { Convex, NotConvex, Inconclusive };

std::string_view to_string(ShapeTag tag);
std::string_view to_string(Verdict verdict);

struct ShapeClass {
  ShapeTag tag = ShapeTag::Point;
  // Segment endpoints; for Point both entries hold the representative.
  std::array<PlanarPoint, 2> endpoints{};
  // Counterclockwise hull vertices (a single vertex for Point, the two
  // endpoints for Segment).
  std::vector<PlanarPoint> hull;
  double area = 0.0;
  double diameter = 0.0;
};

struct ConvexityReport {
  ShapeClass shape;
  Verdict verdict = Verdict::Inconclusive;
  double coverage_ratio = 0.0;
  double max_gap = 0.0;
  double tolerance = 0.0;
  std::size_t sample_count = 0;
  bool exact_finite_mode = false;
  // Fraction of the hull covered by the images of sampling-mesh cells.
  // Diagnostic only; it never changes the verdict.
  std::optional<double> mesh_coverage;
};

using Triangle = std::array<std::size_t, 3>;

// Thresholds of the sampled decision procedure.
inline constexpr double kSegmentGapFactor = 10.0;
inline constexpr double kConvexCoverage = 0.99;
inline constexpr double kNotConvexCoverage = 0.90;
inline constexpr double kDefaultRelativeTolerance = 1e-3;
inline constexpr double kOrientationEpsilon = 1e-12;

double cross(const PlanarPoint& o, const PlanarPoint& a, const PlanarPoint& b);
double distance(const PlanarPoint& a, const PlanarPoint& b);
double distance_to_segment(const PlanarPoint& p, const PlanarPoint& a,
                           const PlanarPoint& b);

/// Counterclockwise hull vertices with collinear points removed. Starts at
/// the lexicographically smallest vertex. Throws std::invalid_argument on
/// empty or non-finite input.
std::vector<PlanarPoint> convex_hull(std::span<const PlanarPoint> points);

double polygon_area(std::span<const PlanarPoint> ccw);

// Largest pairwise distance; the pair is returned lexicographically sorted.
std::pair<PlanarPoint, PlanarPoint> diameter_pair(
    std::span<const PlanarPoint> hull);

/// True if p lies in the hull or within `margin` of it. Works for hulls
/// of 1, 2 or more vertices.
bool hull_contains(std::span<const PlanarPoint> hull, const PlanarPoint& p,
                   double margin);

ShapeClass classify_shape(std::span<const PlanarPoint> points, double tol);

/// tol scaled by the set's diameter, floored so constant sets still get a
/// positive tolerance.
double relative_tolerance(std::span<const PlanarPoint> points,
                          double relative = kDefaultRelativeTolerance);

ConvexityReport convexity_report(std::span<const PlanarPoint> points,
                                 double tol, bool exact_finite);

// Same decision procedure; additionally fills mesh_coverage from the
// sampling mesh (triangles index into points).
ConvexityReport convexity_report(std::span<const PlanarPoint> points,
                                 double tol, bool exact_finite,
                                 std::span<const Triangle> mesh);

double hausdorff_distance(std::span<const PlanarPoint> a,
                          std::span<const PlanarPoint> b);

// Points along the boundary of a convex polygon, spaced at most `step`.
std::vector<PlanarPoint> densify_polygon(std::span<const PlanarPoint> ccw,
                                         double step);

}  // namespace berezin
