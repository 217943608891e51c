#include "berezin/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "berezin/parallel.hpp"

namespace berezin {

namespace {

void require_valid(std::span<const PlanarPoint> points) {
  if (points.empty()) throw std::invalid_argument("empty point set");
  for (const auto& p : points) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
      throw std::invalid_argument("non-finite planar point");
    }
  }
}

bool lex_less(const PlanarPoint& a, const PlanarPoint& b) {
  return a.x < b.x || (a.x == b.x && a.y < b.y);
}

struct BoundingBox {
  double x0, y0, x1, y1;
};

BoundingBox bounding_box(std::span<const PlanarPoint> points) {
  BoundingBox box{points[0].x, points[0].y, points[0].x, points[0].y};
  for (const auto& p : points) {
    box.x0 = std::min(box.x0, p.x);
    box.y0 = std::min(box.y0, p.y);
    box.x1 = std::max(box.x1, p.x);
    box.y1 = std::max(box.y1, p.y);
  }
  return box;
}

// Uniform bins over a bounding box; points are stored CSR-style by cell.
class BinIndex {
 public:
  BinIndex(std::span<const PlanarPoint> points, const BoundingBox& box,
           double cell)
      : points_(points), box_(box), cell_(cell) {
    nx_ = static_cast<std::size_t>((box.x1 - box.x0) / cell) + 1;
    ny_ = static_cast<std::size_t>((box.y1 - box.y0) / cell) + 1;
    offsets_.assign(nx_ * ny_ + 1, 0);
    for (const auto& p : points) ++offsets_[cell_of(p) + 1];
    for (std::size_t i = 1; i < offsets_.size(); ++i) {
      offsets_[i] += offsets_[i - 1];
    }
    order_.resize(points.size());
    std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
    for (std::size_t i = 0; i < points.size(); ++i) {
      order_[fill[cell_of(points[i])]++] = i;
    }
  }

  // True if some indexed point lies within radius (radius <= cell) of q.
  bool any_within(const PlanarPoint& q, double radius) const {
    const long cx = clamp_x(q.x);
    const long cy = clamp_y(q.y);
    const double r2 = radius * radius;
    for (long j = cy - 1; j <= cy + 1; ++j) {
      if (j < 0 || j >= static_cast<long>(ny_)) continue;
      for (long i = cx - 1; i <= cx + 1; ++i) {
        if (i < 0 || i >= static_cast<long>(nx_)) continue;
        const std::size_t c = static_cast<std::size_t>(j) * nx_ +
                              static_cast<std::size_t>(i);
        for (std::size_t k = offsets_[c]; k < offsets_[c + 1]; ++k) {
          const auto& p = points_[order_[k]];
          const double dx = p.x - q.x;
          const double dy = p.y - q.y;
          if (dx * dx + dy * dy <= r2) return true;
        }
      }
    }
    return false;
  }

 private:
  long clamp_x(double x) const {
    const long i = static_cast<long>(std::floor((x - box_.x0) / cell_));
    return std::clamp(i, -1L, static_cast<long>(nx_));
  }
  long clamp_y(double y) const {
    const long j = static_cast<long>(std::floor((y - box_.y0) / cell_));
    return std::clamp(j, -1L, static_cast<long>(ny_));
  }
  std::size_t cell_of(const PlanarPoint& p) const {
    const auto i = std::min<std::size_t>(
        static_cast<std::size_t>((p.x - box_.x0) / cell_), nx_ - 1);
    const auto j = std::min<std::size_t>(
        static_cast<std::size_t>((p.y - box_.y0) / cell_), ny_ - 1);
    return j * nx_ + i;
  }

  std::span<const PlanarPoint> points_;
  BoundingBox box_;
  double cell_;
  std::size_t nx_ = 1, ny_ = 1;
  std::vector<std::size_t> offsets_;
  std::vector<std::size_t> order_;
};

// Candidate grid over the hull's bounding box, restricted to the hull.
struct CoverageGrid {
  BoundingBox box;
  std::size_t n = 0;
  double dx = 0.0, dy = 0.0;
  std::vector<PlanarPoint> inside;
  std::vector<std::size_t> inside_index;  // linear grid index of each cell
};

// Closed x-interval of a convex polygon's intersection with the line at y.
std::optional<std::pair<double, double>> row_span(std::span<const PlanarPoint> hull,
                                                  double y) {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  const std::size_t m = hull.size();
  for (std::size_t k = 0; k < m; ++k) {
    const PlanarPoint& a = hull[k];
    const PlanarPoint& b = hull[(k + 1) % m];
    if ((y < a.y && y < b.y) || (y > a.y && y > b.y)) continue;
    if (a.y == b.y) {
      lo = std::min({lo, a.x, b.x});
      hi = std::max({hi, a.x, b.x});
      continue;
    }
    const double x = a.x + (y - a.y) * (b.x - a.x) / (b.y - a.y);
    lo = std::min(lo, x);
    hi = std::max(hi, x);
  }
  if (lo > hi) return std::nullopt;
  return std::make_pair(lo, hi);
}

CoverageGrid coverage_grid(std::span<const PlanarPoint> hull) {
  constexpr std::size_t kInitial = 256;
  constexpr std::size_t kMaximum = 4096;
  constexpr std::size_t kWanted = 4000;
  CoverageGrid g;
  g.box = bounding_box(hull);
  for (std::size_t n = kInitial; n <= kMaximum; n *= 2) {
    g.n = n;
    g.dx = (g.box.x1 - g.box.x0) / static_cast<double>(n - 1);
    g.dy = (g.box.y1 - g.box.y0) / static_cast<double>(n - 1);
    g.inside.clear();
    g.inside_index.clear();
    for (std::size_t j = 0; j < n; ++j) {
      const double y = g.box.y0 + static_cast<double>(j) * g.dy;
      const auto span = row_span(hull, y);
      if (!span) continue;
      const long i0 = std::max(0L, static_cast<long>(std::ceil((span->first - g.box.x0) / g.dx)));
      const long i1 = std::min(static_cast<long>(n) - 1,
                               static_cast<long>(std::floor((span->second - g.box.x0) / g.dx)));
      for (long i = i0; i <= i1; ++i) {
        g.inside.push_back({g.box.x0 + static_cast<double>(i) * g.dx, y});
        g.inside_index.push_back(j * n + static_cast<std::size_t>(i));
      }
    }
    if (g.inside.size() >= kWanted) break;
  }
  return g;
}

double tolerance_coverage(std::span<const PlanarPoint> points,
                          const CoverageGrid& grid, double tol) {
  if (grid.inside.empty()) return 0.0;
  const double extent = std::max(grid.box.x1 - grid.box.x0,
                                 grid.box.y1 - grid.box.y0);
  const double cell = std::max(tol, extent / 1024.0);
  BinIndex index(points, grid.box, cell);
  std::vector<char> covered(grid.inside.size(), 0);
  parallel_for(grid.inside.size(), [&](std::size_t i) {
    covered[i] = index.any_within(grid.inside[i], tol) ? 1 : 0;
  });
  const auto hits = std::count(covered.begin(), covered.end(), 1);
  return static_cast<double>(hits) / static_cast<double>(grid.inside.size());
}

double mesh_coverage(std::span<const PlanarPoint> points,
                     std::span<const Triangle> mesh, const CoverageGrid& grid,
                     double tol) {
  if (grid.inside.empty()) return 0.0;
  const std::size_t cells = grid.n * grid.n;
  std::vector<char> marked(cells, 0);
  const double px = grid.dx > 0 ? grid.dx : 1.0;
  const double py = grid.dy > 0 ? grid.dy : 1.0;
  for (const auto& tri : mesh) {
    const PlanarPoint& a = points[tri[0]];
    const PlanarPoint& b = points[tri[1]];
    const PlanarPoint& c = points[tri[2]];
    const double area2 = cross(a, b, c);
    if (std::abs(area2) <= std::numeric_limits<double>::min()) continue;
    const double sign = area2 > 0 ? 1.0 : -1.0;
    const double lo_x = std::min({a.x, b.x, c.x});
    const double hi_x = std::max({a.x, b.x, c.x});
    const double lo_y = std::min({a.y, b.y, c.y});
    const double hi_y = std::max({a.y, b.y, c.y});
    const long i0 = std::max(0L, static_cast<long>(std::ceil((lo_x - grid.box.x0) / px)));
    const long i1 = std::min(static_cast<long>(grid.n) - 1,
                             static_cast<long>(std::floor((hi_x - grid.box.x0) / px)));
    const long j0 = std::max(0L, static_cast<long>(std::ceil((lo_y - grid.box.y0) / py)));
    const long j1 = std::min(static_cast<long>(grid.n) - 1,
                             static_cast<long>(std::floor((hi_y - grid.box.y0) / py)));
    for (long j = j0; j <= j1; ++j) {
      for (long i = i0; i <= i1; ++i) {
        const PlanarPoint q{grid.box.x0 + static_cast<double>(i) * grid.dx,
                            grid.box.y0 + static_cast<double>(j) * grid.dy};
        if (sign * cross(a, b, q) >= 0 && sign * cross(b, c, q) >= 0 &&
            sign * cross(c, a, q) >= 0) {
          marked[static_cast<std::size_t>(j) * grid.n +
                 static_cast<std::size_t>(i)] = 1;
        }
      }
    }
  }
  const double extent = std::max(grid.box.x1 - grid.box.x0,
                                 grid.box.y1 - grid.box.y0);
  BinIndex index(points, grid.box, std::max(tol, extent / 1024.0));
  std::size_t hits = 0;
  for (std::size_t k = 0; k < grid.inside.size(); ++k) {
    if (marked[grid.inside_index[k]] || index.any_within(grid.inside[k], tol)) {
      ++hits;
    }
  }
  return static_cast<double>(hits) / static_cast<double>(grid.inside.size());
}

ConvexityReport report_impl(std::span<const PlanarPoint> points, double tol,
                            bool exact_finite,
                            std::optional<std::span<const Triangle>> mesh) {
  if (!(tol > 0.0) || !std::isfinite(tol)) {
    throw std::invalid_argument("tolerance must be positive");
  }
  ConvexityReport report;
  report.shape = classify_shape(points, tol);
  report.tolerance = tol;
  report.sample_count = points.size();
  report.exact_finite_mode = exact_finite;

  // A finite set with two or more distinct points is never convex.
  if (exact_finite) {
    const bool single = report.shape.tag == ShapeTag::Point;
    report.verdict = single ? Verdict::Convex : Verdict::NotConvex;
    report.coverage_ratio = single ? 1.0 : 0.0;
    return report;
  }

  switch (report.shape.tag) {
    case ShapeTag::Point:
      report.verdict = Verdict::Convex;
      report.coverage_ratio = 1.0;
      break;
    case ShapeTag::Segment: {
      const auto& [e0, e1] = report.shape.endpoints;
      const double length = distance(e0, e1);
      const double ux = (e1.x - e0.x) / length;
      const double uy = (e1.y - e0.y) / length;
      std::vector<double> proj(points.size());
      for (std::size_t i = 0; i < points.size(); ++i) {
        proj[i] = (points[i].x - e0.x) * ux + (points[i].y - e0.y) * uy;
      }
      std::sort(proj.begin(), proj.end());
      double gap = 0.0;
      double covered = 0.0;
      for (std::size_t i = 1; i < proj.size(); ++i) {
        const double g = proj[i] - proj[i - 1];
        gap = std::max(gap, g);
        covered += std::min(g, 2.0 * tol);
      }
      report.max_gap = gap;
      report.coverage_ratio = std::clamp(covered / length, 0.0, 1.0);
      report.verdict = gap <= kSegmentGapFactor * tol ? Verdict::Convex
                                                      : Verdict::NotConvex;
      break;
    }
    case ShapeTag::Region2D: {
      const CoverageGrid grid = coverage_grid(report.shape.hull);
      report.coverage_ratio = tolerance_coverage(points, grid, tol);
      if (report.coverage_ratio >= kConvexCoverage) {
        report.verdict = Verdict::Convex;
      } else if (report.coverage_ratio <= kNotConvexCoverage) {
        report.verdict = Verdict::NotConvex;
      } else {
        report.verdict = Verdict::Inconclusive;
      }
      if (mesh) report.mesh_coverage = mesh_coverage(points, *mesh, grid, tol);
      break;
    }
  }
  return report;
}

}  // namespace

std::string_view to_string(ShapeTag tag) {
  switch (tag) {
    case ShapeTag::Point: return "POINT";
    case ShapeTag::Segment: return "SEGMENT";
    case ShapeTag::Region2D: return "REGION2D";
  }
  return "?";
}

std::string_view to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::Convex: return "CONVEX";
    case Verdict::NotConvex: return "NOT_CONVEX";
    case Verdict::Inconclusive: return "INCONCLUSIVE";
  }
  return "?";
}

double cross(const PlanarPoint& o, const PlanarPoint& a, const PlanarPoint& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

double distance(const PlanarPoint& a, const PlanarPoint& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

double distance_to_segment(const PlanarPoint& p, const PlanarPoint& a,
                           const PlanarPoint& b) {
  const double vx = b.x - a.x;
  const double vy = b.y - a.y;
  const double len2 = vx * vx + vy * vy;
  if (len2 == 0.0) return distance(p, a);
  const double t =
      std::clamp(((p.x - a.x) * vx + (p.y - a.y) * vy) / len2, 0.0, 1.0);
  return distance(p, PlanarPoint{a.x + t * vx, a.y + t * vy});
}

std::vector<PlanarPoint> convex_hull(std::span<const PlanarPoint> points) {
  require_valid(points);
  std::vector<PlanarPoint> pts(points.begin(), points.end());
  std::sort(pts.begin(), pts.end(), lex_less);
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() <= 2) return pts;

  std::vector<PlanarPoint> hull;
  hull.reserve(2 * pts.size());
  for (const auto& p : pts) {
    while (hull.size() >= 2 &&
           cross(hull[hull.size() - 2], hull.back(), p) <= kOrientationEpsilon) {
      hull.pop_back();
    }
    hull.push_back(p);
  }
  const std::size_t lower = hull.size() + 1;
  for (auto it = pts.rbegin() + 1; it != pts.rend(); ++it) {
    while (hull.size() >= lower &&
           cross(hull[hull.size() - 2], hull.back(), *it) <= kOrientationEpsilon) {
      hull.pop_back();
    }
    hull.push_back(*it);
  }
  hull.pop_back();
  // All points collinear: the chain collapses to the two extremes.
  if (hull.size() == 2 || (hull.size() > 2 && polygon_area(hull) == 0.0)) {
    return {pts.front(), pts.back()};
  }
  return hull;
}

double polygon_area(std::span<const PlanarPoint> ccw) {
  if (ccw.size() < 3) return 0.0;
  double twice = 0.0;
  for (std::size_t i = 0; i < ccw.size(); ++i) {
    const auto& p = ccw[i];
    const auto& q = ccw[(i + 1) % ccw.size()];
    twice += p.x * q.y - q.x * p.y;
  }
  return 0.5 * twice;
}

std::pair<PlanarPoint, PlanarPoint> diameter_pair(
    std::span<const PlanarPoint> hull) {
  require_valid(hull);
  std::pair<PlanarPoint, PlanarPoint> best{hull[0], hull[0]};
  double best_d = -1.0;
  for (std::size_t i = 0; i < hull.size(); ++i) {
    for (std::size_t j = i + 1; j < hull.size(); ++j) {
      const double d = distance(hull[i], hull[j]);
      if (d > best_d) {
        best_d = d;
        best = {hull[i], hull[j]};
      }
    }
  }
  if (lex_less(best.second, best.first)) std::swap(best.first, best.second);
  return best;
}

bool hull_contains(std::span<const PlanarPoint> hull, const PlanarPoint& p,
                   double margin) {
  if (hull.empty()) return false;
  if (hull.size() == 1) return distance(hull[0], p) <= margin;
  if (hull.size() == 2) return distance_to_segment(p, hull[0], hull[1]) <= margin;
  for (std::size_t i = 0; i < hull.size(); ++i) {
    const auto& a = hull[i];
    const auto& b = hull[(i + 1) % hull.size()];
    const double len = distance(a, b);
    if (cross(a, b, p) < -margin * len) return false;
  }
  return true;
}

ShapeClass classify_shape(std::span<const PlanarPoint> points, double tol) {
  require_valid(points);
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  ShapeClass shape;
  auto hull = convex_hull(points);
  const auto [e0, e1] = diameter_pair(hull);
  shape.diameter = distance(e0, e1);
  if (shape.diameter <= tol) {
    shape.tag = ShapeTag::Point;
    shape.endpoints = {hull[0], hull[0]};
    shape.hull = {hull[0]};
    return shape;
  }
  // The tol-neighbourhood of a segment is convex, so checking the hull
  // vertices covers every sample.
  const bool thin = std::all_of(hull.begin(), hull.end(), [&](const auto& v) {
    return distance_to_segment(v, e0, e1) <= tol;
  });
  if (thin) {
    shape.tag = ShapeTag::Segment;
    shape.endpoints = {e0, e1};
    shape.hull = {e0, e1};
    return shape;
  }
  shape.tag = ShapeTag::Region2D;
  shape.endpoints = {e0, e1};
  shape.area = polygon_area(hull);
  shape.hull = std::move(hull);
  return shape;
}

double relative_tolerance(std::span<const PlanarPoint> points, double relative) {
  constexpr double kFloor = 1e-9;
  const auto hull = convex_hull(points);
  const auto [a, b] = diameter_pair(hull);
  return std::max(relative * distance(a, b), kFloor);
}

ConvexityReport convexity_report(std::span<const PlanarPoint> points,
                                 double tol, bool exact_finite) {
  return report_impl(points, tol, exact_finite, std::nullopt);
}

ConvexityReport convexity_report(std::span<const PlanarPoint> points,
                                 double tol, bool exact_finite,
                                 std::span<const Triangle> mesh) {
  for (const auto& t : mesh) {
    if (t[0] >= points.size() || t[1] >= points.size() || t[2] >= points.size()) {
      throw std::invalid_argument("mesh triangle index out of range");
    }
  }
  return report_impl(points, tol, exact_finite, mesh);
}

double hausdorff_distance(std::span<const PlanarPoint> a,
                          std::span<const PlanarPoint> b) {
  require_valid(a);
  require_valid(b);
  auto directed = [](std::span<const PlanarPoint> from,
                     std::span<const PlanarPoint> to) {
    std::vector<double> nearest(from.size());
    parallel_for(from.size(), [&](std::size_t i) {
      double best = std::numeric_limits<double>::infinity();
      for (const auto& q : to) {
        const double dx = from[i].x - q.x;
        const double dy = from[i].y - q.y;
        best = std::min(best, dx * dx + dy * dy);
      }
      nearest[i] = best;
    });
    return std::sqrt(*std::max_element(nearest.begin(), nearest.end()));
  };
  return std::max(directed(a, b), directed(b, a));
}

std::vector<PlanarPoint> densify_polygon(std::span<const PlanarPoint> ccw,
                                         double step) {
  require_valid(ccw);
  if (!(step > 0.0)) throw std::invalid_argument("step must be positive");
  std::vector<PlanarPoint> out;
  if (ccw.size() == 1) return {ccw[0]};
  const std::size_t edges = ccw.size() == 2 ? 1 : ccw.size();
  for (std::size_t i = 0; i < edges; ++i) {
    const auto& p = ccw[i];
    const auto& q = ccw[(i + 1) % ccw.size()];
    const auto pieces = static_cast<std::size_t>(std::ceil(distance(p, q) / step));
    for (std::size_t k = 0; k < std::max<std::size_t>(pieces, 1); ++k) {
      const double t = static_cast<double>(k) / static_cast<double>(std::max<std::size_t>(pieces, 1));
      out.push_back({p.x + t * (q.x - p.x), p.y + t * (q.y - p.y)});
    }
  }
  if (ccw.size() == 2) out.push_back(ccw[1]);
  return out;
}

}  // namespace berezin
