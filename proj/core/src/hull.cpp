#include "consensus_lab/hull.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace consensus_lab {

namespace {

double cross(const Point2& o, const Point2& a, const Point2& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

double dist(const Point2& a, const Point2& b) { return std::hypot(a[0] - b[0], a[1] - b[1]); }

double dist_to_segment(const Point2& p, const Point2& a, const Point2& b) {
  const double dx = b[0] - a[0];
  const double dy = b[1] - a[1];
  const double len2 = dx * dx + dy * dy;
  if (len2 == 0.0) return dist(p, a);
  double s = ((p[0] - a[0]) * dx + (p[1] - a[1]) * dy) / len2;
  s = std::clamp(s, 0.0, 1.0);
  return dist(p, Point2{a[0] + s * dx, a[1] + s * dy});
}

}  // namespace

HullPolytope hull_of_points(int dim, std::span<const Point2> points) {
  if (dim != 1 && dim != 2) throw std::invalid_argument("hull dimension must be 1 or 2");
  if (points.empty()) throw std::invalid_argument("hull of an empty point set");
  HullPolytope h{dim, {}};

  if (dim == 1) {
    auto [lo, hi] = std::minmax_element(points.begin(), points.end(),
                                        [](const Point2& a, const Point2& b) { return a[0] < b[0]; });
    h.vertices.push_back({(*lo)[0], 0.0});
    if ((*hi)[0] != (*lo)[0]) h.vertices.push_back({(*hi)[0], 0.0});
    return h;
  }

  std::vector<Point2> pts(points.begin(), points.end());
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() <= 2) {
    h.vertices = std::move(pts);
    return h;
  }
  // Andrew's monotone chain; popping on cross <= 0 drops collinear points.
  std::vector<Point2> chain(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross(chain[k - 2], chain[k - 1], p) <= 0.0) --k;
    chain[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    const auto& p = pts[i];
    while (k >= lower && cross(chain[k - 2], chain[k - 1], p) <= 0.0) --k;
    chain[k++] = p;
  }
  chain.resize(k - 1);  // last point repeats the first
  h.vertices = std::move(chain);
  return h;
}

HullPolytope hull(const AgentState& x) {
  std::vector<Point2> pts;
  pts.reserve(x.size());
  for (Node k = 1; k <= x.size(); ++k) pts.push_back({x(k, 0), x.dim() == 2 ? x(k, 1) : 0.0});
  return hull_of_points(x.dim(), pts);
}

double distance_to_hull(const HullPolytope& h, const Point2& p) {
  const auto& v = h.vertices;
  if (h.dim == 1) {
    const double lo = v.front()[0];
    const double hi = v.back()[0];
    return std::max({lo - p[0], p[0] - hi, 0.0});
  }
  if (v.size() == 1) return dist(p, v[0]);
  if (v.size() == 2) return dist_to_segment(p, v[0], v[1]);
  bool inside = true;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (cross(v[i], v[(i + 1) % v.size()], p) < 0.0) inside = false;
  if (inside) return 0.0;
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < v.size(); ++i) best = std::min(best, dist_to_segment(p, v[i], v[(i + 1) % v.size()]));
  return best;
}

bool contains(const HullPolytope& outer, const HullPolytope& inner, double slack) {
  if (outer.dim != inner.dim) throw std::invalid_argument("contains: hull dimensions differ");
  return std::all_of(inner.vertices.begin(), inner.vertices.end(),
                     [&](const Point2& p) { return distance_to_hull(outer, p) <= slack; });
}

double diameter(const HullPolytope& h) {
  double best = 0.0;
  for (std::size_t i = 0; i < h.vertices.size(); ++i)
    for (std::size_t j = i + 1; j < h.vertices.size(); ++j) best = std::max(best, dist(h.vertices[i], h.vertices[j]));
  return best;
}

bool in_relative_interior(const HullPolytope& h, const Point2& p, double affine_tolerance) {
  const auto& v = h.vertices;
  if (h.dim == 1) {
    if (v.size() == 1) return p[0] == v[0][0];
    return v[0][0] < p[0] && p[0] < v[1][0];
  }
  if (v.size() == 1) return dist(p, v[0]) <= affine_tolerance;
  if (v.size() == 2) {
    const double dx = v[1][0] - v[0][0];
    const double dy = v[1][1] - v[0][1];
    const double len = std::hypot(dx, dy);
    if (std::abs(cross(v[0], v[1], p)) / len > affine_tolerance) return false;
    const double s = ((p[0] - v[0][0]) * dx + (p[1] - v[0][1]) * dy) / (dx * dx + dy * dy);
    return s > 0.0 && s < 1.0;
  }
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!(cross(v[i], v[(i + 1) % v.size()], p) > 0.0)) return false;
  return true;
}

}  // namespace consensus_lab
