#pragma once

#include <array>
#include <span>
#include <vector>

#include "consensus_lab/agent_state.hpp"

namespace consensus_lab {

using Point2 = std::array<double, 2>;

/// Convex hull of a finite point set in R^1 or R^2, stored by its minimal
/// vertex list. In one dimension the vertices are {min, max} (second
/// coordinate 0), a single vertex when all points coincide. In two dimensions
/// the vertices run counter-clockwise; collinear sets collapse to a segment.
struct HullPolytope {
  int dim = 1;
  std::vector<Point2> vertices;
};

HullPolytope hull(const AgentState& x);
/// Hull of explicit points; `dim` selects how they are read (y ignored for 1).
HullPolytope hull_of_points(int dim, std::span<const Point2> points);

/// Euclidean distance from p to the hull (0 inside or on it).
double distance_to_hull(const HullPolytope& h, const Point2& p);

/// True iff every vertex of `inner` lies within distance `slack` of `outer`.
/// Throws std::invalid_argument on a dimension mismatch.
bool contains(const HullPolytope& outer, const HullPolytope& inner, double slack);

/// Largest pairwise vertex distance; 0 for a single vertex.
double diameter(const HullPolytope& h);

/// True iff p is in the relative interior of h. Membership in the affine hull
/// is decided with absolute tolerance `affine_tolerance` (it only matters for
/// segments in the plane); interiority within the affine hull is strict. A
/// single-vertex hull is its own relative interior.
bool in_relative_interior(const HullPolytope& h, const Point2& p, double affine_tolerance);

}  // namespace consensus_lab
