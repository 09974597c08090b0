#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "epsnet/delaunay.hpp"
#include "epsnet/geom.hpp"
#include "epsnet/rational.hpp"

namespace epsnet {

// Subproblem attached to one triangulation edge: the points of the ground
// set covered by the disk of either incident face, with the rescaled target
// eps_prime = eps*n / weighted_size.
struct EdgeSubproblem {
  std::int32_t u = 0, w = 0;           // edge endpoints (vertex indices)
  std::int32_t f0 = 0, f1 = 0;         // incident faces
  std::vector<std::int32_t> members;   // indices into the ground set
  std::int64_t weighted_size = 0;
  Rational eps_prime;
};

struct SubproblemSet {
  // Subproblems meeting the weight cutoff, in triangulation edge order.
  std::vector<EdgeSubproblem> kept;
  // Weighted member count for every edge, aligned with Triangulation::edges.
  std::vector<std::int64_t> edge_weights;
  // Total number of (point, covering face) incidences.
  std::int64_t incidences = 0;
};

// All faces whose closed disk contains (x, y), found by searching outward
// from the containing face and pruning at non-covering faces. Sorted.
std::vector<std::int32_t> covering_faces(const Triangulation& t, double x,
                                         double y);

// Buckets every ground point into the faces covering it and merges the two
// face lists of each edge. Subproblems lighter than eps*n are dropped from
// `kept` (their eps_prime would exceed 1); their weights still appear in
// `edge_weights`.
SubproblemSet assemble_subproblems(const Triangulation& t,
                                   std::span<const Point> ground,
                                   const Rational& eps_n);

}  // namespace epsnet
