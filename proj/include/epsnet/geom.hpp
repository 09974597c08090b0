#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <variant>
#include <vector>

namespace epsnet {

// A point of the weighted input multiset. Duplicate coordinates are merged at
// load time; `weight` is the multiplicity and `id` the stable index within the
// owning set.
struct Point {
  double x = 0.0;
  double y = 0.0;
  std::int64_t weight = 1;
  std::int32_t id = -1;
};

enum class Orientation : int { kCW = -1, kCollinear = 0, kCCW = 1 };

// Classification against a closed region. Boundary counts as inside
// everywhere in this library; the tri-state exists so callers can tell the
// two apart when they need to.
enum class Side : int { kOutside = -1, kBoundary = 0, kInside = 1 };

enum class HalfplaneSide : int { kLeft = 0, kRight = 1 };

// Exact sign of the orientation determinant (positive = c left of a->b).
// Static floating-point filter with an exact rational fallback.
int orient_sign(double ax, double ay, double bx, double by, double cx, double cy);
Orientation orient(const Point& a, const Point& b, const Point& c);

// Raw incircle sign; requires (a, b, c) in counterclockwise order.
// Positive = d strictly inside the circle through a, b, c.
int incircle_sign_ccw(double ax, double ay, double bx, double by, double cx,
                      double cy, double dx, double dy);

// Classification of q against the closed disk through a, b, c. Orientation is
// normalized internally, so the result does not depend on the order of the
// support. Throws std::invalid_argument if the support is collinear.
Side in_circumdisk(const Point& a, const Point& b, const Point& c, const Point& q);

// Classification of q against the closed halfplane on `side` of the directed
// line a->b. Throws std::invalid_argument if a == b.
Side in_halfplane(const Point& a, const Point& b, HalfplaneSide side, const Point& q);
int halfplane_sign(double ax, double ay, double bx, double by, HalfplaneSide side,
                   double qx, double qy);

// Classification against the closed disk with diameter ab (inside iff the
// angle at q is at least a right angle). Exact.
Side in_diametral_disk(const Point& a, const Point& b, const Point& q);

// Sign of (qx,qy)'s squared distance from (cx,cy) minus r2, computed exactly
// over the given double (dyadic rational) values. -1 strictly inside.
int circle_distance_sign(double cx, double cy, double r2, double qx, double qy);

struct CircleDisk {
  double cx = 0, cy = 0, r2 = 0;
};
struct HalfplaneDisk {
  double ax = 0, ay = 0, bx = 0, by = 0;
  HalfplaneSide side = HalfplaneSide::kLeft;
};
// Disk given by three non-collinear support points; membership tests stay
// exact because they go through in_circumdisk instead of a rounded center.
struct SupportCircleDisk {
  double ax = 0, ay = 0, bx = 0, by = 0, cx = 0, cy = 0;
};
using GeneralizedDisk = std::variant<CircleDisk, HalfplaneDisk, SupportCircleDisk>;

// Exact classification of (qx, qy) against a closed generalized disk.
Side disk_classify(const GeneralizedDisk& d, double qx, double qy);

// Circumcenter and squared radius, for reporting and disk construction only.
// Solved in rational arithmetic and rounded once at the end. Throws on a
// collinear support.
CircleDisk circumdisk_of(const Point& a, const Point& b, const Point& c);

// The oriented line through (ax, ay) -> (bx, by).
struct SplitLine {
  double ax = 0, ay = 0, bx = 0, by = 0;
};

// Two lines through q splitting the plane into four quadrants, each closed
// quadrant carrying at least floor(W/4) of the total weight W.
struct QuadrantPartition {
  double qx = 0, qy = 0;
  SplitLine vertical;      // q + direction (0, 1)
  SplitLine transversal;   // second split line through q
  // Closed-quadrant weights indexed by s * 2 + t, where s = 0 keeps x <= qx
  // and s = 1 keeps x >= qx, t = 0 keeps points on or right of the directed
  // transversal and t = 1 keeps points on or left of it. Boundary points are
  // counted in every quadrant they touch.
  std::array<std::int64_t, 4> closed_weight{};
};

// Bitmask over quadrant indices 0..3 of the closed quadrants containing
// (x, y); boundary points belong to two or four of them.
unsigned quadrant_membership(const QuadrantPartition& qp, double x, double y);

// Computes a quadrant partition of the given points (at least 4 distinct
// required). Throws std::runtime_error("degenerate quadrant partition") if no
// candidate line passes the exact verification.
QuadrantPartition quadrant_partition(std::span<const Point> pts);

// True if every point lies on one line (vacuously true for <= 2 points).
bool all_collinear(std::span<const Point> pts);

inline std::int64_t total_weight(std::span<const Point> pts) {
  std::int64_t w = 0;
  for (const Point& p : pts) w += p.weight;
  return w;
}

}  // namespace epsnet
