#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "epsnet/geom.hpp"

namespace epsnet {

// Vertex index standing in for the point at infinity in hull faces.
constexpr std::int32_t kGhostVertex = -1;

// One face of the triangulation. Triangles store their vertices in
// counterclockwise order. Hull faces represent the closed outer halfplane of
// one hull edge: v = {u, w, kGhostVertex}, where the hull edge runs w->u on
// the convex hull boundary and the face covers everything on or left of the
// directed line u->w. nbr[i] is the face across edge (v[i], v[(i+1)%3]);
// across its real edge a hull face meets a triangle, across the two ghost
// edges it meets the previous and next hull face around the hull.
struct FaceRec {
  std::array<std::int32_t, 3> v{};
  std::array<std::int32_t, 3> nbr{};
};

// Undirected triangulation edge with its one or two incident faces. Interior
// edges touch two triangles; hull edges touch a triangle and a hull face.
struct EdgeRec {
  std::int32_t u = 0, w = 0;   // vertex indices, u < w
  std::int32_t f0 = 0, f1 = 0; // incident face indices
};

struct Triangulation {
  std::vector<Point> vertices;
  std::vector<FaceRec> faces;     // triangles first, then hull faces
  std::size_t triangle_count = 0;
  std::vector<EdgeRec> edges;

  // Point-location grid: one known face per cell, used as walk starts.
  double grid_minx = 0, grid_miny = 0, grid_cell = 1;
  std::int32_t grid_dim = 0;
  std::vector<std::int32_t> grid;
};

inline bool is_hull_face(const Triangulation& t, std::int32_t f) {
  return static_cast<std::size_t>(f) >= t.triangle_count;
}

// Incremental construction with exact predicates. Cocircular ties are broken
// by insertion order: a point landing on an existing circumcircle never
// evicts that triangle. The result is deterministic for a fixed input order.
// Throws std::runtime_error("sample too small") for fewer than 3 points,
// std::invalid_argument("duplicate sample point") on repeated coordinates and
// std::runtime_error("degenerate sample") when all points are collinear.
Triangulation triangulate(std::span<const Point> sample);

// Index of a face whose closed region contains (x, y): the triangle the
// point lies in, or a hull face whose closed outer halfplane holds it.
// Boundary ties resolve deterministically via the walk's fixed edge order.
std::int32_t locate(const Triangulation& t, double x, double y);

// Closed containment of (x, y) in the face's disk: the circumdisk for a
// triangle, the outer halfplane for a hull face. Exact.
bool face_disk_contains(const Triangulation& t, std::int32_t face, double x,
                        double y);

// OFF-style text dump of vertices and triangle index triples, for debugging.
std::string to_off(const Triangulation& t);

}  // namespace epsnet
