#include "epsnet/delaunay.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <unordered_map>
#include <utility>

namespace epsnet {
namespace {

struct WorkFace {
  std::array<std::int32_t, 3> v{};
  std::array<std::int32_t, 3> nbr{};
  bool alive = true;
};

bool lex_less(const Point& a, const Point& b) {
  return a.x < b.x || (a.x == b.x && a.y < b.y);
}

// Strictly inside the open segment (a, b), for points already known to be
// collinear with it. Lexicographic order along the carrier line is exact.
bool within_open_segment(const Point& a, const Point& b, const Point& p) {
  if (lex_less(a, b)) return lex_less(a, p) && lex_less(p, b);
  return lex_less(b, p) && lex_less(p, a);
}

class Builder {
 public:
  explicit Builder(std::span<const Point> pts) : pts_(pts) {}

  void run() {
    const std::size_t n = pts_.size();
    std::size_t apex = 2;
    while (apex < n && orient(pts_[0], pts_[1], pts_[apex]) ==
                           Orientation::kCollinear)
      ++apex;
    if (apex == n) throw std::runtime_error("degenerate sample");
    seed(0, 1, static_cast<std::int32_t>(apex));
    for (std::size_t i = 2; i < n; ++i) {
      if (i == apex) continue;
      insert(static_cast<std::int32_t>(i));
    }
  }

  std::vector<WorkFace>& faces() { return faces_; }

 private:
  bool is_ghost(const WorkFace& f) const { return f.v[2] == kGhostVertex; }

  static int slot_of(const WorkFace& f, std::int32_t a, std::int32_t b) {
    for (int i = 0; i < 3; ++i)
      if (f.v[i] == a && f.v[(i + 1) % 3] == b) return i;
    return -1;
  }

  bool conflicts(const WorkFace& f, const Point& p) const {
    if (!is_ghost(f)) {
      const Point& a = pts_[f.v[0]];
      const Point& b = pts_[f.v[1]];
      const Point& c = pts_[f.v[2]];
      return incircle_sign_ccw(a.x, a.y, b.x, b.y, c.x, c.y, p.x, p.y) > 0;
    }
    const Point& u = pts_[f.v[0]];
    const Point& w = pts_[f.v[1]];
    const int o = orient_sign(u.x, u.y, w.x, w.y, p.x, p.y);
    if (o > 0) return true;
    return o == 0 && within_open_segment(u, w, p);
  }

  void seed(std::int32_t i0, std::int32_t i1, std::int32_t i2) {
    if (orient(pts_[i0], pts_[i1], pts_[i2]) == Orientation::kCW)
      std::swap(i1, i2);
    // Solid (x, y, z) plus the three hull faces, wired by hand.
    faces_.push_back({{i0, i1, i2}, {1, 2, 3}});
    faces_.push_back({{i1, i0, kGhostVertex}, {0, 3, 2}});
    faces_.push_back({{i2, i1, kGhostVertex}, {0, 1, 3}});
    faces_.push_back({{i0, i2, kGhostVertex}, {0, 2, 1}});
    stamp_.assign(4, 0);
    last_solid_ = 0;
  }

  std::int32_t walk_from(std::int32_t cur, const Point& p) const {
    const std::size_t limit = 2 * faces_.size() + 64;
    for (std::size_t step = 0; step < limit; ++step) {
      const WorkFace& f = faces_[cur];
      if (is_ghost(f)) return cur;
      bool stepped = false;
      for (int i = 0; i < 3; ++i) {
        const Point& a = pts_[f.v[i]];
        const Point& b = pts_[f.v[(i + 1) % 3]];
        if (orient_sign(a.x, a.y, b.x, b.y, p.x, p.y) < 0) {
          cur = f.nbr[i];
          stepped = true;
          break;
        }
      }
      if (!stepped) return cur;
    }
    // The walk is capped defensively; scan for a conflicting face instead.
    for (std::size_t i = 0; i < faces_.size(); ++i)
      if (faces_[i].alive && conflicts(faces_[i], p))
        return static_cast<std::int32_t>(i);
    return cur;
  }

  void insert(std::int32_t pi) {
    const Point& p = pts_[pi];
    std::int32_t seed_face = walk_from(last_solid_, p);
    if (!faces_[seed_face].alive || !conflicts(faces_[seed_face], p)) {
      seed_face = -1;
      for (std::size_t i = 0; i < faces_.size(); ++i) {
        if (faces_[i].alive && conflicts(faces_[i], p)) {
          seed_face = static_cast<std::int32_t>(i);
          break;
        }
      }
      if (seed_face < 0)
        throw std::logic_error("insertion found no conflicting face");
    }

    ++epoch_;
    stamp_.resize(faces_.size(), 0);
    cavity_.clear();
    cavity_.push_back(seed_face);
    stamp_[seed_face] = epoch_;
    for (std::size_t head = 0; head < cavity_.size(); ++head) {
      const WorkFace f = faces_[cavity_[head]];
      for (int i = 0; i < 3; ++i) {
        const std::int32_t g = f.nbr[i];
        if (stamp_[g] == epoch_) continue;
        stamp_[g] = epoch_;
        if (conflicts(faces_[g], p)) cavity_.push_back(g);
      }
    }
    in_cavity_.assign(faces_.size(), false);
    for (std::int32_t f : cavity_) in_cavity_[f] = true;

    struct BoundaryEdge {
      std::int32_t u, w, outer, nf;
    };
    std::vector<BoundaryEdge> rim;
    for (std::int32_t fi : cavity_) {
      const WorkFace& f = faces_[fi];
      for (int i = 0; i < 3; ++i) {
        if (in_cavity_[f.nbr[i]]) continue;
        rim.push_back({f.v[i], f.v[(i + 1) % 3], f.nbr[i], -1});
      }
    }

    for (BoundaryEdge& e : rim) {
      WorkFace nf;
      nf.v = {e.u, e.w, pi};
      if (e.u == kGhostVertex) nf.v = {e.w, pi, kGhostVertex};
      if (e.w == kGhostVertex) nf.v = {pi, e.u, kGhostVertex};
      e.nf = static_cast<std::int32_t>(faces_.size());
      const int s = slot_of(nf, e.u, e.w);
      nf.nbr[s] = e.outer;
      faces_.push_back(nf);
      faces_[e.outer].nbr[slot_of(faces_[e.outer], e.w, e.u)] = e.nf;
      if (e.u != kGhostVertex && e.w != kGhostVertex) last_solid_ = e.nf;
    }
    // Fan adjacency: the rim is one cycle, so each vertex starts exactly one
    // rim edge and ends exactly one.
    for (const BoundaryEdge& e : rim) {
      WorkFace& nf = faces_[e.nf];
      for (const BoundaryEdge& o : rim) {
        if (o.u == e.w) nf.nbr[slot_of(nf, e.w, pi)] = o.nf;
        if (o.w == e.u) nf.nbr[slot_of(nf, pi, e.u)] = o.nf;
      }
    }
    for (std::int32_t fi : cavity_) faces_[fi].alive = false;
    stamp_.resize(faces_.size(), 0);
  }

  std::span<const Point> pts_;
  std::vector<WorkFace> faces_;
  std::vector<std::int32_t> cavity_;
  std::vector<int> stamp_;
  std::vector<bool> in_cavity_;
  int epoch_ = 0;
  std::int32_t last_solid_ = 0;
};

std::int32_t walk(const Triangulation& t, std::int32_t start, double x,
                  double y) {
  if (is_hull_face(t, start)) {
    const FaceRec& g = t.faces[start];
    for (int i = 0; i < 3; ++i)
      if (g.v[i] != kGhostVertex && g.v[(i + 1) % 3] != kGhostVertex)
        start = g.nbr[i];
  }
  std::int32_t cur = start;
  const std::size_t limit = 2 * t.faces.size() + 64;
  for (std::size_t step = 0; step < limit; ++step) {
    const FaceRec& f = t.faces[cur];
    if (is_hull_face(t, cur)) return cur;
    bool stepped = false;
    for (int i = 0; i < 3; ++i) {
      const Point& a = t.vertices[f.v[i]];
      const Point& b = t.vertices[f.v[(i + 1) % 3]];
      if (orient_sign(a.x, a.y, b.x, b.y, x, y) < 0) {
        cur = f.nbr[i];
        stepped = true;
        break;
      }
    }
    if (!stepped) return cur;
  }
  for (std::size_t i = 0; i < t.faces.size(); ++i)
    if (face_disk_contains(t, static_cast<std::int32_t>(i), x, y))
      return static_cast<std::int32_t>(i);
  return cur;
}

}  // namespace

Triangulation triangulate(std::span<const Point> sample) {
  if (sample.size() < 3) throw std::runtime_error("sample too small");
  {
    std::vector<std::pair<double, double>> coords;
    coords.reserve(sample.size());
    for (const Point& p : sample) coords.emplace_back(p.x, p.y);
    std::sort(coords.begin(), coords.end());
    if (std::adjacent_find(coords.begin(), coords.end()) != coords.end())
      throw std::invalid_argument("duplicate sample point");
  }

  Builder builder(sample);
  builder.run();
  auto& work = builder.faces();

  Triangulation t;
  t.vertices.assign(sample.begin(), sample.end());

  std::vector<std::int32_t> remap(work.size(), -1);
  std::int32_t next = 0;
  for (std::size_t i = 0; i < work.size(); ++i)
    if (work[i].alive && work[i].v[2] != kGhostVertex)
      remap[i] = next++;
  t.triangle_count = static_cast<std::size_t>(next);
  for (std::size_t i = 0; i < work.size(); ++i)
    if (work[i].alive && work[i].v[2] == kGhostVertex)
      remap[i] = next++;

  t.faces.resize(static_cast<std::size_t>(next));
  for (std::size_t i = 0; i < work.size(); ++i) {
    if (!work[i].alive) continue;
    FaceRec out;
    out.v = work[i].v;
    for (int k = 0; k < 3; ++k) out.nbr[k] = remap[work[i].nbr[k]];
    t.faces[remap[i]] = out;
  }

  for (std::size_t fi = 0; fi < t.faces.size(); ++fi) {
    const FaceRec& f = t.faces[fi];
    for (int i = 0; i < 3; ++i) {
      const std::int32_t a = f.v[i];
      const std::int32_t b = f.v[(i + 1) % 3];
      if (a == kGhostVertex || b == kGhostVertex || a >= b) continue;
      t.edges.push_back({a, b, static_cast<std::int32_t>(fi), f.nbr[i]});
    }
  }

  double minx = t.vertices[0].x, maxx = minx;
  double miny = t.vertices[0].y, maxy = miny;
  for (const Point& p : t.vertices) {
    minx = std::min(minx, p.x);
    maxx = std::max(maxx, p.x);
    miny = std::min(miny, p.y);
    maxy = std::max(maxy, p.y);
  }
  const std::int32_t dim = std::clamp<std::int32_t>(
      static_cast<std::int32_t>(
          std::ceil(std::sqrt(static_cast<double>(t.triangle_count)))),
      1, 128);
  const double span = std::max({maxx - minx, maxy - miny, 1e-300});
  t.grid_minx = minx;
  t.grid_miny = miny;
  t.grid_cell = span / dim;
  t.grid_dim = dim;
  t.grid.resize(static_cast<std::size_t>(dim) * dim);
  std::int32_t hint = 0;
  for (std::int32_t iy = 0; iy < dim; ++iy) {
    for (std::int32_t ix = 0; ix < dim; ++ix) {
      const double cx = minx + (ix + 0.5) * t.grid_cell;
      const double cy = miny + (iy + 0.5) * t.grid_cell;
      hint = walk(t, hint, cx, cy);
      t.grid[static_cast<std::size_t>(iy) * dim + ix] = hint;
    }
  }
  return t;
}

std::int32_t locate(const Triangulation& t, double x, double y) {
  const auto cell = [&](double v, double lo) {
    const double idx = std::floor((v - lo) / t.grid_cell);
    return std::clamp<std::int32_t>(static_cast<std::int32_t>(idx), 0,
                                    t.grid_dim - 1);
  };
  const std::int32_t start =
      t.grid[static_cast<std::size_t>(cell(y, t.grid_miny)) * t.grid_dim +
             cell(x, t.grid_minx)];
  return walk(t, start, x, y);
}

bool face_disk_contains(const Triangulation& t, std::int32_t face, double x,
                        double y) {
  const FaceRec& f = t.faces[face];
  const Point& a = t.vertices[f.v[0]];
  const Point& b = t.vertices[f.v[1]];
  if (f.v[2] == kGhostVertex)
    return orient_sign(a.x, a.y, b.x, b.y, x, y) >= 0;
  const Point& c = t.vertices[f.v[2]];
  return incircle_sign_ccw(a.x, a.y, b.x, b.y, c.x, c.y, x, y) >= 0;
}

std::string to_off(const Triangulation& t) {
  std::string out = "OFF\n";
  char buf[96];
  std::snprintf(buf, sizeof buf, "%zu %zu 0\n", t.vertices.size(),
                t.triangle_count);
  out += buf;
  for (const Point& p : t.vertices) {
    std::snprintf(buf, sizeof buf, "%.17g %.17g 0\n", p.x, p.y);
    out += buf;
  }
  for (std::size_t i = 0; i < t.triangle_count; ++i) {
    const FaceRec& f = t.faces[i];
    std::snprintf(buf, sizeof buf, "3 %d %d %d\n", f.v[0], f.v[1], f.v[2]);
    out += buf;
  }
  return out;
}

}  // namespace epsnet
