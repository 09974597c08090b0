#include "epsnet/depth.hpp"

#include <algorithm>

namespace epsnet {
namespace {

thread_local std::vector<std::int64_t> g_stamp;
thread_local std::int64_t g_epoch = 0;
thread_local std::vector<std::int32_t> g_queue;

// Faces covering (x, y), unsorted, appended to out.
void collect_covering(const Triangulation& t, double x, double y,
                      std::vector<std::int32_t>& out) {
  if (g_stamp.size() < t.faces.size()) g_stamp.assign(t.faces.size(), 0);
  const std::int64_t epoch = ++g_epoch;
  g_queue.clear();

  const std::int32_t start = locate(t, x, y);
  g_stamp[start] = epoch;
  if (!face_disk_contains(t, start, x, y)) {
    // The located face always covers the query; scan defensively if not.
    for (std::size_t f = 0; f < t.faces.size(); ++f)
      if (face_disk_contains(t, static_cast<std::int32_t>(f), x, y))
        out.push_back(static_cast<std::int32_t>(f));
    return;
  }
  g_queue.push_back(start);
  out.push_back(start);
  for (std::size_t head = 0; head < g_queue.size(); ++head) {
    const FaceRec& f = t.faces[g_queue[head]];
    for (int i = 0; i < 3; ++i) {
      const std::int32_t g = f.nbr[i];
      if (g_stamp[g] == epoch) continue;
      g_stamp[g] = epoch;
      if (!face_disk_contains(t, g, x, y)) continue;
      g_queue.push_back(g);
      out.push_back(g);
    }
  }
}

}  // namespace

std::vector<std::int32_t> covering_faces(const Triangulation& t, double x,
                                         double y) {
  std::vector<std::int32_t> out;
  collect_covering(t, x, y, out);
  std::sort(out.begin(), out.end());
  return out;
}

SubproblemSet assemble_subproblems(const Triangulation& t,
                                   std::span<const Point> ground,
                                   const Rational& eps_n) {
  SubproblemSet result;
  std::vector<std::vector<std::int32_t>> face_members(t.faces.size());

  std::vector<std::int32_t> faces;
  for (std::size_t pi = 0; pi < ground.size(); ++pi) {
    faces.clear();
    collect_covering(t, ground[pi].x, ground[pi].y, faces);
    result.incidences += static_cast<std::int64_t>(faces.size());
    for (std::int32_t f : faces)
      face_members[f].push_back(static_cast<std::int32_t>(pi));
  }

  result.edge_weights.reserve(t.edges.size());
  std::vector<std::int32_t> merged;
  for (const EdgeRec& e : t.edges) {
    const auto& lhs = face_members[e.f0];
    const auto& rhs = face_members[e.f1];
    merged.clear();
    std::set_union(lhs.begin(), lhs.end(), rhs.begin(), rhs.end(),
                   std::back_inserter(merged));
    std::int64_t weight = 0;
    for (std::int32_t m : merged) weight += ground[m].weight;
    result.edge_weights.push_back(weight);
    if (weight == 0 || Rational(static_cast<long>(weight)) < eps_n) continue;

    EdgeSubproblem sp;
    sp.u = e.u;
    sp.w = e.w;
    sp.f0 = e.f0;
    sp.f1 = e.f1;
    sp.members = merged;
    sp.weighted_size = weight;
    sp.eps_prime = eps_n / Rational(static_cast<long>(weight));
    result.kept.push_back(std::move(sp));
  }
  return result;
}

}  // namespace epsnet
