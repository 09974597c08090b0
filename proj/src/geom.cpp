#include "epsnet/geom.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

#include "epsnet/rational.hpp"

namespace epsnet {
namespace {

constexpr double kEps = 0x1.0p-53;
constexpr double kCcwErrBoundA = (3.0 + 16.0 * kEps) * kEps;
constexpr double kIccErrBoundA = (10.0 + 96.0 * kEps) * kEps;
// Absolute cushion so the static filters stay sound when products underflow.
constexpr double kUnderflowGuard = 5e-300;

int dsign(double d) { return (d > 0.0) - (d < 0.0); }

int orient_exact(double ax, double ay, double bx, double by, double cx,
                 double cy) {
  const Rational det =
      (Rational(ax) - Rational(cx)) * (Rational(by) - Rational(cy)) -
      (Rational(ay) - Rational(cy)) * (Rational(bx) - Rational(cx));
  return sgn(det);
}

int incircle_exact_ccw(double ax, double ay, double bx, double by, double cx,
                       double cy, double dx, double dy) {
  const Rational adx = Rational(ax) - Rational(dx);
  const Rational ady = Rational(ay) - Rational(dy);
  const Rational bdx = Rational(bx) - Rational(dx);
  const Rational bdy = Rational(by) - Rational(dy);
  const Rational cdx = Rational(cx) - Rational(dx);
  const Rational cdy = Rational(cy) - Rational(dy);
  const Rational alift = adx * adx + ady * ady;
  const Rational blift = bdx * bdx + bdy * bdy;
  const Rational clift = cdx * cdx + cdy * cdy;
  const Rational det = alift * (bdx * cdy - cdx * bdy) +
                       blift * (cdx * ady - adx * cdy) +
                       clift * (adx * bdy - bdx * ady);
  return sgn(det);
}

Side side_from_sign(int s) {
  return s > 0 ? Side::kInside : (s < 0 ? Side::kOutside : Side::kBoundary);
}

}  // namespace

int orient_sign(double ax, double ay, double bx, double by, double cx,
                double cy) {
  const double detleft = (ax - cx) * (by - cy);
  const double detright = (ay - cy) * (bx - cx);
  const double det = detleft - detright;
  double detsum;
  if (detleft > 0.0) {
    if (detright <= 0.0) return dsign(det);
    detsum = detleft + detright;
  } else if (detleft < 0.0) {
    if (detright >= 0.0) return dsign(det);
    detsum = -detleft - detright;
  } else {
    return dsign(detright) * -1;
  }
  const double errbound = kCcwErrBoundA * detsum + kUnderflowGuard;
  if (det > errbound || -det > errbound) return dsign(det);
  return orient_exact(ax, ay, bx, by, cx, cy);
}

Orientation orient(const Point& a, const Point& b, const Point& c) {
  return static_cast<Orientation>(orient_sign(a.x, a.y, b.x, b.y, c.x, c.y));
}

int incircle_sign_ccw(double ax, double ay, double bx, double by, double cx,
                      double cy, double dx, double dy) {
  const double adx = ax - dx;
  const double ady = ay - dy;
  const double bdx = bx - dx;
  const double bdy = by - dy;
  const double cdx = cx - dx;
  const double cdy = cy - dy;

  const double bdxcdy = bdx * cdy;
  const double cdxbdy = cdx * bdy;
  const double alift = adx * adx + ady * ady;
  const double cdxady = cdx * ady;
  const double adxcdy = adx * cdy;
  const double blift = bdx * bdx + bdy * bdy;
  const double adxbdy = adx * bdy;
  const double bdxady = bdx * ady;
  const double clift = cdx * cdx + cdy * cdy;

  const double det = alift * (bdxcdy - cdxbdy) + blift * (cdxady - adxcdy) +
                     clift * (adxbdy - bdxady);
  const double permanent = (std::fabs(bdxcdy) + std::fabs(cdxbdy)) * alift +
                           (std::fabs(cdxady) + std::fabs(adxcdy)) * blift +
                           (std::fabs(adxbdy) + std::fabs(bdxady)) * clift;
  const double errbound = kIccErrBoundA * permanent + kUnderflowGuard;
  if (det > errbound || -det > errbound) return dsign(det);
  return incircle_exact_ccw(ax, ay, bx, by, cx, cy, dx, dy);
}

Side in_circumdisk(const Point& a, const Point& b, const Point& c,
                   const Point& q) {
  const int o = orient_sign(a.x, a.y, b.x, b.y, c.x, c.y);
  if (o == 0) throw std::invalid_argument("degenerate circumdisk");
  const int s = o > 0
                    ? incircle_sign_ccw(a.x, a.y, b.x, b.y, c.x, c.y, q.x, q.y)
                    : incircle_sign_ccw(a.x, a.y, c.x, c.y, b.x, b.y, q.x, q.y);
  return side_from_sign(s);
}

int halfplane_sign(double ax, double ay, double bx, double by,
                   HalfplaneSide side, double qx, double qy) {
  const int s = orient_sign(ax, ay, bx, by, qx, qy);
  return side == HalfplaneSide::kLeft ? s : -s;
}

Side in_halfplane(const Point& a, const Point& b, HalfplaneSide side,
                  const Point& q) {
  if (a.x == b.x && a.y == b.y)
    throw std::invalid_argument("degenerate halfplane support");
  return side_from_sign(halfplane_sign(a.x, a.y, b.x, b.y, side, q.x, q.y));
}

Side in_diametral_disk(const Point& a, const Point& b, const Point& q) {
  const double d1 = (a.x - q.x) * (b.x - q.x);
  const double d2 = (a.y - q.y) * (b.y - q.y);
  const double det = d1 + d2;
  const double errbound =
      kCcwErrBoundA * (std::fabs(d1) + std::fabs(d2)) + kUnderflowGuard;
  int s;
  if (det > errbound || -det > errbound) {
    s = dsign(det);
  } else {
    const Rational dot =
        (Rational(a.x) - Rational(q.x)) * (Rational(b.x) - Rational(q.x)) +
        (Rational(a.y) - Rational(q.y)) * (Rational(b.y) - Rational(q.y));
    s = sgn(dot);
  }
  // Inside the closed disk with diameter ab iff the angle at q is >= pi/2.
  return side_from_sign(-s);
}

int circle_distance_sign(double cx, double cy, double r2, double qx,
                         double qy) {
  const double dx = qx - cx;
  const double dy = qy - cy;
  const double aa = dx * dx;
  const double bb = dy * dy;
  const double det = aa + bb - r2;
  const double errbound = kIccErrBoundA * (aa + bb + std::fabs(r2)) + kUnderflowGuard;
  if (det > errbound || -det > errbound) return dsign(det);
  const Rational ddx = Rational(qx) - Rational(cx);
  const Rational ddy = Rational(qy) - Rational(cy);
  return sgn(Rational(ddx * ddx + ddy * ddy - Rational(r2)));
}

Side disk_classify(const GeneralizedDisk& d, double qx, double qy) {
  return std::visit(
      [&](const auto& v) -> Side {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, CircleDisk>) {
          return side_from_sign(-circle_distance_sign(v.cx, v.cy, v.r2, qx, qy));
        } else if constexpr (std::is_same_v<T, HalfplaneDisk>) {
          return side_from_sign(
              halfplane_sign(v.ax, v.ay, v.bx, v.by, v.side, qx, qy));
        } else {
          const Point a{v.ax, v.ay};
          const Point b{v.bx, v.by};
          const Point c{v.cx, v.cy};
          return in_circumdisk(a, b, c, Point{qx, qy});
        }
      },
      d);
}

CircleDisk circumdisk_of(const Point& a, const Point& b, const Point& c) {
  if (orient_sign(a.x, a.y, b.x, b.y, c.x, c.y) == 0)
    throw std::invalid_argument("degenerate circumdisk");
  const Rational ax(a.x), ay(a.y), bx(b.x), by(b.y), cx(c.x), cy(c.y);
  const Rational a2 = ax * ax + ay * ay;
  const Rational b2 = bx * bx + by * by;
  const Rational c2 = cx * cx + cy * cy;
  const Rational d = 2 * (ax * (by - cy) + bx * (cy - ay) + cx * (ay - by));
  const Rational ux = (a2 * (by - cy) + b2 * (cy - ay) + c2 * (ay - by)) / d;
  const Rational uy = (a2 * (cx - bx) + b2 * (ax - cx) + c2 * (bx - ax)) / d;
  const Rational r2 = (ux - ax) * (ux - ax) + (uy - ay) * (uy - ay);
  CircleDisk out;
  out.cx = ux.get_d();
  out.cy = uy.get_d();
  out.r2 = r2.get_d();
  return out;
}

namespace {

// Median split value. When the half-weight mark falls exactly between two
// distinct values the midpoint of that gap is used, so an even symmetric
// set splits along its axis of symmetry. Both open sides of the returned
// value carry at most half the total weight.
double weighted_median(std::vector<std::pair<double, std::int64_t>> vals,
                       std::int64_t total) {
  std::sort(vals.begin(), vals.end());
  std::size_t out = 0;
  for (std::size_t i = 0; i < vals.size(); ++i) {
    if (out > 0 && vals[out - 1].first == vals[i].first)
      vals[out - 1].second += vals[i].second;
    else
      vals[out++] = vals[i];
  }
  vals.resize(out);
  std::int64_t cum = 0;
  for (std::size_t i = 0; i < vals.size(); ++i) {
    cum += vals[i].second;
    if (2 * cum > total) return vals[i].first;
    if (2 * cum == total) {
      if (i + 1 < vals.size())
        return (vals[i].first + vals[i + 1].first) / 2.0;
      return vals[i].first;
    }
  }
  return vals.back().first;
}

struct CandidateLine {
  double ax, ay, bx, by;
};

bool verify_transversal(std::span<const Point> pts, double xm,
                        const CandidateLine& ln, std::int64_t target,
                        std::array<std::int64_t, 4>& weights) {
  weights = {0, 0, 0, 0};
  for (const Point& p : pts) {
    const int sv = p.x < xm ? -1 : (p.x > xm ? 1 : 0);
    const int st = orient_sign(ln.ax, ln.ay, ln.bx, ln.by, p.x, p.y);
    for (int s = 0; s < 2; ++s) {
      if ((s == 0 && sv > 0) || (s == 1 && sv < 0)) continue;
      for (int t = 0; t < 2; ++t) {
        if ((t == 0 && st > 0) || (t == 1 && st < 0)) continue;
        weights[static_cast<std::size_t>(s * 2 + t)] += p.weight;
      }
    }
  }
  return weights[0] >= target && weights[1] >= target &&
         weights[2] >= target && weights[3] >= target;
}

}  // namespace

QuadrantPartition quadrant_partition(std::span<const Point> pts) {
  if (pts.size() < 4)
    throw std::invalid_argument("quadrant partition needs at least 4 points");
  const std::int64_t total = total_weight(pts);
  const std::int64_t target = total / 4;

  std::vector<std::pair<double, std::int64_t>> xs;
  xs.reserve(pts.size());
  for (const Point& p : pts) xs.emplace_back(p.x, p.weight);
  const double xm = weighted_median(std::move(xs), total);

  std::vector<std::pair<double, std::int64_t>> ys;
  ys.reserve(pts.size());
  for (const Point& p : pts) ys.emplace_back(p.y, p.weight);
  const double ym = weighted_median(std::move(ys), total);

  // Candidates in a fixed order: the horizontal through the median y, the
  // horizontals through every data y, then every non-vertical line through a
  // pair of data points. The first candidate passing the exact closed-count
  // check wins, which keeps the result deterministic.
  std::vector<CandidateLine> candidates;
  candidates.push_back({xm - 1.0, ym, xm + 1.0, ym});
  {
    std::vector<double> yvals;
    yvals.reserve(pts.size());
    for (const Point& p : pts) yvals.push_back(p.y);
    std::sort(yvals.begin(), yvals.end());
    yvals.erase(std::unique(yvals.begin(), yvals.end()), yvals.end());
    for (double y : yvals) candidates.push_back({xm - 1.0, y, xm + 1.0, y});
  }
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      if (pts[i].x == pts[j].x) continue;
      const Point& lo = pts[i].x < pts[j].x ? pts[i] : pts[j];
      const Point& hi = pts[i].x < pts[j].x ? pts[j] : pts[i];
      candidates.push_back({lo.x, lo.y, hi.x, hi.y});
    }
  }

  for (const CandidateLine& ln : candidates) {
    std::array<std::int64_t, 4> w{};
    if (!verify_transversal(pts, xm, ln, target, w)) continue;
    QuadrantPartition qp;
    qp.qx = xm;
    const Rational t =
        (Rational(xm) - Rational(ln.ax)) / (Rational(ln.bx) - Rational(ln.ax));
    const Rational qy =
        Rational(ln.ay) + t * (Rational(ln.by) - Rational(ln.ay));
    qp.qy = qy.get_d();
    qp.vertical = {xm, qp.qy, xm, qp.qy + 1.0};
    qp.transversal = {ln.ax, ln.ay, ln.bx, ln.by};
    qp.closed_weight = w;
    return qp;
  }
  throw std::runtime_error("degenerate quadrant partition");
}

unsigned quadrant_membership(const QuadrantPartition& qp, double x, double y) {
  const int sv = x < qp.qx ? -1 : (x > qp.qx ? 1 : 0);
  const int st = orient_sign(qp.transversal.ax, qp.transversal.ay,
                             qp.transversal.bx, qp.transversal.by, x, y);
  unsigned mask = 0;
  for (int s = 0; s < 2; ++s) {
    if ((s == 0 && sv > 0) || (s == 1 && sv < 0)) continue;
    for (int t = 0; t < 2; ++t) {
      if ((t == 0 && st > 0) || (t == 1 && st < 0)) continue;
      mask |= 1u << (s * 2 + t);
    }
  }
  return mask;
}

bool all_collinear(std::span<const Point> pts) {
  std::size_t j = 1;
  while (j < pts.size() && pts[j].x == pts[0].x && pts[j].y == pts[0].y) ++j;
  if (j >= pts.size()) return true;
  for (std::size_t k = j + 1; k < pts.size(); ++k) {
    if (orient_sign(pts[0].x, pts[0].y, pts[j].x, pts[j].y, pts[k].x,
                    pts[k].y) != 0)
      return false;
  }
  return true;
}

}  // namespace epsnet
