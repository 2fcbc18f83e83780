#include "newton/polygon.hpp"

#include <algorithm>

namespace newton {

namespace {

// Andrew monotone chain; returns extreme points only, CCW.
std::vector<LatticePoint> convex_hull(std::vector<LatticePoint> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() <= 2) return pts;
  std::vector<LatticePoint> hull(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {  // lower
    while (k >= 2 && cross(hull[k - 1] - hull[k - 2], p - hull[k - 2]) <= 0)
      --k;
    hull[k++] = p;
  }
  std::size_t lower = k + 1;
  for (auto it = pts.rbegin() + 1, lim = pts.rend(); it != lim; ++it) {
    while (k >= lower &&
           cross(hull[k - 1] - hull[k - 2], *it - hull[k - 2]) <= 0)
      --k;
    hull[k++] = *it;
  }
  hull.resize(k - 1);
  return hull;
}

int affine_dimension(const std::vector<LatticePoint>& hull) {
  if (hull.size() <= 1) return 0;
  if (hull.size() == 2) return 1;
  return 2;
}

NewtonPolygon from_points(std::vector<LatticePoint> pts) {
  NewtonPolygon poly;
  auto hull = convex_hull(std::move(pts));
  poly.dimension = affine_dimension(hull);
  if (poly.dimension == 1) {
    // keep deterministic endpoint order (lexicographic)
    if (hull[1] < hull[0]) std::swap(hull[0], hull[1]);
  }
  for (const auto& p : hull) poly.vertices.push_back({p.x, p.y});
  if (poly.dimension < 2) return poly;

  std::size_t n = hull.size();
  for (std::size_t i = 0; i < n; ++i) {
    const LatticePoint a = hull[i];
    const LatticePoint b = hull[(i + 1) % n];
    LatticePoint d = b - a;
    std::int64_t g = gcd64(d.x, d.y);
    LatticePoint prim{d.x / g, d.y / g};
    Edge e;
    e.start = {a.x, a.y};
    e.end = {b.x, b.y};
    // outward normal: CCW edge direction rotated clockwise
    e.alpha = prim.y;
    e.beta = -prim.x;
    e.lattice_count = g + 1;
    e.on_axis = (a.x == 0 && b.x == 0) || (a.y == 0 && b.y == 0);
    poly.edges.push_back(e);
  }
  return poly;
}

}  // namespace

bool NewtonPolygon::contains(LatticeExponent p) const {
  LatticePoint q = as_point(p);
  if (dimension == 0) return q == as_point(vertices[0]);
  if (dimension == 1) {
    LatticePoint a = as_point(vertices[0]);
    LatticePoint b = as_point(vertices[1]);
    if (cross(b - a, q - a) != 0) return false;
    std::int64_t t = dot(q - a, b - a);
    return t >= 0 && t <= dot(b - a, b - a);
  }
  for (const auto& e : edges)
    if (e.alpha * p.l + e.beta * p.m > e.support_level()) return false;
  return true;
}

bool NewtonPolygon::contains_strictly(LatticeExponent p) const {
  if (dimension < 2) {
    if (dimension == 0) return false;
    LatticePoint a = as_point(vertices[0]);
    LatticePoint b = as_point(vertices[1]);
    LatticePoint q = as_point(p);
    if (cross(b - a, q - a) != 0) return false;
    std::int64_t t = dot(q - a, b - a);
    return t > 0 && t < dot(b - a, b - a);
  }
  for (const auto& e : edges)
    if (e.alpha * p.l + e.beta * p.m >= e.support_level()) return false;
  return true;
}

NewtonPolygon newton_polygon(const SparsePolynomial& f) {
  if (f.is_zero()) throw error("Newton polygon of the zero polynomial");
  std::vector<LatticePoint> pts;
  for (const auto& [e, c] : f.terms()) pts.push_back(as_point(e));
  return from_points(std::move(pts));
}

NewtonPolygon hull_of(std::vector<LatticePoint> points) {
  if (points.empty()) throw error("hull of empty point set");
  return from_points(std::move(points));
}

NewtonPolygon star_polygon(const NewtonPolygon& p) {
  std::vector<LatticePoint> pts{{0, 0}};
  for (const auto& e : p.edges)
    if (!e.on_axis) {
      pts.push_back(as_point(e.start));
      pts.push_back(as_point(e.end));
    }
  if (p.dimension < 2)
    for (const auto& v : p.vertices) pts.push_back(as_point(v));
  return from_points(std::move(pts));
}

Face face_for_covector(const NewtonPolygon& p, LatticePoint eta) {
  if (eta.x == 0 && eta.y == 0) return FaceWhole{};
  std::int64_t best = dot(eta, as_point(p.vertices[0]));
  for (const auto& v : p.vertices) best = std::max(best, dot(eta, as_point(v)));
  std::vector<LatticeExponent> arg;
  for (const auto& v : p.vertices)
    if (dot(eta, as_point(v)) == best) arg.push_back(v);
  if (arg.size() == static_cast<std::size_t>(p.vertices.size()) &&
      p.vertices.size() > 1)
    return FaceWhole{};
  if (arg.size() == 1) return FaceVertex{arg[0]};
  if (p.dimension < 2) return FaceWhole{};  // both endpoints of a segment
  for (const auto& e : p.edges) {
    bool a = false, b = false;
    for (const auto& v : arg) {
      if (v == e.start) a = true;
      if (v == e.end) b = true;
    }
    if (a && b) return FaceEdge{e};
  }
  throw error("covector maximizer is not a face");  // unreachable
}

std::int64_t interior_lattice_count(const NewtonPolygon& p) {
  if (p.dimension == 0) return 0;
  if (p.dimension == 1) {
    LatticePoint d = as_point(p.vertices[1]) - as_point(p.vertices[0]);
    return gcd64(d.x, d.y) - 1;
  }
  std::int64_t xmin = p.vertices[0].l, xmax = xmin;
  std::int64_t ymin = p.vertices[0].m, ymax = ymin;
  for (const auto& v : p.vertices) {
    xmin = std::min(xmin, v.l);
    xmax = std::max(xmax, v.l);
    ymin = std::min(ymin, v.m);
    ymax = std::max(ymax, v.m);
  }
  std::int64_t count = 0;
  for (std::int64_t x = xmin; x <= xmax; ++x)
    for (std::int64_t y = ymin; y <= ymax; ++y)
      if (p.contains_strictly({x, y})) ++count;
  return count;
}

std::int64_t boundary_lattice_count(const NewtonPolygon& p) {
  if (p.dimension == 0) return 1;
  if (p.dimension == 1) {
    LatticePoint d = as_point(p.vertices[1]) - as_point(p.vertices[0]);
    return gcd64(d.x, d.y) + 1;
  }
  std::int64_t count = 0;
  for (const auto& e : p.edges) count += e.n_gamma();
  return count;
}

std::int64_t polygon_area_twice(const std::vector<LatticePoint>& vertices) {
  std::size_t n = vertices.size();
  std::int64_t twice = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const LatticePoint& a = vertices[i];
    const LatticePoint& b = vertices[(i + 1) % n];
    twice += cross(a, b);
  }
  if (n >= 3) {
    for (std::size_t i = 0; i < n; ++i) {
      LatticePoint u = vertices[(i + 1) % n] - vertices[i];
      LatticePoint v = vertices[(i + 2) % n] - vertices[(i + 1) % n];
      if (cross(u, v) < 0)
        throw error("polygon_area_twice: vertex cycle is not convex CCW");
    }
  }
  if (twice < 0) throw error("polygon_area_twice: clockwise cycle");
  return twice;
}

ConditionIResult check_condition_i(const NewtonPolygon& p) {
  for (const auto& v : p.vertices) {
    LatticeExponent corners[3] = {{0, 0}, {v.l, 0}, {0, v.m}};
    for (const auto& c : corners)
      if (!p.contains(c)) return {false, v};
  }
  return {true, std::nullopt};
}

}  // namespace newton
