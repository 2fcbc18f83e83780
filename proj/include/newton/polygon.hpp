#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "newton/sparse_polynomial.hpp"

namespace newton {

// One side of the Newton polygon. `start` is the CCW-initial vertex;
// walking start -> end along direction (-beta, alpha) visits the edge's
// lattice points (start.l - n*beta, start.m + n*alpha), n = 0..n_gamma.
struct Edge {
  LatticeExponent start;
  LatticeExponent end;
  std::int64_t alpha = 0;  // primitive outward normal (alpha, beta)
  std::int64_t beta = 0;
  std::int64_t lattice_count = 0;  // lattice points on the closed edge
  bool on_axis = false;            // both endpoints on the same coordinate axis

  std::int64_t n_gamma() const { return lattice_count - 1; }
  std::int64_t support_level() const {
    return alpha * start.l + beta * start.m;
  }
  LatticeExponent lattice_point(std::int64_t n) const {
    return {start.l - n * beta, start.m + n * alpha};
  }
  bool contains(LatticeExponent p) const {
    if (alpha * p.l + beta * p.m != support_level()) return false;
    // between the endpoints
    LatticePoint d = as_point(end) - as_point(start);
    LatticePoint v = as_point(p) - as_point(start);
    std::int64_t t = dot(v, d);
    return t >= 0 && t <= dot(d, d);
  }
  friend bool operator==(const Edge&, const Edge&) = default;
};

// Convex hull of a polynomial's support. Vertices are the extreme
// points only, in counterclockwise order; edges populated iff dim == 2.
struct NewtonPolygon {
  std::vector<LatticeExponent> vertices;
  int dimension = 0;
  std::vector<Edge> edges;

  bool contains(LatticeExponent p) const;
  bool contains_strictly(LatticeExponent p) const;
};

struct FaceVertex {
  LatticeExponent vertex;
};
struct FaceEdge {
  Edge edge;
};
struct FaceWhole {};
using Face = std::variant<FaceVertex, FaceEdge, FaceWhole>;

NewtonPolygon newton_polygon(const SparsePolynomial& f);

// Hull of an arbitrary lattice point set (used for the P* polygon and
// the Pick-identity area). Points need not be in the first quadrant.
NewtonPolygon hull_of(std::vector<LatticePoint> points);

// The relaxed polygon P* = conv({(0,0)} and all off-axis edges of P).
NewtonPolygon star_polygon(const NewtonPolygon& p);

// Maximizing face of x -> <eta, x>; eta = (0,0) gives the whole polygon.
Face face_for_covector(const NewtonPolygon& p, LatticePoint eta);

// Lattice points strictly interior (relative to the affine span).
std::int64_t interior_lattice_count(const NewtonPolygon& p);

// Lattice points on the boundary (dim 2), or total count (dim <= 1).
std::int64_t boundary_lattice_count(const NewtonPolygon& p);

// Exact shoelace value (twice the area) of a convex CCW vertex cycle.
// Throws on non-convex input.
std::int64_t polygon_area_twice(const std::vector<LatticePoint>& vertices);

struct ConditionIResult {
  bool holds = true;
  std::optional<LatticeExponent> witness;  // vertex whose rectangle escapes P
};

// Condition (i): P contains conv{(0,0),(u,0),(0,v),(u,v)} for each of
// its points. By convexity it is enough to check the rectangle corners
// of every vertex.
ConditionIResult check_condition_i(const NewtonPolygon& p);

}  // namespace newton
