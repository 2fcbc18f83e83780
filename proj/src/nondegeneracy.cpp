#include "newton/nondegeneracy.hpp"

#include <sstream>

#include "newton/critical.hpp"
#include "newton/roots.hpp"

namespace newton {

namespace {

std::string point_str(LatticeExponent e) {
  std::ostringstream os;
  os << "(" << e.l << "," << e.m << ")";
  return os.str();
}

std::string complex_str(std::complex<double> c) {
  std::ostringstream os;
  os << c.real() << (c.imag() < 0 ? "" : "+") << c.imag() << "i";
  return os.str();
}

// Square-freeness check with a repeated-root witness on failure.
FaceReport check_poly_face(FaceReport::Kind kind, std::string descriptor,
                           const UnivariatePolynomial& p) {
  FaceReport r;
  r.kind = kind;
  r.descriptor = std::move(descriptor);
  if (p.degree() <= 0 || is_square_free(p)) return r;
  r.status = FaceStatus::fail;
  UnivariatePolynomial g = univariate_gcd(p, p.derivative());
  auto roots = polynomial_roots(g.complex_coeffs());
  std::ostringstream os;
  os << "repeated root y = " << complex_str(roots.roots.front());
  r.witness = os.str();
  r.witness_value = roots.roots.front();
  return r;
}

// The whole-polygon covector eta = 0: f itself must have no torus zero
// with vanishing differential.
FaceReport check_whole_face(const SparsePolynomial& f) {
  FaceReport r;
  r.kind = FaceReport::Kind::whole;
  r.descriptor = "whole polygon";
  CriticalSet cs = critical_set(f);
  for (const auto& p : cs.points) {
    if (!p.meets_torus()) continue;
    double av = std::abs(p.value);
    if (av < 1e-8) {
      r.status = FaceStatus::fail;
      std::ostringstream os;
      os << "torus critical point on the zero fiber, z = " << complex_str(p.z)
         << (p.free_z ? " (free)" : "") << ", w = " << complex_str(p.w)
         << (p.free_w ? " (free)" : "");
      r.witness = os.str();
      r.witness_value = p.value;
      return r;
    }
    if (av < 1e-5 && r.status == FaceStatus::pass) {
      r.status = FaceStatus::inconclusive;
      std::ostringstream os;
      os << "torus critical point with |f| = " << av
         << ", too small to certify away at working precision";
      r.witness = os.str();
      r.witness_value = p.value;
    }
  }
  return r;
}

}  // namespace

SparsePolynomial truncate(const SparsePolynomial& f, LatticePoint eta) {
  if (f.is_zero()) throw error("truncation of the zero polynomial");
  std::int64_t best = 0;
  bool first = true;
  for (const auto& [e, c] : f.terms()) {
    std::int64_t v = eta.x * e.l + eta.y * e.m;
    if (first || v > best) best = v, first = false;
  }
  SparsePolynomial r;
  for (const auto& [e, c] : f.terms())
    if (eta.x * e.l + eta.y * e.m == best) r.set_coeff(e, c);
  return r;
}

EdgePolynomial edge_polynomial(const SparsePolynomial& f, const Edge& edge) {
  std::vector<GaussianRational> c(
      static_cast<std::size_t>(edge.n_gamma()) + 1);
  for (std::int64_t n = 0; n <= edge.n_gamma(); ++n)
    c[static_cast<std::size_t>(n)] = f.coeff(edge.lattice_point(n));
  EdgePolynomial ep{edge, UnivariatePolynomial(std::move(c))};
  if (ep.poly.degree() != edge.n_gamma() || ep.poly.coeff(0).is_zero())
    throw error("edge polynomial endpoints must be hull vertices");
  return ep;
}

NondegeneracyVerdict certify_nondegenerate(const SparsePolynomial& f,
                                           CertifyMode mode) {
  if (f.is_zero()) throw error("certification of the zero polynomial");
  NondegeneracyVerdict v;
  v.mode = mode;
  NewtonPolygon p = newton_polygon(f);

  for (const auto& vx : p.vertices) {
    FaceReport r;
    r.kind = FaceReport::Kind::vertex;
    r.descriptor = point_str(vx);
    v.face_reports.push_back(std::move(r));  // a monomial never vanishes
  }

  if (p.dimension == 1) {
    // the segment itself is a face (for covectors orthogonal to it, one
    // of which always has a positive coordinate); f equals its own
    // truncation there, so this also covers eta = 0
    LatticePoint d = as_point(p.vertices[1]) - as_point(p.vertices[0]);
    std::int64_t g = gcd64(d.x < 0 ? -d.x : d.x, d.y < 0 ? -d.y : d.y);
    LatticePoint step{d.x / g, d.y / g};
    std::vector<GaussianRational> c(static_cast<std::size_t>(g) + 1);
    for (std::int64_t n = 0; n <= g; ++n)
      c[static_cast<std::size_t>(n)] =
          f.coeff({p.vertices[0].l + n * step.x, p.vertices[0].m + n * step.y});
    v.face_reports.push_back(check_poly_face(
        FaceReport::Kind::segment,
        point_str(p.vertices[0]) + "-" + point_str(p.vertices[1]),
        UnivariatePolynomial(std::move(c))));
  }

  for (const auto& e : p.edges) {
    if (mode == CertifyMode::positive_coordinate_only && e.alpha <= 0 &&
        e.beta <= 0)
      continue;
    v.face_reports.push_back(
        check_poly_face(FaceReport::Kind::edge,
                        point_str(e.start) + "-" + point_str(e.end),
                        edge_polynomial(f, e).poly));
  }

  if (mode == CertifyMode::full && p.dimension == 2)
    v.face_reports.push_back(check_whole_face(f));

  for (const auto& r : v.face_reports)
    if (r.status != FaceStatus::pass) v.overall = false;
  return v;
}

}  // namespace newton
