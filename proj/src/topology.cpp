#include "newton/topology.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "newton/critical.hpp"
#include "newton/resultant.hpp"
#include "newton/roots.hpp"

namespace newton {

namespace {

std::string face_status_text(const FaceReport& r) {
  std::ostringstream os;
  os << (r.status == FaceStatus::fail ? "degenerate face "
                                      : "inconclusive face ")
     << r.descriptor;
  if (!r.witness.empty()) os << ": " << r.witness;
  return os.str();
}

// dense complex coefficients of a polynomial in w alone
std::vector<std::complex<double>> dense_in_w(const SparsePolynomial& f) {
  std::vector<std::complex<double>> c(
      static_cast<std::size_t>(std::max<std::int64_t>(f.degree_w() + 1, 1)));
  for (const auto& [e, a] : f.terms()) {
    if (e.l != 0) throw error("internal: expected a polynomial in one variable");
    c[static_cast<std::size_t>(e.m)] = a.to_complex();
  }
  return c;
}

void add_bad_xi(std::vector<std::complex<double>>& bad,
                std::complex<double> v) {
  for (const auto& b : bad)
    if (std::abs(b - v) < 1e-8) return;
  bad.push_back(v);
}

// Generic-xi nondegeneracy: xi-independent edges are checked outright;
// an edge polynomial containing the constant-term slot picks up the
// coefficient a00 - xi, and its discriminant (a polynomial in xi) cuts
// out the finitely many bad xi.
void certify_generic(const SparsePolynomial& f, const SparsePolynomial& g,
                     const NewtonPolygon& p, CertifyMode mode,
                     FiberTopologyReport& rep) {
  NondegeneracyVerdict& v = rep.nondegeneracy;
  v.mode = mode;
  for (const auto& vx : p.vertices) {
    FaceReport r;
    r.kind = FaceReport::Kind::vertex;
    std::ostringstream os;
    os << "(" << vx.l << "," << vx.m << ")";
    r.descriptor = os.str();
    v.face_reports.push_back(std::move(r));
  }
  for (const auto& e : p.edges) {
    if (mode == CertifyMode::positive_coordinate_only && e.alpha <= 0 &&
        e.beta <= 0)
      continue;
    FaceReport r;
    r.kind = FaceReport::Kind::edge;
    std::ostringstream os;
    os << "(" << e.start.l << "," << e.start.m << ")-(" << e.end.l << ","
       << e.end.m << ")";
    r.descriptor = os.str();
    if (!e.contains({0, 0})) {
      EdgePolynomial ep = edge_polynomial(g, e);
      if (!is_square_free(ep.poly)) {
        r.status = FaceStatus::fail;
        r.witness = "repeated root independent of xi";
      }
    } else {
      // P(y; xi) with the constant slot replaced by a00 - xi; z plays
      // the role of y and w the role of xi below
      SparsePolynomial py;
      for (std::int64_t n = 0; n <= e.n_gamma(); ++n) {
        LatticeExponent le = e.lattice_point(n);
        if (le == LatticeExponent{0, 0}) {
          py.add_term({n, 0}, f.coeff(le));
          py.add_term({n, 1}, GaussianRational(-1));
        } else {
          py.add_term({n, 0}, f.coeff(le));
        }
      }
      SparsePolynomial disc =
          resultant(py, partial_derivative(py, Variable::z), Variable::z);
      if (disc.is_zero()) {
        r.status = FaceStatus::fail;
        r.witness = "edge polynomial degenerate for every xi";
      } else if (disc.degree_w() >= 1) {
        for (auto xi : polynomial_roots(dense_in_w(disc)).roots)
          add_bad_xi(rep.bad_xi, xi);
      }
    }
    v.face_reports.push_back(std::move(r));
  }
  if (mode == CertifyMode::full && p.dimension == 2) {
    // the fiber f = xi is singular exactly at the critical values
    FaceReport r;
    r.kind = FaceReport::Kind::whole;
    r.descriptor = "whole polygon";
    try {
      for (auto xi : critical_values(f)) add_bad_xi(rep.bad_xi, xi);
    } catch (const error& ex) {
      r.status = FaceStatus::inconclusive;
      r.witness = ex.what();
    }
    v.face_reports.push_back(std::move(r));
  }
  for (const auto& r : v.face_reports)
    if (r.status != FaceStatus::pass) v.overall = false;
}

}  // namespace

std::int64_t arithmetic_genus(const NewtonPolygon& p) {
  std::int64_t b = interior_lattice_count(p);
  std::int64_t sign = p.dimension % 2 == 0 ? 1 : -1;
  return 1 - sign * b;
}

std::complex<double> compute_kappa(const Edge& edge, const SparsePolynomial& f,
                                   int root_index) {
  if (!edge.contains({1, 1})) return {1.0, 0.0};
  bool canonical = (edge.start == LatticeExponent{2, 0} &&
                    edge.end == LatticeExponent{0, 2}) ||
                   (edge.start == LatticeExponent{0, 2} &&
                    edge.end == LatticeExponent{2, 0});
  if (!canonical)
    throw error("kappa is only defined for (1,1) on the edge (2,0)-(0,2)");
  std::complex<double> a11 = f.coeff({1, 1}).to_complex();
  std::complex<double> a20 = f.coeff({2, 0}).to_complex();
  std::complex<double> a02 = f.coeff({0, 2}).to_complex();
  std::complex<double> disc = a11 * a11 - 4.0 * a20 * a02;
  if (std::abs(disc) == 0.0)
    throw error("vanishing discriminant: kappa undefined (degenerate edge)");
  std::complex<double> value = 1.0 / std::sqrt(disc);
  return root_index == 2 ? value : -value;
}

IndexSumCheck index_sum_check(const FiberTopologyReport& report) {
  IndexSumCheck c;
  for (const auto& p : report.punctures) c.lhs += p.index;
  c.rhs = 2 - 2 * report.genus;
  c.holds = c.lhs == c.rhs;
  return c;
}

FiberTopologyReport analyze_fiber(const SparsePolynomial& f,
                                  std::optional<GaussianRational> xi,
                                  CertifyMode mode) {
  if (f.is_zero()) throw error("fiber analysis of the zero polynomial");
  FiberTopologyReport rep;
  rep.xi = xi;

  SparsePolynomial g = f;
  if (xi) {
    g.add_term({0, 0}, -*xi);
  } else if (g.coeff({0, 0}).is_zero()) {
    // generic xi: the constant slot is occupied (placeholder value; the
    // polygon only sees the support)
    g.set_coeff({0, 0}, GaussianRational(1));
  }
  if (g.is_zero()) throw error("fiber polynomial f - xi is zero");

  NewtonPolygon p = newton_polygon(g);
  rep.polygon = p;
  rep.polygon_dimension = p.dimension;

  if (xi)
    rep.nondegeneracy = certify_nondegenerate(g, mode);
  else
    certify_generic(f, g, p, mode, rep);

  if (p.dimension != 2) {
    std::ostringstream os;
    os << "Newton polygon of f - xi is " << p.dimension
       << "-dimensional, need 2";
    rep.hypothesis_failures.push_back(os.str());
  }
  if (!rep.nondegeneracy.overall)
    for (const auto& r : rep.nondegeneracy.face_reports)
      if (r.status != FaceStatus::pass)
        rep.hypothesis_failures.push_back(face_status_text(r));

  ConditionIResult ci = check_condition_i(p);
  if (!ci.holds) {
    ConditionIResult star = check_condition_i(star_polygon(p));
    if (star.holds) {
      rep.relaxed_condition_only = true;
      rep.warnings.push_back(
          "condition (i) holds only for the relaxed polygon P*");
    } else {
      std::ostringstream os;
      os << "condition (i) fails at vertex (" << ci.witness->l << ","
         << ci.witness->m << ")";
      rep.hypothesis_failures.push_back(os.str());
    }
  }

  rep.genus = interior_lattice_count(p);
  rep.arithmetic_genus_value = arithmetic_genus(p);
  if (g.coeff({0, 0}).is_zero())
    rep.warnings.push_back(
        "zero constant term: arithmetic-genus formula applied outside its "
        "stated hypothesis");

  // punctures: one per root of each off-axis edge polynomial
  for (const auto& e : p.edges) {
    if (e.on_axis) continue;
    rep.n_mu += e.n_gamma();
    std::int64_t k = (e.start.l - 1) * e.alpha + (e.start.m - 1) * e.beta - 1;
    std::int64_t k2 = (e.end.l - 1) * e.alpha + (e.end.m - 1) * e.beta - 1;
    if (k != k2) throw error("internal: pole order differs along an edge");
    EdgePolynomial ep = edge_polynomial(g, e);
    auto roots = polynomial_roots(ep.poly.complex_coeffs()).roots;
    std::sort(roots.begin(), roots.end(), [](const auto& a, const auto& b) {
      return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
    });
    for (std::size_t i = 0; i < roots.size(); ++i) {
      PunctureRecord pr;
      pr.edge = e;
      pr.root_index = static_cast<int>(i) + 1;
      pr.root = roots[i];
      pr.pole_order = k;
      pr.cone_angle_over_2pi = k + 1;
      pr.index = -k;
      try {
        pr.kappa = compute_kappa(e, g, pr.root_index);
        pr.kappa_exact_one = !e.contains({1, 1});
      } catch (const error& ex) {
        pr.kappa = {std::nan(""), std::nan("")};
        pr.kappa_exact_one = false;
        rep.warnings.push_back(std::string("kappa unavailable: ") + ex.what());
      }
      rep.punctures.push_back(std::move(pr));
    }
  }

  if (rep.genus >= 1) {
    rep.completeness = Completeness::incomplete_compact_completion;
  } else if (rep.n_mu == 1) {
    rep.completeness = Completeness::complete_plane;
  } else if (rep.n_mu == 2) {
    rep.completeness = Completeness::complete_cylinder;
  } else {
    std::ostringstream os;
    os << "genus 0 with n_mu = " << rep.n_mu
       << ": outside the plane/cylinder alternative";
    rep.hypothesis_failures.push_back(os.str());
  }

  // Pick identity n_mu - 2S = 2 - 2B+ with S the area spanned by (1,1)
  // and the off-axis edges, computed as the signed triangle fan
  // 2S = sum n_Gamma * <(alpha,beta), start - (1,1)>. When (1,1) lies
  // in the polygon this equals the area of conv({(1,1)} and the
  // edges); the signed form also covers polygons that miss (1,1), where
  // a pole order is negative and the plain hull area would overcount.
  std::int64_t twice_area = 0;
  for (const auto& e : p.edges)
    if (!e.on_axis)
      twice_area += e.n_gamma() * (e.alpha * (e.start.l - 1) +
                                   e.beta * (e.start.m - 1));
  rep.pick.twice_area = twice_area;
  rep.pick.lhs = rep.n_mu - twice_area;
  rep.pick.rhs = 2 - 2 * rep.genus;
  rep.pick.holds = rep.pick.lhs == rep.pick.rhs;

  rep.connectivity_asserted = rep.hypotheses_ok();
  return rep;
}

}  // namespace newton
