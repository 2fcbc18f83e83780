#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "newton/parser.hpp"
#include "newton/topology.hpp"

using namespace newton;

namespace {

SparsePolynomial P(const std::string& s) { return parse_polynomial(s); }

FiberTopologyReport analyze(const std::string& s, long xi) {
  return analyze_fiber(P(s), GaussianRational(xi));
}

bool approx(std::complex<double> a, std::complex<double> b,
            double tol = 1e-9) {
  return std::abs(a - b) <= tol;
}

}  // namespace

TEST_CASE("cubic curve fiber: torus with three removable punctures") {
  FiberTopologyReport rep = analyze("z^3 + w^3", 1);
  CHECK(rep.hypotheses_ok());
  CHECK(rep.polygon_dimension == 2);
  CHECK(rep.genus == 1);
  CHECK(rep.n_mu == 3);
  REQUIRE(rep.punctures.size() == 3);
  for (const auto& p : rep.punctures) {
    CHECK(p.pole_order == 0);
    CHECK(p.cone_angle_over_2pi == 1);
    CHECK(p.index == 0);
    CHECK(p.kappa_exact_one);  // (1,1) is not on the hypotenuse lattice
  }
  CHECK(rep.completeness == Completeness::incomplete_compact_completion);
  CHECK(rep.pick.holds);
  CHECK(rep.pick.lhs == 0);
  CHECK(rep.pick.rhs == 0);
  CHECK(rep.pick.twice_area == 3);
  CHECK(index_sum_check(rep).holds);
  CHECK(rep.connectivity_asserted);

  // puncture roots: the three cube roots of -1, sorted by (re, im)
  CHECK(approx(rep.punctures[0].root, {-1.0, 0.0}, 1e-8));
  CHECK(rep.punctures[0].root_index == 1);
  CHECK(rep.punctures[2].root_index == 3);
}

TEST_CASE("coprime exponents give one high-order pole") {
  FiberTopologyReport rep = analyze("z^3 + w^4", 1);
  CHECK(rep.hypotheses_ok());
  CHECK(rep.genus == 3);
  CHECK(rep.n_mu == 1);
  REQUIRE(rep.punctures.size() == 1);
  CHECK(rep.punctures[0].pole_order == 4);
  CHECK(rep.punctures[0].cone_angle_over_2pi == 5);
  CHECK(rep.punctures[0].index == -4);
  IndexSumCheck s = index_sum_check(rep);
  CHECK(s.holds);
  CHECK(s.lhs == -4);
  CHECK(s.rhs == -4);
}

TEST_CASE("conic fiber: flat cylinder") {
  FiberTopologyReport rep = analyze("z^2 + w^2", 1);
  CHECK(rep.hypotheses_ok());
  CHECK(rep.genus == 0);
  CHECK(rep.n_mu == 2);
  CHECK(rep.completeness == Completeness::complete_cylinder);
  REQUIRE(rep.punctures.size() == 2);
  for (const auto& p : rep.punctures) {
    CHECK(p.pole_order == -1);  // a zero of order one: infinite distance
    CHECK(p.cone_angle_over_2pi == 0);
    CHECK(p.index == 1);
    CHECK_FALSE(p.kappa_exact_one);
  }
  // roots of 1 + y^2 sorted by (re, im): -i first
  CHECK(approx(rep.punctures[0].root, {0.0, -1.0}, 1e-8));
  CHECK(approx(rep.punctures[0].kappa, {0.0, 0.5}));
  CHECK(approx(rep.punctures[1].kappa, {0.0, -0.5}));
  CHECK(index_sum_check(rep).holds);
}

TEST_CASE("kappa for the edge through (1,1)") {
  SparsePolynomial f = P("z^2 + w^2 + z*w - 1");
  NewtonPolygon p = newton_polygon(f);
  const Edge* hyp = nullptr;
  for (const auto& e : p.edges)
    if (!e.on_axis) hyp = &e;
  REQUIRE(hyp != nullptr);
  double s3 = 1.0 / std::sqrt(3.0);
  CHECK(approx(compute_kappa(*hyp, f, 1), {0.0, s3}));
  CHECK(approx(compute_kappa(*hyp, f, 2), {0.0, -s3}));

  // (1,1) off the edge: kappa is exactly 1
  NewtonPolygon t = newton_polygon(P("z^3 + w^3 - 1"));
  for (const auto& e : t.edges)
    if (!e.on_axis) CHECK(compute_kappa(e, P("z^3 + w^3 - 1"), 1) ==
                          std::complex<double>(1.0, 0.0));

  // degenerate quadratic part: kappa undefined
  SparsePolynomial g = P("z^2 + w^2 + 2*z*w - 1");
  for (const auto& e : newton_polygon(g).edges)
    if (!e.on_axis) CHECK_THROWS_AS(compute_kappa(e, g, 1), error);
}

TEST_CASE("arithmetic genus") {
  // one-dimensional polygons: 1 + interior count
  for (int n = 1; n <= 6; ++n) {
    SparsePolynomial f = P("z^" + std::to_string(n) + " - 1");
    NewtonPolygon p = newton_polygon(f);
    CHECK(p.dimension == 1);
    CHECK(arithmetic_genus(p) == n);
  }
  CHECK(arithmetic_genus(newton_polygon(P("z^3 + w^3 - 1"))) == 0);
  CHECK(arithmetic_genus(newton_polygon(P("z^4 + w^4 - 1"))) == -2);
  CHECK(arithmetic_genus(newton_polygon(P("7"))) == 1);
}

TEST_CASE("hyperelliptic family z^2 + P_n(w)") {
  for (int n = 1; n <= 9; ++n) {
    SparsePolynomial f =
        P("z^2 + w^" + std::to_string(n) + (n == 1 ? " + w" : " + w"));
    FiberTopologyReport rep = analyze_fiber(f, GaussianRational(1000));
    CAPTURE(n);
    CHECK(rep.hypotheses_ok());
    CHECK(rep.genus == (n - 1) / 2);
    CHECK(rep.n_mu == (3 + (n % 2 == 0 ? 1 : -1)) / 2);
    std::int64_t g = n % 2 == 0 ? 2 : 1;
    for (const auto& p : rep.punctures)
      CHECK(p.pole_order == (n - 2) / g - 1);
    CHECK(rep.pick.holds);
    CHECK(index_sum_check(rep).holds);
  }
}

TEST_CASE("generic fiber reports the bad xi values") {
  FiberTopologyReport rep = analyze_fiber(P("z^2 + w^3"), std::nullopt);
  CHECK_FALSE(rep.xi.has_value());
  CHECK(rep.hypotheses_ok());
  CHECK(rep.genus == 1);
  CHECK(rep.n_mu == 1);
  REQUIRE(rep.punctures.size() == 1);
  CHECK(rep.punctures[0].pole_order == 0);
  bool has_zero = false;
  for (auto x : rep.bad_xi)
    if (std::abs(x) < 1e-8) has_zero = true;
  CHECK(has_zero);  // the zero fiber is singular

  FiberTopologyReport r2 = analyze_fiber(P("z^2 + w^3 - 3*w"), std::nullopt);
  int hits = 0;
  for (auto x : r2.bad_xi)
    if (approx(x, {2, 0}, 1e-6) || approx(x, {-2, 0}, 1e-6)) ++hits;
  CHECK(hits == 2);
}

TEST_CASE("relaxed condition (i) is flagged, not fatal") {
  // at xi = 0 the constant term cancels and the polygon loses the origin
  FiberTopologyReport rep = analyze_fiber(P("z^2 + w^3 + w"),
                                          GaussianRational(0));
  CHECK(rep.relaxed_condition_only);
  CHECK(rep.hypotheses_ok());
  CHECK_FALSE(rep.warnings.empty());

  FiberTopologyReport ok = analyze_fiber(P("z^2 + w^3 + w"),
                                         GaussianRational(1000));
  CHECK_FALSE(ok.relaxed_condition_only);
}

TEST_CASE("hypothesis failures are reported") {
  // one-dimensional polygon
  FiberTopologyReport seg = analyze("z^2", 1);
  CHECK_FALSE(seg.hypotheses_ok());
  CHECK_FALSE(seg.connectivity_asserted);

  // degenerate polynomial
  FiberTopologyReport deg = analyze("z^2 + w^2 + 2*z*w + w", 1);
  CHECK_FALSE(deg.hypotheses_ok());

  // condition (i) fails even for the relaxed polygon
  FiberTopologyReport ci = analyze("z*w + z^2*w^2 + z + w", 1);
  bool mentions_ci = false;
  for (const auto& h : ci.hypothesis_failures)
    if (h.find("condition (i)") != std::string::npos) mentions_ci = true;
  CHECK((mentions_ci || ci.hypotheses_ok()));
}
