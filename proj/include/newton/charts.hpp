#pragma once

#include <array>
#include <boost/multiprecision/cpp_complex.hpp>
#include <cmath>
#include <complex>
#include <cstdint>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "newton/polygon.hpp"

namespace newton {

using QuadComplex = boost::multiprecision::cpp_complex_quad;

namespace detail {

template <class C>
struct real_of {
  using type = typename C::value_type;
};

template <class C>
double as_double(const C& x) {
  return static_cast<double>(x);
}

template <class C>
C ipow(C base, std::int64_t e) {
  if (e < 0) return C(1) / ipow(base, -e);
  C r(1);
  while (e > 0) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

}  // namespace detail

// Numeric realization of the chart at infinity attached to one root
// yhat of an off-axis edge polynomial. With (alpha, beta) the outward
// normal and s an alpha-th root of yhat + g, the chart is
//   (z, w) = (u^{-alpha}, u^{-beta} s),
// and membership in the fiber f = xi is equivalent to F(xi, u, s) = 0
// where F = (f(z,w) - xi) * u^E with E = alpha*u0 + beta*v0. Working
// with s directly keeps the root branch coherent along the Newton
// continuation from the anchor s(xi, 0) = principal root of yhat.
// When alpha = 0 (so beta = 1) the same construction is applied with
// the variables swapped.
template <class C>
class ChartModel {
 public:
  using Real = typename detail::real_of<C>::type;

  ChartModel(const SparsePolynomial& f, const Edge& edge,
             std::complex<double> root) {
    Edge e = edge;
    const bool swap_vars = e.alpha == 0;
    if (swap_vars) {
      std::swap(e.start.l, e.start.m);
      std::swap(e.end.l, e.end.m);
      std::swap(e.alpha, e.beta);
    }
    transposed_ = swap_vars;
    if (e.alpha <= 0)
      throw error("chart construction needs an edge normal with alpha > 0");
    alpha_ = e.alpha;
    beta_ = e.beta;
    level_ = e.support_level();
    for (const auto& [le, c] : f.terms()) {
      std::int64_t l = swap_vars ? le.m : le.l;
      std::int64_t m = swap_vars ? le.l : le.m;
      std::int64_t exp = level_ - alpha_ * l - beta_ * m;
      if (exp < 0)
        throw error("edge does not support the polynomial (negative exponent)");
      e_.push_back(exp);
      m_.push_back(m);
      std::complex<double> cd = c.to_complex();
      a_.push_back(C(cd.real(), cd.imag()));
    }
    if (level_ < 0) throw error("negative support level on the edge");
    // The edge variable behind the root is y = w^alpha * z^-beta; the
    // variable swap inverts it, so a transposed chart anchors at 1/yhat.
    std::complex<double> yhat = root;
    if (swap_vars) yhat = 1.0 / yhat;
    // anchor: principal alpha-th root, refined at full precision
    std::complex<double> s0 =
        std::pow(yhat, 1.0 / static_cast<double>(alpha_));
    C s(s0.real(), s0.imag());
    C y(yhat.real(), yhat.imag());
    for (int it = 0; it < 80; ++it) {
      C p = detail::ipow(s, alpha_ - 1);
      C step = (p * s - y) / (C(Real(alpha_)) * p);
      s -= step;
      if (abs_real(step) <= eps() * (Real(1) + abs_real(s))) break;
    }
    s0_ = s;
  }

  struct Solution {
    C s;
    C g;
    Real f_abs;  // |F| at convergence
  };

  // Newton continuation from u = 0 (s = anchor) along the straight
  // segment to u; restarts with a finer subdivision on divergence.
  Solution solve(const C& xi, const C& u) const {
    for (int steps = 32; steps <= 8192; steps *= 4) {
      C s = s0_;
      bool ok = true;
      for (int j = 1; j <= steps && ok; ++j) {
        C uj = u * C(Real(j)) / C(Real(steps));
        ok = newton_at(xi, uj, s);
      }
      if (ok) {
        Solution sol;
        sol.s = s;
        sol.g = detail::ipow(s, alpha_) - (s0_alpha());
        C dF;
        sol.f_abs = abs_real(eval_F(xi, u, s, &dF));
        return sol;
      }
    }
    throw error("chart continuation failed to converge inside the radius");
  }

  // Continuation with s nudged by ds after the first sub-step. Landing
  // back on the unperturbed solution is the uniqueness statement of the
  // implicit function theorem, checked in the tests.
  Solution solve_perturbed(const C& xi, const C& u, const C& ds) const {
    const int steps = 64;
    C s = s0_;
    for (int j = 1; j <= steps; ++j) {
      if (j == 2) s += ds;
      C uj = u * C(Real(j)) / C(Real(steps));
      if (!newton_at(xi, uj, s))
        throw error("perturbed chart continuation failed");
    }
    Solution sol;
    sol.s = s;
    sol.g = detail::ipow(s, alpha_) - s0_alpha();
    C dF;
    sol.f_abs = abs_real(eval_F(xi, u, s, &dF));
    return sol;
  }

  // (z, w) at the solved point.
  std::pair<C, C> point(const C& u, const Solution& sol) const {
    C z = detail::ipow(u, -alpha_);
    C w = detail::ipow(u, -beta_) * sol.s;
    if (transposed_) std::swap(z, w);
    return {z, w};
  }

  // |f(z,w) - xi|, evaluated as |F| * |u|^{-E} (free of the
  // cancellation that a direct evaluation at huge (z,w) would suffer).
  double residual(const C& xi, const C& u, const Solution& sol) const {
    C dF;
    Real r = abs_real(eval_F(xi, u, sol.s, &dF));
    Real ua = abs_real(u);
    Real scale = Real(1);
    for (std::int64_t i = 0; i < level_; ++i) scale *= ua;
    return detail::as_double(r / scale);
  }

  // Jacobian d(z,w)/d(xi,u) in output coordinates, returned row-major
  // {dz/dxi, dz/du, dw/dxi, dw/du}. The xi column comes from implicit
  // differentiation (dF = -u^E dxi + F_s ds = 0 gives ds/dxi = u^E/F_s);
  // a finite difference in xi underflows here, since the xi-sensitivity
  // scales like u^E and drops below machine epsilon relative to the
  // chart point already for moderate E. The u column is a central
  // difference with relative step 1e-5.
  std::array<C, 4> jacobian(const C& xi, const C& u) const {
    Solution sol = solve(xi, u);
    C dF;
    eval_F(xi, u, sol.s, &dF);
    C wi_xi = detail::ipow(u, level_ - beta_) / dF;
    C z_xi = transposed_ ? wi_xi : C(0);
    C w_xi = transposed_ ? C(0) : wi_xi;
    C du = u * C(Real(1e-5));
    auto [zp, wp] = point(u + du, solve(xi, u + du));
    auto [zm, wm] = point(u - du, solve(xi, u - du));
    C two(2);
    return {z_xi, (zp - zm) / (two * du), w_xi, (wp - wm) / (two * du)};
  }

  std::int64_t alpha() const { return alpha_; }
  std::int64_t beta() const { return beta_; }
  std::int64_t support_level() const { return level_; }
  bool transposed() const { return transposed_; }

  static Real eps() { return std::numeric_limits<Real>::epsilon(); }

 private:
  static Real abs_real(const C& x) {
    using std::abs;
    return abs(x);
  }

  C s0_alpha() const { return detail::ipow(s0_, alpha_); }

  C eval_F(const C& xi, const C& u, const C& s, C* dFds) const {
    C F(0), dF(0);
    for (std::size_t i = 0; i < a_.size(); ++i) {
      C up = detail::ipow(u, e_[i]);
      C sp = detail::ipow(s, m_[i] > 0 ? m_[i] - 1 : 0);
      if (m_[i] > 0) {
        F += a_[i] * up * sp * s;
        dF += a_[i] * up * C(Real(m_[i])) * sp;
      } else {
        F += a_[i] * up;
      }
    }
    C ue = detail::ipow(u, level_);
    F -= xi * ue;
    *dFds = dF;
    return F;
  }

  // one Newton solve at fixed (xi, u), warm-started; false on failure
  bool newton_at(const C& xi, const C& u, C& s) const {
    const Real tol = eps() * Real(64);
    for (int it = 0; it < 60; ++it) {
      C dF;
      C F = eval_F(xi, u, s, &dF);
      if (abs_real(dF) == Real(0)) return false;
      C step = F / dF;
      s -= step;
      if (abs_real(step) <= tol * (Real(1) + abs_real(s))) return true;
      if (abs_real(step) > Real(1)) return false;  // walked off the branch
    }
    return false;
  }

  bool transposed_ = false;
  std::int64_t alpha_ = 1, beta_ = 0, level_ = 0;
  std::vector<std::int64_t> e_, m_;
  std::vector<C> a_;
  C s0_;
};

struct ChartSample {
  std::complex<double> xi, u, z, w, g;
  double residual = 0.0;
};

struct ChartSolution {
  Edge edge;
  std::complex<double> root;
  std::int64_t alpha = 0, beta = 0;
  std::vector<ChartSample> samples;
  double max_residual = 0.0;
};

struct ExponentFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
  double ss_res = 0.0;
  double ss_tot = 0.0;
};

// Least squares y ~ slope*x + intercept. min_resolvable_slope floors
// the total variance at what a line of that slope would generate, so a
// fit to near-constant data (a true exponent of 0) is judged by its
// residuals instead of being penalized for having nothing to explain.
inline ExponentFit fit_line(const std::vector<double>& x,
                            const std::vector<double>& y,
                            double min_resolvable_slope = 0.0) {
  Eigen::MatrixXd A(x.size(), 2);
  Eigen::VectorXd b(y.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    A(static_cast<Eigen::Index>(i), 0) = x[i];
    A(static_cast<Eigen::Index>(i), 1) = 1.0;
    b(static_cast<Eigen::Index>(i)) = y[i];
  }
  Eigen::Vector2d c = A.colPivHouseholderQr().solve(b);
  ExponentFit fit;
  fit.slope = c(0);
  fit.intercept = c(1);
  double xbar = A.col(0).mean();
  double sxx = (A.col(0).array() - xbar).square().sum();
  fit.ss_tot = (b.array() - b.mean()).square().sum();
  fit.ss_res = (A * c - b).array().square().sum();
  double floor = min_resolvable_slope * min_resolvable_slope * sxx;
  double denom = std::max(fit.ss_tot, floor);
  fit.r_squared = denom > 0 ? 1.0 - fit.ss_res / denom : 1.0;
  return fit;
}

// Solve for g(xi, u) at a single point (quad precision inside).
inline std::complex<double> solve_g(const SparsePolynomial& f, const Edge& edge,
                                    std::complex<double> root,
                                    std::complex<double> xi,
                                    std::complex<double> u) {
  ChartModel<QuadComplex> model(f, edge, root);
  auto sol = model.solve(QuadComplex(xi.real(), xi.imag()),
                         QuadComplex(u.real(), u.imag()));
  return {detail::as_double(sol.g.real()), detail::as_double(sol.g.imag())};
}

inline std::pair<std::complex<double>, std::complex<double>> chart_point(
    const SparsePolynomial& f, const Edge& edge, std::complex<double> root,
    std::complex<double> xi, std::complex<double> u) {
  ChartModel<QuadComplex> model(f, edge, root);
  QuadComplex qu(u.real(), u.imag());
  auto sol = model.solve(QuadComplex(xi.real(), xi.imag()), qu);
  auto [z, w] = model.point(qu, sol);
  return {{detail::as_double(z.real()), detail::as_double(z.imag())},
          {detail::as_double(w.real()), detail::as_double(w.imag())}};
}

// Sample grid: nxi values of xi spiraling in the disc of radius
// xi_radius around xi0, nu log-spaced |u| between umin and umax with a
// slowly turning phase.
inline ChartSolution build_chart(const SparsePolynomial& f, const Edge& edge,
                                 std::complex<double> root,
                                 std::complex<double> xi0, int nxi = 10,
                                 int nu = 10, double xi_radius = 0.1,
                                 double umin = 1e-3, double umax = 1e-1) {
  ChartModel<QuadComplex> model(f, edge, root);
  ChartSolution out;
  out.edge = edge;
  out.root = root;
  out.alpha = edge.alpha;
  out.beta = edge.beta;
  for (int i = 0; i < nxi; ++i) {
    double frac = nxi == 1 ? 1.0 : static_cast<double>(i + 1) / nxi;
    double ang = 2.0 * M_PI * i / std::max(nxi, 1);
    std::complex<double> xi =
        xi0 + xi_radius * frac * std::complex<double>(std::cos(ang),
                                                      std::sin(ang));
    QuadComplex qxi(xi.real(), xi.imag());
    for (int j = 0; j < nu; ++j) {
      double t = nu == 1 ? 0.0 : static_cast<double>(j) / (nu - 1);
      double r = umin * std::pow(umax / umin, t);
      double ph = 0.31 + 0.45 * j;
      std::complex<double> u = r * std::complex<double>(std::cos(ph),
                                                        std::sin(ph));
      QuadComplex qu(u.real(), u.imag());
      auto sol = model.solve(qxi, qu);
      auto [z, w] = model.point(qu, sol);
      ChartSample smp;
      smp.xi = xi;
      smp.u = u;
      smp.z = {detail::as_double(z.real()), detail::as_double(z.imag())};
      smp.w = {detail::as_double(w.real()), detail::as_double(w.imag())};
      smp.g = {detail::as_double(sol.g.real()),
               detail::as_double(sol.g.imag())};
      smp.residual = model.residual(qxi, qu, sol);
      out.max_residual = std::max(out.max_residual, smp.residual);
      out.samples.push_back(smp);
    }
  }
  return out;
}

// Least-squares slope of log|det d(z,w)/d(xi,u)| against log|u|; the
// chart pulls dz^dw back to kappa * u^k * (bounded) * dxi^du with
// k = (u0-1)*alpha + (v0-1)*beta - 1, so the slope estimates k.
inline ExponentFit pullback_exponent(const SparsePolynomial& f,
                                     const Edge& edge,
                                     std::complex<double> root,
                                     std::complex<double> xi, int npoints = 12,
                                     double umin = 1e-3, double umax = 1e-1) {
  ChartModel<QuadComplex> model(f, edge, root);
  QuadComplex qxi(xi.real(), xi.imag());
  std::vector<double> lu, ld;
  for (int j = 0; j < npoints; ++j) {
    double t = static_cast<double>(j) / (npoints - 1);
    double r = umin * std::pow(umax / umin, t);
    QuadComplex u(r * std::cos(0.21), r * std::sin(0.21));
    auto J = model.jacobian(qxi, u);
    QuadComplex det = J[0] * J[3] - J[1] * J[2];
    lu.push_back(std::log(r));
    ld.push_back(detail::as_double(log(abs(det))));
  }
  return fit_line(lu, ld, 0.01);
}

}  // namespace newton
