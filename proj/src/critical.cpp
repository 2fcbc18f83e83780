#include "newton/critical.hpp"

#include <algorithm>

#include "newton/resultant.hpp"
#include "newton/roots.hpp"
#include "newton/univariate.hpp"

namespace newton {

namespace {

using C = std::complex<double>;

// f restricted to a fixed z, as a dense complex polynomial in w.
std::vector<C> slice_in_w(const SparsePolynomial& f, C z) {
  std::vector<C> c(static_cast<std::size_t>(std::max<std::int64_t>(
                       f.degree_w() + 1, 1)),
                   C(0));
  for (const auto& [e, a] : f.terms()) {
    C zp(1);
    for (std::int64_t k = 0; k < e.l; ++k) zp *= z;
    c[static_cast<std::size_t>(e.m)] += a.to_complex() * zp;
  }
  while (c.size() > 1 && std::abs(c.back()) < 1e-13) c.pop_back();
  return c;
}

std::vector<C> dense_in_z(const SparsePolynomial& f) {
  return slice_in_w(
      SparsePolynomial([&] {
        SparsePolynomial::TermMap t;
        for (const auto& [e, a] : f.terms()) t[{e.m, e.l}] = a;
        return t;
      }()),
      C(0));
}

// A couple of Newton steps on (f_z, f_w).
void polish(const SparsePolynomial& fz, const SparsePolynomial& fw,
            const SparsePolynomial& fzz, const SparsePolynomial& fzw,
            const SparsePolynomial& fww, C& z, C& w) {
  for (int it = 0; it < 30; ++it) {
    C a = fzz.evaluate(z, w), b = fzw.evaluate(z, w);
    C cc = fzw.evaluate(z, w), d = fww.evaluate(z, w);
    C det = a * d - b * cc;
    if (std::abs(det) < 1e-14) return;
    C r1 = fz.evaluate(z, w), r2 = fw.evaluate(z, w);
    C dz = (d * r1 - b * r2) / det;
    C dw = (a * r2 - cc * r1) / det;
    z -= dz;
    w -= dw;
    if (std::abs(dz) + std::abs(dw) < 1e-15 * (1.0 + std::abs(z) + std::abs(w)))
      break;
  }
}

void push_point(std::vector<CriticalPoint>& pts, CriticalPoint p) {
  for (const auto& q : pts) {
    if (p.free_z != q.free_z || p.free_w != q.free_w) continue;
    double dz = (p.free_z || q.free_z) ? 0.0 : std::abs(p.z - q.z);
    double dw = (p.free_w || q.free_w) ? 0.0 : std::abs(p.w - q.w);
    if (dz + dw < 1e-8) return;
  }
  pts.push_back(std::move(p));
}

// Critical points of a polynomial depending on a single variable.
void univariate_criticals(const SparsePolynomial& f, Variable var,
                          std::vector<CriticalPoint>& out) {
  // f = g(x); critical locus is {g'(x) = 0} x C (the other variable free)
  SparsePolynomial g = f;
  SparsePolynomial d = partial_derivative(g, var);
  if (d.is_zero()) return;
  // exact square-free reduction first: a repeated root of g' would only
  // come out of the numeric solver with ~eps^(1/k) accuracy
  std::vector<GaussianRational> uc(
      static_cast<std::size_t>(
          std::max<std::int64_t>(
              var == Variable::z ? d.degree_z() : d.degree_w(), 0)) +
      1);
  for (const auto& [e, a] : d.terms())
    uc[static_cast<std::size_t>(var == Variable::z ? e.l : e.m)] = a;
  UnivariatePolynomial up(std::move(uc));
  if (up.degree() >= 1) {
    UnivariatePolynomial sq = univariate_gcd(up, up.derivative());
    if (sq.degree() > 0) up = up.divmod(sq).first;
  }
  std::vector<C> dense = up.complex_coeffs();
  if (dense.size() <= 1) return;
  auto rr = polynomial_roots(dense);
  for (C x : rr.roots) {
    CriticalPoint p;
    if (var == Variable::z) {
      p.z = x;
      p.free_w = true;
      p.value = f.evaluate(x, C(0.0));
    } else {
      p.w = x;
      p.free_z = true;
      p.value = f.evaluate(C(0.0), x);
    }
    push_point(out, p);
  }
}

// Isolated common zeros of (p, q) with no shared factor; appended to out.
void isolated_common_zeros(const SparsePolynomial& f, const SparsePolynomial& p,
                           const SparsePolynomial& q,
                           std::vector<CriticalPoint>& out) {
  SparsePolynomial fz = partial_derivative(f, Variable::z);
  SparsePolynomial fw = partial_derivative(f, Variable::w);
  SparsePolynomial fzz = partial_derivative(fz, Variable::z);
  SparsePolynomial fzw = partial_derivative(fz, Variable::w);
  SparsePolynomial fww = partial_derivative(fw, Variable::w);

  auto handle_z_candidates = [&](const std::vector<C>& zs) {
    for (C z0 : zs) {
      // w-candidates from whichever of p,q still depends on w here
      std::vector<C> pw = slice_in_w(p, z0);
      std::vector<C> qw = slice_in_w(q, z0);
      const std::vector<C>* use = nullptr;
      if (pw.size() > 1)
        use = &pw;
      else if (qw.size() > 1)
        use = &qw;
      if (!use) {
        // both constant in w at z0; a solution needs both ~ 0, then w free
        if (std::abs(pw[0]) < 1e-8 && std::abs(qw[0]) < 1e-8) {
          CriticalPoint cp;
          cp.z = z0;
          cp.free_w = true;
          cp.value = f.evaluate(z0, C(0));
          push_point(out, cp);
        }
        continue;
      }
      auto rr = polynomial_roots(*use);
      for (C w0 : rr.roots) {
        C z = z0, w = w0;
        polish(fz, fw, fzz, fzw, fww, z, w);
        if (std::abs(fz.evaluate(z, w)) < 1e-7 &&
            std::abs(fw.evaluate(z, w)) < 1e-7) {
          CriticalPoint cp;
          cp.z = z;
          cp.w = w;
          cp.value = f.evaluate(z, w);
          push_point(out, cp);
        }
      }
    }
  };

  std::int64_t pdw = p.degree_w(), qdw = q.degree_w();
  if (pdw <= 0 && qdw <= 0) {
    // both are polynomials in z only; common zeros need a shared root
    std::vector<C> pz = dense_in_z(p), qz = dense_in_z(q);
    if (pz.size() <= 1 || qz.size() <= 1) return;
    auto rr = polynomial_roots(pz);
    for (C z0 : rr.roots) {
      C qv = 0;
      C zp = 1;
      for (std::size_t i = 0; i < qz.size(); ++i) {
        qv += qz[i] * zp;
        zp *= z0;
      }
      if (std::abs(qv) < 1e-8) {
        CriticalPoint cp;
        cp.z = z0;
        cp.free_w = true;
        cp.value = f.evaluate(z0, C(0));
        push_point(out, cp);
      }
    }
    return;
  }
  if (pdw >= 1 && qdw >= 1) {
    SparsePolynomial res = resultant(p, q, Variable::w);
    if (res.is_zero())
      throw error("internal: resultant vanished after gcd removal");
    std::vector<C> rz = dense_in_z(res);
    if (rz.size() <= 1) return;  // nonzero constant: no common zeros
    handle_z_candidates(polynomial_roots(rz).roots);
    return;
  }
  // exactly one of them is independent of w: its z-roots are the candidates
  const SparsePolynomial& indep = pdw <= 0 ? p : q;
  std::vector<C> rz = dense_in_z(indep);
  if (rz.size() <= 1) return;
  handle_z_candidates(polynomial_roots(rz).roots);
}

}  // namespace

CriticalSet critical_set(const SparsePolynomial& f) {
  SparsePolynomial fz = partial_derivative(f, Variable::z);
  SparsePolynomial fw = partial_derivative(f, Variable::w);
  if (fz.is_zero() && fw.is_zero())
    throw error("critical set of a constant polynomial");

  CriticalSet cs;
  if (fw.is_zero()) {
    univariate_criticals(f, Variable::z, cs.points);
    cs.positive_dimensional = !cs.points.empty();
    return cs;
  }
  if (fz.is_zero()) {
    univariate_criticals(f, Variable::w, cs.points);
    cs.positive_dimensional = !cs.points.empty();
    return cs;
  }

  SparsePolynomial h = bivariate_gcd(fz, fw, Variable::w);
  bool shared = h.degree_z() > 0 || h.degree_w() > 0;
  SparsePolynomial pz = fz, pw = fw;
  if (shared) {
    cs.positive_dimensional = true;
    pz = bivariate_divide_exact(fz, h, Variable::w);
    pw = bivariate_divide_exact(fw, h, Variable::w);
    // f is constant on each component of h = 0 (critical values are
    // finite); sample a few lines z = z0 to pick the values up.
    if (h.degree_w() > 0) {
      for (double z0 : {0.37, 1.21, -0.83}) {
        std::vector<C> hw = slice_in_w(h, C(z0, 0.11 * z0));
        if (hw.size() <= 1) continue;
        auto rr = polynomial_roots(hw);
        for (C w0 : rr.roots) {
          CriticalPoint cp;
          cp.z = C(z0, 0.11 * z0);
          cp.w = w0;
          cp.value = f.evaluate(cp.z, cp.w);
          push_point(cs.points, cp);
        }
      }
    } else {
      // h depends on z only: vertical lines z = root
      std::vector<C> hz = dense_in_z(h);
      if (hz.size() > 1)
        for (C z0 : polynomial_roots(hz).roots) {
          CriticalPoint cp;
          cp.z = z0;
          cp.free_w = true;
          cp.value = f.evaluate(z0, C(0.23));
          push_point(cs.points, cp);
        }
    }
  }
  isolated_common_zeros(f, pz, pw, cs.points);
  return cs;
}

std::vector<std::complex<double>> critical_values(const SparsePolynomial& f,
                                                  double precision) {
  CriticalSet cs = critical_set(f);
  std::vector<std::complex<double>> vals;
  for (const auto& p : cs.points) {
    bool dup = false;
    for (const auto& v : vals)
      if (std::abs(v - p.value) < precision) {
        dup = true;
        break;
      }
    if (!dup) vals.push_back(p.value);
  }
  std::sort(vals.begin(), vals.end(), [](const auto& a, const auto& b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  return vals;
}

}  // namespace newton
