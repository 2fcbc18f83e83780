#include "newton/resultant.hpp"

namespace newton {

namespace {

UnivariatePolynomial univ_divide_exact(const UnivariatePolynomial& a,
                                       const UnivariatePolynomial& b) {
  auto [q, r] = a.divmod(b);
  if (!r.is_zero()) throw error("inexact univariate division");
  return q;
}

UnivariatePolynomial content(const PolyInVar& p) {
  UnivariatePolynomial g;
  for (const auto& c : p.coeffs) {
    if (c.is_zero()) continue;
    g = g.is_zero() ? c.monic() : univariate_gcd(g, c);
    if (g.degree() == 0) break;
  }
  return g.is_zero() ? UnivariatePolynomial() : g;
}

PolyInVar primitive_part(const PolyInVar& p) {
  if (p.is_zero()) return p;
  UnivariatePolynomial c = content(p);
  PolyInVar r{p.main, {}};
  r.coeffs.reserve(p.coeffs.size());
  for (const auto& x : p.coeffs)
    r.coeffs.push_back(x.is_zero() ? x : univ_divide_exact(x, c));
  return r;
}

// lc(d)^(deg p - deg d + 1) * p = quo * d + rem; returns {quo, rem}.
// Division-free schoolbook pseudo-division.
std::pair<PolyInVar, PolyInVar> pseudo_divmod(PolyInVar p,
                                              const PolyInVar& d) {
  if (d.is_zero()) throw error("pseudo-division by zero");
  std::int64_t dp = p.degree(), dd = d.degree();
  PolyInVar quo{p.main, {}};
  if (dp < dd) return {quo, p};
  quo.coeffs.resize(static_cast<std::size_t>(dp - dd) + 1);
  const UnivariatePolynomial lc = d.leading();
  std::int64_t e = dp - dd + 1;
  while (!p.is_zero() && p.degree() >= dd) {
    std::int64_t k = p.degree() - dd;
    UnivariatePolynomial top = p.leading();
    for (auto& x : quo.coeffs) x = lc * x;
    quo.coeffs[static_cast<std::size_t>(k)] =
        quo.coeffs[static_cast<std::size_t>(k)] + top;
    for (auto& x : p.coeffs) x = lc * x;
    for (std::size_t i = 0; i < d.coeffs.size(); ++i) {
      std::size_t j = i + static_cast<std::size_t>(k);
      p.coeffs[j] = p.coeffs[j] - top * d.coeffs[i];
    }
    p.normalize();
    --e;
  }
  for (std::int64_t t = 0; t < e; ++t) {
    for (auto& x : quo.coeffs) x = lc * x;
    for (auto& x : p.coeffs) x = lc * x;
  }
  return {quo, p};
}

}  // namespace

PolyInVar as_poly_in(const SparsePolynomial& f, Variable main) {
  PolyInVar p{main, {}};
  for (const auto& [e, c] : f.terms()) {
    std::int64_t deg_main = main == Variable::w ? e.m : e.l;
    std::int64_t deg_other = main == Variable::w ? e.l : e.m;
    if (static_cast<std::int64_t>(p.coeffs.size()) <= deg_main)
      p.coeffs.resize(static_cast<std::size_t>(deg_main) + 1);
    auto& uc = p.coeffs[static_cast<std::size_t>(deg_main)];
    std::vector<GaussianRational> cs = uc.coeffs();
    if (static_cast<std::int64_t>(cs.size()) <= deg_other)
      cs.resize(static_cast<std::size_t>(deg_other) + 1);
    cs[static_cast<std::size_t>(deg_other)] = c;
    uc = UnivariatePolynomial(std::move(cs));
  }
  p.normalize();
  return p;
}

SparsePolynomial to_sparse(const PolyInVar& p) {
  SparsePolynomial f;
  for (std::size_t i = 0; i < p.coeffs.size(); ++i)
    for (std::size_t j = 0; j < p.coeffs[i].coeffs().size(); ++j) {
      const GaussianRational& c = p.coeffs[i].coeffs()[j];
      if (c.is_zero()) continue;
      LatticeExponent e = p.main == Variable::w
                              ? LatticeExponent{static_cast<std::int64_t>(j),
                                                static_cast<std::int64_t>(i)}
                              : LatticeExponent{static_cast<std::int64_t>(i),
                                                static_cast<std::int64_t>(j)};
      f.set_coeff(e, c);
    }
  return f;
}

GaussianRational sylvester_resultant(const UnivariatePolynomial& p,
                                     const UnivariatePolynomial& q) {
  if (p.is_zero() || q.is_zero())
    throw error("resultant with zero polynomial");
  std::int64_t m = p.degree(), n = q.degree();
  if (m == 0) {
    GaussianRational r(1);
    for (std::int64_t i = 0; i < n; ++i) r *= p.coeff(0);
    return r;
  }
  if (n == 0) {
    GaussianRational r(1);
    for (std::int64_t i = 0; i < m; ++i) r *= q.coeff(0);
    return r;
  }
  std::size_t dim = static_cast<std::size_t>(m + n);
  std::vector<std::vector<GaussianRational>> a(
      dim, std::vector<GaussianRational>(dim));
  for (std::int64_t r = 0; r < n; ++r)  // p rows first
    for (std::int64_t k = 0; k <= m; ++k)
      a[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + k)] =
          p.coeff(static_cast<std::size_t>(m - k));
  for (std::int64_t r = 0; r < m; ++r)
    for (std::int64_t k = 0; k <= n; ++k)
      a[static_cast<std::size_t>(n + r)][static_cast<std::size_t>(r + k)] =
          q.coeff(static_cast<std::size_t>(n - k));
  // Gaussian elimination over the field
  GaussianRational det(1);
  for (std::size_t col = 0; col < dim; ++col) {
    std::size_t piv = col;
    while (piv < dim && a[piv][col].is_zero()) ++piv;
    if (piv == dim) return GaussianRational(0);
    if (piv != col) {
      std::swap(a[piv], a[col]);
      det = -det;
    }
    det *= a[col][col];
    GaussianRational inv = a[col][col].inverse();
    for (std::size_t r = col + 1; r < dim; ++r) {
      if (a[r][col].is_zero()) continue;
      GaussianRational f = a[r][col] * inv;
      for (std::size_t c = col; c < dim; ++c) a[r][c] -= f * a[col][c];
    }
  }
  return det;
}

SparsePolynomial resultant(const SparsePolynomial& p,
                           const SparsePolynomial& q, Variable eliminate) {
  if (p.is_zero() || q.is_zero())
    throw error("resultant with zero polynomial");
  PolyInVar a = as_poly_in(p, eliminate);
  PolyInVar b = as_poly_in(q, eliminate);
  std::int64_t m = a.degree(), n = b.degree();
  if (m <= 0 && n <= 0)
    throw error("resultant: both inputs independent of eliminated variable");
  auto pow_univ = [](const UnivariatePolynomial& u, std::int64_t k) {
    UnivariatePolynomial r = UnivariatePolynomial::constant(GaussianRational(1));
    for (std::int64_t i = 0; i < k; ++i) r = r * u;
    return r;
  };
  Variable other = eliminate == Variable::w ? Variable::z : Variable::w;
  auto lift = [&](const UnivariatePolynomial& u) {
    PolyInVar pv{eliminate, {u}};
    return to_sparse(pv);
  };
  if (m == 0) return lift(pow_univ(a.coeffs[0], n));
  if (n == 0) return lift(pow_univ(b.coeffs[0], m));
  (void)other;

  // Sylvester matrix with GQ[other] entries; fraction-free Bareiss.
  std::size_t dim = static_cast<std::size_t>(m + n);
  std::vector<std::vector<UnivariatePolynomial>> s(
      dim, std::vector<UnivariatePolynomial>(dim));
  auto coeff_of = [](const PolyInVar& pv, std::int64_t k) {
    return (k >= 0 && k <= pv.degree())
               ? pv.coeffs[static_cast<std::size_t>(k)]
               : UnivariatePolynomial();
  };
  for (std::int64_t r = 0; r < n; ++r)
    for (std::int64_t k = 0; k <= m; ++k)
      s[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + k)] =
          coeff_of(a, m - k);
  for (std::int64_t r = 0; r < m; ++r)
    for (std::int64_t k = 0; k <= n; ++k)
      s[static_cast<std::size_t>(n + r)][static_cast<std::size_t>(r + k)] =
          coeff_of(b, n - k);

  int sign = 1;
  UnivariatePolynomial prev = UnivariatePolynomial::constant(GaussianRational(1));
  for (std::size_t col = 0; col + 1 < dim; ++col) {
    std::size_t piv = col;
    while (piv < dim && s[piv][col].is_zero()) ++piv;
    if (piv == dim) return SparsePolynomial();  // singular: resultant 0
    if (piv != col) {
      std::swap(s[piv], s[col]);
      sign = -sign;
    }
    for (std::size_t r = col + 1; r < dim; ++r) {
      for (std::size_t c = col + 1; c < dim; ++c) {
        UnivariatePolynomial num = s[col][col] * s[r][c] - s[r][col] * s[col][c];
        s[r][c] = univ_divide_exact(num, prev);
      }
      s[r][col] = UnivariatePolynomial();
    }
    prev = s[col][col];
  }
  UnivariatePolynomial det = s[dim - 1][dim - 1];
  if (sign < 0) det = GaussianRational(-1) * det;
  PolyInVar out{eliminate, {det}};
  return to_sparse(out);
}

SparsePolynomial bivariate_gcd(const SparsePolynomial& p,
                               const SparsePolynomial& q, Variable main) {
  if (p.is_zero()) return q;
  if (q.is_zero()) return p;
  PolyInVar a = as_poly_in(p, main);
  PolyInVar b = as_poly_in(q, main);
  if (a.degree() < b.degree()) std::swap(a, b);
  UnivariatePolynomial cont =
      univariate_gcd(content(a), content(b));
  a = primitive_part(a);
  b = primitive_part(b);
  while (!b.is_zero()) {
    auto [quo, rem] = pseudo_divmod(a, b);
    (void)quo;
    a = b;
    b = rem.is_zero() ? rem : primitive_part(rem);
    b.normalize();
  }
  // normalize: monic leading coefficient
  UnivariatePolynomial lead = a.leading();
  GaussianRational s = lead.leading().inverse();
  for (auto& x : a.coeffs) x = s * x;
  for (auto& x : a.coeffs)
    x = cont * x;
  return to_sparse(a);
}

SparsePolynomial bivariate_divide_exact(const SparsePolynomial& p,
                                        const SparsePolynomial& d,
                                        Variable main) {
  PolyInVar a = as_poly_in(p, main);
  PolyInVar b = as_poly_in(d, main);
  if (b.is_zero()) throw error("division by zero polynomial");
  std::int64_t delta = a.degree() - b.degree();
  if (delta < 0) throw error("inexact bivariate division");
  auto [quo, rem] = pseudo_divmod(a, b);
  if (!rem.is_zero()) throw error("inexact bivariate division");
  // quo = lc(b)^(delta+1) * (p/d); strip the factor
  UnivariatePolynomial scale = UnivariatePolynomial::constant(GaussianRational(1));
  for (std::int64_t i = 0; i <= delta; ++i) scale = scale * b.leading();
  for (auto& x : quo.coeffs)
    x = x.is_zero() ? x : univ_divide_exact(x, scale);
  return to_sparse(quo);
}

}  // namespace newton
