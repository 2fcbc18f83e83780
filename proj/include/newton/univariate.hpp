#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "newton/gaussian_rational.hpp"

namespace newton {

// Dense univariate polynomial over Gaussian rationals, coefficients
// lowest degree first. Leading coefficient nonzero unless zero poly.
class UnivariatePolynomial {
 public:
  UnivariatePolynomial() = default;
  explicit UnivariatePolynomial(std::vector<GaussianRational> coeffs)
      : c_(std::move(coeffs)) {
    normalize();
  }

  static UnivariatePolynomial zero() { return {}; }
  static UnivariatePolynomial constant(const GaussianRational& a) {
    return UnivariatePolynomial({a});
  }

  const std::vector<GaussianRational>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  // degree of the zero polynomial is -1
  std::int64_t degree() const {
    return static_cast<std::int64_t>(c_.size()) - 1;
  }
  GaussianRational coeff(std::size_t k) const {
    return k < c_.size() ? c_[k] : GaussianRational();
  }
  GaussianRational leading() const {
    return c_.empty() ? GaussianRational() : c_.back();
  }

  friend bool operator==(const UnivariatePolynomial& a,
                         const UnivariatePolynomial& b) {
    return a.c_ == b.c_;
  }

  friend UnivariatePolynomial operator+(const UnivariatePolynomial& a,
                                        const UnivariatePolynomial& b) {
    std::vector<GaussianRational> r(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) + b.coeff(i);
    return UnivariatePolynomial(std::move(r));
  }
  friend UnivariatePolynomial operator-(const UnivariatePolynomial& a,
                                        const UnivariatePolynomial& b) {
    std::vector<GaussianRational> r(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) - b.coeff(i);
    return UnivariatePolynomial(std::move(r));
  }
  friend UnivariatePolynomial operator*(const UnivariatePolynomial& a,
                                        const UnivariatePolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<GaussianRational> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j)
        r[i + j] += a.c_[i] * b.c_[j];
    return UnivariatePolynomial(std::move(r));
  }
  friend UnivariatePolynomial operator*(const GaussianRational& s,
                                        const UnivariatePolynomial& p) {
    std::vector<GaussianRational> r = p.c_;
    for (auto& x : r) x *= s;
    return UnivariatePolynomial(std::move(r));
  }

  UnivariatePolynomial derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<GaussianRational> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i)
      r[i - 1] = GaussianRational(static_cast<long>(i)) * c_[i];
    return UnivariatePolynomial(std::move(r));
  }

  UnivariatePolynomial monic() const {
    if (is_zero()) return {};
    return leading().inverse() * (*this);
  }

  // Euclidean division over the field; returns {quotient, remainder}.
  std::pair<UnivariatePolynomial, UnivariatePolynomial> divmod(
      const UnivariatePolynomial& d) const {
    if (d.is_zero()) throw error("univariate division by zero polynomial");
    UnivariatePolynomial r = *this;
    std::vector<GaussianRational> q;
    if (degree() >= d.degree())
      q.resize(static_cast<std::size_t>(degree() - d.degree()) + 1);
    GaussianRational lead_inv = d.leading().inverse();
    while (!r.is_zero() && r.degree() >= d.degree()) {
      std::int64_t k = r.degree() - d.degree();
      GaussianRational f = r.leading() * lead_inv;
      q[static_cast<std::size_t>(k)] = f;
      std::vector<GaussianRational> rc = r.c_;
      for (std::size_t i = 0; i < d.c_.size(); ++i)
        rc[i + static_cast<std::size_t>(k)] -= f * d.c_[i];
      r = UnivariatePolynomial(std::move(rc));
    }
    return {UnivariatePolynomial(std::move(q)), r};
  }

  template <class C>
  C evaluate(const C& y) const {
    C r{};
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
      r = r * y + C{it->re.get_d(), it->im.get_d()};
    return r;
  }

  std::vector<std::complex<double>> complex_coeffs() const {
    std::vector<std::complex<double>> r;
    r.reserve(c_.size());
    for (const auto& x : c_) r.push_back(x.to_complex());
    return r;
  }

 private:
  void normalize() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  std::vector<GaussianRational> c_;
};

// Monic exact GCD over the Gaussian-rational field.
inline UnivariatePolynomial univariate_gcd(UnivariatePolynomial p,
                                           UnivariatePolynomial q) {
  if (p.is_zero() && q.is_zero())
    throw error("gcd of two zero polynomials is undefined");
  while (!q.is_zero()) {
    auto [quot, rem] = p.divmod(q);
    p = std::move(q);
    q = std::move(rem);
  }
  return p.monic();
}

// true iff gcd(p, p') is constant, i.e. p has no repeated root.
inline bool is_square_free(const UnivariatePolynomial& p) {
  if (p.is_zero()) throw error("square-free test on the zero polynomial");
  if (p.degree() == 0) return true;
  return univariate_gcd(p, p.derivative()).degree() == 0;
}

}  // namespace newton
