#pragma once

#include <complex>
#include <map>
#include <string>
#include <vector>

#include "newton/gaussian_rational.hpp"
#include "newton/lattice.hpp"

namespace newton {

// Sparse bivariate polynomial f(z,w) = sum a_{l,m} z^l w^m over Gaussian
// rationals. Invariant: no stored coefficient is zero; the zero
// polynomial is the empty map.
class SparsePolynomial {
 public:
  using TermMap = std::map<LatticeExponent, GaussianRational>;

  SparsePolynomial() = default;
  explicit SparsePolynomial(TermMap terms) : terms_(std::move(terms)) {
    prune();
  }
  static SparsePolynomial constant(const GaussianRational& c) {
    SparsePolynomial p;
    p.set_coeff({0, 0}, c);
    return p;
  }
  static SparsePolynomial monomial(LatticeExponent e,
                                   const GaussianRational& c) {
    SparsePolynomial p;
    p.set_coeff(e, c);
    return p;
  }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  GaussianRational coeff(LatticeExponent e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? GaussianRational() : it->second;
  }

  void set_coeff(LatticeExponent e, const GaussianRational& c) {
    if (c.is_zero())
      terms_.erase(e);
    else
      terms_[e] = c;
  }

  void add_term(LatticeExponent e, const GaussianRational& c) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      if (!c.is_zero()) terms_.emplace(e, c);
      return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }

  SparsePolynomial& operator+=(const SparsePolynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  SparsePolynomial& operator-=(const SparsePolynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }

  friend SparsePolynomial operator+(SparsePolynomial a,
                                    const SparsePolynomial& b) {
    return a += b;
  }
  friend SparsePolynomial operator-(SparsePolynomial a,
                                    const SparsePolynomial& b) {
    return a -= b;
  }
  friend SparsePolynomial operator*(const SparsePolynomial& a,
                                    const SparsePolynomial& b) {
    SparsePolynomial r;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_)
        r.add_term({ea.l + eb.l, ea.m + eb.m}, ca * cb);
    return r;
  }
  friend SparsePolynomial operator*(const GaussianRational& c,
                                    const SparsePolynomial& p) {
    SparsePolynomial r;
    for (const auto& [e, a] : p.terms_) r.add_term(e, c * a);
    return r;
  }
  friend SparsePolynomial operator-(const SparsePolynomial& p) {
    return GaussianRational(-1) * p;
  }

  SparsePolynomial pow(unsigned n) const {
    SparsePolynomial r = constant(GaussianRational(1));
    for (unsigned i = 0; i < n; ++i) r = r * (*this);
    return r;
  }

  friend bool operator==(const SparsePolynomial& a, const SparsePolynomial& b) {
    return a.terms_ == b.terms_;
  }

  std::int64_t degree_z() const {
    std::int64_t d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e.l);
    return d;
  }
  std::int64_t degree_w() const {
    std::int64_t d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e.m);
    return d;
  }

  std::vector<LatticeExponent> support() const {
    std::vector<LatticeExponent> s;
    s.reserve(terms_.size());
    for (const auto& [e, c] : terms_) s.push_back(e);
    return s;
  }

  // Floating evaluation, Horner-grouped per variable: the terms are
  // grouped by l and each group is a Horner chain in w, then the groups
  // form a Horner chain in z.
  template <class C>
  C evaluate(const C& z, const C& w) const {
    // groups keyed by descending l
    C result{};
    std::int64_t prev_l = -1;
    bool first = true;
    // iterate in descending l, descending m
    for (auto it = terms_.rbegin(); it != terms_.rend();) {
      std::int64_t l = it->first.l;
      // inner Horner over m for this l
      C inner{};
      std::int64_t prev_m = -1;
      bool inner_first = true;
      while (it != terms_.rend() && it->first.l == l) {
        std::int64_t m = it->first.m;
        C c{it->second.re.get_d(), it->second.im.get_d()};
        if (inner_first) {
          inner = c;
          inner_first = false;
        } else {
          C p = C(1);
          for (std::int64_t k = 0; k < prev_m - m; ++k) p *= w;
          inner = inner * p + c;
        }
        prev_m = m;
        ++it;
      }
      for (std::int64_t k = 0; k < prev_m; ++k) inner *= w;
      if (first) {
        result = inner;
        first = false;
      } else {
        C p = C(1);
        for (std::int64_t k = 0; k < prev_l - l; ++k) p *= z;
        result = result * p + inner;
      }
      prev_l = l;
    }
    if (first) return C{};
    C p = C(1);
    for (std::int64_t k = 0; k < prev_l; ++k) p *= z;
    return result * p;
  }

  // Exact evaluation at a Gaussian-rational point.
  GaussianRational evaluate_exact(const GaussianRational& z,
                                  const GaussianRational& w) const {
    GaussianRational r;
    for (const auto& [e, c] : terms_) {
      GaussianRational t = c;
      for (std::int64_t k = 0; k < e.l; ++k) t *= z;
      for (std::int64_t k = 0; k < e.m; ++k) t *= w;
      r += t;
    }
    return r;
  }

 private:
  void prune() {
    for (auto it = terms_.begin(); it != terms_.end();)
      it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
  }

  TermMap terms_;
};

enum class Variable { z, w };

// Exact formal partial derivative.
inline SparsePolynomial partial_derivative(const SparsePolynomial& f,
                                           Variable v) {
  SparsePolynomial r;
  for (const auto& [e, c] : f.terms()) {
    if (v == Variable::z) {
      if (e.l > 0) r.add_term({e.l - 1, e.m}, GaussianRational(e.l) * c);
    } else {
      if (e.m > 0) r.add_term({e.l, e.m - 1}, GaussianRational(e.m) * c);
    }
  }
  return r;
}

}  // namespace newton
