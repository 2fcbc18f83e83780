#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace newton {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Complex number with exact rational real and imaginary parts. The
// coefficient field of everything that claims a certificate.
struct GaussianRational {
  mpq_class re;
  mpq_class im;

  GaussianRational() : re(0), im(0) {}
  GaussianRational(long r) : re(r), im(0) {}
  GaussianRational(const mpq_class& r) : re(r), im(0) { canonicalize(); }
  GaussianRational(const mpq_class& r, const mpq_class& i) : re(r), im(i) {
    canonicalize();
  }
  GaussianRational(long rn, long rd, long in, long id)
      : re(rn, rd), im(in, id) {
    canonicalize();
  }

  void canonicalize() {
    re.canonicalize();
    im.canonicalize();
  }

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }

  GaussianRational conj() const { return {re, mpq_class(-im)}; }
  // |x|^2 as an exact rational.
  mpq_class norm() const { return re * re + im * im; }

  GaussianRational operator-() const {
    return {mpq_class(-re), mpq_class(-im)};
  }

  GaussianRational& operator+=(const GaussianRational& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) {
    mpq_class r = re * o.re - im * o.im;
    mpq_class i = re * o.im + im * o.re;
    re = r;
    im = i;
    return *this;
  }

  friend GaussianRational operator+(GaussianRational a,
                                    const GaussianRational& b) {
    return a += b;
  }
  friend GaussianRational operator-(GaussianRational a,
                                    const GaussianRational& b) {
    return a -= b;
  }
  friend GaussianRational operator*(GaussianRational a,
                                    const GaussianRational& b) {
    return a *= b;
  }

  GaussianRational inverse() const {
    if (is_zero()) throw error("division by zero GaussianRational");
    mpq_class n = norm();
    return {mpq_class(re / n), mpq_class(-im / n)};
  }

  friend GaussianRational operator/(const GaussianRational& a,
                                    const GaussianRational& b) {
    return a * b.inverse();
  }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) {
    return !(a == b);
  }

  std::complex<double> to_complex() const {
    return {re.get_d(), im.get_d()};
  }

  template <class Real>
  std::complex<Real> to_complex_as() const {
    return {static_cast<Real>(re.get_d()), static_cast<Real>(im.get_d())};
  }
};

// Renders an exact rational, "p" or "p/q".
inline std::string to_string(const mpq_class& q) {
  return q.get_str();
}

// Renders in the form accepted by the polynomial grammar: "a", "bi",
// or "(a+bi)" / "(a-bi)".
inline std::string to_string(const GaussianRational& x) {
  if (x.im == 0) return to_string(x.re);
  if (x.re == 0) return to_string(x.im) + "i";
  std::string s = "(" + to_string(x.re);
  if (x.im > 0)
    s += "+" + to_string(x.im) + "i";
  else
    s += "-" + to_string(mpq_class(-x.im)) + "i";
  return s + ")";
}

}  // namespace newton
