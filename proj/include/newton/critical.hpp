#pragma once

#include <complex>
#include <vector>

#include "newton/sparse_polynomial.hpp"

namespace newton {

// An isolated solution of f_z = f_w = 0 (or a line of solutions when
// one variable is free).
struct CriticalPoint {
  std::complex<double> z;
  std::complex<double> w;
  std::complex<double> value;  // f at the point
  bool free_z = false;         // z arbitrary (z field meaningless)
  bool free_w = false;

  bool meets_torus(double eps = 1e-9) const {
    return (free_z || std::abs(z) > eps) && (free_w || std::abs(w) > eps);
  }
};

struct CriticalSet {
  // true iff f_z and f_w share a nonconstant factor (a whole curve of
  // critical points); f is constant on each such component and those
  // values are recovered by sampling.
  bool positive_dimensional = false;
  std::vector<CriticalPoint> points;
};

// Exact elimination (resultants, bivariate gcd for the shared-factor
// case) followed by numeric refinement. Throws on constant f.
CriticalSet critical_set(const SparsePolynomial& f);

// Values f(z*,w*) over the critical set, de-duplicated within
// `precision`.
std::vector<std::complex<double>> critical_values(const SparsePolynomial& f,
                                                  double precision = 1e-8);

}  // namespace newton
