#pragma once

#include <vector>

#include "newton/sparse_polynomial.hpp"
#include "newton/univariate.hpp"

namespace newton {

// Bivariate polynomial viewed as univariate in one "main" variable with
// coefficients in GQ[other]; coefficient list lowest degree first.
struct PolyInVar {
  Variable main = Variable::w;
  std::vector<UnivariatePolynomial> coeffs;

  std::int64_t degree() const {
    return static_cast<std::int64_t>(coeffs.size()) - 1;
  }
  bool is_zero() const { return coeffs.empty(); }
  const UnivariatePolynomial& leading() const { return coeffs.back(); }
  void normalize() {
    while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
  }
};

PolyInVar as_poly_in(const SparsePolynomial& f, Variable main);
SparsePolynomial to_sparse(const PolyInVar& p);

// Determinant of the Sylvester matrix at the true degrees, rows of p
// first. Convention check: Res_y(y-a, y-b) = a-b; Res of a degree-0 p
// against q is p^{deg q}.
GaussianRational sylvester_resultant(const UnivariatePolynomial& p,
                                     const UnivariatePolynomial& q);

// Resultant eliminating `eliminate`; the result is a polynomial in the
// other variable. Throws if both inputs are independent of `eliminate`.
SparsePolynomial resultant(const SparsePolynomial& p,
                           const SparsePolynomial& q, Variable eliminate);

// Exact GCD in GQ[z,w], computed by a primitive PRS in `main`.
// Normalized so the leading coefficient (a poly in the other variable)
// is monic.
SparsePolynomial bivariate_gcd(const SparsePolynomial& p,
                               const SparsePolynomial& q, Variable main);

// Exact quotient p / d (throws if the division is not exact).
SparsePolynomial bivariate_divide_exact(const SparsePolynomial& p,
                                        const SparsePolynomial& d,
                                        Variable main);

}  // namespace newton
