#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include "newton/gaussian_rational.hpp"

namespace newton {

struct RootResult {
  std::vector<std::complex<double>> roots;
  bool converged = true;
  double max_residual = 0.0;
};

// Simultaneous (Aberth-Ehrlich) iteration with deterministic starting
// points on a circle. Coefficients lowest degree first, leading
// coefficient nonzero. Residual test is relative to the coefficient
// scale at the root.
inline RootResult polynomial_roots(std::vector<std::complex<double>> c,
                                   double tol = 1e-13, int max_iter = 400) {
  using C = std::complex<double>;
  while (!c.empty() && std::abs(c.back()) == 0.0) c.pop_back();
  if (c.size() <= 1) throw error("root finding needs degree >= 1");

  RootResult out;
  // exact zero roots from trailing zero coefficients
  std::size_t zero_roots = 0;
  while (zero_roots + 1 < c.size() && std::abs(c[zero_roots]) == 0.0)
    ++zero_roots;
  for (std::size_t i = 0; i < zero_roots; ++i) out.roots.push_back(C(0));
  c.erase(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(zero_roots));

  std::size_t n = c.size() - 1;
  if (n == 0) return out;

  double radius = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    radius = std::max(radius, std::pow(std::abs(c[i] / c[n]),
                                       1.0 / static_cast<double>(n - i)));
  radius = 1.0 + 2.0 * radius;

  std::vector<C> z(n);
  const double offset = 0.4;  // keeps starts off the real axis
  for (std::size_t k = 0; k < n; ++k) {
    double ang = 2.0 * M_PI * static_cast<double>(k) /
                     static_cast<double>(n) +
                 offset;
    z[k] = radius * C(std::cos(ang), std::sin(ang));
  }

  auto eval = [&](const C& x, C& p, C& dp, double& scale) {
    p = C(0);
    dp = C(0);
    scale = 0.0;
    double ax = std::abs(x);
    for (std::size_t i = c.size(); i-- > 0;) {
      dp = dp * x + p;
      p = p * x + c[i];
      scale = scale * ax + std::abs(c[i]);
    }
  };

  bool done = false;
  for (int it = 0; it < max_iter && !done; ++it) {
    done = true;
    for (std::size_t k = 0; k < n; ++k) {
      C p, dp;
      double scale;
      eval(z[k], p, dp, scale);
      if (std::abs(p) <= tol * scale) continue;
      C ratio = (dp == C(0)) ? C(1e-16) : p / dp;
      C sum(0);
      for (std::size_t j = 0; j < n; ++j)
        if (j != k) sum += C(1) / (z[k] - z[j]);
      C denom = C(1) - ratio * sum;
      C step = (denom == C(0)) ? ratio : ratio / denom;
      z[k] -= step;
      done = false;
    }
  }

  out.max_residual = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    C p, dp;
    double scale;
    eval(z[k], p, dp, scale);
    double rel = std::abs(p) / (scale > 0 ? scale : 1.0);
    out.max_residual = std::max(out.max_residual, rel);
    out.roots.push_back(z[k]);
  }
  out.converged = out.max_residual <= 1e3 * tol;
  return out;
}

}  // namespace newton
