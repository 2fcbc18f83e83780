#pragma once

#include <complex>
#include <string>
#include <vector>

#include "newton/charts.hpp"
#include "newton/sparse_polynomial.hpp"

namespace newton {

struct FlowSample {
  double t = 0.0;
  std::complex<double> z, w;
  double drift = 0.0;  // |f(z,w) - xi| after projection
};

struct EscapeEvent {
  double radius = 0.0;
  double t = 0.0;  // first time max(|z|,|w|) reaches the radius
};

struct FlowTrajectory {
  std::complex<double> xi;
  std::complex<double> direction;
  std::vector<FlowSample> samples;
  std::vector<EscapeEvent> escape_events;
  double max_drift = 0.0;
  double t_end = 0.0;
  bool step_underflow = false;
  std::string note;
};

// Adaptive Dormand-Prince integration of the Hamiltonian field
// (z', w') = direction * (-f_w, f_z), with one Newton projection back
// onto the fiber f = xi per accepted step. Stops at t_max, after the
// largest escape radius, or on step-size underflow (flagged). Internal
// arithmetic is long double: the drift bound must survive excursions
// to |z| ~ 1e5.
FlowTrajectory integrate_flow(const SparsePolynomial& f,
                              std::complex<double> xi,
                              std::complex<double> start_z,
                              std::complex<double> start_w,
                              std::complex<double> direction, double t_max,
                              const std::vector<double>& escape_radii,
                              double rtol = 1e-10, double atol = 1e-12,
                              bool project = true);

// Max |f - xi| over the recorded samples.
double conservation_report(const FlowTrajectory& traj);

struct LocalFlowCheck {
  double slope = 0.0;          // fitted log|du/dt| vs log|u|
  std::int64_t expected = 0;   // (1-u0)*alpha + (1-v0)*beta + 1
  double r_squared = 0.0;
  // relative part of the velocity not explained by pure u-motion;
  // vanishes when the field is tangent to xi = const
  double max_xi_rate = 0.0;
  bool ok = false;
};

// Pushes sgrad f at chart points into (xi, u) coordinates through the
// chart Jacobian and checks the local form: the xi-component vanishes
// (f is conserved) and the u-component scales like u^{-k} with k the
// pole order.
LocalFlowCheck local_coordinate_flow_check(const SparsePolynomial& f,
                                           const Edge& edge,
                                           std::complex<double> root,
                                           std::complex<double> xi,
                                           int npoints = 10,
                                           double umin = 1e-3,
                                           double umax = 1e-1);

}  // namespace newton
