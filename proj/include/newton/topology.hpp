#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "newton/nondegeneracy.hpp"
#include "newton/polygon.hpp"

namespace newton {

// One point at infinity of the completed fiber: a root of the edge
// polynomial of an off-axis edge. The Hamiltonian field has a pole of
// order k there (a zero of order -k when k < 0), the flat completion
// metric a cone point of total angle 2*pi*(k+1), and the field index is
// -k; k = (u0-1)*alpha + (v0-1)*beta - 1 for any lattice point (u0,v0)
// of the edge.
struct PunctureRecord {
  Edge edge;
  int root_index = 1;  // 1..n_gamma, roots sorted by (re, im)
  std::complex<double> root;
  std::int64_t pole_order = 0;
  std::int64_t cone_angle_over_2pi = 1;
  std::int64_t index = 0;
  std::complex<double> kappa{1.0, 0.0};
  bool kappa_exact_one = true;
};

enum class Completeness {
  incomplete_compact_completion,  // genus >= 1
  complete_plane,                 // genus 0, one puncture
  complete_cylinder,              // genus 0, two punctures
};

struct PickIdentity {
  std::int64_t lhs = 0;  // n_mu - 2S
  std::int64_t rhs = 0;  // 2 - 2B+
  std::int64_t twice_area = 0;
  bool holds = false;
};

struct FiberTopologyReport {
  std::optional<GaussianRational> xi;  // nullopt = generic
  NewtonPolygon polygon;
  int polygon_dimension = 0;
  std::int64_t genus = 0;
  std::vector<PunctureRecord> punctures;
  std::int64_t n_mu = 0;
  Completeness completeness = Completeness::complete_plane;
  std::int64_t arithmetic_genus_value = 0;
  PickIdentity pick;
  bool connectivity_asserted = false;
  bool relaxed_condition_only = false;  // condition (i) holds for P* only
  NondegeneracyVerdict nondegeneracy;
  std::vector<std::string> warnings;
  std::vector<std::string> hypothesis_failures;
  // generic mode: the finitely many xi where an edge polynomial picks
  // up a repeated root or the fiber is singular
  std::vector<std::complex<double>> bad_xi;

  bool hypotheses_ok() const { return hypothesis_failures.empty(); }
};

// Full topological report for the fiber f = xi. Hypotheses (polygon of
// f - xi two-dimensional, nondegenerate in the requested mode,
// condition (i) on the polygon or on P*) are checked and failures
// recorded; the integer invariants are still computed when possible.
FiberTopologyReport analyze_fiber(const SparsePolynomial& f,
                                  std::optional<GaussianRational> xi,
                                  CertifyMode mode = CertifyMode::full);

// 1 - (-1)^dim * B+.
std::int64_t arithmetic_genus(const NewtonPolygon& p);

struct IndexSumCheck {
  bool holds = false;
  std::int64_t lhs = 0;  // sum of puncture indices
  std::int64_t rhs = 0;  // 2 - 2*genus
};

IndexSumCheck index_sum_check(const FiberTopologyReport& report);

// kappa = 1 when (1,1) is not a lattice point of the edge; for the edge
// (2,0)-(0,2) the value is +-(a11^2 - 4*a20*a02)^{-1/2} (principal
// root), sign - for root_index 1 and + for root_index 2.
std::complex<double> compute_kappa(const Edge& edge, const SparsePolynomial& f,
                                   int root_index);

}  // namespace newton
