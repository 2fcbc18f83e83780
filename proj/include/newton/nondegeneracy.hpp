#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "newton/polygon.hpp"
#include "newton/univariate.hpp"

namespace newton {

// P_Gamma(y): f's coefficients read along the lattice points of an
// edge, c_n = a_{u0 - n*beta, v0 + n*alpha} for n = 0..n_gamma. The
// endpoints are hull vertices, so c_0 != 0 and c_{n_gamma} != 0.
struct EdgePolynomial {
  Edge edge;
  UnivariatePolynomial poly;
};

enum class CertifyMode { full, positive_coordinate_only };
enum class FaceStatus { pass, fail, inconclusive };

struct FaceReport {
  enum class Kind { vertex, edge, segment, whole };
  Kind kind = Kind::vertex;
  std::string descriptor;
  FaceStatus status = FaceStatus::pass;
  std::string witness;  // empty when the face passes
  std::optional<std::complex<double>> witness_value;
};

struct NondegeneracyVerdict {
  bool overall = true;
  CertifyMode mode = CertifyMode::full;
  std::vector<FaceReport> face_reports;
};

// Restriction of f to the face of its Newton polygon maximizing
// <eta, .>; eta = (0,0) returns f itself.
SparsePolynomial truncate(const SparsePolynomial& f, LatticePoint eta);

EdgePolynomial edge_polynomial(const SparsePolynomial& f, const Edge& edge);

// Face-by-face certification. Vertex faces pass automatically (a single
// monomial has no torus zero). An edge face passes iff its edge
// polynomial is square-free: on the face f restricts to
// z^{u0} w^{v0} P_Gamma(y) with y a monomial in z,w that sweeps C\{0}
// on the torus, and since the end coefficients of P_Gamma are nonzero a
// torus zero with vanishing differential is exactly a repeated root of
// P_Gamma. The two-dimensional face (full mode only) is decided by
// elimination: no torus solution of f = f_z = f_w = 0.
// positive_coordinate_only restricts to covectors with at least one
// positive coordinate, which drops the whole-polygon face and any edge
// whose outward normal has no positive coordinate.
NondegeneracyVerdict certify_nondegenerate(const SparsePolynomial& f,
                                           CertifyMode mode);

}  // namespace newton
