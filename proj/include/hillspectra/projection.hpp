#pragma once

#include <vector>

#include "hillspectra/eigensolve.hpp"
#include "hillspectra/operator_matrix.hpp"
#include "hillspectra/potential.hpp"
#include "hillspectra/types.hpp"

namespace hillspectra {

// radius of the isolating disc around n^2
enum class RadiusPolicy { FixedQuarter, Shrinking };
double disc_radius(int n, RadiusPolicy policy);

// spectral projection onto the eigenvalues enclosed by the circle of radius r
// around n^2, by trapezoidal contour quadrature of the resolvent; the node
// count doubles (reusing computed nodes) until the matrix change drops to
// 1e-9, starting from start_nodes
struct ContourProjection {
  Matrix p;
  int nodes = 0;
  bool converged = false;
  double idempotency_defect = 0.0;  // ||P^2 - P||_F
  cxd trace{};
};
ContourProjection projection(const TruncatedOperator& op, int n, double r,
                             int start_nodes = 64,
                             const std::vector<cxd>* eigenvalue_hint = nullptr);

// derivative-coefficient map between orthonormal function frames
Matrix derivative_map(Bc bc, int K);

// coordinate projection onto the free eigenspace for the disc at n^2
Matrix coordinate_projection(Bc bc, int K, int n);

struct ProjectionReport {
  int n = 0;
  double norm_p_diff = 0.0;   // ||P - P0||
  double norm_dp_diff = 0.0;  // ||D (P - P0)||
  int nodes = 0;
  bool converged = false;
};
ProjectionReport projection_norms(const PotentialSpec& p, Bc bc, int K, int n,
                                  RadiusPolicy policy = RadiusPolicy::FixedQuarter);

// orthonormal basis {f, phi} of the rank-two invariant subspace for the
// eigenvalue pair near n^2, with A f = lambda_plus f and
// A phi = (lambda_plus - gamma) phi + xi f
struct InvariantPair {
  int n = 0;
  Bc bc = Bc::PerPlus;
  int K = 0;
  Vector f, phi;
  cxd lambda_plus{}, lambda_minus{}, gamma{}, xi{};
  cxd w0{}, u0{};  // quasi-derivatives (f' - Qf)(0), (phi' - Q phi)(0)
  cxd f_at_0{}, phi_at_0{}, df_at_0{}, dphi_at_0{};
  // boundary data of the free-projection parts P0 f, P0 phi
  cxd f0_at_0{}, phi0_at_0{}, df0_at_0{}, dphi0_at_0{};
  bool degenerate = false;  // eigenvalue pair collapsed; phi is a Schur vector
};
InvariantPair invariant_pair(const TruncatedOperator& op,
                             const PotentialSpec& p, int n,
                             const std::vector<cxd>* eigenvalue_hint = nullptr);

// unit vector G in the invariant subspace whose quasi-derivative at 0
// vanishes: G = a f + b phi with a = u(0)/norm, b = -w(0)/norm
struct MatchedVector {
  Vector g_vec;
  cxd a{}, b{};
  cxd value_at_0{};        // G(0)
  cxd quasi_deriv_at_0{};  // (G' - QG)(0), zero by construction
  cxd free_value_at_0{};   // (P0 G)(0)
  cxd free_deriv_at_0{};   // (P0 G)'(0)
};
MatchedVector neumann_matched_vector(const InvariantPair& pair);

// residual of the identity <G, conj(g)> delta_neu = b <phi, conj(g)> gamma
//                                                 - b <f, conj(g)> xi
// where g is the unit Neumann eigenvector for nu_n, phase-fixed so the
// overlap <G, conj(g)> is nonnegative real
struct DeviationIdentity {
  double residual = 0.0;
  double overlap = 0.0;  // <G, conj(g)> after phase fixing
};
DeviationIdentity deviation_identity_residual(const InvariantPair& pair,
                                              const MatchedVector& mv,
                                              cxd delta_neu,
                                              const Vector& neumann_vec);

// shared read-only inputs for per-n projection reports on one potential
struct ProjectionContext {
  PotentialSpec p;
  int K = 0;
  TruncatedOperator op_plus, op_minus, op_neu;
  std::vector<cxd> eig_plus, eig_minus;
  Eigensystem neu_system;
};
ProjectionContext make_projection_context(const PotentialSpec& p, int K);

// one row of the per-n projection diagnostics (the `projections` output)
struct ProjectionRow {
  int n = 0;
  double norm_p_diff = 0.0;
  double norm_dp_diff = 0.0;
  double norm_dp_diff_over_n = 0.0;
  double boundary_value_diff = 0.0;  // |G(0) - G0(0)|
  double boundary_deriv_diff_over_n = 0.0;  // |(G'-QG)(0) - G0'(0)| / n
  double overlap = 0.0;
  double identity_residual = 0.0;
  cxd delta_neu{};
  bool degenerate = false;
};
ProjectionRow projection_row(const ProjectionContext& ctx, int n,
                             RadiusPolicy policy = RadiusPolicy::FixedQuarter);

}  // namespace hillspectra
