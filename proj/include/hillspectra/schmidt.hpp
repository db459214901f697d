#pragma once

#include <utility>

#include "hillspectra/operator_matrix.hpp"
#include "hillspectra/types.hpp"

namespace hillspectra {

// Two-by-two reduction of a periodic-type truncated operator onto the
// resonant mode pair {n, -n}: lambda = n^2 + z is an eigenvalue of the
// truncated matrix exactly when det(S(z) - (n^2 + z) I_2) = 0, where S is the
// Schur complement onto the pair (basis ordered: mode n first, mode -n
// second).  The returned entries are shifted so the free operator gives zero.
struct ReducedMatrix {
  int n = 0;
  cxd z{};
  cxd alpha11{};     // S_11 - n^2
  cxd alpha22{};     // S_22 - n^2
  cxd beta_plus{};   // row n, column -n
  cxd beta_minus{};  // row -n, column n
  // soft diagnostic: the reduction models the pair faithfully for |z| < n/4
  bool in_validity_disc = true;
};

ReducedMatrix reduce_2x2(const TruncatedOperator& op, int n, cxd z);

// |det(S(z) - (n^2 + z) I_2)|; vanishes exactly at eigenvalue offsets
double characteristic_residual(const ReducedMatrix& red);
double characteristic_residual(const TruncatedOperator& op, int n, cxd z);

// Newton iteration on det(S(z) - (n^2 + z) I_2) = 0 from a seed offset
cxd reduction_root(const TruncatedOperator& op, int n, cxd z0);

// both characteristic roots near a central offset (typically the midpoint of
// an eigenvalue pair): seeds from the frozen-coefficient quadratic, polished
// by reduction_root; first root has the larger real part (ties: imaginary)
std::pair<cxd, cxd> reduction_roots(const TruncatedOperator& op, int n,
                                    cxd z_center);

}  // namespace hillspectra
