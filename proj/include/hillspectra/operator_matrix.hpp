#pragma once

#include <vector>

#include "hillspectra/potential.hpp"
#include "hillspectra/types.hpp"

namespace hillspectra {

// dense truncation of -y'' + v y onto the retained Fourier window
struct TruncatedOperator {
  Bc bc;
  int K;
  std::vector<int> indices;
  Matrix matrix;
  bool window_snug = false;  // K < 2 * band limit; convergence may be slow

  bool contains(int k) const;
  int position_of(int k) const;  // throws ModeOutsideWindow
};

// retained index sets: Per+ even |k| <= 2K, Per- odd |k| <= 2K+1,
// Dir 1..2K, Neu 0..2K
std::vector<int> window_indices(Bc bc, int K);

TruncatedOperator build_matrix(const PotentialSpec& p, Bc bc, int K);

// the potential part alone (build_matrix minus diag k^2)
Matrix potential_block(const PotentialSpec& p, Bc bc, int K);

// sqrt on the branch z^{1/2} = |z|^{1/2} e^{i theta/2}, theta in [0, 2pi)
cxd branch_sqrt(cxd z);

// diagonal of K_lambda: entries 1/(lambda - m^2)^{1/2} on that branch
Vector k_lambda(Bc bc, int K, cxd lambda);

struct KvkNorms {
  double norm2;  // spectral norm of K_lambda V K_lambda
  double hs;     // Hilbert-Schmidt norm
};
KvkNorms kvk_norm(const PotentialSpec& p, Bc bc, int K, cxd lambda);

// (lambda I - L)^{-1} by direct dense solve
Matrix resolvent(const TruncatedOperator& op, cxd lambda);

// reciprocal condition estimate that stays sound for exactly singular inputs,
// where Eigen's built-in estimator can report 1 despite a zero pivot
double lu_rcond(const Eigen::PartialPivLU<Matrix>& lu);

}  // namespace hillspectra
