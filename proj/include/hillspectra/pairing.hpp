#pragma once

#include <map>
#include <string>
#include <vector>

#include "hillspectra/operator_matrix.hpp"
#include "hillspectra/potential.hpp"
#include "hillspectra/projection.hpp"
#include "hillspectra/types.hpp"

namespace hillspectra {

// number of eigenvalues of this spectrum expected in each isolating disc
int expected_disc_count(Bc bc);

// assignment of a computed spectrum to the bounded region below (N + 1/2)^2
// and the isolating discs |lambda - n^2| < r_n for n > N; disc indices n run
// over the parity matching bc for Per+/Per- and over every integer for
// Dir/Neu, up to the top of the index window
struct DiscAssignment {
  Bc bc = Bc::PerPlus;
  int N = 0;
  std::map<int, std::vector<int>> disc_members;  // n -> eigenvalue indices
  std::vector<int> region_members;               // below (N + 1/2)^2
  std::vector<int> unassigned;                   // fit nowhere
  int expected_count = 2;
  std::vector<int> mismatched_discs;  // discs whose count != expected_count
};
DiscAssignment localize(const std::vector<cxd>& eigs, Bc bc, int K, int N,
                        RadiusPolicy policy = RadiusPolicy::FixedQuarter);

// one per-n record of the paired spectra and their derived sequences;
// couplings are evaluated at both the pair midpoint offset z_star and the
// upper-eigenvalue offset z_plus = lambda_plus - n^2
struct SlateRow {
  int n = 0;
  bool valid = false;
  std::string skip_reason;

  cxd lambda_plus{}, lambda_minus{};  // pair near n^2, labeled by larger Re
  cxd mu{}, nu{};                     // Dirichlet / Neumann eigenvalue there
  cxd gamma{};                        // lambda_plus - lambda_minus
  cxd delta_dir{};                    // lambda_plus - mu
  cxd delta_neu{};                    // lambda_plus - nu
  cxd z_star{};                       // (lambda_plus + lambda_minus)/2 - n^2

  cxd beta_plus{}, beta_minus{};        // reduction couplings at z_star
  cxd beta_plus_zp{}, beta_minus_zp{};  // reduction couplings at z_plus
  cxd xi{};                             // invariant-pair coupling
  cxd w0{}, u0{};  // quasi-derivatives of the invariant pair at 0
  cxd a{}, b{};    // Neumann-matched combination coefficients

  double disc_radius = 0.0;
  int count_pair = 0, count_dir = 0, count_neu = 0;
  double char_residual_plus = 0.0;   // |det(S - z)| at z = lambda_plus - n^2
  double char_residual_minus = 0.0;  // ... at z = lambda_minus - n^2
  cxd alpha11{};                     // upper diagonal entry at z_star
  double alpha_asym = 0.0;           // |alpha11 - alpha22| at z_star
  bool in_validity_disc = true;
  bool degenerate = false;  // pair collapsed below the gap noise floor
};

struct SpectralSlate {
  PotentialSpec p;
  int K = 0;
  RadiusPolicy policy = RadiusPolicy::FixedQuarter;
  int n_min = 0, n_max = 0;
  std::vector<SlateRow> rows;  // one per n in [n_min, n_max], ascending
};

// assemble rows for every n in [n_min, n_max]: the eigenvalue pair comes
// from Per+ for even n and Per- for odd n; a disc holding the wrong number
// of eigenvalues marks the row invalid with the reason recorded instead of
// aborting the slate; rows are computed in parallel (HILL_SPECTRA_THREADS
// caps the worker count) against shared read-only eigenvalue lists; the
// invariant-pair contour always uses the quarter radius, while `policy`
// sets the localization radii reported per row
SpectralSlate build_slate(const PotentialSpec& p, int K, int n_min, int n_max,
                          RadiusPolicy policy = RadiusPolicy::FixedQuarter);

}  // namespace hillspectra
