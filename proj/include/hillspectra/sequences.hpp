#pragma once

#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "hillspectra/pairing.hpp"
#include "hillspectra/potential.hpp"
#include "hillspectra/types.hpp"

namespace hillspectra {

// quantities at or below this size are treated as exact zeros when forming
// ratios and brackets: they sit at the dense eigensolver's noise floor, and
// comparing noise against noise would turn roundoff into verdicts
inline constexpr double kSequenceFloor = 1e-10;
double snap_to_zero(double v);

// the three bracketing inequalities per row, evaluated with the fixed
// constant pairs (1/80, 19) for |gamma|+|delta_neu|, (1/72, 58) for
// |gamma|+|delta_dir|, and (1/5, 9) for |xi|+|gamma|, each against
// |beta+| + |beta-| at z_star; the constants are part of the claims under
// test and are never adjusted
struct SandwichRow {
  int n = 0;
  double couplings = 0.0;     // |beta+| + |beta-| at z_star
  double gap_plus_neu = 0.0;  // |gamma| + |delta_neu|
  double gap_plus_dir = 0.0;  // |gamma| + |delta_dir|
  double xi_plus_gap = 0.0;   // |xi| + |gamma|
  bool neu_lower = false, neu_upper = false;
  bool dir_lower = false, dir_upper = false;
  bool pair_lower = false, pair_upper = false;
  bool all_pass = false;
  // the Neumann and Dirichlet brackets should hold or fail together; a row
  // where exactly one holds indicates a truncation artifact
  bool dir_neu_consistent = true;
};
struct SandwichReport {
  std::vector<SandwichRow> rows;
  int onset = -1;  // first n from which all later rows pass; -1 if none
};
SandwichReport sandwich_report(const SpectralSlate& slate);

// coupling-dominance classification at the offset z_plus = lambda_plus - n^2:
// Case2a when 4|beta+| < |beta-|, Case2b when 4|beta-| < |beta+|, Case1
// otherwise (including the all-zero tie)
enum class GapCase { Case1, Case2a, Case2b };
const char* to_string(GapCase c);
GapCase classify_case(const SlateRow& row);

struct CaseRow {
  int n = 0;
  GapCase label = GapCase::Case1;
  double boundary_ratio = 0.0;     // |w(0)| / |u(0)| of the invariant pair
  bool boundary_ratio_ok = false;  // 1/4 <= ratio <= 4, checked on Case-2 rows
  bool case1_coupling_ok = true;   // |beta+|+|beta-| at z_star <= 2|gamma|
};
CaseRow case_row(const SlateRow& row);
std::vector<CaseRow> case_table(const SpectralSlate& slate);

// ratio diagnostics over rows whose gap is resolved (|gamma| above the
// floor scaled by the disc radius): running sups of |delta|/|gamma| and the
// inf of |beta-|/|beta+|; "bounded" is reported when the sup over the full
// range exceeds the sup over the lower half of the range by at most 5%
struct CriterionRow {
  int n = 0;
  bool gap_resolved = false;
  double neu_ratio = 0.0;  // |delta_neu| / |gamma|
  double dir_ratio = 0.0;  // |delta_dir| / |gamma|
  bool beta_ratio_defined = false;
  double beta_ratio = 0.0;  // |beta-| / |beta+| at z_star
};
struct CriterionReport {
  std::vector<CriterionRow> rows;
  double sup_neu = 0.0, sup_dir = 0.0;
  double inf_beta = std::numeric_limits<double>::infinity();
  bool vacuous = true;         // no resolved gaps in range
  bool inf_ratio_zero = false; // some coupling ratio is exactly zero
  std::string verdict;         // "bounded" | "unbounded trend" | "vacuous"
  double growth_exponent = 0.0;  // fitted when the trend is unbounded
  double tol = kSequenceFloor;
};
CriterionReport riesz_criterion(const SpectralSlate& slate, double tol = 1e-10);

// weighted square-summability and decay-shape diagnosis of a positive
// sequence: partial sums of seq(n)^2 Omega(n)^2 with a head/tail comparison,
// and a least-squares shape fit of log seq(n) against a*log(n) (power),
// c*n (exponential), and c*n^g (stretched); the reported class is one of
//   zero         every point at the noise floor
//   none         no decay across the range (max/min < 4)
//   power        the log(n) model wins
//   exponential  the linear model wins, or a stretched fit with g >= 1
//                (decay at least exponentially fast lands here)
//   stretched    a stretched fit with g < 1 wins
struct DecayReport {
  std::vector<std::pair<int, double>> partial_sums;
  bool sums_converged = false;
  double tail_fraction = 0.0;  // tail sum / head sum
  std::string decay_class;
  double fitted_param = 0.0;  // decay rate (power a, or exponential c)
  double fitted_stretch = 1.0;  // g for the stretched model
  double fit_residual = 0.0;
  bool floor_limited = false;  // most points sit at the noise floor
  int points_fitted = 0;
};
DecayReport decay_classify(const std::vector<std::pair<int, double>>& seq,
                           const Weight& w);

// |gamma_n|, |delta_neu_n|, |delta_dir_n| over the valid rows of a slate
std::vector<std::pair<int, double>> gap_sequence(const SpectralSlate& slate);
std::vector<std::pair<int, double>> neu_deviation_sequence(
    const SpectralSlate& slate);
std::vector<std::pair<int, double>> dir_deviation_sequence(
    const SpectralSlate& slate);

}  // namespace hillspectra
