#pragma once

#include <mutex>
#include <unordered_map>
#include <vector>

#include "hillspectra/potential.hpp"
#include "hillspectra/types.hpp"

namespace hillspectra {

// propagator of the first-order system in (y, u = y' - Qy):
//   y' = Qy + u,  u' = -(lambda + Q^2) y - Qu
struct MonodromyResult {
  cxd lambda;
  Eigen::Matrix2cd M;    // fundamental solution at x = pi, M(0) = I
  Eigen::Matrix2cd dM;   // d/dlambda
  Eigen::Matrix2cd d2M;  // d^2/dlambda^2
  cxd discriminant() const { return M.trace(); }
};

MonodromyResult monodromy(const PotentialSpec& p, cxd lambda, int steps);

// shooting/monodromy oracle, independent of the Fourier window; with
// exact_comb it uses the unbanded step antiderivative of a delta comb,
// making it independent of the band limit as well
class FloquetOracle {
 public:
  explicit FloquetOracle(const PotentialSpec& p, bool exact_comb = false);

  MonodromyResult monodromy_at(cxd lambda) const;

  // roots of Delta -+ 2 (Per), M12 (Dir), M21 (Neu) in a real window
  std::vector<double> spectrum_in(Bc bc, double lo, double hi,
                                  double tol = 1e-9) const;

  // the periodic/antiperiodic pair in the disc around n^2 (bc by parity)
  struct PairResult {
    double lambda_plus;
    double lambda_minus;
    double lambda_hat;    // extremum of the discriminant
    double half_width;    // reported |lambda_plus - lambda_hat|
    bool split_resolved;  // false when the gap is below the noise floor
  };
  PairResult periodic_pair_near(int n) const;

  double dirichlet_near(int n) const;  // root of M12 near n^2
  double neumann_near(int n) const;    // root of M21 near n^2

  bool exact_mode() const { return exact_; }
  int steps_for(cxd lambda) const;

 private:
  MonodromyResult comb_monodromy(cxd lambda) const;
  MonodromyResult stepped_monodromy(cxd lambda) const;
  const std::vector<cxd>& q_samples(int steps) const;
  // Newton iteration on the scalar component picked by `pick`
  double refine_root(Bc bc, double seed) const;

  PotentialSpec p_;
  bool exact_;
  double comb_s_ = 0.0, comb_x0_ = 0.0, q_at_zero_ = 0.0;
  mutable std::mutex cache_mutex_;
  mutable std::unordered_map<int, std::vector<cxd>> sample_cache_;
};

}  // namespace hillspectra
