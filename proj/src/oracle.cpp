#include "hillspectra/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace hillspectra {

namespace {

using Eigen::Matrix2cd;

const cxd I(0.0, 1.0);

struct State {
  Matrix2cd M, dM, d2M;
};

// system matrix A(x) = [[Q, 1], [-(lambda + Q^2), -Q]]
inline Matrix2cd system_matrix(cxd q, cxd lambda) {
  Matrix2cd a;
  a << q, cxd(1.0, 0.0), -(lambda + q * q), -q;
  return a;
}

// d/dlambda of the system matrix applied to X: only row 2 sees -X_row1
inline Matrix2cd shift_rows(const Matrix2cd& x) {
  Matrix2cd r;
  r << cxd(0.0, 0.0), cxd(0.0, 0.0), -x(0, 0), -x(0, 1);
  return r;
}

struct Slope {
  Matrix2cd M, dM, d2M;
};

inline Slope slope(const Matrix2cd& a, const State& s) {
  Slope k;
  k.M = a * s.M;
  k.dM = a * s.dM + shift_rows(s.M);
  k.d2M = a * s.d2M + 2.0 * shift_rows(s.dM);
  return k;
}

inline State advance(const State& s, const Slope& k, double w) {
  State r;
  r.M = s.M + w * k.M;
  r.dM = s.dM + w * k.dM;
  r.d2M = s.d2M + w * k.d2M;
  return r;
}

MonodromyResult integrate(const std::vector<cxd>& samples, cxd lambda,
                          int steps) {
  double h = pi / steps;
  State s{Matrix2cd::Identity(), Matrix2cd::Zero(), Matrix2cd::Zero()};
  for (int j = 0; j < steps; ++j) {
    Matrix2cd a0 = system_matrix(samples[2 * j], lambda);
    Matrix2cd am = system_matrix(samples[2 * j + 1], lambda);
    Matrix2cd a1 = system_matrix(samples[2 * j + 2], lambda);
    Slope k1 = slope(a0, s);
    Slope k2 = slope(am, advance(s, k1, h / 2.0));
    Slope k3 = slope(am, advance(s, k2, h / 2.0));
    Slope k4 = slope(a1, advance(s, k3, h));
    s.M += (h / 6.0) * (k1.M + 2.0 * k2.M + 2.0 * k3.M + k4.M);
    s.dM += (h / 6.0) * (k1.dM + 2.0 * k2.dM + 2.0 * k3.dM + k4.dM);
    s.d2M += (h / 6.0) * (k1.d2M + 2.0 * k2.d2M + 2.0 * k3.d2M + k4.d2M);
  }
  MonodromyResult out;
  out.lambda = lambda;
  out.M = s.M;
  out.dM = s.dM;
  out.d2M = s.d2M;
  if (!out.M.allFinite())
    throw Error(Errc::StepFailure, "monodromy integration produced NaN/Inf");
  return out;
}

std::vector<cxd> sample_q(const PotentialSpec& p, int steps) {
  std::vector<cxd> samples(2 * steps + 1, cxd(0.0, 0.0));
  double h2 = pi / (2.0 * steps);
  // per-coefficient phasor recurrence, re-anchored to full evaluations
  // periodically to keep drift at rounding level
  for (const auto& [k, v] : p.coeffs()) {
    cxd rot = std::exp(I * static_cast<double>(k) * h2);
    cxd phase(1.0, 0.0);
    for (size_t m = 0; m < samples.size(); ++m) {
      if (m % 1024 == 0)
        phase = std::exp(I * static_cast<double>(k) * (m * h2));
      samples[m] += v * phase;
      phase *= rot;
    }
  }
  return samples;
}

// rotation block of the constant-coefficient piece between comb points
struct PieceBlocks {
  Matrix2cd T, dT, d2T;
};

PieceBlocks comb_piece(double len, cxd lambda, double vconst) {
  cxd kap = std::sqrt(lambda - vconst);
  // the entries are even functions of kap, so the branch is immaterial
  cxd c = std::cos(kap * len), s = std::sin(kap * len);
  PieceBlocks b;
  b.T << c, s / kap, -kap * s, c;
  Matrix2cd tk;  // d/dkappa
  tk << -len * s, (len * c * kap - s) / (kap * kap), -s - kap * len * c,
      -len * s;
  Matrix2cd tkk;  // d^2/dkappa^2
  tkk << -len * len * c,
      -len * len * s / kap - 2.0 * (len * c * kap - s) / (kap * kap * kap),
      -2.0 * len * c + kap * len * len * s, -len * len * c;
  cxd inv2k = 1.0 / (2.0 * kap);
  b.dT = tk * inv2k;
  b.d2T = tkk * inv2k * inv2k - tk * (inv2k * inv2k * inv2k * 2.0);
  return b;
}

}  // namespace

MonodromyResult monodromy(const PotentialSpec& p, cxd lambda, int steps) {
  if (steps < 64)
    throw Error(Errc::BadParam, "at least 64 integration steps are required");
  return integrate(sample_q(p, steps), lambda, steps);
}

FloquetOracle::FloquetOracle(const PotentialSpec& p, bool exact_comb)
    : p_(p), exact_(exact_comb) {
  if (exact_) {
    auto comb = p.comb();
    if (!comb)
      throw Error(Errc::BadParam,
                  "exact mode requires a delta_comb potential");
    comb_s_ = comb->s;
    comb_x0_ = comb->x0;
    q_at_zero_ = comb_s_ * (comb_x0_ / pi - 0.5);
  }
}

int FloquetOracle::steps_for(cxd lambda) const {
  double target = 360.0 * std::pow(std::max(1.0, std::abs(lambda)), 0.625);
  int steps = 256;
  while (steps < target) steps *= 2;
  return steps;
}

const std::vector<cxd>& FloquetOracle::q_samples(int steps) const {
  std::scoped_lock lock(cache_mutex_);
  auto it = sample_cache_.find(steps);
  if (it == sample_cache_.end())
    it = sample_cache_.emplace(steps, sample_q(p_, steps)).first;
  return it->second;
}

MonodromyResult FloquetOracle::stepped_monodromy(cxd lambda) const {
  int steps = steps_for(lambda);
  return integrate(q_samples(steps), lambda, steps);
}

MonodromyResult FloquetOracle::comb_monodromy(cxd lambda) const {
  // between comb points the potential is the constant -s/pi; at x0 the
  // derivative jumps by s; endpoints are conjugated into the (y, y'-Qy) frame
  double vconst = -comb_s_ / pi;
  PieceBlocks t1 = comb_piece(comb_x0_, lambda, vconst);
  PieceBlocks t2 = comb_piece(pi - comb_x0_, lambda, vconst);
  Matrix2cd jump;
  jump << cxd(1.0, 0.0), cxd(0.0, 0.0), cxd(comb_s_, 0.0), cxd(1.0, 0.0);
  Matrix2cd frame, frame_inv;
  frame << cxd(1.0, 0.0), cxd(0.0, 0.0), cxd(-q_at_zero_, 0.0), cxd(1.0, 0.0);
  frame_inv << cxd(1.0, 0.0), cxd(0.0, 0.0), cxd(q_at_zero_, 0.0),
      cxd(1.0, 0.0);
  MonodromyResult out;
  out.lambda = lambda;
  out.M = frame * (t2.T * jump * t1.T) * frame_inv;
  out.dM = frame * (t2.dT * jump * t1.T + t2.T * jump * t1.dT) * frame_inv;
  out.d2M = frame *
            (t2.d2T * jump * t1.T + 2.0 * t2.dT * jump * t1.dT +
             t2.T * jump * t1.d2T) *
            frame_inv;
  return out;
}

MonodromyResult FloquetOracle::monodromy_at(cxd lambda) const {
  return exact_ ? comb_monodromy(lambda) : stepped_monodromy(lambda);
}

namespace {

// scalar boundary functions and their lambda-derivatives
struct Scalar {
  cxd f, df, d2f;
};

Scalar bc_function(const MonodromyResult& m, Bc bc) {
  switch (bc) {
    case Bc::PerPlus:
      return {m.M.trace() - 2.0, m.dM.trace(), m.d2M.trace()};
    case Bc::PerMinus:
      return {m.M.trace() + 2.0, m.dM.trace(), m.d2M.trace()};
    case Bc::Dir:
      return {m.M(0, 1), m.dM(0, 1), m.d2M(0, 1)};
    case Bc::Neu:
      return {m.M(1, 0), m.dM(1, 0), m.d2M(1, 0)};
  }
  return {};
}

}  // namespace

double FloquetOracle::refine_root(Bc bc, double seed) const {
  double lam = seed;
  double best_lam = seed;
  double best_af = std::numeric_limits<double>::infinity();
  int since_improve = 0;
  for (int it = 0; it < 60; ++it) {
    auto m = monodromy_at(cxd(lam, 0.0));
    auto s = bc_function(m, bc);
    double af = std::abs(s.f);
    if (af < best_af) {
      best_af = af;
      best_lam = lam;
      since_improve = 0;
    } else if (++since_improve >= 4) {
      // near a close double root the iterates bounce inside the evaluation
      // noise ball; the best visited point is as good as it gets
      break;
    }
    double step = -(s.f / s.df).real();
    lam += step;
    if (std::abs(step) <= 1e-13 * (1.0 + std::abs(lam))) {
      best_lam = lam;
      best_af = af;
      break;
    }
  }
  if (!(best_af <= 1e-9 * (1.0 + std::sqrt(std::abs(best_lam)))))
    throw Error(Errc::NotConverged, "boundary-function root iteration stalled");
  return best_lam;
}

double FloquetOracle::dirichlet_near(int n) const {
  return refine_root(Bc::Dir, static_cast<double>(n) * n);
}

double FloquetOracle::neumann_near(int n) const {
  return refine_root(Bc::Neu, static_cast<double>(n) * n);
}

FloquetOracle::PairResult FloquetOracle::periodic_pair_near(int n) const {
  double target = (n % 2 == 0) ? 2.0 : -2.0;
  // locate the discriminant extremum by Newton on its derivative
  double hat = static_cast<double>(n) * n;
  cxd disc(0.0, 0.0), d2(0.0, 0.0);
  for (int it = 0; it < 50; ++it) {
    auto m = monodromy_at(cxd(hat, 0.0));
    disc = m.discriminant();
    cxd d1 = m.dM.trace();
    d2 = m.d2M.trace();
    double step = -(d1 / d2).real();
    hat += step;
    if (std::abs(step) <= 1e-13 * (1.0 + std::abs(hat))) break;
    if (it == 49)
      throw Error(Errc::NotConverged, "discriminant extremum search stalled");
  }
  PairResult out;
  out.lambda_hat = hat;
  // quadratic model: Delta(hat + w) = Delta(hat) + Delta'' w^2 / 2
  double excess = (disc.real() - target) * ((n % 2 == 0) ? 1.0 : -1.0);
  double curvature = std::abs(d2.real());
  if (excess > 1e-9 && curvature > 0.0) {
    double w = std::sqrt(2.0 * excess / curvature);
    Bc bc = (n % 2 == 0) ? Bc::PerPlus : Bc::PerMinus;
    out.lambda_plus = refine_root(bc, hat + w);
    out.lambda_minus = refine_root(bc, hat - w);
    out.half_width = 0.5 * (out.lambda_plus - out.lambda_minus);
    out.split_resolved = true;
  } else {
    // the gap is below the discriminant noise floor; both edges collapse
    // onto the extremum, which is within half the gap of either edge
    out.lambda_plus = hat;
    out.lambda_minus = hat;
    out.half_width = 0.0;
    out.split_resolved = false;
  }
  return out;
}

std::vector<double> FloquetOracle::spectrum_in(Bc bc, double lo, double hi,
                                               double tol) const {
  if (!(hi > lo)) throw Error(Errc::BadParam, "empty oracle window");
  std::vector<double> roots;
  auto push_unique = [&](double r) {
    if (r < lo - 1e-9 || r > hi + 1e-9) return;
    for (double got : roots)
      if (std::abs(got - r) <= 1e-7 * (1.0 + std::abs(r))) return;
    roots.push_back(r);
  };

  // sample on a sqrt-uniform grid so the oscillation rate is constant
  std::vector<double> grid;
  double t_lo = std::sqrt(std::max(lo, 0.0)), t_hi = std::sqrt(std::max(hi, 0.0));
  if (lo < 0.0)
    for (double x = lo; x < std::min(hi, 0.0); x += 0.25) grid.push_back(x);
  for (double t = t_lo; t <= t_hi + 1e-12; t += 0.05)
    grid.push_back(std::min(t * t, hi));
  if (grid.empty() || grid.back() < hi) grid.push_back(hi);

  std::vector<Scalar> vals(grid.size());
  for (size_t i = 0; i < grid.size(); ++i)
    vals[i] = bc_function(monodromy_at(cxd(grid[i], 0.0)), bc);

  for (size_t i = 0; i + 1 < grid.size(); ++i) {
    double fa = vals[i].f.real(), fb = vals[i + 1].f.real();
    if (fa == 0.0) push_unique(grid[i]);
    if (fa * fb < 0.0) {
      // bisect to a tight bracket, then polish by Newton
      double a = grid[i], b = grid[i + 1];
      double va = fa;
      for (int it = 0; it < 60 && (b - a) > 1e-12 * (1.0 + std::abs(b)); ++it) {
        double mid = 0.5 * (a + b);
        double vm = bc_function(monodromy_at(cxd(mid, 0.0)), bc).f.real();
        if (va * vm <= 0.0)
          b = mid;
        else {
          a = mid;
          va = vm;
        }
      }
      push_unique(refine_root(bc, 0.5 * (a + b)));
    }
  }

  if (bc == Bc::PerPlus || bc == Bc::PerMinus) {
    // double roots of Delta -+ 2 hide at discriminant extrema; walk the
    // sign changes of Delta' and split each extremum quadratically
    for (size_t i = 0; i + 1 < grid.size(); ++i) {
      double da = vals[i].df.real(), db = vals[i + 1].df.real();
      if (da * db >= 0.0) continue;
      // polish the extremum seeded from this bracket
      double hat = 0.5 * (grid[i] + grid[i + 1]);
      cxd disc(0.0, 0.0), d2(0.0, 0.0);
      bool ok = true;
      for (int it = 0; it < 50; ++it) {
        auto m = monodromy_at(cxd(hat, 0.0));
        disc = m.discriminant();
        d2 = m.d2M.trace();
        double step = -(m.dM.trace() / d2).real();
        hat += step;
        if (std::abs(step) <= 1e-13 * (1.0 + std::abs(hat))) break;
        if (it == 49) ok = false;
      }
      if (!ok || hat < lo || hat > hi) continue;
      double target = (bc == Bc::PerPlus) ? 2.0 : -2.0;
      double excess = (disc.real() - target) * ((bc == Bc::PerPlus) ? 1.0 : -1.0);
      double curvature = std::abs(d2.real());
      if (std::abs(disc.real() - target) <= 1e-9) {
        // the discriminant touches the target: double root
        bool fresh = true;
        for (double got : roots)
          if (std::abs(got - hat) <= 1e-7 * (1.0 + std::abs(hat))) fresh = false;
        if (fresh) {
          roots.push_back(hat);
          roots.push_back(hat);
        }
      } else if (excess > 1e-9 && curvature > 0.0) {
        double w = std::sqrt(2.0 * excess / curvature);
        push_unique(refine_root(bc, hat + w));
        push_unique(refine_root(bc, hat - w));
      }
    }
  }

  std::sort(roots.begin(), roots.end());
  std::vector<double> verified;
  for (double r : roots) {
    auto s = bc_function(monodromy_at(cxd(r, 0.0)), bc);
    double fval = std::abs(s.f);
    // a double root sits at an extremum: its residual scale is quadratic
    double hessian_scale = 0.5 * std::abs(s.d2f) * 1e-12;
    if (fval <= std::max(tol, hessian_scale) || std::abs(s.df) < 1e-6)
      verified.push_back(r);
  }
  return verified;
}

}  // namespace hillspectra
