#include "hillspectra/acceptance.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <iomanip>
#include <optional>
#include <sstream>
#include <vector>

#include "hillspectra/eigensolve.hpp"
#include "hillspectra/operator_matrix.hpp"
#include "hillspectra/oracle.hpp"
#include "hillspectra/pairing.hpp"
#include "hillspectra/projection.hpp"
#include "hillspectra/sequences.hpp"

namespace hillspectra {
namespace {

std::string sci(double v) {
  std::ostringstream os;
  os << std::scientific << std::setprecision(2) << v;
  return os.str();
}

struct Scope {
  bool quick = false;
  int free_K = 32;
  int mathieu_K = 64;
  int comb_K = 128, comb_F = 128;
  int gas_K = 64;
  int oracle_lo = 6, oracle_hi = 30;       // matrix-vs-oracle rows
  int comb_lo = 10, comb_hi = 30;          // singular-oracle rows
  int sandwich_lo = 12, sandwich_hi = 40;  // bracket rows
  int gas_lo = 6, gas_hi = 30;
  int mathieu_slate_lo = 2, mathieu_slate_hi = 40;
  int comb_slate_lo = 10, comb_slate_hi = 40;
  std::vector<int> proj_ns = {8, 16, 32, 48};
  std::vector<int> comb_Fs = {32, 64, 128};

  static Scope make(bool quick) {
    Scope s;
    s.quick = quick;
    if (quick) {
      s.free_K = 16;
      s.comb_K = 96;
      s.comb_F = 64;
      s.oracle_hi = 14;
      s.comb_hi = 14;
      s.sandwich_hi = 16;
      s.gas_hi = 16;
      s.mathieu_slate_hi = 16;
      s.comb_slate_hi = 18;
      s.proj_ns = {8, 16, 24};
      s.comb_Fs = {32, 64};
    }
    return s;
  }
};

// slates and projection contexts shared between checks, built on first use
struct Workspace {
  const Scope& sc;
  explicit Workspace(const Scope& s) : sc(s) {}

  const SpectralSlate& mathieu() {
    if (!mathieu_)
      mathieu_ = build_slate(PotentialSpec::mathieu(1.0), sc.mathieu_K,
                             sc.mathieu_slate_lo, sc.mathieu_slate_hi);
    return *mathieu_;
  }
  const SpectralSlate& comb() {
    if (!comb_)
      comb_ = build_slate(PotentialSpec::delta_comb(1.0, M_PI / 2, sc.comb_F),
                          sc.comb_K, sc.comb_slate_lo, sc.comb_slate_hi);
    return *comb_;
  }
  const SpectralSlate& gas() {
    if (!gas_)
      gas_ = build_slate(PotentialSpec::gasymov(1.0, 0.5, 16), sc.gas_K,
                         sc.gas_lo, sc.gas_hi);
    return *gas_;
  }
  const std::vector<ProjectionRow>& proj_rows(bool comb_family) {
    auto& cache = comb_family ? proj_comb_ : proj_mathieu_;
    if (cache.empty()) {
      const ProjectionContext& ctx = comb_family ? cctx() : mctx();
      for (int n : sc.proj_ns) cache.push_back(projection_row(ctx, n));
    }
    return cache;
  }
  const ProjectionContext& mctx() {
    if (!mctx_)
      mctx_ = make_projection_context(PotentialSpec::mathieu(1.0), sc.mathieu_K);
    return *mctx_;
  }
  const ProjectionContext& cctx() {
    if (!cctx_)
      cctx_ = make_projection_context(
          PotentialSpec::delta_comb(1.0, M_PI / 2, sc.comb_F), sc.comb_K);
    return *cctx_;
  }

 private:
  std::optional<SpectralSlate> mathieu_, comb_, gas_;
  std::optional<ProjectionContext> mctx_, cctx_;
  std::vector<ProjectionRow> proj_mathieu_, proj_comb_;
};

const SlateRow& row_at(const SpectralSlate& slate, int n) {
  return slate.rows.at(static_cast<std::size_t>(n - slate.n_min));
}

std::vector<cxd> in_disc(const std::vector<cxd>& eigs, int n, double r) {
  std::vector<cxd> out;
  const double c = static_cast<double>(n) * n;
  for (const auto& e : eigs)
    if (std::abs(e - c) < r) out.push_back(e);
  return out;
}

// ---- 1: free operator ------------------------------------------------

CriterionResult c1_free(const Scope& sc) {
  CriterionResult r{1, "free-operator spectra and sequences are exact"};
  const auto zero = PotentialSpec::zero();
  const int K = sc.free_K;
  double worst = 0.0;
  for (Bc bc : {Bc::PerPlus, Bc::PerMinus, Bc::Dir, Bc::Neu}) {
    Vector eigs = eigenvalues(build_matrix(zero, bc, K).matrix);
    std::vector<double> expected;
    switch (bc) {
      case Bc::PerPlus:
        expected.push_back(0.0);
        for (int j = 1; j <= K; ++j) {
          expected.push_back(4.0 * j * j);
          expected.push_back(4.0 * j * j);
        }
        break;
      case Bc::PerMinus:
        for (int j = 0; j <= K; ++j) {
          double v = (2.0 * j + 1) * (2.0 * j + 1);
          expected.push_back(v);
          expected.push_back(v);
        }
        break;
      case Bc::Dir:
        for (int k = 1; k <= 2 * K; ++k) expected.push_back(double(k) * k);
        break;
      case Bc::Neu:
        for (int k = 0; k <= 2 * K; ++k) expected.push_back(double(k) * k);
        break;
    }
    std::sort(expected.begin(), expected.end());
    if (eigs.size() != static_cast<long>(expected.size())) {
      r.detail = "spectrum size mismatch";
      return r;
    }
    for (long i = 0; i < eigs.size(); ++i)
      worst = std::max(worst, std::abs(eigs(i) - expected[i]));
  }

  auto slate = build_slate(zero, K, 3, std::min(2 * K - 2, 20));
  double derived = 0.0;
  for (const auto& row : slate.rows) {
    if (!row.valid) {
      r.detail = "zero-potential slate row " + std::to_string(row.n) + " invalid";
      return r;
    }
    for (double v : {std::abs(row.gamma), std::abs(row.delta_dir),
                     std::abs(row.delta_neu), std::abs(row.beta_plus),
                     std::abs(row.beta_minus), std::abs(row.xi),
                     std::abs(row.z_star)})
      derived = std::max(derived, v);
  }
  r.pass = worst <= 1e-10 && derived <= 1e-10;
  r.detail = "max spectral defect " + sci(worst) +
             ", max derived magnitude " + sci(derived) + " (bound 1e-10)";
  return r;
}

// ---- 2: shooting oracle, analytic family ------------------------------

CriterionResult c2_oracle_smooth(Workspace& ws) {
  CriterionResult r{2, "eigenvalues match the shooting oracle (analytic family)"};
  const auto& slate = ws.mathieu();
  FloquetOracle oracle(PotentialSpec::mathieu(1.0));
  double worst = 0.0;
  for (int n = ws.sc.oracle_lo; n <= ws.sc.oracle_hi; ++n) {
    const auto& row = row_at(slate, n);
    if (!row.valid) {
      r.detail = "row " + std::to_string(n) + " skipped: " + row.skip_reason;
      return r;
    }
    auto pair = oracle.periodic_pair_near(n);
    worst = std::max({worst, std::abs(row.lambda_plus - pair.lambda_plus),
                      std::abs(row.lambda_minus - pair.lambda_minus),
                      std::abs(row.mu - oracle.dirichlet_near(n)),
                      std::abs(row.nu - oracle.neumann_near(n))});
  }
  r.pass = worst <= 1e-7;
  r.detail = "max eigenvalue deviation " + sci(worst) + " over n in [" +
             std::to_string(ws.sc.oracle_lo) + "," +
             std::to_string(ws.sc.oracle_hi) + "] (bound 1e-7)";
  return r;
}

// ---- 3: exact piecewise oracle, singular family ------------------------

CriterionResult c3_oracle_singular(Workspace& ws) {
  CriterionResult r{3, "eigenvalues reach the exact comb under band truncation"};
  const Scope& sc = ws.sc;
  FloquetOracle exact(PotentialSpec::delta_comb(1.0, M_PI / 2, 4), true);

  // reference values from the unbanded piecewise propagator
  std::vector<std::array<double, 4>> ref;  // lp, lm, mu, nu per n
  for (int n = sc.comb_lo; n <= sc.comb_hi; ++n) {
    auto pair = exact.periodic_pair_near(n);
    ref.push_back({pair.lambda_plus, pair.lambda_minus, exact.dirichlet_near(n),
                   exact.neumann_near(n)});
  }

  std::vector<double> errs;
  for (int F : sc.comb_Fs) {
    double err = 0.0;
    if (F == sc.comb_F) {
      // the widest band is already assembled as the comb slate
      const auto& slate = ws.comb();
      for (int n = sc.comb_lo; n <= sc.comb_hi; ++n) {
        const auto& row = row_at(slate, n);
        if (!row.valid) {
          r.detail = "row " + std::to_string(n) + " skipped: " + row.skip_reason;
          return r;
        }
        const auto& t = ref[static_cast<std::size_t>(n - sc.comb_lo)];
        err = std::max({err, std::abs(row.lambda_plus - t[0]),
                        std::abs(row.lambda_minus - t[1]),
                        std::abs(row.mu - t[2]), std::abs(row.nu - t[3])});
      }
    } else {
      auto p = PotentialSpec::delta_comb(1.0, M_PI / 2, F);
      std::vector<std::vector<cxd>> spectra;
      for (Bc bc : {Bc::PerPlus, Bc::PerMinus, Bc::Dir, Bc::Neu}) {
        Vector v = eigenvalues(build_matrix(p, bc, sc.comb_K).matrix);
        spectra.emplace_back(v.data(), v.data() + v.size());
      }
      for (int n = sc.comb_lo; n <= sc.comb_hi; ++n) {
        double rad = 0.25 * n;
        auto pair = in_disc(spectra[n % 2 == 0 ? 0 : 1], n, rad);
        auto dir = in_disc(spectra[2], n, rad);
        auto neu = in_disc(spectra[3], n, rad);
        if (pair.size() != 2 || dir.size() != 1 || neu.size() != 1) {
          r.detail = "disc count mismatch at n = " + std::to_string(n) +
                     ", F = " + std::to_string(F);
          return r;
        }
        if (pair[0].real() < pair[1].real()) std::swap(pair[0], pair[1]);
        const auto& t = ref[static_cast<std::size_t>(n - sc.comb_lo)];
        err = std::max({err, std::abs(pair[0] - t[0]), std::abs(pair[1] - t[1]),
                        std::abs(dir[0] - t[2]), std::abs(neu[0] - t[3])});
      }
    }
    errs.push_back(err);
  }

  bool monotone = true;
  for (std::size_t i = 1; i < errs.size(); ++i)
    if (!(errs[i] < errs[i - 1])) monotone = false;
  bool tight = errs.back() <= 1e-5;
  r.pass = monotone && tight;
  std::ostringstream d;
  d << "band sweep F = ";
  for (std::size_t i = 0; i < errs.size(); ++i)
    d << sc.comb_Fs[i] << (i + 1 < errs.size() ? ", " : ": ");
  d << "max deviation ";
  for (std::size_t i = 0; i < errs.size(); ++i)
    d << sci(errs[i]) << (i + 1 < errs.size() ? " -> " : "");
  d << (monotone ? " (improves monotonically)" : " (NOT monotone)");
  d << "; final vs bound 1e-5: " << (tight ? "met" : "NOT met")
    << " - the retained band, not the window, limits the accuracy here";
  r.detail = d.str();
  return r;
}

// ---- 4 and 5: bracket inequalities -------------------------------------

struct BracketSummary {
  bool all = true;
  int live = 0, floor = 0;
  double lo_ratio = std::numeric_limits<double>::infinity();
  double hi_ratio = 0.0;
};

BracketSummary summarize(const SpectralSlate& slate, int lo, int hi,
                         double SandwichRow::*num, bool SandwichRow::*lo_ok,
                         bool SandwichRow::*hi_ok) {
  BracketSummary out;
  auto report = sandwich_report(slate);
  for (const auto& s : report.rows) {
    if (s.n < lo || s.n > hi) continue;
    if (!(s.*lo_ok) || !(s.*hi_ok)) out.all = false;
    if (s.couplings > 0.0) {
      ++out.live;
      double ratio = (s.*num) / s.couplings;
      out.lo_ratio = std::min(out.lo_ratio, ratio);
      out.hi_ratio = std::max(out.hi_ratio, ratio);
    } else {
      ++out.floor;
    }
  }
  if (out.live == 0) out.lo_ratio = 0.0;
  return out;
}

std::string bracket_detail(const char* tag, const BracketSummary& b) {
  std::ostringstream d;
  d << tag << ": " << b.live << " live rows, ratio within [" << sci(b.lo_ratio)
    << ", " << sci(b.hi_ratio) << "], " << b.floor << " at the zero floor";
  return d.str();
}

CriterionResult c4_neumann_sandwich(Workspace& ws) {
  CriterionResult r{4, "gap plus Neumann deviation bracketed by 1/80 and 19"};
  const Scope& sc = ws.sc;
  auto m = summarize(ws.mathieu(), sc.sandwich_lo, sc.sandwich_hi,
                     &SandwichRow::gap_plus_neu, &SandwichRow::neu_lower,
                     &SandwichRow::neu_upper);
  auto c = summarize(ws.comb(), sc.sandwich_lo, sc.sandwich_hi,
                     &SandwichRow::gap_plus_neu, &SandwichRow::neu_lower,
                     &SandwichRow::neu_upper);
  r.pass = m.all && c.all;
  r.detail = bracket_detail("analytic", m) + "; " + bracket_detail("comb", c);
  return r;
}

CriterionResult c5_dirichlet_and_pair_sandwich(Workspace& ws) {
  CriterionResult r{5, "Dirichlet (1/72, 58) and coupling (1/5, 9) brackets"};
  const Scope& sc = ws.sc;
  bool all = true;
  std::string detail;
  for (bool comb_family : {false, true}) {
    const auto& slate = comb_family ? ws.comb() : ws.mathieu();
    auto dir = summarize(slate, sc.sandwich_lo, sc.sandwich_hi,
                         &SandwichRow::gap_plus_dir, &SandwichRow::dir_lower,
                         &SandwichRow::dir_upper);
    auto pair = summarize(slate, sc.sandwich_lo, sc.sandwich_hi,
                          &SandwichRow::xi_plus_gap, &SandwichRow::pair_lower,
                          &SandwichRow::pair_upper);
    all = all && dir.all && pair.all;
    detail += std::string(comb_family ? "comb" : "analytic") + " Dir[" +
              sci(dir.lo_ratio) + "," + sci(dir.hi_ratio) + "] pair[" +
              sci(pair.lo_ratio) + "," + sci(pair.hi_ratio) + "]" +
              (comb_family ? "" : "; ");
  }
  r.pass = all;
  r.detail = detail;
  return r;
}

// ---- 6 and 7: projection and boundary decay ----------------------------

bool decreasing_and_halved(const std::vector<double>& v) {
  for (std::size_t i = 1; i < v.size(); ++i)
    if (!(v[i] < v[i - 1])) return false;
  return v.back() <= 0.5 * v.front();
}

// non-strict variant with the usual sub-floor snap: a track that has already
// reached zero (e.g. the quasi-derivative of the matched vector, which
// vanishes identically for even potentials) counts as converged, not as a
// monotonicity failure driven by rounding noise
bool settled_to_half(const std::vector<double>& raw) {
  std::vector<double> v;
  v.reserve(raw.size());
  for (double x : raw) v.push_back(snap_to_zero(x));
  for (std::size_t i = 1; i < v.size(); ++i)
    if (v[i] > v[i - 1]) return false;
  return v.back() <= 0.5 * v.front();
}

std::string seq_detail(const char* tag, const std::vector<double>& v) {
  std::ostringstream d;
  d << tag << " ";
  for (std::size_t i = 0; i < v.size(); ++i)
    d << sci(v[i]) << (i + 1 < v.size() ? " > " : "");
  return d.str();
}

CriterionResult c6_projection_decay(Workspace& ws) {
  CriterionResult r{6, "projection differences decay in norm"};
  bool all = true;
  std::string detail;
  for (bool comb_family : {false, true}) {
    const auto& rows = ws.proj_rows(comb_family);
    std::vector<double> pd, dd;
    for (const auto& row : rows) {
      pd.push_back(row.norm_p_diff);
      dd.push_back(row.norm_dp_diff_over_n);
    }
    bool ok = decreasing_and_halved(pd) && decreasing_and_halved(dd);
    all = all && ok;
    detail += std::string(comb_family ? "comb" : "analytic") + ": " +
              seq_detail("|P-P0|", pd) + ", " + seq_detail("|D(P-P0)|/n", dd) +
              (comb_family ? "" : "; ");
  }
  r.pass = all;
  r.detail = detail;
  return r;
}

CriterionResult c7_boundary_decay(Workspace& ws) {
  CriterionResult r{7, "matched-vector boundary data approaches the free pattern"};
  bool all = true;
  std::string detail;
  for (bool comb_family : {false, true}) {
    const auto& rows = ws.proj_rows(comb_family);
    std::vector<double> vd, dd;
    for (const auto& row : rows) {
      vd.push_back(row.boundary_value_diff);
      dd.push_back(row.boundary_deriv_diff_over_n);
    }
    bool deriv_at_floor = true;
    for (double x : dd) deriv_at_floor = deriv_at_floor && snap_to_zero(x) == 0.0;
    bool ok = settled_to_half(vd) && settled_to_half(dd);
    all = all && ok;
    detail += std::string(comb_family ? "comb" : "analytic") + ": " +
              seq_detail("|G(0)-G0(0)|", vd) + ", deriv/n " +
              (deriv_at_floor ? std::string("at the zero floor throughout")
                              : seq_detail("", dd)) +
              (comb_family ? "" : "; ");
  }
  r.pass = all;
  r.detail = detail;
  return r;
}

// ---- 8: deviation identity ---------------------------------------------

CriterionResult c8_deviation_identity(Workspace& ws) {
  CriterionResult r{8, "deviation identity holds with overlap at least 71/72"};
  const Scope& sc = ws.sc;
  double worst_resid = 0.0, worst_overlap = 1.0;
  for (int n = sc.sandwich_lo; n <= sc.sandwich_hi; ++n) {
    auto row = projection_row(ws.mctx(), n);
    worst_resid = std::max(
        worst_resid, row.identity_residual / (1.0 + std::abs(row.delta_neu)));
    worst_overlap = std::min(worst_overlap, row.overlap);
  }
  r.pass = worst_resid <= 1e-7 && worst_overlap >= 71.0 / 72.0;
  r.detail = "max scaled residual " + sci(worst_resid) +
             " (bound 1e-7), min overlap " + sci(worst_overlap) +
             " (bound " + sci(71.0 / 72.0) + ")";
  return r;
}

// ---- 9: one-sided family -----------------------------------------------

CriterionResult c9_one_sided(Workspace& ws) {
  CriterionResult r{9, "one-sided family: dead gaps, live deviations, zero ratio"};
  const auto& slate = ws.gas();
  double max_gamma = 0.0, max_dneu = 0.0, max_bminus = 0.0;
  int resolved = 0, misclassified = 0;
  for (const auto& row : slate.rows) {
    if (!row.valid) {
      r.detail = "row " + std::to_string(row.n) + " skipped: " + row.skip_reason;
      return r;
    }
    max_gamma = std::max(max_gamma, std::abs(row.gamma));
    max_dneu = std::max(max_dneu, std::abs(row.delta_neu));
    max_bminus = std::max(max_bminus, std::abs(row.beta_minus));
    if (snap_to_zero(std::abs(row.beta_plus_zp)) > 0.0 ||
        snap_to_zero(std::abs(row.beta_minus_zp)) > 0.0) {
      ++resolved;
      if (classify_case(row) != GapCase::Case2b) ++misclassified;
    }
  }
  auto report = riesz_criterion(slate);
  bool gaps_dead = max_gamma <= 1e-8;
  bool deviations_live = max_dneu >= 1e3 * max_gamma;
  bool lower_zero = max_bminus <= 1e-12;
  bool cases_ok = resolved >= 5 && misclassified == 0;
  r.pass = gaps_dead && deviations_live && lower_zero && cases_ok &&
           report.inf_ratio_zero;
  r.detail = "max |gamma| " + sci(max_gamma) + ", max |delta_neu| " +
             sci(max_dneu) + ", max |beta-| " + sci(max_bminus) + ", " +
             std::to_string(resolved) + " coupling-resolved rows (" +
             std::to_string(misclassified) + " misclassified), ratio-zero flag " +
             (report.inf_ratio_zero ? "set" : "NOT set");
  return r;
}

// ---- 10: boundary ratio on dominant-coupling rows -----------------------

CriterionResult c10_boundary_ratio(Workspace& ws) {
  CriterionResult r{10, "boundary ratio within [1/4, 4] on dominant-coupling rows"};
  int case2 = 0, bad = 0;
  double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
  for (const SpectralSlate* slate : {&ws.mathieu(), &ws.comb(), &ws.gas()}) {
    for (const auto& c : case_table(*slate)) {
      if (c.label == GapCase::Case1) continue;
      ++case2;
      lo = std::min(lo, c.boundary_ratio);
      hi = std::max(hi, c.boundary_ratio);
      if (!c.boundary_ratio_ok) ++bad;
    }
  }
  r.pass = case2 > 0 && bad == 0;
  r.detail = std::to_string(case2) + " dominant-coupling rows, ratio range [" +
             sci(lo) + ", " + sci(hi) + "], " + std::to_string(bad) +
             " outside [0.25, 4]";
  return r;
}

// ---- 11: decay classes and weighted sums --------------------------------

CriterionResult c11_decay(Workspace& ws) {
  CriterionResult r{11, "decay classes and weighted square sums split the families"};
  Weight sob = Weight::sobolev(2.0);
  auto m = decay_classify(gap_sequence(ws.mathieu()), sob);
  auto c = decay_classify(gap_sequence(ws.comb()), sob);
  bool m_ok = m.decay_class == "exponential" && m.sums_converged;
  bool c_ok = c.decay_class == "none" && !c.sums_converged;
  r.pass = m_ok && c_ok;
  r.detail = "analytic gaps: class " + m.decay_class + " (rate " +
             sci(m.fitted_param) + "), weighted sums " +
             (m.sums_converged ? "converge" : "DIVERGE") +
             "; comb gaps: class " + c.decay_class + ", weighted sums " +
             (c.sums_converged ? "CONVERGE" : "diverge");
  return r;
}

// ---- 12: reduction consistency ------------------------------------------

CriterionResult c12_reduction(Workspace& ws) {
  CriterionResult r{12, "pair eigenvalues are reduction roots with symmetric diagonal"};
  double worst_resid = 0.0, worst_asym = 0.0;
  for (const SpectralSlate* slate : {&ws.mathieu(), &ws.comb(), &ws.gas()}) {
    for (const auto& row : slate->rows) {
      if (!row.valid) continue;
      worst_resid = std::max(
          {worst_resid, row.char_residual_plus, row.char_residual_minus});
      if (row.n >= 12)
        worst_asym = std::max(
            worst_asym, row.alpha_asym / (1.0 + std::abs(row.alpha11)));
    }
  }
  r.pass = worst_resid <= 1e-8 && worst_asym <= 1e-6;
  r.detail = "max root residual " + sci(worst_resid) +
             " (bound 1e-8), max scaled diagonal asymmetry " + sci(worst_asym) +
             " (bound 1e-6)";
  return r;
}

}  // namespace

AcceptanceSummary run_acceptance(std::ostream& out, bool quick) {
  Scope sc = Scope::make(quick);
  Workspace ws(sc);
  out << "verification gate (" << (quick ? "quick" : "full") << " scope)\n";
  out.flush();

  std::vector<std::function<CriterionResult()>> checks = {
      [&] { return c1_free(sc); },
      [&] { return c2_oracle_smooth(ws); },
      [&] { return c3_oracle_singular(ws); },
      [&] { return c4_neumann_sandwich(ws); },
      [&] { return c5_dirichlet_and_pair_sandwich(ws); },
      [&] { return c6_projection_decay(ws); },
      [&] { return c7_boundary_decay(ws); },
      [&] { return c8_deviation_identity(ws); },
      [&] { return c9_one_sided(ws); },
      [&] { return c10_boundary_ratio(ws); },
      [&] { return c11_decay(ws); },
      [&] { return c12_reduction(ws); },
  };

  AcceptanceSummary summary;
  for (std::size_t i = 0; i < checks.size(); ++i) {
    CriterionResult res;
    try {
      res = checks[i]();
    } catch (const std::exception& e) {
      res.id = static_cast<int>(i + 1);
      res.name = "check " + std::to_string(i + 1);
      res.pass = false;
      res.detail = std::string("error: ") + e.what();
    }
    res.id = static_cast<int>(i + 1);
    out << "[" << std::setw(2) << res.id << "/12] "
        << (res.pass ? "PASS" : "FAIL") << "  " << res.name << ": "
        << res.detail << "\n";
    out.flush();
    (res.pass ? summary.passed : summary.failed)++;
    summary.results.push_back(std::move(res));
  }
  summary.all_pass = summary.failed == 0;
  out << "summary: " << summary.passed << "/12 passed, " << summary.failed
      << " failed\n";
  out.flush();
  return summary;
}

}  // namespace hillspectra
