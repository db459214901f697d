// hill-spectra: command-line front end for the Hill-operator spectral library.
//
// Subcommands: slate, beta, projections, oracle, criterion, smoothness,
// verify.  Every subcommand writes a CSV table plus a JSON summary with the
// effective configuration; errors print machine-readable JSON on stderr and
// exit 2 (configuration) or 3 (numerical failure); verify exits 1 when a
// release check fails.

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hillspectra/acceptance.hpp"
#include "hillspectra/eigensolve.hpp"
#include "hillspectra/operator_matrix.hpp"
#include "hillspectra/oracle.hpp"
#include "hillspectra/pairing.hpp"
#include "hillspectra/projection.hpp"
#include "hillspectra/sequences.hpp"

namespace hs = hillspectra;
using nlohmann::json;

namespace {

constexpr const char* kVersion = "0.1.0";

// ---- formatting ----------------------------------------------------------

std::string fmt(double v) {
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

std::string fmt(int v) { return std::to_string(v); }

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

class Csv {
 public:
  Csv(const std::filesystem::path& path, const std::vector<std::string>& header)
      : f_(path, std::ios::binary) {
    if (!f_)
      throw hs::Error(hs::Errc::BadParam,
                      "cannot open output file '" + path.string() + "'");
    row(header);
  }
  void row(const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
      if (i) f_ << ',';
      f_ << csv_field(fields[i]);
    }
    f_ << '\n';
  }

 private:
  std::ofstream f_;
};

// ---- options -------------------------------------------------------------

struct Opts {
  std::string builtin = "mathieu";
  std::string potential_file;
  double c = 1.0;         // mathieu coefficient
  double s = 1.0;         // comb/gasymov/sawtooth scale
  double x0 = hs::pi / 2; // comb location
  double r = 0.5;         // gasymov ratio
  double target_norm = 1.0;
  int K = 64;
  int F = 32;
  std::string n_range = "6..40";
  std::string bc_list;
  std::string radius = "fixed";
  double tol = 1e-10;        // criterion resolution floor
  double oracle_tol = 1e-9;  // residual bound for oracle roots
  std::string out = ".";
  std::uint64_t seed = 1;
  bool quick = false;
  bool dump_matrix = false;
  std::string weight = "sobolev";
  double weight_a = 2.0, weight_c = 0.1, weight_g = 0.5;
  std::string sequence = "gamma";
};

struct Range {
  int lo = 0, hi = 0;
};

Range parse_range(const std::string& s) {
  auto dots = s.find("..");
  if (dots == std::string::npos)
    throw hs::Error(hs::Errc::BadParam,
                    "range must be A..B, got '" + s + "'");
  Range r;
  try {
    r.lo = std::stoi(s.substr(0, dots));
    r.hi = std::stoi(s.substr(dots + 2));
  } catch (const std::exception&) {
    throw hs::Error(hs::Errc::BadParam,
                    "range must be A..B with integers, got '" + s + "'");
  }
  return r;
}

std::vector<hs::Bc> parse_bcs(const std::string& list) {
  if (list.empty())
    return {hs::Bc::PerPlus, hs::Bc::PerMinus, hs::Bc::Dir, hs::Bc::Neu};
  std::vector<hs::Bc> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(hs::bc_from_name(item));
  return out;
}

hs::RadiusPolicy parse_policy(const std::string& s) {
  if (s == "fixed") return hs::RadiusPolicy::FixedQuarter;
  if (s == "shrinking") return hs::RadiusPolicy::Shrinking;
  throw hs::Error(hs::Errc::BadParam,
                  "radius policy must be fixed or shrinking, got '" + s + "'");
}

// ---- potential construction ----------------------------------------------

hs::PotentialSpec potential_from_json(const json& j) {
  if (j.contains("coeffs")) {
    std::map<int, hs::cxd> m;
    for (const auto& e : j.at("coeffs")) {
      if (!e.is_array() || e.size() != 3)
        throw hs::Error(hs::Errc::BadParam,
                        "each coeffs entry must be [k, re, im]");
      m[e[0].get<int>()] = hs::cxd(e[1].get<double>(), e[2].get<double>());
    }
    return hs::PotentialSpec::from_coeffs(std::move(m));
  }
  if (!j.contains("family"))
    throw hs::Error(hs::Errc::BadParam,
                    "potential file must contain 'family' or 'coeffs'");
  const std::string fam = j.at("family").get<std::string>();
  const json params = j.value("params", json::object());
  const double c = params.value("c", 1.0);
  const double s = params.value("s", 1.0);
  const double x0 = params.value("x0", hs::pi / 2);
  const double r = params.value("r", 0.5);
  const double norm = params.value("target_norm", 1.0);
  const int F = params.value("F", 32);
  const std::uint64_t seed = params.value("seed", std::uint64_t{1});
  if (fam == "zero") return hs::PotentialSpec::zero();
  if (fam == "mathieu") return hs::PotentialSpec::mathieu(c);
  if (fam == "delta_comb") return hs::PotentialSpec::delta_comb(s, x0, F);
  if (fam == "gasymov") return hs::PotentialSpec::gasymov(s, r, F);
  if (fam == "sawtooth") return hs::PotentialSpec::sawtooth(s, F);
  if (fam == "random_weighted") {
    const json wj = params.value("weight", json::object());
    hs::Weight w = hs::Weight::from_name(
        wj.value("name", "sobolev"), wj.value("a", 2.0), wj.value("c", 0.1),
        wj.value("g", 0.5));
    return hs::PotentialSpec::random_weighted(w, seed, F, norm);
  }
  throw hs::Error(hs::Errc::BadParam, "unknown potential family '" + fam + "'");
}

hs::PotentialSpec load_potential_file(const std::string& path) {
  std::ifstream f(path);
  if (!f)
    throw hs::Error(hs::Errc::BadParam,
                    "cannot open potential file '" + path + "'");
  json j;
  try {
    f >> j;
    return potential_from_json(j);
  } catch (const json::exception& e) {
    throw hs::Error(hs::Errc::BadParam,
                    std::string("potential file: ") + e.what());
  }
}

hs::PotentialSpec make_potential(const Opts& o) {
  if (!o.potential_file.empty()) return load_potential_file(o.potential_file);
  const std::string& b = o.builtin;
  if (b == "zero") return hs::PotentialSpec::zero();
  if (b == "mathieu") return hs::PotentialSpec::mathieu(o.c);
  if (b == "delta_comb") return hs::PotentialSpec::delta_comb(o.s, o.x0, o.F);
  if (b == "gasymov") return hs::PotentialSpec::gasymov(o.s, o.r, o.F);
  if (b == "sawtooth") return hs::PotentialSpec::sawtooth(o.s, o.F);
  if (b == "random_weighted")
    return hs::PotentialSpec::random_weighted(
        hs::Weight::from_name(o.weight, o.weight_a, o.weight_c, o.weight_g),
        o.seed, o.F, o.target_norm);
  throw hs::Error(hs::Errc::BadParam, "unknown builtin family '" + b + "'");
}

// window |k| <= 2K must isolate every requested disc; the mode range itself
// must stay above the low modes where discs are not separated
void validate(const Opts& o, Range r) {
  if (o.K < 4)
    throw hs::Error(hs::Errc::TruncationTooSmall,
                    "K = " + std::to_string(o.K) + " is below the minimum of 4");
  if (r.lo > r.hi)
    throw hs::Error(hs::Errc::BadParam, "empty mode range " + o.n_range);
  if (r.lo < 5)
    throw hs::Error(hs::Errc::BadParam,
                    "mode range must start at n >= 5, got " + o.n_range);
  if (r.hi > 2 * o.K)
    throw hs::Error(hs::Errc::TruncationTooSmall,
                    "K = " + std::to_string(o.K) +
                        " cannot isolate modes up to n = " +
                        std::to_string(r.hi) + " (need n <= 2K)");
}

// ---- summary plumbing ------------------------------------------------------

json config_echo(const Opts& o, const hs::PotentialSpec& p, const Range& r) {
  json cfg;
  if (!o.potential_file.empty())
    cfg["potential_file"] = o.potential_file;
  else
    cfg["builtin"] = o.builtin;
  cfg["family"] = p.family();
  cfg["band_limit"] = p.band_limit();
  cfg["real_potential"] = p.is_real();
  cfg["K"] = o.K;
  cfg["n"] = {{"lo", r.lo}, {"hi", r.hi}};
  cfg["bc"] = o.bc_list.empty() ? "all" : o.bc_list;
  cfg["radius"] = o.radius;
  cfg["out"] = o.out;
  cfg["seed"] = o.seed;
  return cfg;
}

void write_summary(const std::filesystem::path& dir, const std::string& name,
                   json j) {
  j["version"] = kVersion;
  std::ofstream f(dir / (name + "_summary.json"), std::ios::binary);
  if (!f)
    throw hs::Error(hs::Errc::BadParam,
                    "cannot open output file '" +
                        (dir / (name + "_summary.json")).string() + "'");
  f << j.dump(2) << '\n';
}

std::filesystem::path prepare_out(const Opts& o) {
  std::filesystem::path dir(o.out);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec)
    throw hs::Error(hs::Errc::BadParam,
                    "cannot create output directory '" + o.out + "'");
  return dir;
}

// slates underlie slate, beta, criterion and smoothness; the optional parity
// filter keeps only the discs whose pair is taken from the requested
// boundary condition (per+ pairs live on even n, per- on odd n)
hs::SpectralSlate build_filtered_slate(const Opts& o, const hs::PotentialSpec& p,
                                       Range r, json& skipped) {
  auto slate = hs::build_slate(p, o.K, r.lo, r.hi, parse_policy(o.radius));
  bool keep_even = true, keep_odd = true;
  if (!o.bc_list.empty()) {
    auto bcs = parse_bcs(o.bc_list);
    bool has_plus = false, has_minus = false;
    for (hs::Bc bc : bcs) {
      has_plus = has_plus || bc == hs::Bc::PerPlus;
      has_minus = has_minus || bc == hs::Bc::PerMinus;
    }
    if (has_plus != has_minus) {
      keep_even = has_plus;
      keep_odd = has_minus;
    }
  }
  std::vector<hs::SlateRow> kept;
  for (auto& row : slate.rows) {
    bool even = row.n % 2 == 0;
    if ((even && !keep_even) || (!even && !keep_odd)) continue;
    if (!row.valid) {
      skipped.push_back({{"n", row.n}, {"reason", row.skip_reason}});
      continue;
    }
    kept.push_back(std::move(row));
  }
  slate.rows = std::move(kept);
  return slate;
}

// ---- subcommands -----------------------------------------------------------

int run_slate(const Opts& o) {
  auto p = make_potential(o);
  Range r = parse_range(o.n_range);
  validate(o, r);
  auto dir = prepare_out(o);
  json skipped = json::array();
  auto slate = build_filtered_slate(o, p, r, skipped);

  Csv csv(dir / "slate.csv",
          {"n", "re_lambda_plus", "im_lambda_plus", "re_lambda_minus",
           "im_lambda_minus", "re_mu", "im_mu", "re_nu", "im_nu", "abs_gamma",
           "abs_delta_dir", "abs_delta_neu", "re_z_star", "im_z_star",
           "abs_beta_plus", "abs_beta_minus", "abs_xi"});
  for (const auto& row : slate.rows)
    csv.row({fmt(row.n), fmt(row.lambda_plus.real()), fmt(row.lambda_plus.imag()),
             fmt(row.lambda_minus.real()), fmt(row.lambda_minus.imag()),
             fmt(row.mu.real()), fmt(row.mu.imag()), fmt(row.nu.real()),
             fmt(row.nu.imag()), fmt(std::abs(row.gamma)),
             fmt(std::abs(row.delta_dir)), fmt(std::abs(row.delta_neu)),
             fmt(row.z_star.real()), fmt(row.z_star.imag()),
             fmt(std::abs(row.beta_plus)), fmt(std::abs(row.beta_minus)),
             fmt(std::abs(row.xi))});

  json files = {{"csv", "slate.csv"}};
  if (o.dump_matrix) {
    for (hs::Bc bc : {hs::Bc::PerPlus, hs::Bc::PerMinus, hs::Bc::Dir,
                      hs::Bc::Neu}) {
      auto op = hs::build_matrix(p, bc, o.K);
      std::string fname = std::string("matrix_") + hs::bc_name(bc) + ".csv";
      std::ofstream mf(dir / fname, std::ios::binary);
      for (long i = 0; i < op.matrix.rows(); ++i) {
        for (long j = 0; j < op.matrix.cols(); ++j) {
          if (j) mf << ',';
          mf << fmt(op.matrix(i, j).real()) << ',' << fmt(op.matrix(i, j).imag());
        }
        mf << '\n';
      }
      files[std::string("matrix_") + hs::bc_name(bc)] = fname;
    }
  }

  json summary = {{"command", "slate"},
                  {"config", config_echo(o, p, r)},
                  {"rows_written", slate.rows.size()},
                  {"skipped", skipped},
                  {"files", files}};
  write_summary(dir, "slate", summary);
  std::cout << "slate: " << slate.rows.size() << " rows -> "
            << (dir / "slate.csv").string() << " (" << skipped.size()
            << " skipped)\n";
  return 0;
}

int run_beta(const Opts& o) {
  auto p = make_potential(o);
  Range r = parse_range(o.n_range);
  validate(o, r);
  auto dir = prepare_out(o);
  json skipped = json::array();
  auto slate = build_filtered_slate(o, p, r, skipped);

  Csv csv(dir / "beta.csv",
          {"n", "re_z_star", "im_z_star", "re_beta_plus", "im_beta_plus",
           "re_beta_minus", "im_beta_minus", "abs_alpha_diff"});
  for (const auto& row : slate.rows)
    csv.row({fmt(row.n), fmt(row.z_star.real()), fmt(row.z_star.imag()),
             fmt(row.beta_plus.real()), fmt(row.beta_plus.imag()),
             fmt(row.beta_minus.real()), fmt(row.beta_minus.imag()),
             fmt(row.alpha_asym)});

  json summary = {{"command", "beta"},
                  {"config", config_echo(o, p, r)},
                  {"rows_written", slate.rows.size()},
                  {"skipped", skipped},
                  {"files", {{"csv", "beta.csv"}}}};
  write_summary(dir, "beta", summary);
  std::cout << "beta: " << slate.rows.size() << " rows -> "
            << (dir / "beta.csv").string() << " (" << skipped.size()
            << " skipped)\n";
  return 0;
}

int run_projections(const Opts& o) {
  auto p = make_potential(o);
  Range r = parse_range(o.n_range);
  validate(o, r);
  auto dir = prepare_out(o);
  auto policy = parse_policy(o.radius);
  auto ctx = hs::make_projection_context(p, o.K);

  Csv csv(dir / "projections.csv",
          {"n", "norm_p_diff", "norm_dp_diff", "norm_dp_diff_over_n",
           "boundary_value_diff", "boundary_deriv_diff_over_n", "overlap",
           "identity_residual"});
  json skipped = json::array();
  int written = 0;
  for (int n = r.lo; n <= r.hi; ++n) {
    try {
      auto row = hs::projection_row(ctx, n, policy);
      csv.row({fmt(row.n), fmt(row.norm_p_diff), fmt(row.norm_dp_diff),
               fmt(row.norm_dp_diff_over_n), fmt(row.boundary_value_diff),
               fmt(row.boundary_deriv_diff_over_n), fmt(row.overlap),
               fmt(row.identity_residual)});
      ++written;
    } catch (const hs::Error& e) {
      skipped.push_back({{"n", n}, {"reason", e.what()}});
    }
  }

  json summary = {{"command", "projections"},
                  {"config", config_echo(o, p, r)},
                  {"rows_written", written},
                  {"skipped", skipped},
                  {"files", {{"csv", "projections.csv"}}}};
  write_summary(dir, "projections", summary);
  std::cout << "projections: " << written << " rows -> "
            << (dir / "projections.csv").string() << " (" << skipped.size()
            << " skipped)\n";
  return 0;
}

int run_oracle(const Opts& o) {
  auto p = make_potential(o);
  Range r = parse_range(o.n_range);
  validate(o, r);
  auto dir = prepare_out(o);
  bool exact = p.family() == "delta_comb";
  hs::FloquetOracle oracle(p, exact);

  const double s_lo = r.lo - 0.5, s_hi = r.hi + 0.5;
  const int npts = static_cast<int>(std::lround((s_hi - s_lo) * 16)) + 1;
  Csv csv(dir / "oracle.csv", {"lambda", "re_delta", "im_delta"});
  for (int i = 0; i < npts; ++i) {
    double s = s_lo + (s_hi - s_lo) * i / (npts - 1);
    double lambda = s * s;
    hs::cxd d = oracle.monodromy_at(lambda).discriminant();
    csv.row({fmt(lambda), fmt(d.real()), fmt(d.imag())});
  }

  Csv roots_csv(dir / "oracle_roots.csv", {"bc", "lambda"});
  json counts;
  for (hs::Bc bc : parse_bcs(o.bc_list)) {
    auto roots = oracle.spectrum_in(bc, s_lo * s_lo, s_hi * s_hi, o.oracle_tol);
    for (double root : roots) roots_csv.row({hs::bc_name(bc), fmt(root)});
    counts[hs::bc_name(bc)] = roots.size();
  }

  json summary = {{"command", "oracle"},
                  {"config", config_echo(o, p, r)},
                  {"mode", exact ? "exact-comb" : "stepped"},
                  {"grid_points", npts},
                  {"root_counts", counts},
                  {"files", {{"csv", "oracle.csv"}, {"roots", "oracle_roots.csv"}}}};
  write_summary(dir, "oracle", summary);
  std::cout << "oracle (" << (exact ? "exact-comb" : "stepped") << "): " << npts
            << " grid points, roots:";
  for (auto& [k, v] : counts.items()) std::cout << ' ' << k << '=' << v;
  std::cout << '\n';
  return 0;
}

int run_criterion(const Opts& o) {
  auto p = make_potential(o);
  Range r = parse_range(o.n_range);
  validate(o, r);
  auto dir = prepare_out(o);
  json skipped = json::array();
  auto slate = build_filtered_slate(o, p, r, skipped);
  auto rep = hs::riesz_criterion(slate, o.tol);

  Csv csv(dir / "criterion.csv", {"n", "gap_resolved", "neu_ratio", "dir_ratio",
                                  "beta_ratio_defined", "beta_ratio"});
  Csv plot(dir / "criterion_plot.csv",
           {"n", "log10_neu_ratio", "log10_dir_ratio", "log10_beta_ratio"});
  auto log_or_empty = [](bool defined, double v) {
    return (defined && v > 0.0) ? fmt(std::log10(v)) : std::string();
  };
  int resolved = 0;
  for (const auto& row : rep.rows) {
    if (row.gap_resolved) ++resolved;
    csv.row({fmt(row.n), row.gap_resolved ? "1" : "0", fmt(row.neu_ratio),
             fmt(row.dir_ratio), row.beta_ratio_defined ? "1" : "0",
             fmt(row.beta_ratio)});
    plot.row({fmt(row.n), log_or_empty(row.gap_resolved, row.neu_ratio),
              log_or_empty(row.gap_resolved, row.dir_ratio),
              log_or_empty(row.beta_ratio_defined, row.beta_ratio)});
  }

  json summary = {{"command", "criterion"},
                  {"config", config_echo(o, p, r)},
                  {"verdict", rep.verdict},
                  {"sup_neu_ratio", rep.sup_neu},
                  {"sup_dir_ratio", rep.sup_dir},
                  {"inf_beta_ratio",
                   std::isfinite(rep.inf_beta) ? json(rep.inf_beta) : json()},
                  {"inf_ratio_zero", rep.inf_ratio_zero},
                  {"vacuous", rep.vacuous},
                  {"resolved_rows", resolved},
                  {"growth_exponent", rep.growth_exponent},
                  {"skipped", skipped},
                  {"files",
                   {{"csv", "criterion.csv"}, {"plot", "criterion_plot.csv"}}}};
  write_summary(dir, "criterion", summary);

  std::cout << "verdict: " << rep.verdict << '\n'
            << "  resolved gaps:        " << resolved << " of "
            << rep.rows.size() << " rows\n"
            << "  sup |delta_neu|/|gamma| = " << rep.sup_neu << '\n'
            << "  sup |delta_dir|/|gamma| = " << rep.sup_dir << '\n'
            << "  inf |beta-|/|beta+|     = ";
  if (std::isfinite(rep.inf_beta))
    std::cout << rep.inf_beta;
  else
    std::cout << "undefined";
  std::cout << '\n';
  if (rep.verdict == "unbounded trend")
    std::cout << "  growth exponent ~ n^" << rep.growth_exponent << '\n';
  return 0;
}

int run_smoothness(const Opts& o) {
  auto p = make_potential(o);
  Range r = parse_range(o.n_range);
  validate(o, r);
  auto dir = prepare_out(o);
  json skipped = json::array();
  auto slate = build_filtered_slate(o, p, r, skipped);

  std::vector<std::pair<int, double>> seq;
  if (o.sequence == "gamma")
    seq = hs::gap_sequence(slate);
  else if (o.sequence == "delta_neu")
    seq = hs::neu_deviation_sequence(slate);
  else if (o.sequence == "delta_dir")
    seq = hs::dir_deviation_sequence(slate);
  else
    throw hs::Error(hs::Errc::BadParam,
                    "sequence must be gamma, delta_neu or delta_dir, got '" +
                        o.sequence + "'");
  hs::Weight w =
      hs::Weight::from_name(o.weight, o.weight_a, o.weight_c, o.weight_g);
  auto rep = hs::decay_classify(seq, w);

  std::map<int, double> sums(rep.partial_sums.begin(), rep.partial_sums.end());
  Csv csv(dir / "smoothness.csv", {"n", "value", "weighted_square_partial_sum"});
  Csv plot(dir / "smoothness_plot.csv", {"n", "log10_value"});
  for (const auto& [n, v] : seq) {
    csv.row({fmt(n), fmt(v), fmt(sums.at(n))});
    plot.row({fmt(n), v > 0.0 ? fmt(std::log10(v)) : std::string()});
  }

  json summary = {{"command", "smoothness"},
                  {"config", config_echo(o, p, r)},
                  {"sequence", o.sequence},
                  {"weight", w.name()},
                  {"decay_class", rep.decay_class},
                  {"fitted_param", rep.fitted_param},
                  {"fitted_stretch", rep.fitted_stretch},
                  {"fit_residual", rep.fit_residual},
                  {"sums_converged", rep.sums_converged},
                  {"tail_fraction", rep.tail_fraction},
                  {"floor_limited", rep.floor_limited},
                  {"points_fitted", rep.points_fitted},
                  {"skipped", skipped},
                  {"files",
                   {{"csv", "smoothness.csv"}, {"plot", "smoothness_plot.csv"}}}};
  write_summary(dir, "smoothness", summary);

  std::cout << "class: " << rep.decay_class;
  if (rep.decay_class == "power")
    std::cout << " (exponent " << rep.fitted_param << ")";
  else if (rep.decay_class == "exponential")
    std::cout << " (rate " << rep.fitted_param << ")";
  else if (rep.decay_class == "stretched")
    std::cout << " (rate " << rep.fitted_param << ", stretch "
              << rep.fitted_stretch << ")";
  std::cout << '\n'
            << "weighted square sums (" << w.name() << "): "
            << (rep.sums_converged ? "converge" : "diverge")
            << " (tail fraction " << rep.tail_fraction << ")\n";
  if (rep.floor_limited)
    std::cout << "note: most points sit at the noise floor\n";
  return 0;
}

int run_verify(const Opts& o) {
  auto dir = prepare_out(o);
  auto summary = hs::run_acceptance(std::cout, o.quick);

  Csv csv(dir / "verify.csv", {"id", "pass", "name", "detail"});
  json results = json::array();
  for (const auto& res : summary.results) {
    csv.row({fmt(res.id), res.pass ? "1" : "0", res.name, res.detail});
    results.push_back({{"id", res.id},
                       {"name", res.name},
                       {"pass", res.pass},
                       {"detail", res.detail}});
  }
  json j = {{"command", "verify"},
            {"quick", o.quick},
            {"passed", summary.passed},
            {"failed", summary.failed},
            {"all_pass", summary.all_pass},
            {"results", results},
            {"files", {{"csv", "verify.csv"}}}};
  write_summary(dir, "verify", j);
  return summary.all_pass ? 0 : 1;
}

void add_potential_flags(CLI::App* cmd, Opts& o) {
  cmd->add_option("--builtin", o.builtin,
                  "built-in family: zero, mathieu, delta_comb, gasymov, "
                  "sawtooth, random_weighted");
  cmd->add_option("--potential-file", o.potential_file,
                  "JSON potential: {\"family\":..., \"params\":{...}} or "
                  "{\"coeffs\": [[k, re, im], ...]}");
  cmd->add_option("--c", o.c, "mathieu cosine coefficient");
  cmd->add_option("--s", o.s, "comb/gasymov/sawtooth scale");
  cmd->add_option("--x0", o.x0, "comb location in (0, pi)");
  cmd->add_option("--r", o.r, "gasymov geometric ratio in (0, 1)");
  cmd->add_option("--norm", o.target_norm, "random family target norm");
  cmd->add_option("--F", o.F, "band limit of the built-in family");
  cmd->add_option("--seed", o.seed, "seed for the random family");
  cmd->add_option("--K", o.K, "Fourier window half-size (modes |k| <= 2K)");
  cmd->add_option("--n", o.n_range, "mode range A..B");
  cmd->add_option("--out", o.out, "output directory");
}

}  // namespace

int main(int argc, char** argv) {
  Opts o;
  CLI::App app{"hill-spectra: spectra, gap/deviation sequences, two-by-two "
               "reductions, Riesz projections and basis diagnostics for Hill "
               "operators -y'' + v y with distributional v = Q'"};
  app.require_subcommand(1);

  auto* slate = app.add_subcommand(
      "slate", "paired eigenvalue table with gap, deviation and coupling data");
  add_potential_flags(slate, o);
  slate->add_option("--bc", o.bc_list,
                    "comma list per+,per-,dir,neu; a single per+ or per- "
                    "keeps only discs of that parity");
  slate->add_option("--radius", o.radius, "disc radius policy: fixed|shrinking");
  slate->add_flag("--dump-matrix", o.dump_matrix,
                  "also write the four truncated matrices as re,im CSV");

  auto* beta = app.add_subcommand(
      "beta", "two-by-two reduction entries at the pair midpoint offset");
  add_potential_flags(beta, o);
  beta->add_option("--bc", o.bc_list, "parity filter as in slate");
  beta->add_option("--radius", o.radius, "disc radius policy: fixed|shrinking");

  auto* projections = app.add_subcommand(
      "projections",
      "Riesz-projection distances and matched-vector boundary data per mode");
  add_potential_flags(projections, o);
  projections->add_option("--radius", o.radius,
                          "disc radius policy: fixed|shrinking");

  auto* oracle = app.add_subcommand(
      "oracle", "monodromy discriminant grid and oracle eigenvalue roots");
  add_potential_flags(oracle, o);
  oracle->add_option("--bc", o.bc_list, "boundary conditions for root lists");
  oracle->add_option("--tol", o.oracle_tol, "residual bound for oracle roots");

  auto* criterion = app.add_subcommand(
      "criterion", "deviation-to-gap ratio diagnostics and basis verdict");
  add_potential_flags(criterion, o);
  criterion->add_option("--bc", o.bc_list, "parity filter as in slate");
  criterion->add_option("--radius", o.radius,
                        "disc radius policy: fixed|shrinking");
  criterion->add_option("--tol", o.tol, "gap resolution floor");

  auto* smoothness = app.add_subcommand(
      "smoothness", "decay class and weighted square sums of a slate sequence");
  add_potential_flags(smoothness, o);
  smoothness->add_option("--bc", o.bc_list, "parity filter as in slate");
  smoothness->add_option("--radius", o.radius,
                         "disc radius policy: fixed|shrinking");
  smoothness->add_option("--sequence", o.sequence,
                         "gamma, delta_neu or delta_dir");
  smoothness->add_option("--weight", o.weight,
                         "weight family: sobolev, exponential, gevrey");
  smoothness->add_option("--a", o.weight_a, "sobolev exponent");
  smoothness->add_option("--wc", o.weight_c, "exponential/gevrey rate");
  smoothness->add_option("--g", o.weight_g, "gevrey exponent");

  auto* verify = app.add_subcommand(
      "verify", "run the release checks; exit 0 only if every check passes");
  verify->add_flag("--quick", o.quick,
                   "smaller ranges and truncations, identical thresholds");
  verify->add_option("--out", o.out, "output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    json err = {{"error", {{"code", "BadParam"}, {"message", e.what()}}}};
    std::cerr << err.dump() << '\n';
    return 2;
  }

  try {
    if (slate->parsed()) return run_slate(o);
    if (beta->parsed()) return run_beta(o);
    if (projections->parsed()) return run_projections(o);
    if (oracle->parsed()) return run_oracle(o);
    if (criterion->parsed()) return run_criterion(o);
    if (smoothness->parsed()) return run_smoothness(o);
    if (verify->parsed()) return run_verify(o);
  } catch (const hs::Error& e) {
    json err = {{"error", {{"code", e.code_name()}, {"message", e.what()}}}};
    std::cerr << err.dump() << '\n';
    return hs::errc_is_config(e.code()) ? 2 : 3;
  } catch (const std::exception& e) {
    json err = {{"error", {{"code", "Internal"}, {"message", e.what()}}}};
    std::cerr << err.dump() << '\n';
    return 3;
  }
  return 0;
}
