// python bindings for the Hill-operator spectral library
#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "hillspectra/acceptance.hpp"
#include "hillspectra/eigensolve.hpp"
#include "hillspectra/operator_matrix.hpp"
#include "hillspectra/oracle.hpp"
#include "hillspectra/pairing.hpp"
#include "hillspectra/projection.hpp"
#include "hillspectra/schmidt.hpp"
#include "hillspectra/sequences.hpp"

namespace py = pybind11;
using namespace hillspectra;

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Spectra, gap/deviation sequences, two-by-two reductions, Riesz "
      "projections and basis diagnostics for Hill operators -y'' + v y "
      "with distributional v = Q'";

  py::register_exception<Error>(m, "HillSpectraError");

  py::enum_<Bc>(m, "Bc")
      .value("PER_PLUS", Bc::PerPlus)
      .value("PER_MINUS", Bc::PerMinus)
      .value("DIR", Bc::Dir)
      .value("NEU", Bc::Neu);
  m.def("bc_for_mode", &bc_for_mode, py::arg("n"),
        "boundary condition whose spectrum pairs at the disc around n^2");

  py::class_<Weight>(m, "Weight")
      .def_static("sobolev", &Weight::sobolev, py::arg("a"))
      .def_static("exponential", &Weight::exponential, py::arg("c"))
      .def_static("gevrey", &Weight::gevrey, py::arg("c"), py::arg("g"))
      .def("omega", &Weight::omega, py::arg("m"))
      .def("big_omega", &Weight::big_omega, py::arg("m"))
      .def("name", &Weight::name);

  py::class_<PotentialSpec>(m, "PotentialSpec")
      .def_static("zero", &PotentialSpec::zero)
      .def_static("mathieu", &PotentialSpec::mathieu, py::arg("c"))
      .def_static("delta_comb", &PotentialSpec::delta_comb, py::arg("s"),
                  py::arg("x0"), py::arg("F"))
      .def_static("gasymov", &PotentialSpec::gasymov, py::arg("s"),
                  py::arg("r"), py::arg("F"))
      .def_static("sawtooth", &PotentialSpec::sawtooth, py::arg("s"),
                  py::arg("F"))
      .def_static("random_weighted", &PotentialSpec::random_weighted,
                  py::arg("weight"), py::arg("seed"), py::arg("F"),
                  py::arg("target_norm"))
      .def_static(
          "from_coeffs",
          [](const std::map<int, cxd>& coeffs) {
            return PotentialSpec::from_coeffs(coeffs);
          },
          py::arg("coeffs"))
      .def_property_readonly("family", &PotentialSpec::family)
      .def_property_readonly("band_limit", &PotentialSpec::band_limit)
      .def("coeffs", &PotentialSpec::coeffs)
      .def("q", &PotentialSpec::q, py::arg("k"))
      .def("q_l2", &PotentialSpec::q_l2)
      .def("is_real", &PotentialSpec::is_real)
      .def("weighted_norm", &PotentialSpec::weighted_norm, py::arg("weight"));

  py::class_<TruncatedOperator>(m, "TruncatedOperator")
      .def_readonly("bc", &TruncatedOperator::bc)
      .def_readonly("K", &TruncatedOperator::K)
      .def_readonly("indices", &TruncatedOperator::indices)
      .def_readonly("matrix", &TruncatedOperator::matrix)
      .def_readonly("window_snug", &TruncatedOperator::window_snug);
  m.def("build_matrix", &build_matrix, py::arg("potential"), py::arg("bc"),
        py::arg("K"), "dense truncation of the operator on the Fourier window");
  m.def("eigenvalues", &eigenvalues, py::arg("matrix"),
        "dense eigenvalues sorted by (Re, Im)");

  py::class_<ReducedMatrix>(m, "ReducedMatrix")
      .def_readonly("n", &ReducedMatrix::n)
      .def_readonly("z", &ReducedMatrix::z)
      .def_readonly("alpha11", &ReducedMatrix::alpha11)
      .def_readonly("alpha22", &ReducedMatrix::alpha22)
      .def_readonly("beta_plus", &ReducedMatrix::beta_plus)
      .def_readonly("beta_minus", &ReducedMatrix::beta_minus)
      .def_readonly("in_validity_disc", &ReducedMatrix::in_validity_disc);
  m.def("reduce_2x2", &reduce_2x2, py::arg("op"), py::arg("n"), py::arg("z"),
        "Schur complement of the truncated operator onto the mode pair "
        "{n, -n} at offset z, shifted so the free operator gives zero");
  m.def("characteristic_residual",
        py::overload_cast<const TruncatedOperator&, int, cxd>(
            &characteristic_residual),
        py::arg("op"), py::arg("n"), py::arg("z"));
  m.def("reduction_roots", &reduction_roots, py::arg("op"), py::arg("n"),
        py::arg("z_center"));

  py::class_<SlateRow>(m, "SlateRow")
      .def_readonly("n", &SlateRow::n)
      .def_readonly("valid", &SlateRow::valid)
      .def_readonly("skip_reason", &SlateRow::skip_reason)
      .def_readonly("lambda_plus", &SlateRow::lambda_plus)
      .def_readonly("lambda_minus", &SlateRow::lambda_minus)
      .def_readonly("mu", &SlateRow::mu)
      .def_readonly("nu", &SlateRow::nu)
      .def_readonly("gamma", &SlateRow::gamma)
      .def_readonly("delta_dir", &SlateRow::delta_dir)
      .def_readonly("delta_neu", &SlateRow::delta_neu)
      .def_readonly("z_star", &SlateRow::z_star)
      .def_readonly("beta_plus", &SlateRow::beta_plus)
      .def_readonly("beta_minus", &SlateRow::beta_minus)
      .def_readonly("beta_plus_zp", &SlateRow::beta_plus_zp)
      .def_readonly("beta_minus_zp", &SlateRow::beta_minus_zp)
      .def_readonly("xi", &SlateRow::xi)
      .def_readonly("w0", &SlateRow::w0)
      .def_readonly("u0", &SlateRow::u0)
      .def_readonly("char_residual_plus", &SlateRow::char_residual_plus)
      .def_readonly("char_residual_minus", &SlateRow::char_residual_minus)
      .def_readonly("alpha_asym", &SlateRow::alpha_asym)
      .def_readonly("degenerate", &SlateRow::degenerate);
  py::class_<SpectralSlate>(m, "SpectralSlate")
      .def_readonly("K", &SpectralSlate::K)
      .def_readonly("n_min", &SpectralSlate::n_min)
      .def_readonly("n_max", &SpectralSlate::n_max)
      .def_readonly("rows", &SpectralSlate::rows);
  py::enum_<RadiusPolicy>(m, "RadiusPolicy")
      .value("FIXED_QUARTER", RadiusPolicy::FixedQuarter)
      .value("SHRINKING", RadiusPolicy::Shrinking);
  m.def("build_slate", &build_slate, py::arg("potential"), py::arg("K"),
        py::arg("n_min"), py::arg("n_max"),
        py::arg("policy") = RadiusPolicy::FixedQuarter,
        "paired eigenvalues with gap, deviation and coupling data per mode");

  py::class_<ProjectionReport>(m, "ProjectionReport")
      .def_readonly("n", &ProjectionReport::n)
      .def_readonly("norm_p_diff", &ProjectionReport::norm_p_diff)
      .def_readonly("norm_dp_diff", &ProjectionReport::norm_dp_diff)
      .def_readonly("nodes", &ProjectionReport::nodes)
      .def_readonly("converged", &ProjectionReport::converged);
  m.def("projection_norms", &projection_norms, py::arg("potential"),
        py::arg("bc"), py::arg("K"), py::arg("n"),
        py::arg("policy") = RadiusPolicy::FixedQuarter);

  py::class_<ProjectionContext>(m, "ProjectionContext");
  m.def("make_projection_context", &make_projection_context,
        py::arg("potential"), py::arg("K"));
  py::class_<ProjectionRow>(m, "ProjectionRow")
      .def_readonly("n", &ProjectionRow::n)
      .def_readonly("norm_p_diff", &ProjectionRow::norm_p_diff)
      .def_readonly("norm_dp_diff", &ProjectionRow::norm_dp_diff)
      .def_readonly("norm_dp_diff_over_n", &ProjectionRow::norm_dp_diff_over_n)
      .def_readonly("boundary_value_diff", &ProjectionRow::boundary_value_diff)
      .def_readonly("boundary_deriv_diff_over_n",
                    &ProjectionRow::boundary_deriv_diff_over_n)
      .def_readonly("overlap", &ProjectionRow::overlap)
      .def_readonly("identity_residual", &ProjectionRow::identity_residual)
      .def_readonly("degenerate", &ProjectionRow::degenerate);
  m.def("projection_row", &projection_row, py::arg("ctx"), py::arg("n"),
        py::arg("policy") = RadiusPolicy::FixedQuarter);

  py::class_<FloquetOracle::PairResult>(m, "OraclePair")
      .def_readonly("lambda_plus", &FloquetOracle::PairResult::lambda_plus)
      .def_readonly("lambda_minus", &FloquetOracle::PairResult::lambda_minus)
      .def_readonly("lambda_hat", &FloquetOracle::PairResult::lambda_hat)
      .def_readonly("half_width", &FloquetOracle::PairResult::half_width)
      .def_readonly("split_resolved",
                    &FloquetOracle::PairResult::split_resolved);
  py::class_<FloquetOracle>(m, "FloquetOracle")
      .def(py::init<const PotentialSpec&, bool>(), py::arg("potential"),
           py::arg("exact_comb") = false)
      .def("discriminant",
           [](const FloquetOracle& o, cxd lam) {
             return o.monodromy_at(lam).discriminant();
           },
           py::arg("lam"))
      .def("monodromy",
           [](const FloquetOracle& o, cxd lam) {
             return Eigen::Matrix2cd(o.monodromy_at(lam).M);
           },
           py::arg("lam"))
      .def("spectrum_in", &FloquetOracle::spectrum_in, py::arg("bc"),
           py::arg("lo"), py::arg("hi"), py::arg("tol") = 1e-9)
      .def("periodic_pair_near", &FloquetOracle::periodic_pair_near,
           py::arg("n"))
      .def("dirichlet_near", &FloquetOracle::dirichlet_near, py::arg("n"))
      .def("neumann_near", &FloquetOracle::neumann_near, py::arg("n"))
      .def_property_readonly("exact_mode", &FloquetOracle::exact_mode);

  py::class_<SandwichRow>(m, "SandwichRow")
      .def_readonly("n", &SandwichRow::n)
      .def_readonly("couplings", &SandwichRow::couplings)
      .def_readonly("gap_plus_neu", &SandwichRow::gap_plus_neu)
      .def_readonly("gap_plus_dir", &SandwichRow::gap_plus_dir)
      .def_readonly("xi_plus_gap", &SandwichRow::xi_plus_gap)
      .def_readonly("all_pass", &SandwichRow::all_pass);
  py::class_<SandwichReport>(m, "SandwichReport")
      .def_readonly("rows", &SandwichReport::rows)
      .def_readonly("onset", &SandwichReport::onset);
  m.def("sandwich_report", &sandwich_report, py::arg("slate"));

  py::enum_<GapCase>(m, "GapCase")
      .value("CASE1", GapCase::Case1)
      .value("CASE2A", GapCase::Case2a)
      .value("CASE2B", GapCase::Case2b);
  py::class_<CaseRow>(m, "CaseRow")
      .def_readonly("n", &CaseRow::n)
      .def_readonly("label", &CaseRow::label)
      .def_readonly("boundary_ratio", &CaseRow::boundary_ratio)
      .def_readonly("boundary_ratio_ok", &CaseRow::boundary_ratio_ok)
      .def_readonly("case1_coupling_ok", &CaseRow::case1_coupling_ok);
  m.def("case_table", &case_table, py::arg("slate"));

  py::class_<CriterionReport>(m, "CriterionReport")
      .def_readonly("sup_neu", &CriterionReport::sup_neu)
      .def_readonly("sup_dir", &CriterionReport::sup_dir)
      .def_readonly("inf_beta", &CriterionReport::inf_beta)
      .def_readonly("vacuous", &CriterionReport::vacuous)
      .def_readonly("inf_ratio_zero", &CriterionReport::inf_ratio_zero)
      .def_readonly("verdict", &CriterionReport::verdict)
      .def_readonly("growth_exponent", &CriterionReport::growth_exponent);
  m.def("riesz_criterion", &riesz_criterion, py::arg("slate"),
        py::arg("tol") = 1e-10);

  py::class_<DecayReport>(m, "DecayReport")
      .def_readonly("partial_sums", &DecayReport::partial_sums)
      .def_readonly("sums_converged", &DecayReport::sums_converged)
      .def_readonly("tail_fraction", &DecayReport::tail_fraction)
      .def_readonly("decay_class", &DecayReport::decay_class)
      .def_readonly("fitted_param", &DecayReport::fitted_param)
      .def_readonly("fitted_stretch", &DecayReport::fitted_stretch)
      .def_readonly("floor_limited", &DecayReport::floor_limited)
      .def_readonly("points_fitted", &DecayReport::points_fitted);
  m.def("decay_classify", &decay_classify, py::arg("seq"), py::arg("weight"));
  m.def("gap_sequence", &gap_sequence, py::arg("slate"));
  m.def("neu_deviation_sequence", &neu_deviation_sequence, py::arg("slate"));
  m.def("dir_deviation_sequence", &dir_deviation_sequence, py::arg("slate"));

  py::class_<CriterionResult>(m, "CheckResult")
      .def_readonly("id", &CriterionResult::id)
      .def_readonly("name", &CriterionResult::name)
      .def_readonly("pass_", &CriterionResult::pass)
      .def_readonly("detail", &CriterionResult::detail);
  py::class_<AcceptanceSummary>(m, "AcceptanceSummary")
      .def_readonly("results", &AcceptanceSummary::results)
      .def_readonly("passed", &AcceptanceSummary::passed)
      .def_readonly("failed", &AcceptanceSummary::failed)
      .def_readonly("all_pass", &AcceptanceSummary::all_pass);
  m.def(
      "run_acceptance",
      [](bool quick) {
        std::ostringstream out;
        auto summary = run_acceptance(out, quick);
        return py::make_tuple(summary, out.str());
      },
      py::arg("quick") = false,
      "run the release checks; returns (summary, report_text)");
}
