#include <cmath>
#include <map>
#include <vector>

#include "doctest.h"
#include "hillspectra/sequences.hpp"

using namespace hillspectra;

namespace {

const SlateRow& row_at(const SpectralSlate& slate, int n) {
  return slate.rows.at(static_cast<std::size_t>(n - slate.n_min));
}

// slates reused across cases; built once per process
const SpectralSlate& mathieu_slate() {
  static const SpectralSlate s = build_slate(PotentialSpec::mathieu(1.0), 64, 6, 16);
  return s;
}
const SpectralSlate& comb_slate() {
  static const SpectralSlate s =
      build_slate(PotentialSpec::delta_comb(1.0, M_PI / 2, 64), 96, 12, 22);
  return s;
}
const SpectralSlate& gasymov_slate() {
  static const SpectralSlate s =
      build_slate(PotentialSpec::gasymov(1.0, 0.5, 16), 64, 6, 20);
  return s;
}

// coefficient phase rotation q_k -> e^{ik theta} q_k (a translation of the
// potential); coupling magnitudes must be unchanged by it
PotentialSpec rotate(const PotentialSpec& p, double theta) {
  std::map<int, cxd> rotated;
  for (const auto& [k, q] : p.coeffs())
    rotated[k] = q * std::exp(cxd(0.0, k * theta));
  return PotentialSpec::from_coeffs(rotated);
}

}  // namespace

TEST_CASE("values at the noise floor are treated as zero") {
  CHECK(snap_to_zero(5e-11) == 0.0);
  CHECK(snap_to_zero(-5e-11) == 0.0);
  CHECK(snap_to_zero(2e-10) == 2e-10);
}

TEST_CASE("zero-potential sandwich holds as equalities of zeros") {
  auto report = sandwich_report(build_slate(PotentialSpec::zero(), 24, 6, 12));
  REQUIRE(report.rows.size() == 7);
  for (const auto& s : report.rows) {
    CHECK(s.couplings == 0.0);
    CHECK(s.gap_plus_neu == 0.0);
    CHECK(s.all_pass);
    CHECK(s.dir_neu_consistent);
  }
  CHECK(report.onset == 6);
}

TEST_CASE("mathieu sandwich holds with the fixed constants") {
  auto report = sandwich_report(mathieu_slate());
  REQUIRE(report.rows.size() == 11);
  for (const auto& s : report.rows) {
    CHECK(s.all_pass);
    CHECK(s.dir_neu_consistent);
  }
  CHECK(report.onset == 6);
  // the n = 6 row is above the noise floor, so the brackets bite there
  CHECK(report.rows.front().couplings > 1e-8);
  CHECK(report.rows.front().gap_plus_neu > 1e-8);
}

TEST_CASE("comb sandwich holds at order-one scales") {
  auto report = sandwich_report(comb_slate());
  REQUIRE(report.rows.size() == 11);
  for (const auto& s : report.rows) {
    CHECK(s.couplings > 0.1);
    CHECK(s.gap_plus_neu > 0.1);
    CHECK(s.all_pass);
    CHECK(s.dir_neu_consistent);
  }
}

TEST_CASE("even real potentials classify as balanced coupling") {
  auto slate = build_slate(PotentialSpec::mathieu(1.0), 48, 6, 12);
  for (const auto& c : case_table(slate)) {
    CHECK(c.label == GapCase::Case1);
    CHECK(c.case1_coupling_ok);
  }
}

TEST_CASE("one-sided potentials classify as upper-coupling dominance") {
  const auto& slate = gasymov_slate();
  auto table = case_table(slate);
  REQUIRE(table.size() == 15);
  for (const auto& c : table) {
    if (c.n <= 16) {
      // the upper coupling is live here while the lower one is zero
      CHECK(c.label == GapCase::Case2b);
    }
    if (c.label != GapCase::Case1) {
      CHECK(c.boundary_ratio_ok);
      CHECK(c.boundary_ratio >= 0.25);
      CHECK(c.boundary_ratio <= 4.0);
    } else {
      // a tie can only come from both couplings sitting at the floor
      CHECK(snap_to_zero(std::abs(row_at(slate, c.n).beta_plus_zp)) == 0.0);
    }
  }
}

TEST_CASE("case labels are invariant under coefficient phase rotation") {
  auto p = PotentialSpec::delta_comb(1.0, M_PI / 2, 32);
  auto q = rotate(p, 0.7);
  auto a = build_slate(p, 48, 10, 14);
  auto b = build_slate(q, 48, 10, 14);
  for (int n = 10; n <= 14; ++n) {
    const auto& ra = row_at(a, n);
    const auto& rb = row_at(b, n);
    REQUIRE(ra.valid);
    REQUIRE(rb.valid);
    CHECK(classify_case(ra) == classify_case(rb));
    CHECK(std::abs(std::abs(ra.beta_plus_zp) - std::abs(rb.beta_plus_zp)) <=
          1e-8);
    CHECK(std::abs(std::abs(ra.beta_minus_zp) - std::abs(rb.beta_minus_zp)) <=
          1e-8);
    CHECK(std::abs(std::abs(ra.gamma) - std::abs(rb.gamma)) <= 1e-8);
  }
}

TEST_CASE("ratio report is bounded for the even real potential") {
  auto report = riesz_criterion(mathieu_slate());
  CHECK_FALSE(report.vacuous);
  CHECK(report.verdict == "bounded");
  CHECK_FALSE(report.inf_ratio_zero);
  CHECK(report.sup_neu >= 0.0);
  CHECK(std::isfinite(report.sup_neu));
}

TEST_CASE("ratio report is bounded for the singular comb") {
  auto report = riesz_criterion(comb_slate());
  CHECK_FALSE(report.vacuous);
  CHECK(report.verdict == "bounded");
  CHECK(report.sup_neu > 0.0);
  CHECK(std::isfinite(report.sup_neu));
  // couplings are balanced for this real potential
  CHECK(report.inf_beta > 0.1);
}

TEST_CASE("collapsed-gap potential is flagged through the coupling ratio") {
  auto report = riesz_criterion(gasymov_slate());
  CHECK(report.vacuous);  // every gap sits at the floor
  CHECK(report.inf_ratio_zero);
  CHECK(report.inf_beta == 0.0);
  CHECK(report.verdict == "vacuous");
}

TEST_CASE("zero potential ratio report is vacuously bounded") {
  auto report = riesz_criterion(build_slate(PotentialSpec::zero(), 24, 6, 14));
  CHECK(report.vacuous);
  CHECK_FALSE(report.inf_ratio_zero);
  CHECK(report.verdict == "bounded");
}

TEST_CASE("decay classification separates the sample families") {
  Weight sob = Weight::sobolev(2.0);

  auto zero_seq = gap_sequence(build_slate(PotentialSpec::zero(), 24, 5, 14));
  auto zero_rep = decay_classify(zero_seq, sob);
  CHECK(zero_rep.decay_class == "zero");
  CHECK(zero_rep.sums_converged);
  CHECK(zero_rep.partial_sums.back().second == 0.0);

  auto mathieu_slate = build_slate(PotentialSpec::mathieu(1.0), 32, 2, 14);
  auto mathieu_rep = decay_classify(gap_sequence(mathieu_slate), sob);
  CHECK(mathieu_rep.decay_class == "exponential");
  CHECK(mathieu_rep.fitted_param > 0.0);
  CHECK(mathieu_rep.sums_converged);

  auto comb_slate =
      build_slate(PotentialSpec::delta_comb(1.0, M_PI / 2, 48), 72, 10, 24);
  auto comb_rep = decay_classify(gap_sequence(comb_slate), sob);
  CHECK(comb_rep.decay_class == "none");
  CHECK_FALSE(comb_rep.sums_converged);

  auto gas_rep = decay_classify(gap_sequence(gasymov_slate()), sob);
  CHECK(gas_rep.decay_class == "zero");
  CHECK(gas_rep.floor_limited);
}

TEST_CASE("decay classification needs enough points") {
  Weight sob = Weight::sobolev(2.0);
  std::vector<std::pair<int, double>> five = {
      {6, 1e-2}, {7, 1e-3}, {8, 1e-4}, {9, 1e-5}, {10, 1e-6}};
  CHECK_THROWS_AS(decay_classify(five, sob), Error);
}

TEST_CASE("synthetic decay shapes are recovered") {
  Weight flat = Weight::sobolev(0.0);
  std::vector<std::pair<int, double>> power, expo;
  for (int n = 4; n <= 40; n += 2) {
    power.emplace_back(n, 3.0 * std::pow(n, -2.5));
    expo.emplace_back(n, 0.7 * std::exp(-0.8 * n));
  }
  auto p = decay_classify(power, flat);
  CHECK(p.decay_class == "power");
  CHECK(p.fitted_param == doctest::Approx(2.5).epsilon(0.05));
  auto e = decay_classify(expo, flat);
  CHECK(e.decay_class == "exponential");
  CHECK(e.fitted_param == doctest::Approx(0.8).epsilon(0.05));
}
