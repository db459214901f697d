#include <cmath>
#include <vector>

#include "doctest.h"
#include "hillspectra/eigensolve.hpp"
#include "hillspectra/operator_matrix.hpp"
#include "hillspectra/projection.hpp"
#include "hillspectra/schmidt.hpp"

using namespace hillspectra;

TEST_CASE("free contour projection is the coordinate projection") {
  auto op = build_matrix(PotentialSpec::zero(), Bc::PerPlus, 16);
  auto proj = projection(op, 4, 1.0);
  Matrix p0 = coordinate_projection(Bc::PerPlus, 16, 4);
  CHECK((proj.p - p0).cwiseAbs().maxCoeff() < 1e-13);
  CHECK(std::abs(proj.trace - cxd(2.0, 0.0)) < 1e-13);
  CHECK(proj.idempotency_defect < 1e-13);
}

TEST_CASE("mathieu projection is idempotent with the right rank") {
  auto op = build_matrix(PotentialSpec::mathieu(1.0), Bc::PerPlus, 64);
  auto proj = projection(op, 10, 2.5);
  CHECK(proj.converged);
  CHECK(proj.idempotency_defect <= 1e-9);
  CHECK(std::abs(proj.trace - cxd(2.0, 0.0)) <= 1e-9);
}

TEST_CASE("comb neumann projection has unit rank") {
  auto op =
      build_matrix(PotentialSpec::delta_comb(1.0, pi / 2.0, 128), Bc::Neu, 128);
  auto proj = projection(op, 10, 2.5);
  CHECK(std::abs(proj.trace - cxd(1.0, 0.0)) <= 1e-8);
}

TEST_CASE("contour through an eigenvalue is rejected") {
  auto op = build_matrix(PotentialSpec::zero(), Bc::PerPlus, 16);
  CHECK_THROWS_WITH_AS(projection(op, 4, 20.0),
                       doctest::Contains("EnclosureViolation"), Error);
}

TEST_CASE("free projection norms vanish") {
  auto rep = projection_norms(PotentialSpec::zero(), Bc::PerPlus, 16, 4);
  CHECK(rep.norm_p_diff <= 1e-12);
  CHECK(rep.norm_dp_diff <= 1e-12);
}

TEST_CASE("projection norms decay for a smooth potential") {
  auto p = PotentialSpec::mathieu(1.0);
  double prev = 1e9;
  for (int n : {8, 16, 32}) {
    auto rep = projection_norms(p, Bc::PerPlus, 64, n);
    CHECK(rep.norm_p_diff < prev);
    prev = rep.norm_p_diff;
  }
}

TEST_CASE("free invariant pair carries free boundary data") {
  auto p = PotentialSpec::zero();
  auto op = build_matrix(p, Bc::PerPlus, 16);
  auto pair = invariant_pair(op, p, 4);
  CHECK(pair.degenerate);
  CHECK(std::abs(pair.lambda_plus - 16.0) <= 1e-10);
  CHECK(std::abs(pair.gamma) <= 1e-10);
  CHECK(std::abs(pair.xi) <= 1e-10);
  CHECK(std::abs(pair.f.norm() - 1.0) <= 1e-12);
  CHECK(std::abs(pair.f.dot(pair.phi)) <= 1e-12);
  CHECK((op.matrix * pair.f - pair.lambda_plus * pair.f).norm() <= 1e-9);
  // Q vanishes, so quasi-derivatives equal plain derivatives
  CHECK(std::abs(pair.w0 - pair.df_at_0) <= 1e-14);
  CHECK(std::abs(pair.u0 - pair.dphi_at_0) <= 1e-14);
  // everything lives in the two free modes
  CHECK(std::abs(pair.f_at_0 - pair.f0_at_0) <= 1e-12);
  CHECK(std::abs(pair.df_at_0 - pair.df0_at_0) <= 1e-12);
}

TEST_CASE("mathieu invariant pair satisfies its defining relations") {
  auto spec = PotentialSpec::mathieu(1.0);
  auto op = build_matrix(spec, Bc::PerPlus, 64);
  auto pair = invariant_pair(op, spec, 10);
  CHECK(std::abs(pair.f.norm() - 1.0) <= 1e-10);
  CHECK(std::abs(pair.phi.norm() - 1.0) <= 1e-10);
  CHECK(std::abs(pair.f.dot(pair.phi)) <= 1e-10);
  CHECK((op.matrix * pair.f - pair.lambda_plus * pair.f).norm() <= 1e-8);
  CHECK((op.matrix * pair.phi - pair.lambda_minus * pair.phi -
         pair.xi * pair.f)
            .norm() <= 1e-8);

  // eigenvalues agree with the dense spectrum inside the disc
  auto vals = eigenvalues(op.matrix);
  std::vector<double> close;
  for (int i = 0; i < vals.size(); ++i)
    if (std::abs(vals(i) - cxd(100.0, 0.0)) < 2.5)
      close.push_back(vals(i).real());
  REQUIRE(close.size() == 2);
  std::sort(close.begin(), close.end());
  CHECK(std::abs(pair.lambda_minus - close[0]) <= 1e-9);
  CHECK(std::abs(pair.lambda_plus - close[1]) <= 1e-9);
}

TEST_CASE("pair invariants sandwich the reduced couplings") {
  // rows where the quantities sit well above the eigensolver noise floor:
  // a narrow but resolvable gap, and a wide comb gap
  auto run = [](const PotentialSpec& spec, int n, int K) {
    auto op = build_matrix(spec, bc_for_mode(n), K);
    auto pair = invariant_pair(op, spec, n);
    cxd z_star = 0.5 * (pair.lambda_plus + pair.lambda_minus) -
                 static_cast<double>(n) * n;
    auto red = reduce_2x2(op, n, z_star);
    double couplings = std::abs(red.beta_plus) + std::abs(red.beta_minus);
    double invariants = std::abs(pair.xi) + std::abs(pair.gamma);
    CHECK(couplings > 1e-10);
    CHECK(invariants >= couplings / 5.0);
    CHECK(invariants <= 9.0 * couplings);
  };
  run(PotentialSpec::mathieu(1.0), 6, 64);
  run(PotentialSpec::delta_comb(1.0, pi / 2.0, 64), 10, 96);
}

TEST_CASE("one-sided potential yields a jordan-type pair") {
  auto spec = PotentialSpec::gasymov(1.0, 0.5, 16);
  auto op = build_matrix(spec, Bc::PerPlus, 64);
  auto pair = invariant_pair(op, spec, 10);
  CHECK(std::abs(pair.gamma) <= 1e-7);
  CHECK(std::abs(pair.xi) > 1e-6);
}

TEST_CASE("free matched vector is the cosine mode") {
  auto p = PotentialSpec::zero();
  auto op = build_matrix(p, Bc::PerPlus, 16);
  auto mv = neumann_matched_vector(invariant_pair(op, p, 4));
  CHECK(std::abs(mv.quasi_deriv_at_0) <= 1e-12);
  CHECK(std::abs(std::abs(mv.a) * std::abs(mv.a) +
                 std::abs(mv.b) * std::abs(mv.b) - 1.0) <= 1e-12);
  int pn = op.position_of(4), pm = op.position_of(-4);
  CHECK(std::abs(mv.g_vec(pn) - mv.g_vec(pm)) <= 1e-12);
  CHECK(std::abs(std::abs(mv.value_at_0) - std::sqrt(2.0)) <= 1e-12);
}

TEST_CASE("matched vector satisfies both endpoint conditions") {
  auto spec = PotentialSpec::mathieu(1.0);
  for (int n : {9, 10}) {
    auto op = build_matrix(spec, bc_for_mode(n), 64);
    auto pair = invariant_pair(op, spec, n);
    auto mv = neumann_matched_vector(pair);
    CHECK(std::abs(mv.quasi_deriv_at_0) <= 1e-8);
    CHECK(std::abs(std::abs(mv.a) * std::abs(mv.a) +
                   std::abs(mv.b) * std::abs(mv.b) - 1.0) <= 1e-12);
    // quasi-derivative at pi: the half-period phases e^{ik pi} = +-1 are
    // uniform across the window, so the endpoint value is +- the 0 value
    cxd q0 = spec.q_at_zero();
    cxd val_pi(0.0, 0.0), der_pi(0.0, 0.0);
    for (int j = 0; j < mv.g_vec.size(); ++j) {
      int k = op.indices[j];
      double sign = (k % 2 == 0) ? 1.0 : -1.0;
      val_pi += sign * mv.g_vec(j);
      der_pi += sign * cxd(0.0, static_cast<double>(k)) * mv.g_vec(j);
    }
    CHECK(std::abs(der_pi - q0 * val_pi) <= 1e-6);
  }
}

TEST_CASE("matched vector stays within the projection error of its free part") {
  auto spec = PotentialSpec::mathieu(1.0);
  auto op = build_matrix(spec, Bc::PerPlus, 64);
  auto proj = projection(op, 10, 2.5);
  auto pair = invariant_pair(op, spec, 10);
  auto mv = neumann_matched_vector(pair);
  Matrix p0 = coordinate_projection(Bc::PerPlus, 64, 10);
  double norm_p_diff = projection_norms(spec, Bc::PerPlus, 64, 10).norm_p_diff;
  CHECK((mv.g_vec - p0 * mv.g_vec).norm() <= norm_p_diff + 1e-12);
  CHECK(proj.idempotency_defect <= 1e-9);
}

TEST_CASE("deviation identity holds along the smooth slate") {
  auto ctx = make_projection_context(PotentialSpec::mathieu(1.0), 64);
  for (int n : {10, 20}) {
    auto row = projection_row(ctx, n);
    CHECK(row.identity_residual <=
          1e-7 * (1.0 + std::abs(row.delta_neu)));
    CHECK(row.overlap >= 71.0 / 72.0);
    CHECK(row.norm_p_diff > 0.0);
  }
}

TEST_CASE("deviation identity is exact for the free operator") {
  auto ctx = make_projection_context(PotentialSpec::zero(), 16);
  auto row = projection_row(ctx, 4);
  CHECK(row.identity_residual <= 1e-12);
  CHECK(std::abs(row.overlap - 1.0) <= 1e-10);
  CHECK(row.boundary_value_diff <= 1e-12);
}

TEST_CASE("derivative-weighted norms decay for the comb") {
  auto ctx =
      make_projection_context(PotentialSpec::delta_comb(1.0, pi / 2.0, 128), 128);
  double prev = 1e9;
  for (int n : {8, 16, 32, 48}) {
    auto row = projection_row(ctx, n);
    CHECK(row.norm_dp_diff_over_n < prev);
    prev = row.norm_dp_diff_over_n;
  }
}

TEST_CASE("mismatched frames are rejected") {
  auto spec = PotentialSpec::mathieu(1.0);
  auto op = build_matrix(spec, Bc::PerPlus, 16);
  auto pair = invariant_pair(op, spec, 4);
  auto mv = neumann_matched_vector(pair);
  Vector wrong = Vector::Zero(10);
  CHECK_THROWS_WITH_AS(
      deviation_identity_residual(pair, mv, cxd(0.0, 0.0), wrong),
      doctest::Contains("FrameMismatch"), Error);
}
