#include <cmath>
#include <vector>

#include "doctest.h"
#include "hillspectra/eigensolve.hpp"
#include "hillspectra/operator_matrix.hpp"
#include "hillspectra/schmidt.hpp"

using namespace hillspectra;

namespace {

// the two eigenvalues of a periodic-type matrix inside the radius-n/4 disc
// around n^2, sorted so the larger real part comes first
std::vector<cxd> disc_pair(const TruncatedOperator& op, int n) {
  auto vals = eigenvalues(op.matrix);
  std::vector<cxd> close;
  double n2 = static_cast<double>(n) * n;
  for (int i = 0; i < vals.size(); ++i)
    if (std::abs(vals(i) - n2) < 0.25 * n) close.push_back(vals(i));
  std::sort(close.begin(), close.end(), [](cxd a, cxd b) {
    return a.real() > b.real() || (a.real() == b.real() && a.imag() > b.imag());
  });
  return close;
}

}  // namespace

TEST_CASE("free reduction vanishes identically") {
  auto op = build_matrix(PotentialSpec::zero(), Bc::PerPlus, 16);
  for (cxd z : {cxd(0.0, 0.0), cxd(0.3, 0.2)}) {
    auto red = reduce_2x2(op, 4, z);
    CHECK(std::abs(red.alpha11) == 0.0);
    CHECK(std::abs(red.alpha22) == 0.0);
    CHECK(std::abs(red.beta_plus) == 0.0);
    CHECK(std::abs(red.beta_minus) == 0.0);
    CHECK(red.in_validity_disc);
  }
  CHECK_FALSE(reduce_2x2(op, 4, cxd(2.0, 0.0)).in_validity_disc);
}

TEST_CASE("off-diagonal entries reproduce the potential to first order") {
  double c = 0.05;
  auto op = build_matrix(PotentialSpec::mathieu(c), Bc::PerMinus, 64);
  auto red = reduce_2x2(op, 1, cxd(0.0, 0.0));
  CHECK(std::abs(red.beta_plus - c) <= 0.1 * c);
  CHECK(std::abs(red.beta_minus - c) <= 0.1 * c);
}

TEST_CASE("one-sided coefficients force a vanishing lower coupling") {
  auto p = PotentialSpec::gasymov(1.0, 0.5, 16);
  auto op = build_matrix(p, Bc::PerPlus, 64);
  for (int n : {4, 10}) {
    auto red = reduce_2x2(op, n, cxd(0.0, 0.0));
    CHECK(std::abs(red.beta_minus) <= 1e-12);
    CHECK(std::abs(red.beta_plus) > 1e-6);
  }
}

TEST_CASE("characteristic residual vanishes at eigenvalue offsets only") {
  auto op = build_matrix(PotentialSpec::mathieu(1.0), Bc::PerPlus, 64);
  auto pair = disc_pair(op, 4);
  REQUIRE(pair.size() == 2);
  CHECK(characteristic_residual(op, 4, pair[0] - 16.0) <= 1e-8);
  CHECK(characteristic_residual(op, 4, pair[1] - 16.0) <= 1e-8);
  CHECK(characteristic_residual(op, 4, cxd(0.5, 0.0)) > 1e-3);
}

TEST_CASE("newton roots from the pair midpoint recover both offsets") {
  auto op = build_matrix(PotentialSpec::mathieu(1.0), Bc::PerPlus, 64);
  auto pair = disc_pair(op, 4);
  REQUIRE(pair.size() == 2);
  cxd z_star = 0.5 * (pair[0] + pair[1]) - 16.0;
  auto [hi, lo] = reduction_roots(op, 4, z_star);
  CHECK(std::abs(hi - (pair[0] - 16.0)) <= 1e-8);
  CHECK(std::abs(lo - (pair[1] - 16.0)) <= 1e-8);
}

TEST_CASE("upper coupling decays quadratically for a weak potential") {
  double c = 0.1;
  auto op = build_matrix(PotentialSpec::mathieu(c), Bc::PerPlus, 64);
  for (int n : {4, 6}) {
    auto pair = disc_pair(op, n);
    REQUIRE(pair.size() == 2);
    cxd z_star = 0.5 * (pair[0] + pair[1]) - static_cast<double>(n) * n;
    auto red = reduce_2x2(op, n, z_star);
    // the potential has no coupling at frequency 2n here, so the entry is
    // second order in the amplitude
    CHECK(std::abs(red.beta_plus) <= c * c);
    CHECK(std::abs(red.beta_minus) <= c * c);
  }
}

TEST_CASE("diagonal entries agree to truncation accuracy") {
  auto m_op = build_matrix(PotentialSpec::mathieu(1.0), Bc::PerPlus, 64);
  auto red = reduce_2x2(m_op, 10, cxd(0.0, 0.0));
  CHECK(std::abs(red.alpha11 - red.alpha22) <=
        1e-6 * (1.0 + std::abs(red.alpha11)));

  auto c_op = build_matrix(PotentialSpec::delta_comb(1.0, pi / 2.0, 128),
                           Bc::PerPlus, 128);
  auto red2 = reduce_2x2(c_op, 12, cxd(0.0, 0.0));
  CHECK(std::abs(red2.alpha11 - red2.alpha22) <=
        1e-6 * (1.0 + std::abs(red2.alpha11)));
}

TEST_CASE("real potentials give real symmetric reductions") {
  auto op = build_matrix(PotentialSpec::mathieu(1.0), Bc::PerPlus, 64);
  auto red = reduce_2x2(op, 4, cxd(0.021, 0.0));
  CHECK(std::abs(red.alpha11.imag()) <= 1e-13);
  CHECK(std::abs(red.beta_plus.imag()) <= 1e-13);
  CHECK(std::abs(red.beta_plus - red.beta_minus) <= 1e-13);
}

TEST_CASE("reduction is stable under doubling the truncation") {
  cxd z(0.1, 0.05);
  auto small = reduce_2x2(
      build_matrix(PotentialSpec::mathieu(1.0), Bc::PerPlus, 32), 6, z);
  auto big = reduce_2x2(
      build_matrix(PotentialSpec::mathieu(1.0), Bc::PerPlus, 64), 6, z);
  CHECK(std::abs(small.alpha11 - big.alpha11) <= 1e-8);
  CHECK(std::abs(small.alpha22 - big.alpha22) <= 1e-8);
  CHECK(std::abs(small.beta_plus - big.beta_plus) <= 1e-8);
  CHECK(std::abs(small.beta_minus - big.beta_minus) <= 1e-8);
}

TEST_CASE("reduction rejects unusable inputs") {
  auto dir_op = build_matrix(PotentialSpec::mathieu(1.0), Bc::Dir, 16);
  CHECK_THROWS_WITH_AS(reduce_2x2(dir_op, 4, cxd(0.0, 0.0)),
                       doctest::Contains("BadParam"), Error);
  auto per_op = build_matrix(PotentialSpec::mathieu(1.0), Bc::PerPlus, 16);
  CHECK_THROWS_WITH_AS(reduce_2x2(per_op, 3, cxd(0.0, 0.0)),
                       doctest::Contains("ModeOutsideWindow"), Error);
  CHECK_THROWS_WITH_AS(reduce_2x2(per_op, 34, cxd(0.0, 0.0)),
                       doctest::Contains("ModeOutsideWindow"), Error);
  auto free_op = build_matrix(PotentialSpec::zero(), Bc::PerPlus, 16);
  CHECK_THROWS_WITH_AS(reduce_2x2(free_op, 4, cxd(-12.0, 0.0)),
                       doctest::Contains("ComplementSingular"), Error);
}
