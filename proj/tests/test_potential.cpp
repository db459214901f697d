#include <cmath>
#include <map>

#include "doctest.h"
#include "hillspectra/potential.hpp"
#include "quadrature.hpp"

using namespace hillspectra;
using testutil::simpson;

namespace {

const cxd I(0.0, 1.0);

// exact sawtooth-with-jump antiderivative of the delta comb
double comb_Q_exact(double s, double x0, double x) {
  double step = (x >= x0) ? s : 0.0;
  return -s * x / pi + step + s * (x0 / pi - 0.5);
}

}  // namespace

TEST_CASE("empty and mean-only coefficient maps give the zero potential") {
  auto p = PotentialSpec::from_coeffs({});
  CHECK(p.coeffs().empty());
  for (int k = -8; k <= 8; k += 2) CHECK(p.v_plus(k) == cxd(0.0, 0.0));

  auto shifted = PotentialSpec::from_coeffs({{0, cxd(5.0, 0.0)}});
  CHECK(shifted.coeffs().empty());
  CHECK(shifted.q(0) == cxd(0.0, 0.0));
}

TEST_CASE("coefficient validation rejects odd indices and non-finite values") {
  CHECK_THROWS_WITH_AS(PotentialSpec::from_coeffs({{3, cxd(1.0, 0.0)}}),
                       doctest::Contains("OddIndex"), Error);
  double nan = std::nan("");
  CHECK_THROWS_WITH_AS(PotentialSpec::from_coeffs({{2, cxd(nan, 0.0)}}),
                       doctest::Contains("NonFinite"), Error);
}

TEST_CASE("mathieu potential has the two-term antiderivative of 2c cos 2x") {
  auto p = PotentialSpec::mathieu(1.0);
  CHECK(p.q(2) == cxd(0.0, -0.5));
  CHECK(p.q(-2) == cxd(0.0, 0.5));
  CHECK(p.band_limit() == 1);
  // v = 2 cos 2x has coefficient 1 at both frequencies
  CHECK(std::abs(p.v_plus(2) - cxd(1.0, 0.0)) == 0.0);
  CHECK(std::abs(p.v_plus(-2) - cxd(1.0, 0.0)) == 0.0);
  CHECK(p.v_plus(0) == cxd(0.0, 0.0));
  CHECK(p.is_real());
}

TEST_CASE("delta comb coefficients match quadrature of the exact step Q") {
  double s = 1.0, x0 = pi / 2.0;
  auto p = PotentialSpec::delta_comb(s, x0, 64);
  for (int k : {2, 4, -6}) {
    // split at the jump so each Simpson piece integrates a smooth function,
    // holding the step fixed on its own side of the jump
    auto piece = [&](double step) {
      return [&, step](double x) {
        return (-s * x / pi + step + s * (x0 / pi - 0.5)) *
               std::exp(-I * static_cast<double>(k) * x);
      };
    };
    cxd qk = (simpson(piece(0.0), 0.0, x0) + simpson(piece(s), x0, pi)) / pi;
    CHECK(std::abs(p.q(k) - qk) < 1e-12);
    CHECK(std::abs(p.v_plus(k) - I * static_cast<double>(k) * qk) < 1e-12);
  }
}

TEST_CASE("band-limited comb partial sums converge to the step value") {
  double s = 1.0, x0 = pi / 2.0;
  double exact = comb_Q_exact(s, x0, pi / 4.0);
  CHECK(exact == doctest::Approx(-0.25));
  double prev = 1.0;
  for (int F : {16, 64}) {
    auto p = PotentialSpec::delta_comb(s, x0, F);
    double err = std::abs(p.q_eval(pi / 4.0) - exact);
    CHECK(err < prev);
    prev = err;
  }
  CHECK(prev <= 0.01);
}

TEST_CASE("gasymov coefficients are one-sided") {
  auto p = PotentialSpec::gasymov(1.0, 0.5, 32);
  for (int k = -64; k < 0; k += 2) CHECK(p.v_plus(k) == cxd(0.0, 0.0));
  CHECK(p.q(2) == cxd(0.25, 0.0));
  CHECK(p.q(4) == cxd(0.0625, 0.0));
  CHECK_FALSE(p.is_real());
}

TEST_CASE("family parameter validation") {
  CHECK_THROWS_WITH_AS(PotentialSpec::gasymov(1.0, 1.5, 8),
                       doctest::Contains("BadParam"), Error);
  CHECK_THROWS_WITH_AS(PotentialSpec::gasymov(0.0, 0.5, 8),
                       doctest::Contains("BadParam"), Error);
  CHECK_THROWS_WITH_AS(PotentialSpec::delta_comb(1.0, -0.5, 8),
                       doctest::Contains("BadParam"), Error);
  CHECK_THROWS_WITH_AS(PotentialSpec::sawtooth(1.0, 0),
                       doctest::Contains("BadParam"), Error);
}

TEST_CASE("sine and cosine frame coefficients match quadrature") {
  auto check_family = [](const PotentialSpec& p, int kmax, double tol) {
    auto sc = p.sine_cosine_coeffs(kmax);
    for (int k = 1; k <= kmax; ++k) {
      auto fd = [&](double x) {
        return p.q_eval(x) * std::sqrt(2.0) * std::sin(k * x);
      };
      auto fn = [&](double x) {
        return p.q_eval(x) * std::sqrt(2.0) * std::cos(k * x);
      };
      cxd dir = simpson(fd, 0.0, pi) / pi;
      cxd neu = simpson(fn, 0.0, pi) / pi;
      CHECK(std::abs(sc.dir[k] - dir) < tol);
      CHECK(std::abs(sc.neu[k] - neu) < tol);
    }
  };
  check_family(PotentialSpec::zero(), 4, 1e-14);
  check_family(PotentialSpec::mathieu(1.0), 8, 1e-12);
  check_family(PotentialSpec::sawtooth(1.0, 8), 32, 1e-10);
  check_family(PotentialSpec::delta_comb(1.0, pi / 2.0, 8), 32, 1e-10);
  check_family(PotentialSpec::gasymov(1.0, 0.5, 8), 32, 1e-10);
  check_family(
      PotentialSpec::random_weighted(Weight::sobolev(2.0), 7, 8, 1.0), 32,
      1e-10);
}

TEST_CASE("real potentials have real sine and cosine coefficients") {
  for (auto p : {PotentialSpec::mathieu(1.0),
                 PotentialSpec::delta_comb(1.0, pi / 2.0, 16),
                 PotentialSpec::sawtooth(1.0, 16)}) {
    REQUIRE(p.is_real());
    auto sc = p.sine_cosine_coeffs(24);
    for (int k = 0; k <= 24; ++k) {
      CHECK(std::abs(sc.dir[k].imag()) < 1e-12);
      CHECK(std::abs(sc.neu[k].imag()) < 1e-12);
    }
  }
}

TEST_CASE("weighted norm closed form and construction target") {
  CHECK(PotentialSpec::zero().weighted_norm(Weight::sobolev(2.0)) == 0.0);

  // mathieu(1): single mode pair m = +-1 with |v_m| = 1, omega(1) = 2^a
  auto p = PotentialSpec::mathieu(1.0);
  Weight w = Weight::sobolev(2.0);
  double expected = std::sqrt(2.0) * w.big_omega(1);
  CHECK(p.weighted_norm(w) == doctest::Approx(expected).epsilon(1e-14));

  for (std::uint64_t seed : {1ull, 2ull, 99ull}) {
    auto r = PotentialSpec::random_weighted(w, seed, 32, 3.5);
    double got = r.weighted_norm(w);
    CHECK(got > 3.5 / 2.0);
    CHECK(got < 3.5 * 2.0);
  }
}

TEST_CASE("random potentials are deterministic in the seed") {
  Weight w = Weight::exponential(0.05);
  auto a = PotentialSpec::random_weighted(w, 42, 16, 1.0);
  auto b = PotentialSpec::random_weighted(w, 42, 16, 1.0);
  auto c = PotentialSpec::random_weighted(w, 43, 16, 1.0);
  CHECK(a.coeffs() == b.coeffs());
  CHECK(a.coeffs() != c.coeffs());
  CHECK(a.is_real());
}

TEST_CASE("forward coefficients are additive in the potential") {
  auto p1 = PotentialSpec::mathieu(1.0);
  auto p2 = PotentialSpec::gasymov(1.0, 0.5, 8);
  std::map<int, cxd> merged = p1.coeffs();
  for (const auto& [k, v] : p2.coeffs()) merged[k] += v;
  auto p12 = PotentialSpec::from_coeffs(merged);
  for (int k = -16; k <= 16; k += 2)
    CHECK(std::abs(p12.v_plus(k) - (p1.v_plus(k) + p2.v_plus(k))) < 1e-15);
}

TEST_CASE("smoothed boundary value of Q approximates the exact comb value") {
  double s = 1.0, x0 = pi / 3.0;
  auto p = PotentialSpec::delta_comb(s, x0, 64);
  double exact = s * (x0 / pi - 0.5);
  CHECK(std::abs(p.q_at_zero() - exact) < 0.02);
  auto p2 = PotentialSpec::delta_comb(s, pi / 2.0, 64);
  CHECK(std::abs(p2.q_at_zero()) < 1e-12);
}
