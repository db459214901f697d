#include "hillspectra/schmidt.hpp"

#include <Eigen/LU>
#include <cmath>
#include <limits>
#include <vector>

namespace hillspectra {

namespace {

cxd characteristic_det(const ReducedMatrix& red) {
  return (red.alpha11 - red.z) * (red.alpha22 - red.z) -
         red.beta_plus * red.beta_minus;
}

}  // namespace

ReducedMatrix reduce_2x2(const TruncatedOperator& op, int n, cxd z) {
  if (op.bc != Bc::PerPlus && op.bc != Bc::PerMinus)
    throw Error(Errc::BadParam,
                "reduction needs a periodic or antiperiodic operator");
  if (n < 1) throw Error(Errc::BadParam, "mode index must be positive");
  if (!op.contains(n) || !op.contains(-n))
    throw Error(Errc::ModeOutsideWindow,
                "mode pair {n, -n} not inside the truncation window");

  const auto& A = op.matrix;
  const int m = static_cast<int>(A.rows());
  const int pair_pos[2] = {op.position_of(n), op.position_of(-n)};

  std::vector<int> rest;
  rest.reserve(m - 2);
  for (int j = 0; j < m; ++j)
    if (j != pair_pos[0] && j != pair_pos[1]) rest.push_back(j);
  const int r = static_cast<int>(rest.size());

  Matrix app(2, 2), apr(2, r), arp(r, 2), arr(r, r);
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) app(a, b) = A(pair_pos[a], pair_pos[b]);
    for (int j = 0; j < r; ++j) {
      apr(a, j) = A(pair_pos[a], rest[j]);
      arp(j, a) = A(rest[j], pair_pos[a]);
    }
  }
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) arr(i, j) = A(rest[i], rest[j]);

  const double n2 = static_cast<double>(n) * n;
  Matrix shifted = -arr;
  shifted.diagonal().array() += n2 + z;
  Eigen::PartialPivLU<Matrix> lu(shifted);
  if (!(lu_rcond(lu) > 1e-12))
    throw Error(Errc::ComplementSingular,
                "complementary block singular at this offset");
  Matrix s = app + apr * lu.solve(arp);

  ReducedMatrix out;
  out.n = n;
  out.z = z;
  out.alpha11 = s(0, 0) - n2;
  out.alpha22 = s(1, 1) - n2;
  out.beta_plus = s(0, 1);
  out.beta_minus = s(1, 0);
  out.in_validity_disc = std::abs(z) < 0.25 * n;
  return out;
}

double characteristic_residual(const ReducedMatrix& red) {
  return std::abs(characteristic_det(red));
}

double characteristic_residual(const TruncatedOperator& op, int n, cxd z) {
  return characteristic_residual(reduce_2x2(op, n, z));
}

cxd reduction_root(const TruncatedOperator& op, int n, cxd z0) {
  cxd z = z0;
  cxd best_z = z0;
  double best_ag = std::numeric_limits<double>::infinity();
  int since_improve = 0;
  for (int it = 0; it < 50; ++it) {
    cxd g = characteristic_det(reduce_2x2(op, n, z));
    double ag = std::abs(g);
    if (ag < best_ag) {
      best_ag = ag;
      best_z = z;
      since_improve = 0;
    } else if (++since_improve >= 4) {
      // bouncing inside the evaluation noise ball around the root
      break;
    }
    double h = 1e-6 * (1.0 + std::abs(z));
    cxd dg = (characteristic_det(reduce_2x2(op, n, z + h)) -
              characteristic_det(reduce_2x2(op, n, z - h))) /
             (2.0 * h);
    if (!(std::abs(dg) > 0.0)) break;
    cxd step = -g / dg;
    z += step;
    if (std::abs(step) <= 1e-12 * (1.0 + std::abs(z))) {
      best_z = z;
      best_ag = ag;
      break;
    }
  }
  double scale = (1.0 + std::abs(best_z)) * (1.0 + std::abs(best_z));
  if (!(best_ag <= 1e-9 * scale))
    throw Error(Errc::NotConverged, "characteristic root iteration stalled");
  return best_z;
}

std::pair<cxd, cxd> reduction_roots(const TruncatedOperator& op, int n,
                                    cxd z_center) {
  auto red = reduce_2x2(op, n, z_center);
  // freeze the entries at the center: det(S - (n^2+z)I) = 0 becomes a
  // quadratic in z whose roots seed the Newton polish
  cxd mid = 0.5 * (red.alpha11 + red.alpha22);
  cxd disc = 0.25 * (red.alpha11 - red.alpha22) * (red.alpha11 - red.alpha22) +
             red.beta_plus * red.beta_minus;
  cxd root = std::sqrt(disc);
  cxd a = reduction_root(op, n, mid + root);
  cxd b = reduction_root(op, n, mid - root);
  bool a_first = a.real() > b.real() ||
                 (a.real() == b.real() && a.imag() >= b.imag());
  return a_first ? std::make_pair(a, b) : std::make_pair(b, a);
}

}  // namespace hillspectra
