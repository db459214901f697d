#include "hillspectra/operator_matrix.hpp"

#include <algorithm>
#include <cmath>

namespace hillspectra {

namespace {

// A-weights of the cosine frame: A_0 = 1/2, A_m = 1/sqrt(2)
double neumann_weight(int m) {
  return m == 0 ? 0.5 : 1.0 / std::sqrt(2.0);
}

}  // namespace

bool TruncatedOperator::contains(int k) const {
  return std::find(indices.begin(), indices.end(), k) != indices.end();
}

int TruncatedOperator::position_of(int k) const {
  auto it = std::find(indices.begin(), indices.end(), k);
  if (it == indices.end())
    throw Error(Errc::ModeOutsideWindow,
                "mode " + std::to_string(k) + " not in the " +
                    std::string(bc_name(bc)) + " window at K = " +
                    std::to_string(K));
  return static_cast<int>(it - indices.begin());
}

std::vector<int> window_indices(Bc bc, int K) {
  std::vector<int> idx;
  switch (bc) {
    case Bc::PerPlus:
      for (int k = -2 * K; k <= 2 * K; k += 2) idx.push_back(k);
      break;
    case Bc::PerMinus:
      for (int k = -(2 * K + 1); k <= 2 * K + 1; k += 2) idx.push_back(k);
      break;
    case Bc::Dir:
      for (int k = 1; k <= 2 * K; ++k) idx.push_back(k);
      break;
    case Bc::Neu:
      for (int k = 0; k <= 2 * K; ++k) idx.push_back(k);
      break;
  }
  return idx;
}

Matrix potential_block(const PotentialSpec& p, Bc bc, int K) {
  auto idx = window_indices(bc, K);
  const int n = static_cast<int>(idx.size());
  Matrix V = Matrix::Zero(n, n);
  if (bc == Bc::PerPlus || bc == Bc::PerMinus) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        V(i, j) = p.v_plus(idx[i] - idx[j]);
    return V;
  }
  // sine/cosine frames use V~(k) = k * (expansion of Q against sqrt(2) sin kx)
  auto sc = p.sine_cosine_coeffs(4 * K + 1);
  auto vt = [&](int k) {
    return k == 0 ? cxd(0.0, 0.0) : static_cast<double>(k) * sc.dir[k];
  };
  if (bc == Bc::Dir) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        int k = idx[i], m = idx[j];
        V(i, j) = (vt(std::abs(k - m)) - vt(k + m)) / std::sqrt(2.0);
      }
    return V;
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int k = idx[i], m = idx[j];
      V(i, j) = std::sqrt(2.0) * neumann_weight(k) * neumann_weight(m) *
                (vt(std::abs(k - m)) + vt(k + m));
    }
  return V;
}

TruncatedOperator build_matrix(const PotentialSpec& p, Bc bc, int K) {
  if (K < 4)
    throw Error(Errc::TruncationTooSmall,
                "K = " + std::to_string(K) + " is below the minimum of 4");
  TruncatedOperator op;
  op.bc = bc;
  op.K = K;
  op.indices = window_indices(bc, K);
  op.window_snug = K < 2 * p.band_limit();
  op.matrix = potential_block(p, bc, K);
  for (int i = 0; i < static_cast<int>(op.indices.size()); ++i) {
    double k = op.indices[i];
    op.matrix(i, i) += k * k;
  }
  return op;
}

cxd branch_sqrt(cxd z) {
  double theta = std::arg(z);
  if (theta < 0.0) theta += 2.0 * pi;
  return std::polar(std::sqrt(std::abs(z)), theta / 2.0);
}

Vector k_lambda(Bc bc, int K, cxd lambda) {
  auto idx = window_indices(bc, K);
  Vector d(idx.size());
  for (size_t i = 0; i < idx.size(); ++i) {
    double m2 = static_cast<double>(idx[i]) * idx[i];
    cxd shift = lambda - m2;
    if (std::abs(shift) <= 1e-13)
      throw Error(Errc::OnSpectrumOfFree,
                  "lambda coincides with free eigenvalue " +
                      std::to_string(static_cast<long long>(m2)));
    d(i) = 1.0 / branch_sqrt(shift);
  }
  return d;
}

KvkNorms kvk_norm(const PotentialSpec& p, Bc bc, int K, cxd lambda) {
  Vector d = k_lambda(bc, K, lambda);
  Matrix V = potential_block(p, bc, K);
  Matrix KVK = d.asDiagonal() * V * d.asDiagonal();
  KvkNorms out;
  out.hs = KVK.norm();
  Eigen::JacobiSVD<Matrix> svd(KVK);
  out.norm2 = svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
  return out;
}

Matrix resolvent(const TruncatedOperator& op, cxd lambda) {
  const auto n = op.matrix.rows();
  Matrix shifted = -op.matrix;
  shifted.diagonal().array() += lambda;
  Eigen::PartialPivLU<Matrix> lu(shifted);
  if (!(lu_rcond(lu) > 1e-12))
    throw Error(Errc::NearSingular,
                "lambda is within condition 1e12 of the spectrum");
  return lu.solve(Matrix::Identity(n, n));
}

double lu_rcond(const Eigen::PartialPivLU<Matrix>& lu) {
  auto pivots = lu.matrixLU().diagonal().cwiseAbs();
  double mx = pivots.maxCoeff();
  double mn = pivots.minCoeff();
  if (!(mn > 0.0) || !std::isfinite(mx)) return 0.0;
  double est = lu.rcond();
  if (!std::isfinite(est)) return 0.0;
  return std::min(est, mn / mx);
}

}  // namespace hillspectra
