#include "hillspectra/projection.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <complex>

namespace hillspectra {

namespace {

const cxd I(0.0, 1.0);

// largest singular value via the Hermitian Gram matrix; Eigen's bidiagonal
// SVD mishandles the heavily clustered spectra that projections produce
double spectral_norm(const Matrix& a) {
  if (a.rows() == 0 || a.cols() == 0) return 0.0;
  Matrix gram = (a.rows() <= a.cols()) ? Matrix(a * a.adjoint())
                                       : Matrix(a.adjoint() * a);
  Eigen::SelfAdjointEigenSolver<Matrix> es(gram, Eigen::EigenvaluesOnly);
  return std::sqrt(std::max(0.0, es.eigenvalues().maxCoeff()));
}

cxd vector_value_at_0(const Vector& v) { return v.sum(); }

cxd vector_deriv_at_0(const TruncatedOperator& op, const Vector& v) {
  cxd out(0.0, 0.0);
  for (int j = 0; j < v.size(); ++j)
    out += I * static_cast<double>(op.indices[j]) * v(j);
  return out;
}

// (1/pi) integral over [0, pi] of exp(i q x)
cxd half_mean(long long q) {
  if (q == 0) return cxd(1.0, 0.0);
  if (q % 2 == 0) return cxd(0.0, 0.0);
  return cxd(0.0, 2.0 / (pi * static_cast<double>(q)));
}

InvariantPair pair_from_projection(const TruncatedOperator& op,
                                   const PotentialSpec& p, int n,
                                   const ContourProjection& proj) {
  if (std::abs(proj.trace - cxd(2.0, 0.0)) > 1e-6)
    throw Error(Errc::CountMismatch,
                "contour does not enclose an eigenvalue pair");
  // range basis from the top two left singular directions, computed through
  // the Hermitian Gram matrix (see spectral_norm)
  Matrix gram = proj.p * proj.p.adjoint();
  Eigen::SelfAdjointEigenSolver<Matrix> es(gram);
  const int m = static_cast<int>(gram.rows());
  const auto& sq = es.eigenvalues();  // real, ascending
  if (std::sqrt(std::max(0.0, sq(m - 2))) < 0.5)
    throw Error(Errc::CountMismatch, "projection range is not two-dimensional");
  Matrix w(m, 2);
  w.col(0) = es.eigenvectors().col(m - 1);
  w.col(1) = es.eigenvectors().col(m - 2);

  Eigen::Matrix2cd b = w.adjoint() * (op.matrix * w);
  cxd mid = 0.5 * (b(0, 0) + b(1, 1));
  cxd split =
      std::sqrt(0.25 * (b(0, 0) - b(1, 1)) * (b(0, 0) - b(1, 1)) +
                b(0, 1) * b(1, 0));
  cxd lam_a = mid + split, lam_b = mid - split;
  if (lam_a.real() < lam_b.real() ||
      (lam_a.real() == lam_b.real() && lam_a.imag() < lam_b.imag()))
    std::swap(lam_a, lam_b);

  InvariantPair out;
  out.n = n;
  out.bc = op.bc;
  out.K = op.K;
  out.lambda_plus = lam_a;
  out.lambda_minus = lam_b;
  out.gamma = lam_a - lam_b;
  out.degenerate = std::abs(out.gamma) <= 1e-10;

  // eigenvector of b for lambda_plus from the better-conditioned row
  Eigen::Vector2cd c1(b(0, 1), lam_a - b(0, 0));
  Eigen::Vector2cd c2(lam_a - b(1, 1), b(1, 0));
  Eigen::Vector2cd c = (c1.norm() >= c2.norm()) ? c1 : c2;
  double scale = b.cwiseAbs().maxCoeff();
  if (c.norm() <= 1e-14 * (1.0 + scale)) c = Eigen::Vector2cd(1.0, 0.0);
  c.normalize();
  Eigen::Vector2cd c_perp(-std::conj(c(1)), std::conj(c(0)));

  out.f = w * c;
  out.phi = w * c_perp;
  out.xi = out.f.dot(op.matrix * out.phi);

  cxd q0 = p.q_at_zero();
  out.f_at_0 = vector_value_at_0(out.f);
  out.phi_at_0 = vector_value_at_0(out.phi);
  out.df_at_0 = vector_deriv_at_0(op, out.f);
  out.dphi_at_0 = vector_deriv_at_0(op, out.phi);
  out.w0 = out.df_at_0 - q0 * out.f_at_0;
  out.u0 = out.dphi_at_0 - q0 * out.phi_at_0;

  int pn = op.position_of(n), pm = op.position_of(-n);
  double dn = static_cast<double>(n);
  out.f0_at_0 = out.f(pn) + out.f(pm);
  out.df0_at_0 = I * dn * out.f(pn) - I * dn * out.f(pm);
  out.phi0_at_0 = out.phi(pn) + out.phi(pm);
  out.dphi0_at_0 = I * dn * out.phi(pn) - I * dn * out.phi(pm);
  return out;
}

}  // namespace

double disc_radius(int n, RadiusPolicy policy) {
  if (n < 1) throw Error(Errc::BadParam, "disc index must be positive");
  if (policy == RadiusPolicy::FixedQuarter) return 0.25 * n;
  if (n < 2)
    throw Error(Errc::BadParam, "shrinking radius needs n >= 2");
  return n / std::log(static_cast<double>(n));
}

ContourProjection projection(const TruncatedOperator& op, int n, double r,
                             int start_nodes,
                             const std::vector<cxd>* eigenvalue_hint) {
  if (n < 0 || !(r > 0.0))
    throw Error(Errc::BadParam, "contour needs a positive radius");
  if (start_nodes < 16)
    throw Error(Errc::BadParam, "contour needs at least 16 quadrature nodes");
  const double n2 = static_cast<double>(n) * n;

  std::vector<cxd> own;
  const std::vector<cxd>* eigs = eigenvalue_hint;
  if (!eigs) {
    auto v = eigenvalues(op.matrix);
    own.assign(v.data(), v.data() + v.size());
    eigs = &own;
  }
  for (cxd lam : *eigs)
    if (std::abs(std::abs(lam - n2) - r) < 1e-6)
      throw Error(Errc::EnclosureViolation,
                  "an eigenvalue lies within 1e-6 of the contour");

  const int m = static_cast<int>(op.matrix.rows());
  auto node_term = [&](double theta) {
    cxd phase(std::cos(theta), std::sin(theta));
    return (resolvent(op, n2 + r * phase) * phase).eval();
  };

  int nodes = start_nodes;
  Matrix sum = Matrix::Zero(m, m);
  double step = 2.0 * pi / nodes;
  for (int j = 0; j < nodes; ++j) sum += node_term(j * step);

  ContourProjection out;
  Matrix prev = (r / nodes) * sum;
  while (true) {
    for (int j = 0; j < nodes; ++j) sum += node_term((j + 0.5) * step);
    nodes *= 2;
    step *= 0.5;
    Matrix cur = (r / nodes) * sum;
    double change = (cur - prev).norm();
    if (change <= 1e-9) {
      out.p = std::move(cur);
      out.nodes = nodes;
      out.converged = true;
      break;
    }
    if (nodes >= 1024)
      throw Error(Errc::NotConverged,
                  "contour quadrature did not settle by 1024 nodes");
    prev = std::move(cur);
  }
  out.idempotency_defect = (out.p * out.p - out.p).norm();
  out.trace = out.p.trace();
  return out;
}

Matrix derivative_map(Bc bc, int K) {
  auto idx = window_indices(bc, K);
  const int w = static_cast<int>(idx.size());
  if (bc == Bc::PerPlus || bc == Bc::PerMinus) {
    Matrix d = Matrix::Zero(w, w);
    for (int j = 0; j < w; ++j) d(j, j) = I * static_cast<double>(idx[j]);
    return d;
  }
  if (bc == Bc::Dir) {
    // sine coefficients to cosine coefficients, both frames orthonormal
    Matrix d = Matrix::Zero(w, w);
    for (int j = 0; j < w; ++j) d(j, j) = static_cast<double>(idx[j]);
    return d;
  }
  // Neu: cosine (with constant) to sine coefficients
  Matrix d = Matrix::Zero(w - 1, w);
  for (int j = 0; j < w; ++j)
    if (idx[j] >= 1) d(idx[j] - 1, j) = -static_cast<double>(idx[j]);
  return d;
}

Matrix coordinate_projection(Bc bc, int K, int n) {
  auto op_indices = window_indices(bc, K);
  const int w = static_cast<int>(op_indices.size());
  Matrix p0 = Matrix::Zero(w, w);
  bool found = false;
  for (int j = 0; j < w; ++j) {
    int k = op_indices[j];
    if (k == n || ((bc == Bc::PerPlus || bc == Bc::PerMinus) && k == -n)) {
      p0(j, j) = 1.0;
      found = true;
    }
  }
  if (!found)
    throw Error(Errc::ModeOutsideWindow, "mode not inside the window");
  return p0;
}

ProjectionReport projection_norms(const PotentialSpec& p, Bc bc, int K, int n,
                                  RadiusPolicy policy) {
  auto op = build_matrix(p, bc, K);
  auto proj = projection(op, n, disc_radius(n, policy));
  Matrix diff = proj.p - coordinate_projection(bc, K, n);
  ProjectionReport out;
  out.n = n;
  out.norm_p_diff = spectral_norm(diff);
  out.norm_dp_diff = spectral_norm(derivative_map(bc, K) * diff);
  out.nodes = proj.nodes;
  out.converged = proj.converged;
  return out;
}

InvariantPair invariant_pair(const TruncatedOperator& op,
                             const PotentialSpec& p, int n,
                             const std::vector<cxd>* eigenvalue_hint) {
  if (op.bc != Bc::PerPlus && op.bc != Bc::PerMinus)
    throw Error(Errc::BadParam,
                "invariant pair needs a periodic or antiperiodic operator");
  if (!op.contains(n) || !op.contains(-n))
    throw Error(Errc::ModeOutsideWindow,
                "mode pair {n, -n} not inside the truncation window");
  auto proj = projection(op, n, disc_radius(n, RadiusPolicy::FixedQuarter), 64,
                         eigenvalue_hint);
  return pair_from_projection(op, p, n, proj);
}

MatchedVector neumann_matched_vector(const InvariantPair& pair) {
  MatchedVector out;
  if (std::abs(pair.w0) <= 1e-12) {
    out.g_vec = pair.f;
    out.a = cxd(1.0, 0.0);
    out.b = cxd(0.0, 0.0);
  } else {
    Vector raw = pair.u0 * pair.f - pair.w0 * pair.phi;
    double norm = raw.norm();
    if (norm <= 1e-12)
      throw Error(Errc::NullMatch, "matched vector degenerates to zero");
    out.g_vec = raw / norm;
    out.a = pair.u0 / norm;
    out.b = -pair.w0 / norm;
  }
  out.value_at_0 = out.a * pair.f_at_0 + out.b * pair.phi_at_0;
  out.quasi_deriv_at_0 = out.a * pair.w0 + out.b * pair.u0;
  out.free_value_at_0 = out.a * pair.f0_at_0 + out.b * pair.phi0_at_0;
  out.free_deriv_at_0 = out.a * pair.df0_at_0 + out.b * pair.dphi0_at_0;
  return out;
}

DeviationIdentity deviation_identity_residual(const InvariantPair& pair,
                                              const MatchedVector& mv,
                                              cxd delta_neu,
                                              const Vector& neumann_vec) {
  const int K = pair.K;
  if (static_cast<int>(neumann_vec.size()) != 2 * K + 1)
    throw Error(Errc::FrameMismatch,
                "Neumann vector truncation does not match the pair");
  auto idx = window_indices(pair.bc, K);
  const int w = static_cast<int>(idx.size());

  // bilinear pairing (1/pi) * integral of v(x) * g(x): expand g over the
  // orthonormal Neumann frame {1, sqrt(2) cos(jx)} and v over exp(ikx)
  std::vector<cxd> weight(w);
  const double inv_rt2 = 1.0 / std::sqrt(2.0);
  for (int a = 0; a < w; ++a) {
    long long k = idx[a];
    cxd acc = neumann_vec(0) * half_mean(k);
    for (int j = 1; j <= 2 * K; ++j)
      acc += neumann_vec(j) * inv_rt2 * (half_mean(k + j) + half_mean(k - j));
    weight[a] = acc;
  }
  auto pairing = [&](const Vector& v) {
    cxd acc(0.0, 0.0);
    for (int a = 0; a < w; ++a) acc += v(a) * weight[a];
    return acc;
  };

  cxd s_g = pairing(mv.g_vec);
  cxd s_f = pairing(pair.f);
  cxd s_phi = pairing(pair.phi);
  double mag = std::abs(s_g);
  if (mag > 0.0) {
    cxd phase = std::conj(s_g) / mag;
    s_g *= phase;
    s_f *= phase;
    s_phi *= phase;
  }
  DeviationIdentity out;
  out.overlap = s_g.real();
  out.residual = std::abs(s_g * delta_neu - mv.b * s_phi * pair.gamma +
                          mv.b * s_f * pair.xi);
  return out;
}

ProjectionContext make_projection_context(const PotentialSpec& p, int K) {
  ProjectionContext ctx;
  ctx.p = p;
  ctx.K = K;
  ctx.op_plus = build_matrix(p, Bc::PerPlus, K);
  ctx.op_minus = build_matrix(p, Bc::PerMinus, K);
  ctx.op_neu = build_matrix(p, Bc::Neu, K);
  auto vp = eigenvalues(ctx.op_plus.matrix);
  ctx.eig_plus.assign(vp.data(), vp.data() + vp.size());
  auto vm = eigenvalues(ctx.op_minus.matrix);
  ctx.eig_minus.assign(vm.data(), vm.data() + vm.size());
  ctx.neu_system = eigensystem(ctx.op_neu.matrix);
  return ctx;
}

ProjectionRow projection_row(const ProjectionContext& ctx, int n,
                             RadiusPolicy policy) {
  const bool even = (n % 2 == 0);
  const TruncatedOperator& op = even ? ctx.op_plus : ctx.op_minus;
  const std::vector<cxd>* hint = even ? &ctx.eig_plus : &ctx.eig_minus;
  const double r = disc_radius(n, policy);

  auto proj = projection(op, n, r, 64, hint);
  Matrix diff = proj.p - coordinate_projection(op.bc, ctx.K, n);

  ProjectionRow row;
  row.n = n;
  row.norm_p_diff = spectral_norm(diff);
  row.norm_dp_diff = spectral_norm(derivative_map(op.bc, ctx.K) * diff);
  row.norm_dp_diff_over_n = row.norm_dp_diff / n;

  auto pair = pair_from_projection(op, ctx.p, n, proj);
  auto mv = neumann_matched_vector(pair);
  row.degenerate = pair.degenerate;
  row.boundary_value_diff = std::abs(mv.value_at_0 - mv.free_value_at_0);
  row.boundary_deriv_diff_over_n =
      std::abs(mv.quasi_deriv_at_0 - mv.free_deriv_at_0) / n;

  // the unique Neumann eigenvalue in the disc, with its eigenvector
  const double n2 = static_cast<double>(n) * n;
  int hit = -1;
  for (int i = 0; i < ctx.neu_system.values.size(); ++i) {
    if (std::abs(ctx.neu_system.values(i) - n2) < r) {
      if (hit >= 0)
        throw Error(Errc::CountMismatch,
                    "more than one Neumann eigenvalue in the disc");
      hit = i;
    }
  }
  if (hit < 0)
    throw Error(Errc::CountMismatch, "no Neumann eigenvalue in the disc");
  Vector g = ctx.neu_system.vectors.col(hit).normalized();
  row.delta_neu = pair.lambda_plus - ctx.neu_system.values(hit);

  auto dev = deviation_identity_residual(pair, mv, row.delta_neu, g);
  row.overlap = dev.overlap;
  row.identity_residual = dev.residual;
  return row;
}

}  // namespace hillspectra
