#include "hillspectra/pairing.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <sstream>
#include <thread>

#include "hillspectra/eigensolve.hpp"
#include "hillspectra/schmidt.hpp"

namespace hillspectra {

namespace {

// largest disc index covered by the truncation window for this spectrum
int top_disc_index(Bc bc, int K) {
  return bc == Bc::PerMinus ? 2 * K + 1 : 2 * K;
}

bool parity_matches(Bc bc, int n) {
  if (bc == Bc::PerPlus) return n % 2 == 0;
  if (bc == Bc::PerMinus) return n % 2 == 1;
  return true;
}

int worker_count(int jobs) {
  unsigned hw = std::thread::hardware_concurrency();
  int cap = hw ? static_cast<int>(hw) : 1;
  if (const char* env = std::getenv("HILL_SPECTRA_THREADS")) {
    int v = std::atoi(env);
    if (v >= 1) cap = v;
  }
  return std::max(1, std::min(cap, jobs));
}

// indices of eigenvalues lying strictly inside the disc |lambda - n^2| < r
std::vector<int> members_in_disc(const std::vector<cxd>& eigs, int n,
                                 double r) {
  std::vector<int> out;
  const double c = static_cast<double>(n) * n;
  for (int i = 0; i < static_cast<int>(eigs.size()); ++i)
    if (std::abs(eigs[i] - c) < r) out.push_back(i);
  return out;
}

// larger real part first, ties broken by larger imaginary part
void order_pair(cxd& plus, cxd& minus) {
  if (minus.real() > plus.real() ||
      (minus.real() == plus.real() && minus.imag() > plus.imag()))
    std::swap(plus, minus);
}

}  // namespace

int expected_disc_count(Bc bc) {
  return (bc == Bc::PerPlus || bc == Bc::PerMinus) ? 2 : 1;
}

DiscAssignment localize(const std::vector<cxd>& eigs, Bc bc, int K, int N,
                        RadiusPolicy policy) {
  if (N < 1) throw Error(Errc::BadParam, "localization start index must be >= 1");
  if (K < 1) throw Error(Errc::BadParam, "truncation parameter must be >= 1");

  DiscAssignment out;
  out.bc = bc;
  out.N = N;
  out.expected_count = expected_disc_count(bc);

  std::vector<int> disc_indices;
  for (int n = N + 1; n <= top_disc_index(bc, K); ++n) {
    if (!parity_matches(bc, n)) continue;
    double r = disc_radius(n, policy);
    if (r >= n - 0.5) {
      std::ostringstream msg;
      msg << "disc radius " << r << " at index " << n
          << " reaches the neighboring cluster";
      throw Error(Errc::OverlappingDiscs, msg.str());
    }
    disc_indices.push_back(n);
    out.disc_members[n] = {};
  }

  const double region_bound = (N + 0.5) * (N + 0.5);
  for (int i = 0; i < static_cast<int>(eigs.size()); ++i) {
    int home = -1;
    for (int n : disc_indices) {
      if (std::abs(eigs[i] - cxd(static_cast<double>(n) * n, 0.0)) <
          disc_radius(n, policy)) {
        home = n;
        break;
      }
    }
    if (home > 0)
      out.disc_members[home].push_back(i);
    else if (eigs[i].real() < region_bound)
      out.region_members.push_back(i);
    else
      out.unassigned.push_back(i);
  }

  for (int n : disc_indices)
    if (static_cast<int>(out.disc_members[n].size()) != out.expected_count)
      out.mismatched_discs.push_back(n);
  return out;
}

namespace {

struct SlateInputs {
  const PotentialSpec& p;
  const TruncatedOperator& op_plus;
  const TruncatedOperator& op_minus;
  const std::vector<cxd>& eig_plus;
  const std::vector<cxd>& eig_minus;
  const std::vector<cxd>& eig_dir;
  const std::vector<cxd>& eig_neu;
  RadiusPolicy policy;
};

SlateRow slate_row(const SlateInputs& in, int n) {
  SlateRow row;
  row.n = n;
  row.disc_radius = disc_radius(n, in.policy);

  const bool even = n % 2 == 0;
  const TruncatedOperator& op = even ? in.op_plus : in.op_minus;
  const std::vector<cxd>& pair_eigs = even ? in.eig_plus : in.eig_minus;

  auto pair_idx = members_in_disc(pair_eigs, n, row.disc_radius);
  auto dir_idx = members_in_disc(in.eig_dir, n, row.disc_radius);
  auto neu_idx = members_in_disc(in.eig_neu, n, row.disc_radius);
  row.count_pair = static_cast<int>(pair_idx.size());
  row.count_dir = static_cast<int>(dir_idx.size());
  row.count_neu = static_cast<int>(neu_idx.size());
  if (row.count_pair != 2 || row.count_dir != 1 || row.count_neu != 1) {
    std::ostringstream msg;
    msg << "disc at " << n << "^2 holds " << row.count_pair << "/"
        << row.count_dir << "/" << row.count_neu
        << " pair/Dirichlet/Neumann eigenvalues (expected 2/1/1)";
    row.skip_reason = msg.str();
    return row;
  }

  row.lambda_plus = pair_eigs[pair_idx[0]];
  row.lambda_minus = pair_eigs[pair_idx[1]];
  order_pair(row.lambda_plus, row.lambda_minus);
  row.mu = in.eig_dir[dir_idx[0]];
  row.nu = in.eig_neu[neu_idx[0]];
  row.gamma = row.lambda_plus - row.lambda_minus;
  row.delta_dir = row.lambda_plus - row.mu;
  row.delta_neu = row.lambda_plus - row.nu;
  const double nsq = static_cast<double>(n) * n;
  row.z_star = 0.5 * (row.lambda_plus + row.lambda_minus) - nsq;

  try {
    auto at_star = reduce_2x2(op, n, row.z_star);
    row.beta_plus = at_star.beta_plus;
    row.beta_minus = at_star.beta_minus;
    row.alpha11 = at_star.alpha11;
    row.alpha_asym = std::abs(at_star.alpha11 - at_star.alpha22);
    row.in_validity_disc = at_star.in_validity_disc;

    auto at_plus = reduce_2x2(op, n, row.lambda_plus - nsq);
    row.beta_plus_zp = at_plus.beta_plus;
    row.beta_minus_zp = at_plus.beta_minus;
    row.char_residual_plus = characteristic_residual(at_plus);
    row.char_residual_minus =
        characteristic_residual(op, n, row.lambda_minus - nsq);

    auto pair = invariant_pair(op, in.p, n, &pair_eigs);
    row.xi = pair.xi;
    row.w0 = pair.w0;
    row.u0 = pair.u0;
    row.degenerate = pair.degenerate;
    auto mv = neumann_matched_vector(pair);
    row.a = mv.a;
    row.b = mv.b;
  } catch (const Error& e) {
    row.skip_reason = e.what();
    return row;
  }

  row.valid = true;
  return row;
}

}  // namespace

SpectralSlate build_slate(const PotentialSpec& p, int K, int n_min, int n_max,
                          RadiusPolicy policy) {
  if (n_min < 1 || n_max < n_min)
    throw Error(Errc::BadParam, "slate index range must satisfy 1 <= n_min <= n_max");
  if (n_max > 2 * K)
    throw Error(Errc::ModeOutsideWindow,
                "slate index range exceeds the truncation window");

  SpectralSlate slate;
  slate.p = p;
  slate.K = K;
  slate.policy = policy;
  slate.n_min = n_min;
  slate.n_max = n_max;

  TruncatedOperator op_plus = build_matrix(p, Bc::PerPlus, K);
  TruncatedOperator op_minus = build_matrix(p, Bc::PerMinus, K);
  TruncatedOperator op_dir = build_matrix(p, Bc::Dir, K);
  TruncatedOperator op_neu = build_matrix(p, Bc::Neu, K);
  Vector ev_plus = eigenvalues(op_plus.matrix);
  Vector ev_minus = eigenvalues(op_minus.matrix);
  Vector ev_dir = eigenvalues(op_dir.matrix);
  Vector ev_neu = eigenvalues(op_neu.matrix);
  auto to_list = [](const Vector& v) {
    return std::vector<cxd>(v.data(), v.data() + v.size());
  };
  std::vector<cxd> eig_plus = to_list(ev_plus);
  std::vector<cxd> eig_minus = to_list(ev_minus);
  std::vector<cxd> eig_dir = to_list(ev_dir);
  std::vector<cxd> eig_neu = to_list(ev_neu);

  SlateInputs inputs{p,        op_plus,  op_minus, eig_plus,
                     eig_minus, eig_dir, eig_neu,  policy};

  const int jobs = n_max - n_min + 1;
  slate.rows.resize(jobs);
  std::atomic<int> next{0};
  auto work = [&]() {
    for (;;) {
      int j = next.fetch_add(1);
      if (j >= jobs) return;
      int n = n_min + j;
      try {
        slate.rows[j] = slate_row(inputs, n);
      } catch (const Error& e) {
        SlateRow row;
        row.n = n;
        row.disc_radius = disc_radius(n, policy);
        row.skip_reason = e.what();
        slate.rows[j] = row;
      }
    }
  };

  int workers = worker_count(jobs);
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int t = 0; t < workers; ++t) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  return slate;
}

}  // namespace hillspectra
