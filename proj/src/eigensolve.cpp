#include "hillspectra/eigensolve.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

extern "C" {
void zgeev_(const char* jobvl, const char* jobvr, const int* n,
            std::complex<double>* a, const int* lda, std::complex<double>* w,
            std::complex<double>* vl, const int* ldvl, std::complex<double>* vr,
            const int* ldvr, std::complex<double>* work, const int* lwork,
            double* rwork, int* info);
}

namespace hillspectra {

namespace {

// zgeev balances the matrix before reduction, which resolves triangular
// inputs exactly; that exactness is relied on downstream
Eigensystem zgeev(const Matrix& a, bool want_vectors) {
  const int n = static_cast<int>(a.rows());
  Eigensystem out;
  out.values = Vector(n);
  if (n == 0) return out;
  Matrix work_a = a;
  Matrix vr;
  if (want_vectors) vr = Matrix(n, n);
  int info = 0;
  int lwork = -1;
  cxd work_query;
  std::vector<double> rwork(2 * n);
  const char jobvl = 'N';
  const char jobvr = want_vectors ? 'V' : 'N';
  zgeev_(&jobvl, &jobvr, &n, work_a.data(), &n, out.values.data(), nullptr, &n,
         want_vectors ? vr.data() : nullptr, &n, &work_query, &lwork,
         rwork.data(), &info);
  if (info != 0)
    throw Error(Errc::EigensolveFailure,
                "workspace query failed with info " + std::to_string(info));
  lwork = static_cast<int>(work_query.real());
  std::vector<cxd> work(lwork);
  zgeev_(&jobvl, &jobvr, &n, work_a.data(), &n, out.values.data(), nullptr, &n,
         want_vectors ? vr.data() : nullptr, &n, work.data(), &lwork,
         rwork.data(), &info);
  if (info != 0)
    throw Error(Errc::EigensolveFailure,
                "eigenvalue iteration failed with info " + std::to_string(info));

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int i, int j) {
    if (out.values(i).real() != out.values(j).real())
      return out.values(i).real() < out.values(j).real();
    return out.values(i).imag() < out.values(j).imag();
  });
  Vector sorted(n);
  for (int i = 0; i < n; ++i) sorted(i) = out.values(order[i]);
  out.values = sorted;
  if (want_vectors) {
    out.vectors = Matrix(n, n);
    for (int i = 0; i < n; ++i) out.vectors.col(i) = vr.col(order[i]);
  }
  return out;
}

}  // namespace

Vector eigenvalues(const Matrix& a) { return zgeev(a, false).values; }

Eigensystem eigensystem(const Matrix& a) { return zgeev(a, true); }

}  // namespace hillspectra
