#include <algorithm>
#include <cstring>
#include <utility>
#include <vector>

#include "qdd/kernels.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qdd::kernels {

namespace {

// below this many entry-level multiply-adds the parallel setup costs more
// than it saves
constexpr long long kParallelWork = 1 << 15;

}  // namespace

void matmul(const FieldCtx& F, const i64* A, const i64* B, i64* C,
            int ra, int ca, int cb) {
  const int m = F.m();
  const i64 p = F.p();
  const long long work = 1LL * ra * ca * cb;
  const bool par = work >= kParallelWork;

  if (m == 1) {
    const i64 chunk = F.safe_accum_terms();
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (par)
#endif
    for (int i = 0; i < ra; ++i) {
      const i64* arow = A + static_cast<size_t>(i) * ca;
      i64* crow = C + static_cast<size_t>(i) * cb;
      for (int j = 0; j < cb; ++j) {
        i64 acc = 0, pending = 0;
        for (int k = 0; k < ca; ++k) {
          acc += arow[k] * B[static_cast<size_t>(k) * cb + j];
          if (++pending == chunk) {
            acc %= p;
            pending = 0;
          }
        }
        crow[j] = acc % p;
      }
    }
    (void)par;
    return;
  }

  const int cl = 2 * m - 1;
  const i64 chunk = std::max<i64>(F.safe_accum_terms() / m, 1);
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (par)
#endif
  for (int i = 0; i < ra; ++i) {
    std::vector<i64> conv(cl), red(m), acc(m);
    for (int j = 0; j < cb; ++j) {
      for (int s = 0; s < cl; ++s) conv[s] = 0;
      for (int s = 0; s < m; ++s) acc[s] = 0;
      i64 pending = 0;
      for (int k = 0; k < ca; ++k) {
        const i64* a = A + (static_cast<size_t>(i) * ca + k) * m;
        const i64* b = B + (static_cast<size_t>(k) * cb + j) * m;
        for (int s = 0; s < m; ++s) {
          if (!a[s]) continue;
          for (int t = 0; t < m; ++t) conv[s + t] += a[s] * b[t];
        }
        if (++pending == chunk) {
          F.raw_reduce(conv.data(), red.data());
          F.raw_add(acc.data(), red.data(), acc.data());
          for (int s = 0; s < cl; ++s) conv[s] = 0;
          pending = 0;
        }
      }
      F.raw_reduce(conv.data(), red.data());
      F.raw_add(acc.data(), red.data(), acc.data());
      i64* out = C + (static_cast<size_t>(i) * cb + j) * m;
      for (int s = 0; s < m; ++s) out[s] = acc[s];
    }
  }
}

std::vector<int> row_reduce(const FieldCtx& F, i64* data, int rows, int cols,
                            bool reduced) {
  const int m = F.m();
  const i64 p = F.p();
  auto entry = [&](int r, int c) { return data + (static_cast<size_t>(r) * cols + c) * m; };
  std::vector<i64> scratch(2 * m - 1), tmp(m);
  std::vector<int> pivots;
  int r = 0;
  for (int col = 0; col < cols && r < rows; ++col) {
    int piv = -1;
    for (int i = r; i < rows; ++i) {
      if (!F.raw_is_zero(entry(i, col))) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    if (piv != r) {
      i64* a = data + static_cast<size_t>(piv) * cols * m;
      i64* b = data + static_cast<size_t>(r) * cols * m;
      for (int c = 0; c < cols * m; ++c) std::swap(a[c], b[c]);
    }
    FieldElem pv{std::vector<i64>(entry(r, col), entry(r, col) + m)};
    FieldElem pvinv = F.inv(pv);
    if (!(pvinv == F.one())) {
      for (int c = col; c < cols; ++c) {
        F.raw_mul(entry(r, c), pvinv.c.data(), tmp.data(), scratch.data());
        std::memcpy(entry(r, c), tmp.data(), sizeof(i64) * m);
      }
    }
    const int lo = reduced ? 0 : r + 1;
    const long long work = 1LL * (rows - lo) * (cols - col);
    const bool par = work >= kParallelWork;
    const i64* prow = entry(r, col);
    if (m == 1) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (par)
#endif
      for (int i = lo; i < rows; ++i) {
        if (i == r) continue;
        i64* irow = entry(i, col);
        const i64 f = irow[0];
        if (!f) continue;
        const i64 nf = p - f;
        const int len = cols - col;
        for (int c = 0; c < len; ++c) irow[c] = (irow[c] + nf * prow[c]) % p;
      }
    } else {
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (par)
#endif
      for (int i = lo; i < rows; ++i) {
        if (i == r) continue;
        i64* irow = entry(i, col);
        if (F.raw_is_zero(irow)) continue;
        std::vector<i64> fac(irow, irow + m), sc(2 * m - 1), t2(m);
        for (int c = 0; c < cols - col; ++c) {
          F.raw_mul(fac.data(), prow + static_cast<size_t>(c) * m, t2.data(), sc.data());
          F.raw_sub(irow + static_cast<size_t>(c) * m, t2.data(),
                    irow + static_cast<size_t>(c) * m);
        }
      }
    }
    (void)par;
    pivots.push_back(col);
    ++r;
  }
  return pivots;
}

}  // namespace qdd::kernels
