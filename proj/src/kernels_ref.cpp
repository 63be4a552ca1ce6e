#include <utility>
#include <vector>

#include "qdd/kernels.hpp"

namespace qdd::ref {

void matmul(const FieldCtx& F, const i64* A, const i64* B, i64* C,
            int ra, int ca, int cb) {
  const int m = F.m();
  std::vector<i64> scratch(2 * m - 1), prod(m), acc(m);
  for (int i = 0; i < ra; ++i) {
    for (int j = 0; j < cb; ++j) {
      for (int s = 0; s < m; ++s) acc[s] = 0;
      for (int k = 0; k < ca; ++k) {
        F.raw_mul(A + (static_cast<size_t>(i) * ca + k) * m,
                  B + (static_cast<size_t>(k) * cb + j) * m, prod.data(),
                  scratch.data());
        F.raw_add(acc.data(), prod.data(), acc.data());
      }
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
  std::vector<i64> scratch(2 * m - 1), tmp(m), factor(m);
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
      for (int c = 0; c < cols * m; ++c)
        std::swap(data[static_cast<size_t>(piv) * cols * m + c],
                  data[static_cast<size_t>(r) * cols * m + c]);
    }
    // normalize pivot row
    FieldElem pv{std::vector<i64>(entry(r, col), entry(r, col) + m)};
    FieldElem pvinv = F.inv(pv);
    for (int c = col; c < cols; ++c) {
      F.raw_mul(entry(r, c), pvinv.c.data(), tmp.data(), scratch.data());
      for (int s = 0; s < m; ++s) entry(r, c)[s] = tmp[s];
    }
    for (int i = reduced ? 0 : r + 1; i < rows; ++i) {
      if (i == r) continue;
      i64* f = entry(i, col);
      if (F.raw_is_zero(f)) continue;
      for (int s = 0; s < m; ++s) factor[s] = f[s];
      for (int c = col; c < cols; ++c) {
        F.raw_mul(factor.data(), entry(r, c), tmp.data(), scratch.data());
        F.raw_sub(entry(i, c), tmp.data(), entry(i, c));
      }
    }
    pivots.push_back(col);
    ++r;
  }
  (void)p;
  return pivots;
}

}  // namespace qdd::ref
