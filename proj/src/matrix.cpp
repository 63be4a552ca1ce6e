#include "qdd/matrix.hpp"

#include <algorithm>
#include <cstring>
#include <sstream>
#include <stdexcept>

#include "qdd/errors.hpp"
#include "qdd/kernels.hpp"

namespace qdd {

namespace {

void require_same_field(const Matrix& a, const Matrix& b, const char* op) {
  if (!a.valid() || !b.valid())
    throw std::invalid_argument(std::string(op) + ": uninitialized matrix");
  if (!a.field()->same_field(*b.field()))
    throw std::invalid_argument(std::string(op) + ": field mismatch");
}

}  // namespace

Matrix::Matrix(Fq F, int rows, int cols) : F_(std::move(F)), rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix shape");
  a_.assign(static_cast<size_t>(rows) * cols * F_->m(), 0);
}

Matrix Matrix::identity(Fq F, int n) {
  Matrix I(std::move(F), n, n);
  for (int i = 0; i < n; ++i) I.limbs(i, i)[0] = 1;
  return I;
}

Matrix Matrix::scalar(Fq F, int n, const FieldElem& s) {
  Matrix M(std::move(F), n, n);
  for (int i = 0; i < n; ++i) M.set(i, i, s);
  return M;
}

Matrix Matrix::from_rows(Fq F, const std::vector<std::vector<FieldElem>>& rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r ? static_cast<int>(rows[0].size()) : 0;
  Matrix M(std::move(F), r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c)
      throw DimensionMismatchError("from_rows: ragged rows");
    for (int j = 0; j < c; ++j) M.set(i, j, rows[i][j]);
  }
  return M;
}

Matrix Matrix::from_ints(Fq F, const std::vector<std::vector<i64>>& rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r ? static_cast<int>(rows[0].size()) : 0;
  Matrix M(F, r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c)
      throw DimensionMismatchError("from_ints: ragged rows");
    for (int j = 0; j < c; ++j) M.set(i, j, F->from_int(rows[i][j]));
  }
  return M;
}

Matrix Matrix::block(const std::vector<std::vector<Matrix>>& grid) {
  if (grid.empty() || grid[0].empty()) throw std::invalid_argument("block: empty grid");
  const size_t bc = grid[0].size();
  std::vector<int> heights(grid.size()), widths(bc);
  for (size_t i = 0; i < grid.size(); ++i) {
    if (grid[i].size() != bc) throw DimensionMismatchError("block: ragged grid");
    heights[i] = grid[i][0].rows();
    for (size_t j = 0; j < bc; ++j) {
      if (grid[i][j].rows() != heights[i])
        throw DimensionMismatchError("block: row heights differ within a band");
      if (i == 0) widths[j] = grid[0][j].cols();
      if (grid[i][j].cols() != widths[j])
        throw DimensionMismatchError("block: column widths differ within a pillar");
    }
  }
  int rows = 0, cols = 0;
  for (int h : heights) rows += h;
  for (int w : widths) cols += w;
  Matrix M(grid[0][0].field(), rows, cols);
  int roff = 0;
  for (size_t i = 0; i < grid.size(); ++i) {
    int coff = 0;
    for (size_t j = 0; j < bc; ++j) {
      const Matrix& B = grid[i][j];
      require_same_field(M, B, "block");
      const int m = M.field()->m();
      for (int r = 0; r < B.rows(); ++r)
        std::memcpy(M.limbs(roff + r, coff), B.limbs(r, 0),
                    sizeof(i64) * static_cast<size_t>(B.cols()) * m);
      coff += widths[j];
    }
    roff += heights[i];
  }
  return M;
}

FieldElem Matrix::at(int r, int c) const {
  const i64* e = limbs(r, c);
  return FieldElem{std::vector<i64>(e, e + F_->m())};
}

void Matrix::set(int r, int c, const FieldElem& v) {
  if (static_cast<int>(v.c.size()) != F_->m())
    throw DimensionMismatchError("set: element has wrong limb count");
  std::memcpy(limbs(r, c), v.c.data(), sizeof(i64) * F_->m());
}

i64* Matrix::limbs(int r, int c) {
  return a_.data() + (static_cast<size_t>(r) * cols_ + c) * F_->m();
}

const i64* Matrix::limbs(int r, int c) const {
  return a_.data() + (static_cast<size_t>(r) * cols_ + c) * F_->m();
}

Matrix Matrix::operator*(const Matrix& o) const {
  require_same_field(*this, o, "mul");
  if (cols_ != o.rows_) throw DimensionMismatchError("mul: inner dimensions differ");
  Matrix C(F_, rows_, o.cols_);
  kernels::matmul(*F_, a_.data(), o.a_.data(), C.a_.data(), rows_, cols_, o.cols_);
  return C;
}

Matrix Matrix::operator+(const Matrix& o) const {
  require_same_field(*this, o, "add");
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatchError("add: shapes differ");
  Matrix C(F_, rows_, cols_);
  const int m = F_->m();
  for (size_t k = 0; k < a_.size(); k += m)
    F_->raw_add(a_.data() + k, o.a_.data() + k, C.a_.data() + k);
  return C;
}

Matrix Matrix::operator-(const Matrix& o) const {
  require_same_field(*this, o, "sub");
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatchError("sub: shapes differ");
  Matrix C(F_, rows_, cols_);
  const int m = F_->m();
  for (size_t k = 0; k < a_.size(); k += m)
    F_->raw_sub(a_.data() + k, o.a_.data() + k, C.a_.data() + k);
  return C;
}

Matrix Matrix::neg() const {
  Matrix C(F_, rows_, cols_);
  const int m = F_->m();
  for (size_t k = 0; k < a_.size(); k += m) F_->raw_neg(a_.data() + k, C.a_.data() + k);
  return C;
}

Matrix Matrix::scalar_mul(const FieldElem& s) const {
  Matrix C(F_, rows_, cols_);
  const int m = F_->m();
  std::vector<i64> scratch(2 * m - 1);
  for (size_t k = 0; k < a_.size(); k += m)
    F_->raw_mul(a_.data() + k, s.c.data(), C.a_.data() + k, scratch.data());
  return C;
}

Matrix Matrix::transpose() const {
  Matrix C(F_, cols_, rows_);
  const int m = F_->m();
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      std::memcpy(C.limbs(j, i), limbs(i, j), sizeof(i64) * m);
  return C;
}

Matrix Matrix::pow(i64 e) const {
  if (rows_ != cols_) throw DimensionMismatchError("pow: matrix not square");
  if (e < 0) return inverse(*this).pow(-e);
  Matrix base = *this, r = identity(F_, rows_);
  std::uint64_t k = static_cast<std::uint64_t>(e);
  while (k) {
    if (k & 1) r = r * base;
    base = base * base;
    k >>= 1;
  }
  return r;
}

bool Matrix::operator==(const Matrix& o) const {
  if (!valid() || !o.valid()) return valid() == o.valid();
  return F_->same_field(*o.F_) && rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

bool Matrix::is_zero() const {
  for (i64 v : a_)
    if (v) return false;
  return true;
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  return *this == identity(F_, rows_);
}

Matrix Matrix::submatrix(const std::vector<int>& rsel, const std::vector<int>& csel) const {
  Matrix C(F_, static_cast<int>(rsel.size()), static_cast<int>(csel.size()));
  const int m = F_->m();
  for (size_t i = 0; i < rsel.size(); ++i)
    for (size_t j = 0; j < csel.size(); ++j)
      std::memcpy(C.limbs(static_cast<int>(i), static_cast<int>(j)),
                  limbs(rsel[i], csel[j]), sizeof(i64) * m);
  return C;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < rows_; ++i) {
    os << (i ? " [" : "[");
    for (int j = 0; j < cols_; ++j) {
      if (j) os << " ";
      const FieldElem e = at(i, j);
      if (F_->m() == 1) {
        os << e.c[0];
      } else {
        os << "(";
        for (int s = 0; s < F_->m(); ++s) os << (s ? "," : "") << e.c[s];
        os << ")";
      }
    }
    os << "]";
    if (i + 1 < rows_) os << "\n";
  }
  os << "]";
  return os.str();
}

Matrix rref(const Matrix& M) {
  Matrix R = M;
  kernels::row_reduce(*R.field(), R.data().data(), R.rows(), R.cols(), true);
  return R;
}

int rank(const Matrix& M) {
  Matrix R = M;
  return static_cast<int>(
      kernels::row_reduce(*R.field(), R.data().data(), R.rows(), R.cols(), false).size());
}

Matrix inverse(const Matrix& M) {
  if (M.rows() != M.cols()) throw DimensionMismatchError("inverse: matrix not square");
  const int n = M.rows();
  Matrix aug = horizontal_join(M, Matrix::identity(M.field(), n));
  std::vector<int> piv =
      kernels::row_reduce(*aug.field(), aug.data().data(), aug.rows(), aug.cols(), true);
  if (static_cast<int>(piv.size()) < n || (n > 0 && piv[n - 1] != n - 1))
    throw SingularMatrixError("inverse: singular matrix");
  std::vector<int> rsel(n), csel(n);
  for (int i = 0; i < n; ++i) rsel[i] = i, csel[i] = n + i;
  return aug.submatrix(rsel, csel);
}

Matrix kernel_basis(const Matrix& M) {
  Matrix R = M;
  std::vector<int> piv =
      kernels::row_reduce(*R.field(), R.data().data(), R.rows(), R.cols(), true);
  const int n = M.cols();
  std::vector<bool> is_piv(n, false);
  for (int c : piv) is_piv[c] = true;
  std::vector<int> free_cols;
  for (int c = 0; c < n; ++c)
    if (!is_piv[c]) free_cols.push_back(c);
  const Fq& F = M.field();
  Matrix K(F, n, static_cast<int>(free_cols.size()));
  for (size_t j = 0; j < free_cols.size(); ++j) {
    const int fc = free_cols[j];
    K.set(fc, static_cast<int>(j), F->one());
    for (size_t k = 0; k < piv.size(); ++k)
      K.set(piv[k], static_cast<int>(j), F->neg(R.at(static_cast<int>(k), fc)));
  }
  return K;
}

Matrix column_space_basis(const Matrix& M) {
  Matrix R = M.transpose();
  std::vector<int> piv =
      kernels::row_reduce(*R.field(), R.data().data(), R.rows(), R.cols(), true);
  const int k = static_cast<int>(piv.size());
  std::vector<int> rsel(k), csel(M.rows());
  for (int i = 0; i < k; ++i) rsel[i] = i;
  for (int i = 0; i < M.rows(); ++i) csel[i] = i;
  return R.submatrix(rsel, csel).transpose();
}

std::optional<Matrix> solve(const Matrix& M, const Matrix& B) {
  require_same_field(M, B, "solve");
  if (M.rows() != B.rows()) throw DimensionMismatchError("solve: row counts differ");
  Matrix aug = horizontal_join(M, B);
  std::vector<int> piv =
      kernels::row_reduce(*aug.field(), aug.data().data(), aug.rows(), aug.cols(), true);
  const int n = M.cols();
  for (int c : piv)
    if (c >= n) return std::nullopt;  // pivot in the right half: inconsistent
  const Fq& F = M.field();
  Matrix X(F, n, B.cols());
  for (size_t k = 0; k < piv.size(); ++k)
    for (int j = 0; j < B.cols(); ++j)
      X.set(piv[k], j, aug.at(static_cast<int>(k), n + j));
  return X;
}

Poly char_poly(const Matrix& M) {
  if (M.rows() != M.cols()) throw DimensionMismatchError("char_poly: matrix not square");
  const int n = M.rows();
  const Fq& Fp = M.field();
  const FieldCtx& F = *Fp;
  if (n == 0) return poly_one(F);
  Matrix H = M;
  // similarity reduction to upper Hessenberg form, division-safe in char p
  for (int k = 0; k + 2 < n; ++k) {
    int piv = -1;
    for (int i = k + 1; i < n; ++i) {
      if (!F.is_zero(H.at(i, k))) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    if (piv != k + 1) {
      for (int j = 0; j < n; ++j) {
        FieldElem t = H.at(piv, j);
        H.set(piv, j, H.at(k + 1, j));
        H.set(k + 1, j, t);
      }
      for (int i = 0; i < n; ++i) {
        FieldElem t = H.at(i, piv);
        H.set(i, piv, H.at(i, k + 1));
        H.set(i, k + 1, t);
      }
    }
    const FieldElem pvinv = F.inv(H.at(k + 1, k));
    for (int i = k + 2; i < n; ++i) {
      const FieldElem f = F.mul(H.at(i, k), pvinv);
      if (F.is_zero(f)) continue;
      for (int j = k; j < n; ++j)
        H.set(i, j, F.sub(H.at(i, j), F.mul(f, H.at(k + 1, j))));
      for (int j = 0; j < n; ++j)
        H.set(j, k + 1, F.add(H.at(j, k + 1), F.mul(f, H.at(j, i))));
    }
  }
  // leading principal minor recurrence on the Hessenberg form
  std::vector<Poly> pk(n + 1);
  pk[0] = poly_one(F);
  for (int k = 1; k <= n; ++k) {
    pk[k] = poly_mul(F, poly_linear(F, H.at(k - 1, k - 1)), pk[k - 1]);
    FieldElem prod = F.one();
    for (int i = 2; i <= k; ++i) {
      prod = F.mul(prod, H.at(k - i + 1, k - i));
      const FieldElem coef = F.mul(H.at(k - i, k - 1), prod);
      pk[k] = poly_sub(F, pk[k], poly_scale(F, coef, pk[k - i]));
    }
  }
  return pk[n];
}

std::optional<FittingSplit> fitting_split(const Matrix& u) {
  if (u.rows() != u.cols()) throw DimensionMismatchError("fitting_split: not square");
  const int n = u.rows();
  const Matrix w = u.pow(n);
  Matrix K = kernel_basis(w);
  if (K.cols() == 0 || K.cols() == n) return std::nullopt;
  Matrix I = column_space_basis(w);
  if (K.cols() + I.cols() != n)
    throw std::logic_error("fitting_split: kernel/image dimensions inconsistent");
  return FittingSplit{std::move(K), std::move(I)};
}

std::vector<Matrix> commutant_solve(
    const std::vector<std::pair<Matrix, Matrix>>& pq_pairs,
    const std::vector<std::vector<bool>>* zero_mask) {
  if (pq_pairs.empty()) throw std::invalid_argument("commutant_solve: no constraints");
  const Fq& F = pq_pairs[0].first.field();
  const int dP = pq_pairs[0].first.rows();
  const int dQ = pq_pairs[0].second.rows();
  for (const auto& [P, Q] : pq_pairs) {
    if (P.rows() != P.cols() || Q.rows() != Q.cols())
      throw DimensionMismatchError("commutant_solve: constraint matrices must be square");
    if (P.rows() != dP || Q.rows() != dQ)
      throw DimensionMismatchError("commutant_solve: constraint shapes differ");
    require_same_field(P, Q, "commutant_solve");
  }
  const int nv = dQ * dP;  // unknowns: S[r][c] at index r*dP + c

  // first constraint (plus mask rows) as one dense system
  int mask_rows = 0;
  if (zero_mask) {
    for (int r = 0; r < dQ; ++r)
      for (int c = 0; c < dP; ++c)
        if ((*zero_mask)[r][c]) ++mask_rows;
  }
  const Matrix& P0 = pq_pairs[0].first;
  const Matrix& Q0 = pq_pairs[0].second;
  Matrix E(F, nv + mask_rows, nv);
  for (int i = 0; i < dQ; ++i) {
    for (int j = 0; j < dP; ++j) {
      const int eq = i * dP + j;
      // (Q S - S P)[i][j] = sum_r Q[i][r] S[r][j] - sum_c S[i][c] P[c][j]
      for (int r = 0; r < dQ; ++r)
        E.set(eq, r * dP + j, F->add(E.at(eq, r * dP + j), Q0.at(i, r)));
      for (int c = 0; c < dP; ++c)
        E.set(eq, i * dP + c, F->sub(E.at(eq, i * dP + c), P0.at(c, j)));
    }
  }
  if (zero_mask) {
    int k = nv;
    for (int r = 0; r < dQ; ++r)
      for (int c = 0; c < dP; ++c)
        if ((*zero_mask)[r][c]) E.set(k++, r * dP + c, F->one());
  }
  Matrix K = kernel_basis(E);

  std::vector<Matrix> basis;
  for (int b = 0; b < K.cols(); ++b) {
    Matrix S(F, dQ, dP);
    for (int r = 0; r < dQ; ++r)
      for (int c = 0; c < dP; ++c) S.set(r, c, K.at(r * dP + c, b));
    basis.push_back(std::move(S));
  }

  // refine by the remaining constraints in the current solution coordinates
  for (size_t g = 1; g < pq_pairs.size() && !basis.empty(); ++g) {
    const Matrix& P = pq_pairs[g].first;
    const Matrix& Q = pq_pairs[g].second;
    Matrix R(F, nv, static_cast<int>(basis.size()));
    for (size_t b = 0; b < basis.size(); ++b) {
      const Matrix D = Q * basis[b] - basis[b] * P;
      for (int i = 0; i < dQ; ++i)
        for (int j = 0; j < dP; ++j) R.set(i * dP + j, static_cast<int>(b), D.at(i, j));
    }
    Matrix C = kernel_basis(R);
    std::vector<Matrix> next;
    for (int v = 0; v < C.cols(); ++v) {
      Matrix S(F, dQ, dP);
      for (size_t b = 0; b < basis.size(); ++b) {
        const FieldElem cb = C.at(static_cast<int>(b), v);
        if (F->is_zero(cb)) continue;
        S = S + basis[b].scalar_mul(cb);
      }
      next.push_back(std::move(S));
    }
    basis = std::move(next);
  }

  // canonical echelonized presentation
  if (!basis.empty()) {
    Matrix V(F, static_cast<int>(basis.size()), nv);
    for (size_t b = 0; b < basis.size(); ++b)
      for (int r = 0; r < dQ; ++r)
        for (int c = 0; c < dP; ++c)
          V.set(static_cast<int>(b), r * dP + c, basis[b].at(r, c));
    std::vector<int> piv =
        kernels::row_reduce(*F, V.data().data(), V.rows(), V.cols(), true);
    std::vector<Matrix> out;
    for (size_t k = 0; k < piv.size(); ++k) {
      Matrix S(F, dQ, dP);
      for (int r = 0; r < dQ; ++r)
        for (int c = 0; c < dP; ++c) S.set(r, c, V.at(static_cast<int>(k), r * dP + c));
      out.push_back(std::move(S));
    }
    basis = std::move(out);
  }
  return basis;
}

Matrix restrict_to_column_span(const Matrix& M, const Matrix& B) {
  require_same_field(M, B, "restrict_to_column_span");
  if (M.cols() != B.rows()) throw DimensionMismatchError("restrict: shapes differ");
  const Matrix MB = M * B;
  std::optional<Matrix> X = solve(B, MB);
  if (!X || B * *X != MB)
    throw std::logic_error("restrict_to_column_span: subspace not invariant");
  return *X;
}

Matrix horizontal_join(const Matrix& a, const Matrix& b) {
  require_same_field(a, b, "horizontal_join");
  if (a.rows() != b.rows()) throw DimensionMismatchError("horizontal_join: row counts differ");
  return Matrix::block({{a, b}});
}

Matrix vertical_join(const Matrix& a, const Matrix& b) {
  require_same_field(a, b, "vertical_join");
  if (a.cols() != b.cols()) throw DimensionMismatchError("vertical_join: column counts differ");
  return Matrix::block({{a}, {b}});
}

Matrix kronecker(const Matrix& a, const Matrix& b) {
  require_same_field(a, b, "kronecker");
  const Fq& F = a.field();
  Matrix C(F, a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      const FieldElem aij = a.at(i, j);
      if (F->is_zero(aij)) continue;
      for (int r = 0; r < b.rows(); ++r)
        for (int c = 0; c < b.cols(); ++c)
          C.set(i * b.rows() + r, j * b.cols() + c, F->mul(aij, b.at(r, c)));
    }
  return C;
}

Matrix random_matrix(const Fq& F, int rows, int cols, Rng& rng) {
  Matrix M(F, rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) M.set(i, j, F->random(rng));
  return M;
}

Matrix random_invertible(const Fq& F, int n, Rng& rng) {
  for (;;) {
    Matrix M = random_matrix(F, n, n, rng);
    if (rank(M) == n) return M;
  }
}

}  // namespace qdd
