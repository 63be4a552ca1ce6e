#pragma once
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qdd/field.hpp"
#include "qdd/poly.hpp"

namespace qdd {

// dense matrix over F_{p^m}; row-major flat buffer, m limbs per entry.
// Subspaces are always passed around as matrices whose COLUMNS are the
// basis vectors; representations act on column vectors.
class Matrix {
 public:
  Matrix() = default;
  Matrix(Fq F, int rows, int cols);  // zeros
  static Matrix identity(Fq F, int n);
  static Matrix scalar(Fq F, int n, const FieldElem& s);
  static Matrix from_rows(Fq F, const std::vector<std::vector<FieldElem>>& rows);
  static Matrix from_ints(Fq F, const std::vector<std::vector<i64>>& rows);
  // equal-partition block assembly; grid must be rectangular with matching
  // row heights per band and column widths per pillar
  static Matrix block(const std::vector<std::vector<Matrix>>& grid);

  bool valid() const { return F_ != nullptr; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Fq& field() const { return F_; }

  FieldElem at(int r, int c) const;
  void set(int r, int c, const FieldElem& v);
  i64* limbs(int r, int c);
  const i64* limbs(int r, int c) const;
  std::vector<i64>& data() { return a_; }
  const std::vector<i64>& data() const { return a_; }

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix neg() const;
  Matrix scalar_mul(const FieldElem& s) const;
  Matrix transpose() const;
  Matrix pow(i64 e) const;  // square matrices; negative e goes through inverse
  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }
  bool is_zero() const;
  bool is_identity() const;
  Matrix submatrix(const std::vector<int>& rsel, const std::vector<int>& csel) const;
  std::string to_string() const;

 private:
  Fq F_;
  int rows_ = 0, cols_ = 0;
  std::vector<i64> a_;
};

Matrix inverse(const Matrix& M);  // SingularMatrixError if rank < n
int rank(const Matrix& M);
Matrix rref(const Matrix& M);
// columns span ker M, built from the reduced echelon form (deterministic)
Matrix kernel_basis(const Matrix& M);
// columns span the column space (echelonized, deterministic)
Matrix column_space_basis(const Matrix& M);
// X with M X = B (free variables zero); nullopt when inconsistent
std::optional<Matrix> solve(const Matrix& M, const Matrix& B);
// monic characteristic polynomial det(X I - M), Hessenberg reduction
Poly char_poly(const Matrix& M);

// V = ker(u^n) + im(u^n) for square u of size n; both parts u-invariant
struct FittingSplit {
  Matrix kernel;  // columns
  Matrix image;   // columns
};
// nullopt when u is nilpotent or invertible (no nontrivial split)
std::optional<FittingSplit> fitting_split(const Matrix& u);

// basis of {S : Q_g S = S P_g for every pair}, echelonized and deterministic.
// S has shape Q.rows x P.rows. zero_mask (optional) forces S[r][c] = 0.
std::vector<Matrix> commutant_solve(
    const std::vector<std::pair<Matrix, Matrix>>& pq_pairs,
    const std::vector<std::vector<bool>>* zero_mask = nullptr);

// B's columns span an M-invariant subspace; returns the matrix of M in that
// basis (solves B X = M B and re-verifies exactly)
Matrix restrict_to_column_span(const Matrix& M, const Matrix& B);

Matrix horizontal_join(const Matrix& a, const Matrix& b);
Matrix vertical_join(const Matrix& a, const Matrix& b);
// Kronecker product, row-major convention
Matrix kronecker(const Matrix& a, const Matrix& b);

Matrix random_matrix(const Fq& F, int rows, int cols, Rng& rng);
Matrix random_invertible(const Fq& F, int n, Rng& rng);

}  // namespace qdd
