#pragma once
#include <optional>
#include <string>
#include <vector>

#include "bw/field.hpp"

namespace bw {

/* Dense matrix over an exact field.  Row-major; carries its field so callers
 * cannot mix scalars from different fields by accident. */
class Matrix {
 public:
  Matrix() : F_(Field::Q()), m_(0), n_(0) {}
  Matrix(Field F, int m, int n) : F_(F), m_(m), n_(n) { a_.assign(std::size_t(m) * n, F.zero()); }
  static Matrix identity(Field F, int n);

  int rows() const { return m_; }
  int cols() const { return n_; }
  const Field& field() const { return F_; }

  Value& at(int i, int j) { return a_[std::size_t(i) * n_ + j]; }
  const Value& at(int i, int j) const { return a_[std::size_t(i) * n_ + j]; }

  bool is_zero() const;
  bool equals(const Matrix& o) const;

  Matrix mul(const Matrix& o) const;
  Matrix add(const Matrix& o) const;
  Matrix sub(const Matrix& o) const;
  Matrix scaled(const Value& c) const;
  Matrix negated() const;
  Matrix transpose() const;
  Matrix hstack(const Matrix& o) const;
  Matrix vstack(const Matrix& o) const;
  Matrix cols_subset(const std::vector<int>& idx) const;
  Matrix rows_subset(const std::vector<int>& idx) const;
  Matrix col(int j) const { return cols_subset({j}); }

  void swap_rows(int i, int j);
  std::string to_string() const;

 private:
  Field F_;
  int m_, n_;
  std::vector<Value> a_;
};

struct RrefResult {
  /* pivot_cols[k] is the column whose pivot sits in row k. */
  std::vector<int> pivot_cols;
  int rank = 0;
};

/* Reduced row echelon form; columns are processed in `col_order` if given
 * (used to prefer pivots in chosen coordinates), ascending otherwise.
 * Columns not listed in col_order are eliminated but never made pivots. */
RrefResult rref_in_place(Matrix& A);
RrefResult rref_in_place(Matrix& A, const std::vector<int>& col_order);

int rank_of(Matrix A);

/* Basis of { x : A x = 0 } as columns; one vector per free column of rref(A),
 * in ascending column order. */
Matrix nullspace(const Matrix& A);

/* Solve A X = B; nullopt when inconsistent. */
std::optional<Matrix> solve(const Matrix& A, const Matrix& B);
std::optional<Matrix> inverse(const Matrix& A);
bool is_invertible(const Matrix& A);

/* Echelonized basis of the column space, as columns. */
Matrix col_space(const Matrix& A);

/* span(sub) subseteq span(space)? */
bool cols_contained_in(const Matrix& sub, const Matrix& space);
bool same_col_space(const Matrix& A, const Matrix& B);

Matrix intersect_col_spaces(const Matrix& A, const Matrix& B);

/* Basis of { x : P x in span(C) }. */
Matrix preimage_cols(const Matrix& P, const Matrix& C);

/* Pivot coordinate indices of span(cols of U), ascending.  Unit vectors at
 * the complementary coordinates complete U to a basis. */
std::vector<int> coordinate_pivots(const Matrix& U);

}  // namespace bw
