#include "bw/matrix.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace bw {

Matrix Matrix::identity(Field F, int n) {
  Matrix I(F, n, n);
  for (int i = 0; i < n; ++i) I.at(i, i) = F.one();
  return I;
}

bool Matrix::is_zero() const {
  for (const Value& v : a_)
    if (!F_.is_zero(v)) return false;
  return true;
}

bool Matrix::equals(const Matrix& o) const {
  if (m_ != o.m_ || n_ != o.n_ || F_ != o.F_) return false;
  for (std::size_t i = 0; i < a_.size(); ++i)
    if (!F_.eq(a_[i], o.a_[i])) return false;
  return true;
}

Matrix Matrix::mul(const Matrix& o) const {
  require(n_ == o.m_ && F_ == o.F_, Errc::internal, "matrix product shape mismatch");
  Matrix out(F_, m_, o.n_);
  for (int i = 0; i < m_; ++i)
    for (int k = 0; k < n_; ++k) {
      const Value& c = at(i, k);
      if (F_.is_zero(c)) continue;
      for (int j = 0; j < o.n_; ++j) F_.addmul_in(out.at(i, j), c, o.at(k, j));
    }
  return out;
}

Matrix Matrix::add(const Matrix& o) const {
  require(m_ == o.m_ && n_ == o.n_ && F_ == o.F_, Errc::internal, "matrix sum shape mismatch");
  Matrix out = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) F_.add_in(out.a_[i], o.a_[i]);
  return out;
}

Matrix Matrix::sub(const Matrix& o) const { return add(o.negated()); }

Matrix Matrix::scaled(const Value& c) const {
  Matrix out = *this;
  for (Value& v : out.a_) v = F_.mul(v, c);
  return out;
}

Matrix Matrix::negated() const {
  Matrix out = *this;
  for (Value& v : out.a_) v = F_.neg(v);
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(F_, n_, m_);
  for (int i = 0; i < m_; ++i)
    for (int j = 0; j < n_; ++j) out.at(j, i) = at(i, j);
  return out;
}

Matrix Matrix::hstack(const Matrix& o) const {
  require(m_ == o.m_ && F_ == o.F_, Errc::internal, "hstack shape mismatch");
  Matrix out(F_, m_, n_ + o.n_);
  for (int i = 0; i < m_; ++i) {
    for (int j = 0; j < n_; ++j) out.at(i, j) = at(i, j);
    for (int j = 0; j < o.n_; ++j) out.at(i, n_ + j) = o.at(i, j);
  }
  return out;
}

Matrix Matrix::vstack(const Matrix& o) const {
  require(n_ == o.n_ && F_ == o.F_, Errc::internal, "vstack shape mismatch");
  Matrix out(F_, m_ + o.m_, n_);
  for (int i = 0; i < m_; ++i)
    for (int j = 0; j < n_; ++j) out.at(i, j) = at(i, j);
  for (int i = 0; i < o.m_; ++i)
    for (int j = 0; j < n_; ++j) out.at(m_ + i, j) = o.at(i, j);
  return out;
}

Matrix Matrix::cols_subset(const std::vector<int>& idx) const {
  Matrix out(F_, m_, static_cast<int>(idx.size()));
  for (int i = 0; i < m_; ++i)
    for (std::size_t j = 0; j < idx.size(); ++j) out.at(i, static_cast<int>(j)) = at(i, idx[j]);
  return out;
}

Matrix Matrix::rows_subset(const std::vector<int>& idx) const {
  Matrix out(F_, static_cast<int>(idx.size()), n_);
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (int j = 0; j < n_; ++j) out.at(static_cast<int>(i), j) = at(idx[i], j);
  return out;
}

void Matrix::swap_rows(int i, int j) {
  if (i == j) return;
  for (int c = 0; c < n_; ++c) std::swap(at(i, c), at(j, c));
}

std::string Matrix::to_string() const {
  std::ostringstream out;
  for (int i = 0; i < m_; ++i) {
    out << (i ? "\n[" : "[");
    for (int j = 0; j < n_; ++j) out << (j ? " " : "") << F_.to_string(at(i, j));
    out << "]";
  }
  return out.str();
}

RrefResult rref_in_place(Matrix& A, const std::vector<int>& col_order) {
  const Field& F = A.field();
  RrefResult res;
  int row = 0;
  for (int c : col_order) {
    if (row >= A.rows()) break;
    int piv = -1;
    for (int i = row; i < A.rows(); ++i)
      if (!F.is_zero(A.at(i, c))) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    A.swap_rows(row, piv);
    Value d = F.inv(A.at(row, c));
    for (int j = 0; j < A.cols(); ++j) A.at(row, j) = F.mul(A.at(row, j), d);
    for (int i = 0; i < A.rows(); ++i) {
      if (i == row) continue;
      Value f = A.at(i, c);
      if (F.is_zero(f)) continue;
      for (int j = 0; j < A.cols(); ++j) F.submul_in(A.at(i, j), f, A.at(row, j));
    }
    res.pivot_cols.push_back(c);
    ++row;
  }
  res.rank = row;
  return res;
}

RrefResult rref_in_place(Matrix& A) {
  std::vector<int> order(A.cols());
  std::iota(order.begin(), order.end(), 0);
  return rref_in_place(A, order);
}

int rank_of(Matrix A) { return rref_in_place(A).rank; }

Matrix nullspace(const Matrix& A) {
  Matrix R = A;
  RrefResult r = rref_in_place(R);
  std::vector<int> piv_row_of(A.cols(), -1);
  for (int k = 0; k < r.rank; ++k) piv_row_of[r.pivot_cols[k]] = k;
  std::vector<int> free_cols;
  for (int j = 0; j < A.cols(); ++j)
    if (piv_row_of[j] < 0) free_cols.push_back(j);
  const Field& F = A.field();
  Matrix K(F, A.cols(), static_cast<int>(free_cols.size()));
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    int fc = free_cols[k];
    K.at(fc, static_cast<int>(k)) = F.one();
    for (int j = 0; j < A.cols(); ++j) {
      int pr = piv_row_of[j];
      if (pr >= 0) K.at(j, static_cast<int>(k)) = F.neg(R.at(pr, fc));
    }
  }
  return K;
}

std::optional<Matrix> solve(const Matrix& A, const Matrix& B) {
  require(A.rows() == B.rows() && A.field() == B.field(), Errc::internal, "solve shape mismatch");
  const Field& F = A.field();
  Matrix aug = A.hstack(B);
  std::vector<int> order(A.cols());
  std::iota(order.begin(), order.end(), 0);
  RrefResult r = rref_in_place(aug, order);
  for (int i = r.rank; i < aug.rows(); ++i)
    for (int j = 0; j < B.cols(); ++j)
      if (!F.is_zero(aug.at(i, A.cols() + j))) return std::nullopt;
  Matrix X(F, A.cols(), B.cols());
  for (int k = 0; k < r.rank; ++k)
    for (int j = 0; j < B.cols(); ++j) X.at(r.pivot_cols[k], j) = aug.at(k, A.cols() + j);
  return X;
}

std::optional<Matrix> inverse(const Matrix& A) {
  require(A.rows() == A.cols(), Errc::internal, "inverse of non-square matrix");
  if (rank_of(A) != A.rows()) return std::nullopt;
  return solve(A, Matrix::identity(A.field(), A.rows()));
}

bool is_invertible(const Matrix& A) {
  return A.rows() == A.cols() && rank_of(A) == A.rows();
}

Matrix col_space(const Matrix& A) {
  Matrix T = A.transpose();
  RrefResult r = rref_in_place(T);
  std::vector<int> keep(r.rank);
  std::iota(keep.begin(), keep.end(), 0);
  return T.rows_subset(keep).transpose();
}

bool cols_contained_in(const Matrix& sub, const Matrix& space) {
  require(sub.rows() == space.rows() && sub.field() == space.field(), Errc::internal,
          "span comparison shape mismatch");
  return rank_of(space) == rank_of(space.hstack(sub));
}

bool same_col_space(const Matrix& A, const Matrix& B) {
  return cols_contained_in(A, B) && cols_contained_in(B, A);
}

Matrix intersect_col_spaces(const Matrix& A, const Matrix& B) {
  require(A.rows() == B.rows() && A.field() == B.field(), Errc::internal,
          "intersection shape mismatch");
  Matrix K = nullspace(A.hstack(B));
  Matrix xa(A.field(), A.cols(), K.cols());
  for (int i = 0; i < A.cols(); ++i)
    for (int j = 0; j < K.cols(); ++j) xa.at(i, j) = K.at(i, j);
  return col_space(A.mul(xa));
}

Matrix preimage_cols(const Matrix& P, const Matrix& C) {
  require(P.rows() == C.rows() && P.field() == C.field(), Errc::internal,
          "preimage shape mismatch");
  /* P x = C y  <=>  [P | -C] (x,y) = 0; keep the x block. */
  Matrix K = nullspace(P.hstack(C.negated()));
  Matrix xa(P.field(), P.cols(), K.cols());
  for (int i = 0; i < P.cols(); ++i)
    for (int j = 0; j < K.cols(); ++j) xa.at(i, j) = K.at(i, j);
  return col_space(xa);
}

std::vector<int> coordinate_pivots(const Matrix& U) {
  Matrix T = U.transpose();
  return rref_in_place(T).pivot_cols;
}

}  // namespace bw
