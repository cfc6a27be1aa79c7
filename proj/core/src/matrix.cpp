#include "glhecke/matrix.hpp"

#include <stdexcept>

namespace glhecke {

Matrix Matrix::identity(int n) { return scalar(n, Scalar(1)); }

Matrix Matrix::scalar(int n, const Scalar& c) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = c;
  return m;
}

Matrix Matrix::from_columns(std::span<const Vector> columns, int rows) {
  Matrix m(rows, static_cast<int>(columns.size()));
  for (int c = 0; c < m.cols(); ++c) {
    if (static_cast<int>(columns[c].size()) != rows) throw std::invalid_argument("ragged columns");
    for (int r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

Vector Matrix::column(int c) const {
  Vector v(rows_);
  for (int r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Vector Matrix::apply(const Vector& v) const {
  if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("dimension mismatch in apply");
  Vector out(rows_);
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) {
      const auto& a = (*this)(r, c);
      if (a.is_zero() || v[c].is_zero()) continue;
      out[r] += a * v[c];
    }
  }
  return out;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_) {
    if (!x.is_zero()) return false;
  }
  return true;
}

std::optional<Scalar> Matrix::as_scalar() const {
  if (rows_ != cols_) return std::nullopt;
  if (rows_ == 0) return Scalar(0);
  const Scalar c = (*this)(0, 0);
  for (int r = 0; r < rows_; ++r) {
    for (int col = 0; col < cols_; ++col) {
      if ((*this)(r, col) != (r == col ? c : Scalar(0))) return std::nullopt;
    }
  }
  return c;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("dimension mismatch in +");
  for (std::size_t i = 0; i < data_.size(); ++i) {
    if (!o.data_[i].is_zero()) data_[i] += o.data_[i];
  }
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("dimension mismatch in -");
  for (std::size_t i = 0; i < data_.size(); ++i) {
    if (!o.data_[i].is_zero()) data_[i] -= o.data_[i];
  }
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("dimension mismatch in *");
  Matrix out(a.rows_, b.cols_);
  // Row-sparse pattern of b, computed once.
  std::vector<std::vector<int>> b_nonzero(b.rows_);
  for (int r = 0; r < b.rows_; ++r) {
    for (int c = 0; c < b.cols_; ++c) {
      if (!b(r, c).is_zero()) b_nonzero[r].push_back(c);
    }
  }
  for (int i = 0; i < a.rows_; ++i) {
    for (int k = 0; k < a.cols_; ++k) {
      const auto& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (int j : b_nonzero[k]) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

Matrix operator*(const Scalar& c, Matrix a) {
  for (auto& x : a.data_) {
    if (!x.is_zero()) x *= c;
  }
  return a;
}

RowEchelon row_echelon(Matrix a) {
  RowEchelon out;
  int row = 0;
  for (int col = 0; col < a.cols() && row < a.rows(); ++col) {
    int pivot = -1;
    for (int r = row; r < a.rows(); ++r) {
      if (!a(r, col).is_zero()) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != row) {
      for (int c = 0; c < a.cols(); ++c) std::swap(a(pivot, c), a(row, c));
    }
    const Scalar inv = Scalar(1) / a(row, col);
    for (int c = col; c < a.cols(); ++c) {
      if (!a(row, c).is_zero()) a(row, c) *= inv;
    }
    for (int r = 0; r < a.rows(); ++r) {
      if (r == row || a(r, col).is_zero()) continue;
      const Scalar f = a(r, col);
      for (int c = col; c < a.cols(); ++c) {
        if (!a(row, c).is_zero()) a(r, c) -= f * a(row, c);
      }
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.reduced = std::move(a);
  return out;
}

int rank(const Matrix& a) { return row_echelon(a).rank(); }

std::vector<Vector> nullspace(const Matrix& a) {
  auto ech = row_echelon(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (int p : ech.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (int free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(a.cols());
    v[free] = Scalar(1);
    for (int r = 0; r < ech.rank(); ++r) v[ech.pivots[r]] = -ech.reduced(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<int> independent_columns(const Matrix& spanning) { return row_echelon(spanning).pivots; }

std::optional<Vector> coordinates(const Matrix& basis, const Vector& v) {
  Matrix aug(basis.rows(), basis.cols() + 1);
  for (int r = 0; r < basis.rows(); ++r) {
    for (int c = 0; c < basis.cols(); ++c) aug(r, c) = basis(r, c);
    aug(r, basis.cols()) = v[r];
  }
  auto ech = row_echelon(std::move(aug));
  if (!ech.pivots.empty() && ech.pivots.back() == basis.cols()) return std::nullopt;
  if (ech.rank() != basis.cols()) throw std::invalid_argument("basis columns are dependent");
  Vector out(basis.cols());
  for (int r = 0; r < ech.rank(); ++r) out[ech.pivots[r]] = ech.reduced(r, basis.cols());
  return out;
}

}  // namespace glhecke
