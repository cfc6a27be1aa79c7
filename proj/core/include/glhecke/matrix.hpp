#pragma once

// Dense matrices over exact scalars. Products skip zero entries, which keeps
// the signed-permutation and triangular matrices of induced modules cheap.

#include <optional>
#include <span>
#include <vector>

#include "glhecke/exact.hpp"

namespace glhecke {

using Vector = std::vector<Scalar>;

class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(std::size_t(rows) * cols) {}

  static Matrix identity(int n);
  static Matrix scalar(int n, const Scalar& c);
  static Matrix from_columns(std::span<const Vector> columns, int rows);

  [[nodiscard]] int rows() const { return rows_; }
  [[nodiscard]] int cols() const { return cols_; }

  Scalar& operator()(int r, int c) { return data_[std::size_t(r) * cols_ + c]; }
  const Scalar& operator()(int r, int c) const { return data_[std::size_t(r) * cols_ + c]; }

  [[nodiscard]] Vector column(int c) const;
  [[nodiscard]] Vector apply(const Vector& v) const;
  [[nodiscard]] bool is_zero() const;
  /// If this is c * Id, returns c.
  [[nodiscard]] std::optional<Scalar> as_scalar() const;
  [[nodiscard]] Matrix transpose() const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Scalar& c, Matrix a);
  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Scalar> data_;
};

/// Reduced row echelon form with the pivot column of each nonzero row.
struct RowEchelon {
  Matrix reduced;
  std::vector<int> pivots;

  [[nodiscard]] int rank() const { return static_cast<int>(pivots.size()); }
};

RowEchelon row_echelon(Matrix a);
int rank(const Matrix& a);
/// Basis of {x : A x = 0}, one vector per free column, in column order.
std::vector<Vector> nullspace(const Matrix& a);

/// Columns of `spanning` that form a basis of its column space (pivot columns).
std::vector<int> independent_columns(const Matrix& spanning);

/// Coordinates of v in the basis given by the columns of `basis`; nullopt if
/// v is outside their span.
std::optional<Vector> coordinates(const Matrix& basis, const Vector& v);

}  // namespace glhecke
