#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "leibniz/field.hpp"

namespace leibniz {

/// Dense row-major matrix over a single field.
class Matrix {
 public:
  Matrix() = default;
  /// Zero matrix.
  Matrix(FieldSpec field, std::size_t rows, std::size_t cols);

  static Matrix identity(FieldSpec field, std::size_t n);
  /// Throws FieldMismatch if any entry is not over `field`, DimensionMismatch on ragged rows.
  static Matrix from_rows(FieldSpec field, const std::vector<Vector>& rows, std::size_t cols);
  /// Convenience for tests and built-in data: integer entries reduced into `field`.
  static Matrix from_ints(FieldSpec field, const std::vector<std::vector<long long>>& rows);

  FieldSpec field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const Scalar& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  /// Throws FieldMismatch if `value` lives over another field.
  void set(std::size_t r, std::size_t c, const Scalar& value);

  std::span<const Scalar> row_view(std::size_t r) const { return {entries_.data() + r * cols_, cols_}; }
  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;

  bool is_zero() const;
  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  FieldSpec field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> entries_;
};

struct RrefResult {
  Matrix form;  ///< same shape as the input, zero rows at the bottom
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;  ///< pivot column of each nonzero row
};

/// Reduced row-echelon form by Gauss-Jordan elimination.
RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);

Matrix multiply(const Matrix& a, const Matrix& b);
Matrix transpose(const Matrix& m);
/// m * v with v a column.
Vector apply(const Matrix& m, const Vector& v);
/// v * m with v a row.
Vector apply_left(const Vector& v, const Matrix& m);
bool is_invertible(const Matrix& m);
/// Throws PreconditionViolated when singular.
Matrix inverse(const Matrix& m);

/// Rows x with x * m = 0, returned as an RREF basis (the left kernel).
Matrix left_kernel(const Matrix& m);

/// All rows x cols matrices over GF(p), row-major lexicographic order. Throws
/// BudgetExceeded if p^(rows*cols) exceeds `budget`.
std::vector<Matrix> all_matrices(FieldSpec field, std::size_t rows, std::size_t cols, std::uint64_t budget);
/// Invertible n x n matrices over GF(p) in the same order.
std::vector<Matrix> invertible_matrices(FieldSpec field, std::size_t n, std::uint64_t budget);

/// p^k with saturation at UINT64_MAX.
std::uint64_t saturating_power(std::uint64_t base, std::uint64_t exponent);

}  // namespace leibniz
