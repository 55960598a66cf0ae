#include "leibniz/matrix.hpp"

#include <limits>
#include <string>

#include "leibniz/errors.hpp"

namespace leibniz {

Matrix::Matrix(FieldSpec field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), entries_(rows * cols, Scalar::zero(field)) {}

Matrix Matrix::identity(FieldSpec field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.entries_[i * n + i] = Scalar::one(field);
  return m;
}

Matrix Matrix::from_rows(FieldSpec field, const std::vector<Vector>& rows, std::size_t cols) {
  Matrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) {
      throw DimensionMismatch("row " + std::to_string(r) + " has length " + std::to_string(rows[r].size()) +
                              ", expected " + std::to_string(cols));
    }
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rows[r][c]);
  }
  return m;
}

Matrix Matrix::from_ints(FieldSpec field, const std::vector<std::vector<long long>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Matrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionMismatch("ragged integer matrix");
    for (std::size_t c = 0; c < cols; ++c) m.entries_[r * cols + c] = Scalar::from_int(field, rows[r][c]);
  }
  return m;
}

void Matrix::set(std::size_t r, std::size_t c, const Scalar& value) {
  if (value.field() != field_) {
    throw FieldMismatch("entry over " + value.field().to_string() + " in a matrix over " + field_.to_string());
  }
  entries_.at(r * cols_ + c) = value;
}

Vector Matrix::row(std::size_t r) const {
  const auto view = row_view(r);
  return Vector(view.begin(), view.end());
}

Vector Matrix::column(std::size_t c) const {
  Vector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

bool Matrix::is_zero() const {
  for (const auto& s : entries_) {
    if (!s.is_zero()) return false;
  }
  return true;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

RrefResult rref(const Matrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (const auto& s : m.row_view(r)) {
      if (s.field() != m.field()) throw FieldMismatch("matrix mixes entries over different fields");
    }
  }
  std::vector<Vector> rows(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) rows[r] = m.row(r);

  RrefResult result;
  std::size_t lead = 0;
  for (std::size_t col = 0; col < m.cols() && lead < m.rows(); ++col) {
    std::size_t pivot = lead;
    while (pivot < m.rows() && rows[pivot][col].is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    std::swap(rows[pivot], rows[lead]);
    const Scalar inv = rows[lead][col].inverse();
    if (!inv.is_one()) {
      for (std::size_t c = col; c < m.cols(); ++c) rows[lead][c] *= inv;
    }
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead || rows[r][col].is_zero()) continue;
      const Scalar factor = -rows[r][col];
      for (std::size_t c = col; c < m.cols(); ++c) {
        if (!rows[lead][c].is_zero()) rows[r][c] += factor * rows[lead][c];
      }
    }
    result.pivots.push_back(col);
    ++lead;
  }
  result.rank = lead;
  result.form = Matrix(m.field(), m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) result.form.set(r, c, rows[r][c]);
  }
  return result;
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

Matrix multiply(const Matrix& a, const Matrix& b) {
  if (a.field() != b.field()) throw FieldMismatch("matrix product over different fields");
  if (a.cols() != b.rows()) throw DimensionMismatch("matrix product shape mismatch");
  Matrix out(a.field(), a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Scalar acc = Scalar::zero(a.field());
      for (std::size_t k = 0; k < a.cols(); ++k) {
        if (!a(i, k).is_zero() && !b(k, j).is_zero()) acc += a(i, k) * b(k, j);
      }
      out.set(i, j, acc);
    }
  }
  return out;
}

Matrix transpose(const Matrix& m) {
  Matrix out(m.field(), m.cols(), m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out.set(c, r, m(r, c));
  }
  return out;
}

Vector apply(const Matrix& m, const Vector& v) {
  if (v.size() != m.cols()) throw DimensionMismatch("matrix-vector shape mismatch");
  Vector out = zero_vector(m.field(), m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (!m(r, c).is_zero() && !v[c].is_zero()) out[r] += m(r, c) * v[c];
    }
  }
  return out;
}

Vector apply_left(const Vector& v, const Matrix& m) {
  if (v.size() != m.rows()) throw DimensionMismatch("vector-matrix shape mismatch");
  Vector out = zero_vector(m.field(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (v[r].is_zero()) continue;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (!m(r, c).is_zero()) out[c] += v[r] * m(r, c);
    }
  }
  return out;
}

bool is_invertible(const Matrix& m) { return m.rows() == m.cols() && rank(m) == m.rows(); }

Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix augmented(m.field(), n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) augmented.set(r, c, m(r, c));
    augmented.set(r, n + r, Scalar::one(m.field()));
  }
  const RrefResult reduced = rref(augmented);
  if (reduced.rank < n || reduced.pivots[n - 1] != n - 1) {
    throw PreconditionViolated("matrix is singular");
  }
  Matrix out(m.field(), n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) out.set(r, c, reduced.form(r, n + c));
  }
  return out;
}

Matrix left_kernel(const Matrix& m) {
  // rref([m | I]); rows whose m-part vanished carry kernel vectors in the I-part.
  const std::size_t rows = m.rows();
  Matrix augmented(m.field(), rows, m.cols() + rows);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) augmented.set(r, c, m(r, c));
    augmented.set(r, m.cols() + r, Scalar::one(m.field()));
  }
  const RrefResult reduced = rref(augmented);
  std::vector<Vector> kernel;
  for (std::size_t r = 0; r < rows; ++r) {
    bool left_zero = true;
    for (std::size_t c = 0; c < m.cols() && left_zero; ++c) left_zero = reduced.form(r, c).is_zero();
    if (!left_zero) continue;
    Vector v(rows);
    for (std::size_t c = 0; c < rows; ++c) v[c] = reduced.form(r, m.cols() + c);
    kernel.push_back(std::move(v));
  }
  const Matrix basis = Matrix::from_rows(m.field(), kernel, rows);
  const RrefResult canonical = rref(basis);
  Matrix out(m.field(), canonical.rank, rows);
  for (std::size_t r = 0; r < canonical.rank; ++r) {
    for (std::size_t c = 0; c < rows; ++c) out.set(r, c, canonical.form(r, c));
  }
  return out;
}

std::uint64_t saturating_power(std::uint64_t base, std::uint64_t exponent) {
  std::uint64_t result = 1;
  for (std::uint64_t i = 0; i < exponent; ++i) {
    if (base != 0 && result > std::numeric_limits<std::uint64_t>::max() / base) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    result *= base;
  }
  return result;
}

std::vector<Matrix> all_matrices(FieldSpec field, std::size_t rows, std::size_t cols, std::uint64_t budget) {
  if (!field.is_finite()) throw UnsupportedMode("cannot enumerate matrices over Q");
  const std::uint64_t count = saturating_power(field.characteristic(), rows * cols);
  if (count > budget) {
    throw BudgetExceeded("enumerating " + std::to_string(rows) + "x" + std::to_string(cols) + " matrices over " +
                         field.to_string() + " exceeds the budget of " + std::to_string(budget));
  }
  std::vector<Matrix> out;
  out.reserve(count);
  for (const auto& entries : all_vectors(field, rows * cols)) {
    Matrix m(field, rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c < cols; ++c) m.set(r, c, entries[r * cols + c]);
    }
    out.push_back(std::move(m));
  }
  return out;
}

std::vector<Matrix> invertible_matrices(FieldSpec field, std::size_t n, std::uint64_t budget) {
  std::vector<Matrix> out;
  for (auto& m : all_matrices(field, n, n, budget)) {
    if (is_invertible(m)) out.push_back(std::move(m));
  }
  return out;
}

}  // namespace leibniz
