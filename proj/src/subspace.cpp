#include "leibniz/subspace.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <utility>

#include "leibniz/errors.hpp"

namespace leibniz {

namespace {

void check_compatible(const Subspace& a, const Subspace& b) {
  if (a.field() != b.field()) {
    throw FieldMismatch("subspaces over " + a.field().to_string() + " and " + b.field().to_string());
  }
  if (a.ambient_dim() != b.ambient_dim()) {
    throw DimensionMismatch("subspaces of k^" + std::to_string(a.ambient_dim()) + " and k^" +
                            std::to_string(b.ambient_dim()));
  }
}

Subspace canonical_from_rref(const RrefResult& reduced) {
  Matrix basis(reduced.form.field(), reduced.rank, reduced.form.cols());
  for (std::size_t r = 0; r < reduced.rank; ++r) {
    for (std::size_t c = 0; c < reduced.form.cols(); ++c) basis.set(r, c, reduced.form(r, c));
  }
  return Subspace::from_canonical_basis(std::move(basis));
}

}  // namespace

Subspace::Subspace(Matrix basis, std::vector<std::size_t> pivots)
    : basis_(std::move(basis)), pivots_(std::move(pivots)) {}

Subspace Subspace::zero(FieldSpec field, std::size_t ambient_dim) {
  return Subspace(Matrix(field, 0, ambient_dim), {});
}

Subspace Subspace::full(FieldSpec field, std::size_t ambient_dim) {
  std::vector<std::size_t> pivots(ambient_dim);
  for (std::size_t i = 0; i < ambient_dim; ++i) pivots[i] = i;
  return Subspace(Matrix::identity(field, ambient_dim), std::move(pivots));
}

Subspace Subspace::span(FieldSpec field, std::size_t ambient_dim, const std::vector<Vector>& generators) {
  return row_space(Matrix::from_rows(field, generators, ambient_dim));
}

Subspace Subspace::row_space(const Matrix& m) { return canonical_from_rref(rref(m)); }

Subspace Subspace::from_canonical_basis(Matrix basis) {
  std::vector<std::size_t> pivots;
  for (std::size_t r = 0; r < basis.rows(); ++r) {
    std::size_t c = 0;
    while (c < basis.cols() && basis(r, c).is_zero()) ++c;
    if (c == basis.cols()) throw PreconditionViolated("canonical basis contains a zero row");
    if (!basis(r, c).is_one()) throw PreconditionViolated("pivot entry is not 1");
    if (!pivots.empty() && c <= pivots.back()) throw PreconditionViolated("pivots are not strictly increasing");
    for (std::size_t other = 0; other < basis.rows(); ++other) {
      if (other != r && !basis(other, c).is_zero()) {
        throw PreconditionViolated("pivot column is not cleared");
      }
    }
    pivots.push_back(c);
  }
  return Subspace(std::move(basis), std::move(pivots));
}

std::vector<Vector> Subspace::basis_vectors() const {
  std::vector<Vector> out;
  out.reserve(dim());
  for (std::size_t r = 0; r < dim(); ++r) out.push_back(basis_.row(r));
  return out;
}

std::vector<std::size_t> Subspace::non_pivots() const {
  std::vector<std::size_t> out;
  std::size_t next = 0;
  for (std::size_t c = 0; c < ambient_dim(); ++c) {
    if (next < pivots_.size() && pivots_[next] == c) {
      ++next;
    } else {
      out.push_back(c);
    }
  }
  return out;
}

Vector Subspace::reduce(const Vector& v) const {
  if (v.size() != ambient_dim()) {
    throw DimensionMismatch("vector of length " + std::to_string(v.size()) + " in k^" +
                            std::to_string(ambient_dim()));
  }
  Vector out = v;
  for (std::size_t r = 0; r < dim(); ++r) {
    const Scalar coefficient = out[pivots_[r]];
    if (coefficient.is_zero()) continue;
    const auto row = basis_.row_view(r);
    for (std::size_t c = pivots_[r]; c < out.size(); ++c) {
      if (!row[c].is_zero()) out[c] -= coefficient * row[c];
    }
  }
  return out;
}

bool Subspace::contains(const Vector& v) const { return is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  check_compatible(*this, other);
  for (std::size_t r = 0; r < other.dim(); ++r) {
    if (!contains(other.basis_.row(r))) return false;
  }
  return true;
}

Vector Subspace::coordinates(const Vector& v) const {
  Vector out(dim());
  for (std::size_t r = 0; r < dim(); ++r) out[r] = v.at(pivots_[r]);
  return out;
}

std::size_t Subspace::hash() const {
  std::size_t h = std::hash<std::size_t>{}(ambient_dim()) ^ (dim() << 16);
  for (std::size_t r = 0; r < dim(); ++r) {
    for (const auto& s : basis_.row_view(r)) h = h * 1315423911u + s.hash();
  }
  return h;
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  check_compatible(a, b);
  std::vector<Vector> generators = a.basis_vectors();
  for (auto& v : b.basis_vectors()) generators.push_back(std::move(v));
  return Subspace::span(a.field(), a.ambient_dim(), generators);
}

Subspace subspace_intersect(const Subspace& a, const Subspace& b) {
  check_compatible(a, b);
  // (x, y) with x*A + y*B = 0 gives x*A in the intersection, and every element arises so.
  std::vector<Vector> stacked = a.basis_vectors();
  for (auto& v : b.basis_vectors()) stacked.push_back(std::move(v));
  const Matrix kernel = left_kernel(Matrix::from_rows(a.field(), stacked, a.ambient_dim()));
  std::vector<Vector> generators;
  for (std::size_t r = 0; r < kernel.rows(); ++r) {
    Vector x(kernel.row_view(r).begin(), kernel.row_view(r).begin() + static_cast<std::ptrdiff_t>(a.dim()));
    generators.push_back(apply_left(x, a.basis()));
  }
  return Subspace::span(a.field(), a.ambient_dim(), generators);
}

bool membership(const Vector& v, const Subspace& s) {
  if (v.size() != s.ambient_dim()) {
    throw DimensionMismatch("vector of length " + std::to_string(v.size()) + " tested against a subspace of k^" +
                            std::to_string(s.ambient_dim()));
  }
  return s.contains(v);
}

std::uint64_t gaussian_binomial(std::uint64_t n, std::uint64_t k, std::uint64_t q) {
  if (k > n) return 0;
  // Pascal-type recurrence [n,k] = [n-1,k-1] + q^k [n-1,k], exact in 128 bits then saturated.
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::vector<unsigned __int128> row(k + 1, 0);
  row[0] = 1;
  for (std::uint64_t m = 1; m <= n; ++m) {
    for (std::uint64_t j = std::min(m, k); j >= 1; --j) {
      const unsigned __int128 qj = saturating_power(q, j);
      unsigned __int128 next = row[j - 1] + qj * row[j];
      if (next > kMax || qj == kMax) next = kMax;
      row[j] = next;
    }
  }
  return static_cast<std::uint64_t>(row[k]);
}

std::uint64_t subspace_count(FieldSpec field, std::size_t n) {
  if (!field.is_finite()) throw UnsupportedMode("infinitely many subspaces over Q");
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t total = 0;
  for (std::size_t k = 0; k <= n; ++k) {
    const std::uint64_t c = gaussian_binomial(n, k, field.characteristic());
    if (c > kMax - total) return kMax;
    total += c;
  }
  return total;
}

namespace {

void check_budget(FieldSpec field, std::size_t n, std::uint64_t count, std::uint64_t budget) {
  if (count > budget) {
    throw BudgetExceeded("enumerating the subspaces of " + field.to_string() + "^" + std::to_string(n) +
                         " visits " + std::to_string(count) + " candidates, over the budget of " +
                         std::to_string(budget));
  }
}

void enumerate_dim(FieldSpec field, std::size_t n, std::size_t dim, const std::function<void(const Subspace&)>& visit) {
  const std::uint64_t p = field.characteristic();
  std::vector<std::size_t> pivots(dim);
  for (std::size_t i = 0; i < dim; ++i) pivots[i] = i;
  while (true) {
    // Free entries: row r, column c > pivots[r] that is not itself a pivot.
    std::vector<std::pair<std::size_t, std::size_t>> free;
    for (std::size_t r = 0; r < dim; ++r) {
      for (std::size_t c = pivots[r] + 1; c < n; ++c) {
        if (!std::binary_search(pivots.begin(), pivots.end(), c)) free.emplace_back(r, c);
      }
    }
    std::vector<std::uint64_t> digits(free.size(), 0);
    while (true) {
      Matrix basis(field, dim, n);
      for (std::size_t r = 0; r < dim; ++r) basis.set(r, pivots[r], Scalar::one(field));
      for (std::size_t f = 0; f < free.size(); ++f) {
        if (digits[f] != 0) basis.set(free[f].first, free[f].second, Scalar::residue(field, digits[f]));
      }
      visit(Subspace::from_canonical_basis(std::move(basis)));
      std::size_t pos = free.size();
      bool carried_out = true;
      while (pos > 0) {
        --pos;
        if (++digits[pos] < p) {
          carried_out = false;
          break;
        }
        digits[pos] = 0;
      }
      if (carried_out) break;
    }
    // Next pivot tuple in lexicographic order.
    std::size_t i = dim;
    while (i > 0 && pivots[i - 1] == n - dim + (i - 1)) --i;
    if (i == 0) return;
    ++pivots[i - 1];
    for (std::size_t j = i; j < dim; ++j) pivots[j] = pivots[j - 1] + 1;
  }
}

}  // namespace

void for_each_subspace_of_dim(FieldSpec field, std::size_t n, std::size_t dim,
                              const std::function<void(const Subspace&)>& visit, std::uint64_t budget) {
  if (!field.is_finite()) throw UnsupportedMode("subspace enumeration needs a finite field");
  if (dim > n) return;
  check_budget(field, n, gaussian_binomial(n, dim, field.characteristic()), budget);
  enumerate_dim(field, n, dim, visit);
}

void for_each_subspace(FieldSpec field, std::size_t n, const std::function<void(const Subspace&)>& visit,
                       std::uint64_t budget) {
  if (!field.is_finite()) throw UnsupportedMode("subspace enumeration needs a finite field");
  check_budget(field, n, subspace_count(field, n), budget);
  for (std::size_t d = 0; d <= n; ++d) enumerate_dim(field, n, d, visit);
}

std::vector<Subspace> enumerate_subspaces(FieldSpec field, std::size_t n, std::uint64_t budget) {
  std::vector<Subspace> out;
  for_each_subspace(field, n, [&out](const Subspace& s) { out.push_back(s); }, budget);
  return out;
}

}  // namespace leibniz
