#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "leibniz/field.hpp"
#include "leibniz/matrix.hpp"

namespace leibniz {

/// Default cap on the number of subspaces (or other candidates) an exhaustive
/// enumeration may visit.
inline constexpr std::uint64_t kDefaultEnumerationBudget = 10'000'000;

/// A subspace of k^n stored by its canonical basis: the nonzero rows of its reduced
/// row-echelon form. Two subspaces are equal iff their bases are equal.
class Subspace {
 public:
  /// The zero subspace of Q^0.
  Subspace() = default;

  static Subspace zero(FieldSpec field, std::size_t ambient_dim);
  static Subspace full(FieldSpec field, std::size_t ambient_dim);
  static Subspace span(FieldSpec field, std::size_t ambient_dim, const std::vector<Vector>& generators);
  /// Row space of `m`.
  static Subspace row_space(const Matrix& m);
  /// Wraps a matrix already known to be RREF without zero rows. Checked.
  static Subspace from_canonical_basis(Matrix basis);

  FieldSpec field() const { return basis_.field(); }
  std::size_t ambient_dim() const { return basis_.cols(); }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  Vector basis_vector(std::size_t i) const { return basis_.row(i); }
  std::vector<Vector> basis_vectors() const;
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  /// Coordinates not holding a pivot, increasing. They index a canonical complement.
  std::vector<std::size_t> non_pivots() const;

  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;
  /// Coordinates of `v` in the canonical basis. Precondition: contains(v).
  Vector coordinates(const Vector& v) const;
  /// v minus its component along this subspace, so that the result vanishes on every
  /// pivot coordinate.
  Vector reduce(const Vector& v) const;

  std::size_t hash() const;
  friend bool operator==(const Subspace& a, const Subspace& b) { return a.basis_ == b.basis_; }

 private:
  Subspace(Matrix basis, std::vector<std::size_t> pivots);

  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

struct SubspaceHash {
  std::size_t operator()(const Subspace& s) const { return s.hash(); }
};

Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_intersect(const Subspace& a, const Subspace& b);
/// Throws DimensionMismatch when the length differs from the ambient dimension.
bool membership(const Vector& v, const Subspace& s);

/// Number of k-dimensional subspaces of GF(q)^n, saturating at UINT64_MAX.
std::uint64_t gaussian_binomial(std::uint64_t n, std::uint64_t k, std::uint64_t q);
/// Total number of subspaces of GF(p)^n, saturating.
std::uint64_t subspace_count(FieldSpec field, std::size_t n);

/// Visits every subspace of GF(p)^n exactly once: grouped by dimension 0..n, within a
/// dimension by pivot-column tuple (lexicographic), then by the free RREF entries in
/// row-major lexicographic order. Throws UnsupportedMode over Q and BudgetExceeded,
/// before visiting anything, when the total count exceeds `budget`.
void for_each_subspace(FieldSpec field, std::size_t n, const std::function<void(const Subspace&)>& visit,
                       std::uint64_t budget = kDefaultEnumerationBudget);
/// Same order, restricted to one dimension.
void for_each_subspace_of_dim(FieldSpec field, std::size_t n, std::size_t dim,
                              const std::function<void(const Subspace&)>& visit,
                              std::uint64_t budget = kDefaultEnumerationBudget);
std::vector<Subspace> enumerate_subspaces(FieldSpec field, std::size_t n,
                                          std::uint64_t budget = kDefaultEnumerationBudget);

}  // namespace leibniz
