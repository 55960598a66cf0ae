#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "leibniz/field.hpp"
#include "leibniz/matrix.hpp"
#include "leibniz/subspace.hpp"

namespace leibniz {

/// Structure constants c[i][j][k]: [e_i, e_j] = sum_k c[i][j][k] e_k (0-based here,
/// 1-based in files and reports). Any tensor is representable; whether it defines a
/// Leibniz algebra is the separate predicate is_leibniz.
class AlgebraTable {
 public:
  struct Entry {
    std::size_t i = 0;
    std::size_t j = 0;
    std::size_t k = 0;
    Scalar coefficient;
  };

  AlgebraTable() = default;
  /// Zero bracket on k^dim.
  AlgebraTable(FieldSpec field, std::size_t dim);
  /// `coefficients` is the flattened tensor, index (i*dim + j)*dim + k.
  AlgebraTable(FieldSpec field, std::size_t dim, std::vector<Scalar> coefficients);
  /// Duplicate (i, j, k) entries are summed.
  static AlgebraTable from_entries(FieldSpec field, std::size_t dim, const std::vector<Entry>& entries);

  FieldSpec field() const { return field_; }
  std::size_t dim() const { return dim_; }
  const Scalar& coefficient(std::size_t i, std::size_t j, std::size_t k) const {
    return coefficients_[(i * dim_ + j) * dim_ + k];
  }
  /// [e_i, e_j] as a coordinate view.
  std::span<const Scalar> basis_bracket(std::size_t i, std::size_t j) const {
    return {coefficients_.data() + (i * dim_ + j) * dim_, dim_};
  }
  Vector basis_bracket_vector(std::size_t i, std::size_t j) const;
  const std::vector<Scalar>& coefficients() const { return coefficients_; }
  /// Nonzero entries in (i, j, k) lexicographic order.
  std::vector<Entry> nonzero_entries() const;
  bool is_zero() const;

  friend bool operator==(const AlgebraTable& a, const AlgebraTable& b) {
    return a.field_ == b.field_ && a.dim_ == b.dim_ && a.coefficients_ == b.coefficients_;
  }

 private:
  FieldSpec field_;
  std::size_t dim_ = 0;
  std::vector<Scalar> coefficients_;
};

/// A failed instance of an identity: the basis indices that instantiate it (0-based)
/// and both evaluated sides.
struct IdentityWitness {
  std::vector<std::size_t> indices;
  Vector lhs;
  Vector rhs;
};

struct BracketReport {
  bool holds = true;
  std::optional<IdentityWitness> witness;  ///< present iff !holds
};

/// Result of a property-style identity check that may fall back to random sampling.
struct IdentityCheck {
  bool holds = true;
  bool exhaustive = true;
  std::uint64_t instances = 0;
  std::uint64_t seed = 0;
  std::optional<IdentityWitness> witness;
};

inline constexpr std::uint64_t kDefaultSeed = 0x5eed1ebu;

/// A table certified to satisfy the Leibniz identity. Structural operations take
/// this type, which turns the is_leibniz precondition into a construction check.
class LeibnizAlgebra : public AlgebraTable {
 public:
  /// Throws PreconditionViolated carrying the minimal failing triple.
  static LeibnizAlgebra checked(AlgebraTable table);

 private:
  explicit LeibnizAlgebra(AlgebraTable table) : AlgebraTable(std::move(table)) {}
};

/// Bilinear extension of the structure constants.
Vector bracket(const AlgebraTable& g, const Vector& x, const Vector& y);

/// [e_i,[e_j,e_k]] = [[e_i,e_j],e_k] - [[e_i,e_k],e_j] on all basis triples; the witness
/// is the lexicographically smallest failing (i, j, k).
BracketReport is_leibniz(const AlgebraTable& g);

/// [x, x] = 0 on basis vectors and [e_i, e_j] = -[e_j, e_i]; both are needed in
/// characteristic 2.
bool is_lie(const LeibnizAlgebra& g);

struct PartialSkewOptions {
  std::uint64_t trials = 1000;
  std::uint64_t seed = kDefaultSeed;
  /// Scan all n^4 basis tuples when n^4 is at most this.
  std::uint64_t exhaustive_budget = 1'000'000;
};

/// [[x,y],[z,t]] = -[[x,y],[t,z]].
IdentityCheck check_partial_skew(const LeibnizAlgebra& g, const PartialSkewOptions& options = {});
/// [[x,z],y] = [[x,y],z] - [x,[y,z]] on all basis triples.
BracketReport check_equivalent_law(const LeibnizAlgebra& g);

/// Span of [x, y] over basis vectors x of a and y of b.
Subspace bracket_span(const AlgebraTable& g, const Subspace& a, const Subspace& b);
Subspace derived_subalgebra(const AlgebraTable& g);
/// [s, s', s'', ...] ending with the first term that repeats.
std::vector<Subspace> derived_series(const AlgebraTable& g, const Subspace& s);
/// [g, g', g'', ...].
std::vector<Subspace> derived_series(const LeibnizAlgebra& g);

struct MetabelianWitness {
  std::size_t i, j, k, l;  ///< [[e_i,e_j],[e_k,e_l]] != 0, 0-based
  Vector value;
};

bool is_metabelian(const LeibnizAlgebra& g);
/// Smallest (i, j, k, l) in lexicographic order with [[e_i,e_j],[e_k,e_l]] != 0.
std::optional<MetabelianWitness> metabelian_witness(const AlgebraTable& g);

bool is_subalgebra(const AlgebraTable& g, const Subspace& s);
bool is_two_sided_ideal(const AlgebraTable& g, const Subspace& s);
/// The bracket vanishes on s x s.
bool is_abelian_subalgebra(const AlgebraTable& g, const Subspace& s);
/// Smallest bracket-closed subspace containing `seed`.
Subspace subalgebra_closure(const AlgebraTable& g, const Subspace& seed);
/// Smallest two-sided ideal containing `seed`.
Subspace ideal_closure(const AlgebraTable& g, const Subspace& seed);

struct Quotient {
  AlgebraTable table;
  /// (n - dim h) x n; column j is the class of e_j in complement coordinates.
  Matrix projection;
  /// Coordinates of g whose basis vectors span the complement (non-pivots of h).
  std::vector<std::size_t> complement;
};

/// g / h on the complement spanned by the non-pivot coordinates of h. Throws
/// PreconditionViolated naming a bracket that leaves h when h is not a two-sided ideal.
Quotient quotient(const AlgebraTable& g, const Subspace& h);

/// g' is abelian and g / g' is abelian, both computed explicitly.
bool is_extension_of_abelian_by_abelian(const LeibnizAlgebra& g);

/// The bracket restricted to a subalgebra, in the coordinates of its canonical basis.
AlgebraTable induced_subalgebra(const AlgebraTable& g, const Subspace& s);

/// The same algebra in the basis given by the rows of `basis` (invertible).
AlgebraTable change_basis(const AlgebraTable& g, const Matrix& basis);

/// phi is h.dim() x g.dim(), column j the image of e_j. True iff
/// phi([e_i, e_j]) = [phi e_i, phi e_j] for all i, j.
bool is_homomorphism(const AlgebraTable& g, const AlgebraTable& h, const Matrix& phi);

/// Reinterprets the structure constants over another field. Over GF(p) every constant
/// must have a denominator prime to p.
struct FieldChange {
  AlgebraTable table;
  std::vector<AlgebraTable::Entry> vanished;  ///< nonzero constants that reduced to 0
};
FieldChange change_field(const AlgebraTable& g, FieldSpec target);

}  // namespace leibniz
