#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "leibniz/algebra.hpp"
#include "leibniz/matrix.hpp"

namespace leibniz {

/// (lambda, Lambda, f) on P = k^p_dim: the algebra k x P with
///   {(a,p),(b,q)} = (a lambda(q) + b Lambda(p) + f(p,q), 0).
/// Linear forms are row vectors; f(e_i, e_j) = f(i, j).
struct Dim1Triple {
  FieldSpec field;
  std::size_t p_dim = 0;
  Vector lambda;
  Vector Lambda;
  Matrix f;

  static Dim1Triple zero(FieldSpec field, std::size_t p_dim);
  bool is_zero() const;
  friend bool operator==(const Dim1Triple&, const Dim1Triple&) = default;
};

struct TripleReport {
  bool valid = true;
  /// "Lambda(p)Lambda(q) = -Lambda(p)lambda(q)" or
  /// "Lambda(p)f(q,r) - lambda(r)f(p,q) + lambda(q)f(p,r) = 0".
  std::string condition;
  std::vector<std::size_t> indices;  ///< 0-based
};

/// Compatibility of the triple on basis elements.
TripleReport validate_triple(const Dim1Triple& t);

/// Table on the basis (z, e_1, ..., e_d), z spanning the k factor.
AlgebraTable build_table(const Dim1Triple& t);

enum class FamilyTag { LambdaOnly, FormOnly, Lie, Abelian };

/// "P_lambda", "P_f", "P_Lie", "abelian".
std::string_view family_name(FamilyTag tag);
std::optional<FamilyTag> parse_family(std::string_view name);

/// phi(a, p) = (a u + v(p), psi(p)) between algebras k x P.
struct MorphismTriple {
  Vector v;
  Scalar u;
  Matrix psi;

  friend bool operator==(const MorphismTriple&, const MorphismTriple&) = default;
};

/// Matrix on the basis (z, e_1, ..., e_d): column 0 is (u, 0, ..., 0), column j is
/// (v_j, psi column j).
Matrix morphism_matrix(const MorphismTriple& m);
/// phi_m o phi_n = phi_(u v' + v o psi', u u', psi o psi').
MorphismTriple compose(const MorphismTriple& m, const MorphismTriple& n);
bool is_invertible(const MorphismTriple& m);

struct Extraction {
  Dim1Triple triple;
  /// Rows: the canonical generator z of g', then the unit vectors of its non-pivot
  /// coordinates. build_table(triple) equals change_basis(g, basis).
  Matrix basis;
};

/// Requires dim g' = 1 (PreconditionViolated otherwise). The triple is asserted valid.
Extraction extract_triple(const LeibnizAlgebra& g);

struct Classification {
  FamilyTag tag = FamilyTag::Abelian;
  Dim1Triple canonical;
  /// Set for LambdaOnly: f = theta (x) lambda.
  std::optional<Vector> theta;
  /// Isomorphism from the input triple to `canonical`.
  MorphismTriple to_canonical;
};

/// Case split on Lambda != 0, then lambda != 0, then f != 0. Throws
/// PreconditionViolated for an invalid triple.
Classification classify(const Dim1Triple& t);

/// P^lambda: {(a,p),(b,q)} = (a lambda(q), 0). lambda must be nonzero.
Dim1Triple lambda_family(const Vector& lambda);
/// P(f): {(a,p),(b,q)} = (f(p,q), 0). f must be nonzero.
Dim1Triple form_family(const Matrix& f);
/// P_(Lambda,f): {(a,p),(b,q)} = (-a Lambda(q) + b Lambda(p) + f(p,q), 0). Lambda must be
/// nonzero and Lambda(p)f(q,r) + Lambda(r)f(p,q) - Lambda(q)f(p,r) = 0 must hold.
Dim1Triple lie_family(const Vector& Lambda, const Matrix& f);

/// The three families as tables; lie_family tables are asserted to be Lie algebras.
AlgebraTable build_family(const Dim1Triple& t);

/// Morphism equations on all basis pairs:
///   u lambda = u lambda' o psi,  u Lambda = u Lambda' o psi,
///   u f(p,q) = f'(psi p, psi q) + v(p) lambda'(psi q) + v(q) Lambda'(psi p).
/// The verdict is cross-checked against bracket preservation of morphism_matrix(m)
/// between the built tables; disagreement throws TheoremViolation.
bool verify_morphism(const Dim1Triple& src, const Dim1Triple& dst, const MorphismTriple& m);

inline constexpr std::uint64_t kDefaultMorphismBudget = 10'000'000;

/// All (v, u, psi) satisfying the morphism equations, psi outermost (row-major
/// lexicographic), then u, then v. src must be nonzero. Finite fields only.
std::vector<MorphismTriple> enumerate_morphisms(const Dim1Triple& src, const Dim1Triple& dst,
                                                std::uint64_t budget = kDefaultMorphismBudget);

/// First invertible morphism in the order psi (invertible, lexicographic), u != 0, v.
/// Finite fields only; a witness between different families throws TheoremViolation.
std::optional<MorphismTriple> are_isomorphic(const Dim1Triple& a, const Dim1Triple& b,
                                             std::uint64_t budget = kDefaultMorphismBudget);

/// verify_morphism plus u != 0 and psi invertible; works over any field.
bool verify_isomorphism_witness(const Dim1Triple& a, const Dim1Triple& b, const MorphismTriple& m);

/// An element of P* x k* x Aut(P).
using SemidirectElement = MorphismTriple;

SemidirectElement semidirect_identity(FieldSpec field, std::size_t p_dim);
/// (v,u,psi)(v',u',psi') = (u v' + v o psi', u u', psi o psi'). Throws
/// PreconditionViolated unless both factors have u != 0 and psi invertible.
SemidirectElement semidirect_mul(const SemidirectElement& x, const SemidirectElement& y);
/// (-u^-1 v o psi^-1, u^-1, psi^-1).
SemidirectElement semidirect_inv(const SemidirectElement& x);

struct AutomorphismReport {
  FamilyTag tag = FamilyTag::Abelian;
  /// Elements from the family's closed-form description, ordered by matrix code.
  std::vector<SemidirectElement> elements;
  std::uint64_t order = 0;
  /// Invertible bracket-preserving matrices of build_table(t), by brute force.
  std::uint64_t brute_force_order = 0;
  /// Every element's matrix is one of the brute-force automorphisms (with equal
  /// orders, a bijection).
  bool matches_brute_force = false;
  /// Products (pairs checked below) land in the set and phi_(x y) = phi_x phi_y.
  bool closed = false;
  bool composition_preserved = false;
  std::uint64_t pairs_checked = 0;
  bool pairs_exhaustive = false;
  bool identity_ok = false;
  bool inverses_ok = false;
  /// x = (v o psi^-1, 1, Id) (0, u, psi) for every element.
  bool factorization_ok = false;
  std::vector<SemidirectElement> generators;
  std::uint64_t seed = 0;

  bool consistent() const {
    return order == brute_force_order && matches_brute_force && closed && composition_preserved && identity_ok &&
           inverses_ok && factorization_ok;
  }
};

struct AutomorphismOptions {
  std::uint64_t budget = kDefaultMorphismBudget;
  /// Products checked exhaustively when order^2 is at most this; otherwise this many
  /// seeded random pairs.
  std::uint64_t pair_budget = 1'000'000;
  std::uint64_t seed = kDefaultSeed;
};

/// Automorphisms from the closed-form description of the triple's family (conjugated
/// by classify's normalizing isomorphism when needed), cross-checked by brute force.
/// Requires a nonzero triple over a prime field.
AutomorphismReport automorphism_group(const Dim1Triple& t, const AutomorphismOptions& options = {});

}  // namespace leibniz
