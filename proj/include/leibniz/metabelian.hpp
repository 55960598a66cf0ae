#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "leibniz/algebra.hpp"

namespace leibniz {

/// Bilinear maps x <| p : V x P -> V, p |> x : P x V -> V and f : P x P -> V, stored
/// densely as coefficient tensors (last index is the V coordinate of the value):
///   left_act[(x * p_dim + p) * v_dim + y]
///   right_act[(p * v_dim + x) * v_dim + y]
///   f[(p * p_dim + q) * v_dim + y]
struct MetabelianDatum {
  FieldSpec field;
  std::size_t v_dim = 0;
  std::size_t p_dim = 0;
  std::vector<Scalar> left_act;
  std::vector<Scalar> right_act;
  std::vector<Scalar> f;

  static MetabelianDatum zero(FieldSpec field, std::size_t v_dim, std::size_t p_dim);

  /// e_x <| e_p, e_p |> e_x and f(e_p, e_q) as V-vectors.
  Vector left(std::size_t x, std::size_t p) const;
  Vector right(std::size_t p, std::size_t x) const;
  Vector form(std::size_t p, std::size_t q) const;
  void set_left(std::size_t x, std::size_t p, std::size_t y, const Scalar& value);
  void set_right(std::size_t p, std::size_t x, std::size_t y, const Scalar& value);
  void set_form(std::size_t p, std::size_t q, std::size_t y, const Scalar& value);

  friend bool operator==(const MetabelianDatum&, const MetabelianDatum&) = default;
};

/// A single bilinear action p |> x : P x V -> V and f : P x P -> V, stored like
/// MetabelianDatum::right_act and MetabelianDatum::f.
struct LieMetabelianDatum {
  FieldSpec field;
  std::size_t v_dim = 0;
  std::size_t p_dim = 0;
  std::vector<Scalar> act;
  std::vector<Scalar> f;

  static LieMetabelianDatum zero(FieldSpec field, std::size_t v_dim, std::size_t p_dim);

  Vector action(std::size_t p, std::size_t x) const;
  Vector form(std::size_t p, std::size_t q) const;
  void set_action(std::size_t p, std::size_t x, std::size_t y, const Scalar& value);
  void set_form(std::size_t p, std::size_t q, std::size_t y, const Scalar& value);

  friend bool operator==(const LieMetabelianDatum&, const LieMetabelianDatum&) = default;
};

/// First failed axiom instance; `indices` are 0-based basis indices in the order the
/// axiom names its variables.
struct DatumReport {
  bool valid = true;
  std::string axiom;
  std::vector<std::size_t> indices;
  Vector lhs;
  Vector rhs;

  std::string describe() const;
};

/// Axioms on basis elements, checked in this order:
///   "(x<|p)<|q = (x<|q)<|p"
///   "p|>(x<|q) = (p|>x)<|q"
///   "(p|>x)<|q = -p|>(q|>x)"
///   "p|>f(q,r) - f(p,q)<|r + f(p,r)<|q = 0"
DatumReport validate_datum(const MetabelianDatum& d);

/// Axioms on basis elements, checked in this order:
///   "p|>(q|>x) = q|>(p|>x)"
///   "f(p,p) = 0"  (diagonal, then f(p,q) = -f(q,p), which together give f(v,v) = 0)
///   "p|>f(q,r) + q|>f(r,p) + r|>f(p,q) = 0"
DatumReport validate_lie_datum(const LieMetabelianDatum& d);

/// Table on V x P (V basis first): {(x,p),(y,q)} = (x<|q + p|>y + f(p,q), 0).
/// Throws PreconditionViolated with the violation report for an invalid datum.
AlgebraTable build_metabelian_product(const MetabelianDatum& d);
/// Table on V x P: [(x,p),(y,q)] = (p|>y - q|>x + f(p,q), 0).
AlgebraTable build_lie_metabelian_product(const LieMetabelianDatum& d);

/// The Leibniz datum with the same product: x <| p = -(p |> x).
MetabelianDatum as_leibniz_datum(const LieMetabelianDatum& d);

struct RandomDatum {
  MetabelianDatum datum;
  std::uint64_t attempts = 0;
};
struct RandomLieDatum {
  LieMetabelianDatum datum;
  std::uint64_t attempts = 0;
};

inline constexpr std::uint64_t kDefaultDatumAttempts = 100'000;

/// Rejection sampling over a prime field, deterministic in `seed`. Each attempt
/// draws every tensor with its own density from {0, 1/16, 1/8, 1/4, 1/2} (nonzero
/// entries uniform in GF(p)*), so sparse candidates that pass arrive quickly at small
/// dimensions while dense ones still occur. Throws BudgetExceeded with the attempt count.
RandomDatum random_valid_datum(FieldSpec field, std::size_t v_dim, std::size_t p_dim, std::uint64_t seed,
                               std::uint64_t max_attempts = kDefaultDatumAttempts);
RandomLieDatum random_valid_lie_datum(FieldSpec field, std::size_t v_dim, std::size_t p_dim, std::uint64_t seed,
                                      std::uint64_t max_attempts = kDefaultDatumAttempts);

struct ExtractedDatum {
  MetabelianDatum datum;
  /// Rows: the canonical basis of g' followed by the unit vectors of its non-pivot
  /// coordinates. build_metabelian_product(datum) equals change_basis(g, basis).
  Matrix basis;
};

/// V = g', P spanned by the non-pivot coordinates of g'. Requires g metabelian
/// (PreconditionViolated otherwise); the result is asserted valid.
ExtractedDatum extract_datum(const LeibnizAlgebra& g);

}  // namespace leibniz
