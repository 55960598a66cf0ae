#include "leibniz/algebra.hpp"

#include <random>
#include <string>
#include <utility>

#include "leibniz/errors.hpp"

namespace leibniz {

namespace {

void check_vector(const AlgebraTable& g, const Vector& v) {
  if (v.size() != g.dim()) {
    throw DimensionMismatch("vector of length " + std::to_string(v.size()) + " in an algebra of dimension " +
                            std::to_string(g.dim()));
  }
  for (const auto& s : v) {
    if (s.field() != g.field()) throw FieldMismatch("vector over " + s.field().to_string() + " in an algebra over " +
                                                    g.field().to_string());
  }
}

void check_subspace(const AlgebraTable& g, const Subspace& s) {
  if (s.ambient_dim() != g.dim()) {
    throw DimensionMismatch("subspace of k^" + std::to_string(s.ambient_dim()) + " in an algebra of dimension " +
                            std::to_string(g.dim()));
  }
  if (s.dim() > 0 && s.field() != g.field()) {
    throw FieldMismatch("subspace over " + s.field().to_string() + " in an algebra over " + g.field().to_string());
  }
}

// [e_i, w]
Vector bracket_basis_left(const AlgebraTable& g, std::size_t i, const Vector& w) {
  Vector out = zero_vector(g.field(), g.dim());
  for (std::size_t m = 0; m < g.dim(); ++m) {
    if (w[m].is_zero()) continue;
    const auto c = g.basis_bracket(i, m);
    for (std::size_t k = 0; k < g.dim(); ++k) {
      if (!c[k].is_zero()) out[k] += w[m] * c[k];
    }
  }
  return out;
}

// [w, e_j]
Vector bracket_basis_right(const AlgebraTable& g, const Vector& w, std::size_t j) {
  Vector out = zero_vector(g.field(), g.dim());
  for (std::size_t m = 0; m < g.dim(); ++m) {
    if (w[m].is_zero()) continue;
    const auto c = g.basis_bracket(m, j);
    for (std::size_t k = 0; k < g.dim(); ++k) {
      if (!c[k].is_zero()) out[k] += w[m] * c[k];
    }
  }
  return out;
}

Vector random_vector(FieldSpec field, std::size_t n, std::mt19937_64& rng) {
  Vector v(n);
  if (field.is_finite()) {
    std::uniform_int_distribution<std::uint64_t> dist(0, field.characteristic() - 1);
    for (auto& s : v) s = Scalar::residue(field, dist(rng));
  } else {
    std::uniform_int_distribution<long long> dist(-3, 3);
    for (auto& s : v) s = Scalar::from_int(field, dist(rng));
  }
  return v;
}

}  // namespace

// ---------------------------------------------------------------------------
// AlgebraTable

AlgebraTable::AlgebraTable(FieldSpec field, std::size_t dim)
    : field_(field), dim_(dim), coefficients_(dim * dim * dim, Scalar::zero(field)) {}

AlgebraTable::AlgebraTable(FieldSpec field, std::size_t dim, std::vector<Scalar> coefficients)
    : field_(field), dim_(dim), coefficients_(std::move(coefficients)) {
  if (coefficients_.size() != dim * dim * dim) {
    throw DimensionMismatch("structure tensor has " + std::to_string(coefficients_.size()) +
                            " entries, expected " + std::to_string(dim * dim * dim));
  }
  for (const auto& s : coefficients_) {
    if (s.field() != field) throw FieldMismatch("structure constant over " + s.field().to_string() +
                                                " in a table over " + field.to_string());
  }
}

AlgebraTable AlgebraTable::from_entries(FieldSpec field, std::size_t dim, const std::vector<Entry>& entries) {
  std::vector<Scalar> coefficients(dim * dim * dim, Scalar::zero(field));
  for (const auto& e : entries) {
    if (e.i >= dim || e.j >= dim || e.k >= dim) {
      throw DimensionMismatch("structure constant index out of range for dimension " + std::to_string(dim));
    }
    if (e.coefficient.field() != field) {
      throw FieldMismatch("structure constant over " + e.coefficient.field().to_string() + " in a table over " +
                          field.to_string());
    }
    coefficients[(e.i * dim + e.j) * dim + e.k] += e.coefficient;
  }
  return AlgebraTable(field, dim, std::move(coefficients));
}

Vector AlgebraTable::basis_bracket_vector(std::size_t i, std::size_t j) const {
  const auto view = basis_bracket(i, j);
  return Vector(view.begin(), view.end());
}

std::vector<AlgebraTable::Entry> AlgebraTable::nonzero_entries() const {
  std::vector<Entry> out;
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) {
      for (std::size_t k = 0; k < dim_; ++k) {
        const Scalar& c = coefficient(i, j, k);
        if (!c.is_zero()) out.push_back({i, j, k, c});
      }
    }
  }
  return out;
}

bool AlgebraTable::is_zero() const {
  for (const auto& s : coefficients_) {
    if (!s.is_zero()) return false;
  }
  return true;
}

LeibnizAlgebra LeibnizAlgebra::checked(AlgebraTable table) {
  const BracketReport report = is_leibniz(table);
  if (!report.holds) {
    const auto& w = *report.witness;
    throw PreconditionViolated("not a Leibniz algebra: the Leibniz identity fails at (e" +
                               std::to_string(w.indices[0] + 1) + ", e" + std::to_string(w.indices[1] + 1) + ", e" +
                               std::to_string(w.indices[2] + 1) + "): " + to_string(w.lhs) +
                               " != " + to_string(w.rhs));
  }
  return LeibnizAlgebra(std::move(table));
}

// ---------------------------------------------------------------------------
// Predicates

Vector bracket(const AlgebraTable& g, const Vector& x, const Vector& y) {
  check_vector(g, x);
  check_vector(g, y);
  Vector out = zero_vector(g.field(), g.dim());
  for (std::size_t i = 0; i < g.dim(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < g.dim(); ++j) {
      if (y[j].is_zero()) continue;
      const Scalar w = x[i] * y[j];
      const auto c = g.basis_bracket(i, j);
      for (std::size_t k = 0; k < g.dim(); ++k) {
        if (!c[k].is_zero()) out[k] += w * c[k];
      }
    }
  }
  return out;
}

BracketReport is_leibniz(const AlgebraTable& g) {
  const std::size_t n = g.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Vector ij = g.basis_bracket_vector(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        Vector lhs = bracket_basis_left(g, i, g.basis_bracket_vector(j, k));
        Vector rhs = subtract(bracket_basis_right(g, ij, k), bracket_basis_right(g, g.basis_bracket_vector(i, k), j));
        if (lhs != rhs) {
          return {false, IdentityWitness{{i, j, k}, std::move(lhs), std::move(rhs)}};
        }
      }
    }
  }
  return {};
}

bool is_lie(const LeibnizAlgebra& g) {
  for (std::size_t i = 0; i < g.dim(); ++i) {
    for (std::size_t j = i; j < g.dim(); ++j) {
      const auto ij = g.basis_bracket(i, j);
      const auto ji = g.basis_bracket(j, i);
      for (std::size_t k = 0; k < g.dim(); ++k) {
        if (i == j && !ij[k].is_zero()) return false;
        if (ij[k] != -ji[k]) return false;
      }
    }
  }
  return true;
}

IdentityCheck check_partial_skew(const LeibnizAlgebra& g, const PartialSkewOptions& options) {
  const std::size_t n = g.dim();
  IdentityCheck result;
  result.seed = options.seed;
  const std::uint64_t tuples = saturating_power(n, 4);
  auto test = [&](const Vector& x, const Vector& y, const Vector& z, const Vector& t) {
    const Vector xy = bracket(g, x, y);
    Vector lhs = bracket(g, xy, bracket(g, z, t));
    Vector rhs = scale(-Scalar::one(g.field()), bracket(g, xy, bracket(g, t, z)));
    ++result.instances;
    if (lhs == rhs) return true;
    result.holds = false;
    result.witness = IdentityWitness{{}, std::move(lhs), std::move(rhs)};
    return false;
  };
  if (tuples <= options.exhaustive_budget) {
    result.exhaustive = true;
    std::vector<Vector> basis;
    for (std::size_t i = 0; i < n; ++i) basis.push_back(unit_vector(g.field(), n, i));
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        for (std::size_t z = 0; z < n; ++z) {
          for (std::size_t t = 0; t < n; ++t) {
            if (!test(basis[x], basis[y], basis[z], basis[t])) {
              result.witness->indices = {x, y, z, t};
              return result;
            }
          }
        }
      }
    }
    return result;
  }
  result.exhaustive = false;
  std::mt19937_64 rng(options.seed);
  for (std::uint64_t trial = 0; trial < options.trials; ++trial) {
    const Vector x = random_vector(g.field(), n, rng);
    const Vector y = random_vector(g.field(), n, rng);
    const Vector z = random_vector(g.field(), n, rng);
    const Vector t = random_vector(g.field(), n, rng);
    if (!test(x, y, z, t)) return result;
  }
  return result;
}

BracketReport check_equivalent_law(const LeibnizAlgebra& g) {
  const std::size_t n = g.dim();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        Vector lhs = bracket_basis_right(g, g.basis_bracket_vector(x, z), y);
        Vector rhs = subtract(bracket_basis_right(g, g.basis_bracket_vector(x, y), z),
                              bracket_basis_left(g, x, g.basis_bracket_vector(y, z)));
        if (lhs != rhs) return {false, IdentityWitness{{x, y, z}, std::move(lhs), std::move(rhs)}};
      }
    }
  }
  return {};
}

Subspace bracket_span(const AlgebraTable& g, const Subspace& a, const Subspace& b) {
  check_subspace(g, a);
  check_subspace(g, b);
  std::vector<Vector> generators;
  const auto a_basis = a.basis_vectors();
  const auto b_basis = b.basis_vectors();
  for (const auto& x : a_basis) {
    for (const auto& y : b_basis) {
      Vector v = bracket(g, x, y);
      if (!is_zero(v)) generators.push_back(std::move(v));
    }
  }
  return Subspace::span(g.field(), g.dim(), generators);
}

Subspace derived_subalgebra(const AlgebraTable& g) {
  std::vector<Vector> generators;
  for (std::size_t i = 0; i < g.dim(); ++i) {
    for (std::size_t j = 0; j < g.dim(); ++j) {
      Vector v = g.basis_bracket_vector(i, j);
      if (!is_zero(v)) generators.push_back(std::move(v));
    }
  }
  return Subspace::span(g.field(), g.dim(), generators);
}

std::vector<Subspace> derived_series(const AlgebraTable& g, const Subspace& s) {
  check_subspace(g, s);
  std::vector<Subspace> series{s};
  while (true) {
    Subspace next = bracket_span(g, series.back(), series.back());
    if (next == series.back()) return series;
    series.push_back(std::move(next));
  }
}

std::vector<Subspace> derived_series(const LeibnizAlgebra& g) {
  return derived_series(g, Subspace::full(g.field(), g.dim()));
}

std::optional<MetabelianWitness> metabelian_witness(const AlgebraTable& g) {
  const std::size_t n = g.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Vector ij = g.basis_bracket_vector(i, j);
      if (is_zero(ij)) continue;
      for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t l = 0; l < n; ++l) {
          Vector value = bracket(g, ij, g.basis_bracket_vector(k, l));
          if (!is_zero(value)) return MetabelianWitness{i, j, k, l, std::move(value)};
        }
      }
    }
  }
  return std::nullopt;
}

bool is_metabelian(const LeibnizAlgebra& g) {
  const Subspace derived = derived_subalgebra(g);
  return bracket_span(g, derived, derived).dim() == 0;
}

bool is_subalgebra(const AlgebraTable& g, const Subspace& s) {
  check_subspace(g, s);
  const auto basis = s.basis_vectors();
  for (const auto& x : basis) {
    for (const auto& y : basis) {
      if (!s.contains(bracket(g, x, y))) return false;
    }
  }
  return true;
}

bool is_two_sided_ideal(const AlgebraTable& g, const Subspace& s) {
  check_subspace(g, s);
  for (const auto& h : s.basis_vectors()) {
    for (std::size_t j = 0; j < g.dim(); ++j) {
      if (!s.contains(bracket_basis_right(g, h, j))) return false;
      if (!s.contains(bracket_basis_left(g, j, h))) return false;
    }
  }
  return true;
}

bool is_abelian_subalgebra(const AlgebraTable& g, const Subspace& s) {
  check_subspace(g, s);
  const auto basis = s.basis_vectors();
  for (const auto& x : basis) {
    for (const auto& y : basis) {
      if (!is_zero(bracket(g, x, y))) return false;
    }
  }
  return true;
}

Subspace subalgebra_closure(const AlgebraTable& g, const Subspace& seed) {
  check_subspace(g, seed);
  Subspace current = seed;
  while (true) {
    Subspace next = subspace_sum(current, bracket_span(g, current, current));
    if (next == current) return current;
    current = std::move(next);
  }
}

Subspace ideal_closure(const AlgebraTable& g, const Subspace& seed) {
  check_subspace(g, seed);
  const Subspace whole = Subspace::full(g.field(), g.dim());
  Subspace current = seed;
  while (true) {
    Subspace next =
        subspace_sum(subspace_sum(current, bracket_span(g, current, whole)), bracket_span(g, whole, current));
    if (next == current) return current;
    current = std::move(next);
  }
}

Quotient quotient(const AlgebraTable& g, const Subspace& h) {
  check_subspace(g, h);
  for (const auto& v : h.basis_vectors()) {
    for (std::size_t j = 0; j < g.dim(); ++j) {
      const Vector right = bracket_basis_right(g, v, j);
      if (!h.contains(right)) {
        throw PreconditionViolated("not a two-sided ideal: [" + to_string(v) + ", e" + std::to_string(j + 1) +
                                   "] = " + to_string(right) + " leaves the subspace");
      }
      const Vector left = bracket_basis_left(g, j, v);
      if (!h.contains(left)) {
        throw PreconditionViolated("not a two-sided ideal: [e" + std::to_string(j + 1) + ", " + to_string(v) +
                                   "] = " + to_string(left) + " leaves the subspace");
      }
    }
  }
  Quotient q;
  q.complement = h.non_pivots();
  const std::size_t m = q.complement.size();
  auto project = [&](const Vector& v) {
    const Vector reduced = h.reduce(v);
    Vector out(m);
    for (std::size_t a = 0; a < m; ++a) out[a] = reduced[q.complement[a]];
    return out;
  };
  q.projection = Matrix(g.field(), m, g.dim());
  for (std::size_t j = 0; j < g.dim(); ++j) {
    const Vector image = project(unit_vector(g.field(), g.dim(), j));
    for (std::size_t a = 0; a < m; ++a) q.projection.set(a, j, image[a]);
  }
  std::vector<Scalar> coefficients;
  coefficients.reserve(m * m * m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      const Vector image = project(g.basis_bracket_vector(q.complement[a], q.complement[b]));
      coefficients.insert(coefficients.end(), image.begin(), image.end());
    }
  }
  q.table = AlgebraTable(g.field(), m, std::move(coefficients));
  return q;
}

bool is_extension_of_abelian_by_abelian(const LeibnizAlgebra& g) {
  const Subspace derived = derived_subalgebra(g);
  if (!is_abelian_subalgebra(g, derived)) return false;
  return quotient(g, derived).table.is_zero();
}

AlgebraTable induced_subalgebra(const AlgebraTable& g, const Subspace& s) {
  check_subspace(g, s);
  const auto basis = s.basis_vectors();
  std::vector<Scalar> coefficients;
  coefficients.reserve(s.dim() * s.dim() * s.dim());
  for (const auto& x : basis) {
    for (const auto& y : basis) {
      const Vector v = bracket(g, x, y);
      if (!s.contains(v)) throw PreconditionViolated("subspace is not closed under the bracket");
      const Vector coords = s.coordinates(v);
      coefficients.insert(coefficients.end(), coords.begin(), coords.end());
    }
  }
  return AlgebraTable(g.field(), s.dim(), std::move(coefficients));
}

AlgebraTable change_basis(const AlgebraTable& g, const Matrix& basis) {
  if (basis.rows() != g.dim() || basis.cols() != g.dim()) throw DimensionMismatch("basis change of the wrong size");
  const Matrix inv = inverse(basis);
  std::vector<Scalar> coefficients;
  coefficients.reserve(g.dim() * g.dim() * g.dim());
  for (std::size_t i = 0; i < g.dim(); ++i) {
    for (std::size_t j = 0; j < g.dim(); ++j) {
      const Vector coords = apply_left(bracket(g, basis.row(i), basis.row(j)), inv);
      coefficients.insert(coefficients.end(), coords.begin(), coords.end());
    }
  }
  return AlgebraTable(g.field(), g.dim(), std::move(coefficients));
}

bool is_homomorphism(const AlgebraTable& g, const AlgebraTable& h, const Matrix& phi) {
  if (phi.rows() != h.dim() || phi.cols() != g.dim()) throw DimensionMismatch("map of the wrong shape");
  if (g.field() != h.field() || phi.field() != g.field()) throw FieldMismatch("homomorphism across fields");
  std::vector<Vector> images;
  for (std::size_t j = 0; j < g.dim(); ++j) images.push_back(phi.column(j));
  for (std::size_t i = 0; i < g.dim(); ++i) {
    for (std::size_t j = 0; j < g.dim(); ++j) {
      if (leibniz::apply(phi, g.basis_bracket_vector(i, j)) != bracket(h, images[i], images[j])) return false;
    }
  }
  return true;
}

FieldChange change_field(const AlgebraTable& g, FieldSpec target) {
  FieldChange result;
  std::vector<Scalar> coefficients;
  coefficients.reserve(g.coefficients().size());
  for (std::size_t idx = 0; idx < g.coefficients().size(); ++idx) {
    const Scalar& c = g.coefficients()[idx];
    Scalar mapped;
    if (g.field().is_rational()) {
      try {
        mapped = Scalar::from_rational(target, c.rational_value());
      } catch (const std::domain_error&) {
        throw PreconditionViolated("structure constant " + c.to_string() + " is undefined over " + target.to_string());
      }
    } else if (target.is_rational()) {
      mapped = Scalar::from_int(target, static_cast<long long>(c.residue_value()));
    } else if (target == g.field()) {
      mapped = c;
    } else {
      throw UnsupportedMode("cannot move structure constants from " + g.field().to_string() + " to " +
                            target.to_string());
    }
    if (!c.is_zero() && mapped.is_zero()) {
      const std::size_t n = g.dim();
      result.vanished.push_back({idx / (n * n), (idx / n) % n, idx % n, c});
    }
    coefficients.push_back(std::move(mapped));
  }
  result.table = AlgebraTable(target, g.dim(), std::move(coefficients));
  return result;
}

}  // namespace leibniz
