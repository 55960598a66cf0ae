#include "leibniz/dim1.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <unordered_set>

#include "leibniz/errors.hpp"
#include "leibniz/kernels/homomorphisms.hpp"

namespace leibniz {

namespace {

void check_triple_shape(const Dim1Triple& t) {
  if (t.lambda.size() != t.p_dim || t.Lambda.size() != t.p_dim || t.f.rows() != t.p_dim || t.f.cols() != t.p_dim) {
    throw DimensionMismatch("triple components do not match p_dim = " + std::to_string(t.p_dim));
  }
  for (const auto& s : t.lambda) {
    if (s.field() != t.field) throw FieldMismatch("lambda is not over " + t.field.to_string());
  }
  for (const auto& s : t.Lambda) {
    if (s.field() != t.field) throw FieldMismatch("Lambda is not over " + t.field.to_string());
  }
  if (t.p_dim > 0 && t.f.field() != t.field) throw FieldMismatch("f is not over " + t.field.to_string());
}

void check_pair(const Dim1Triple& a, const Dim1Triple& b) {
  check_triple_shape(a);
  check_triple_shape(b);
  if (a.field != b.field) throw FieldMismatch("triples over different fields");
  if (a.p_dim != b.p_dim) throw DimensionMismatch("triples with different p_dim");
}

void check_morphism_shape(const Dim1Triple& t, const MorphismTriple& m) {
  if (m.v.size() != t.p_dim || m.psi.rows() != t.p_dim || m.psi.cols() != t.p_dim) {
    throw DimensionMismatch("morphism components do not match p_dim = " + std::to_string(t.p_dim));
  }
  if (m.u.field() != t.field) throw FieldMismatch("morphism is not over " + t.field.to_string());
}

// lambda o psi as a row vector.
Vector pull(const Vector& form, const Matrix& psi) { return apply_left(form, psi); }

// (p, q) -> f(psi p, psi q), i.e. psi^T F psi.
Matrix pull(const Matrix& f, const Matrix& psi) { return multiply(transpose(psi), multiply(f, psi)); }

std::string vector_text(const Vector& v) { return to_string(v); }

}  // namespace

Dim1Triple Dim1Triple::zero(FieldSpec field, std::size_t p_dim) {
  return {field, p_dim, zero_vector(field, p_dim), zero_vector(field, p_dim), Matrix(field, p_dim, p_dim)};
}

bool Dim1Triple::is_zero() const { return leibniz::is_zero(lambda) && leibniz::is_zero(Lambda) && f.is_zero(); }

TripleReport validate_triple(const Dim1Triple& t) {
  check_triple_shape(t);
  const std::size_t d = t.p_dim;
  for (std::size_t p = 0; p < d; ++p) {
    for (std::size_t q = 0; q < d; ++q) {
      if (t.Lambda[p] * t.Lambda[q] != -(t.Lambda[p] * t.lambda[q])) {
        return {false, "Lambda(p)Lambda(q) = -Lambda(p)lambda(q)", {p, q}};
      }
    }
  }
  for (std::size_t p = 0; p < d; ++p) {
    for (std::size_t q = 0; q < d; ++q) {
      for (std::size_t r = 0; r < d; ++r) {
        const Scalar s = t.Lambda[p] * t.f(q, r) - t.lambda[r] * t.f(p, q) + t.lambda[q] * t.f(p, r);
        if (!s.is_zero()) return {false, "Lambda(p)f(q,r) - lambda(r)f(p,q) + lambda(q)f(p,r) = 0", {p, q, r}};
      }
    }
  }
  return {};
}

AlgebraTable build_table(const Dim1Triple& t) {
  check_triple_shape(t);
  const std::size_t n = t.p_dim + 1;
  std::vector<AlgebraTable::Entry> entries;
  for (std::size_t j = 0; j < t.p_dim; ++j) {
    entries.push_back({0, j + 1, 0, t.lambda[j]});
    entries.push_back({j + 1, 0, 0, t.Lambda[j]});
    for (std::size_t k = 0; k < t.p_dim; ++k) entries.push_back({j + 1, k + 1, 0, t.f(j, k)});
  }
  return AlgebraTable::from_entries(t.field, n, entries);
}

std::string_view family_name(FamilyTag tag) {
  switch (tag) {
    case FamilyTag::LambdaOnly:
      return "P_lambda";
    case FamilyTag::FormOnly:
      return "P_f";
    case FamilyTag::Lie:
      return "P_Lie";
    case FamilyTag::Abelian:
      return "abelian";
  }
  return "abelian";
}

std::optional<FamilyTag> parse_family(std::string_view name) {
  for (FamilyTag tag : {FamilyTag::LambdaOnly, FamilyTag::FormOnly, FamilyTag::Lie, FamilyTag::Abelian}) {
    if (family_name(tag) == name) return tag;
  }
  return std::nullopt;
}

Matrix morphism_matrix(const MorphismTriple& m) {
  const std::size_t d = m.psi.rows();
  const FieldSpec field = m.u.field();
  Matrix out(field, d + 1, d + 1);
  out.set(0, 0, m.u);
  for (std::size_t j = 0; j < d; ++j) {
    out.set(0, j + 1, m.v[j]);
    for (std::size_t i = 0; i < d; ++i) out.set(i + 1, j + 1, m.psi(i, j));
  }
  return out;
}

MorphismTriple compose(const MorphismTriple& m, const MorphismTriple& n) {
  return {add(scale(m.u, n.v), pull(m.v, n.psi)), m.u * n.u, multiply(m.psi, n.psi)};
}

bool is_invertible(const MorphismTriple& m) { return !m.u.is_zero() && is_invertible(m.psi); }

Extraction extract_triple(const LeibnizAlgebra& g) {
  const Subspace derived = derived_subalgebra(g);
  if (derived.dim() != 1) {
    throw PreconditionViolated("extract_triple needs a one-dimensional derived subalgebra, found dimension " +
                               std::to_string(derived.dim()));
  }
  const FieldSpec field = g.field();
  const Vector z = derived.basis_vector(0);
  const std::size_t pivot = derived.pivots()[0];
  const std::vector<std::size_t> complement = derived.non_pivots();
  const std::size_t d = complement.size();

  // Every bracket lies in span{z} and z has a 1 at the pivot.
  auto coefficient = [&](const Vector& w) { return w[pivot]; };
  Dim1Triple t = Dim1Triple::zero(field, d);
  for (std::size_t j = 0; j < d; ++j) {
    const Vector e = unit_vector(field, g.dim(), complement[j]);
    t.lambda[j] = coefficient(bracket(g, z, e));
    t.Lambda[j] = coefficient(bracket(g, e, z));
    for (std::size_t k = 0; k < d; ++k) t.f.set(j, k, coefficient(g.basis_bracket_vector(complement[j], complement[k])));
  }
  std::vector<Vector> rows{z};
  for (std::size_t c : complement) rows.push_back(unit_vector(field, g.dim(), c));
  const TripleReport report = validate_triple(t);
  if (!report.valid) throw TheoremViolation("extracted triple violates " + report.condition);
  return {std::move(t), Matrix::from_rows(field, rows, g.dim())};
}

Classification classify(const Dim1Triple& t) {
  const TripleReport report = validate_triple(t);
  if (!report.valid) throw PreconditionViolated("invalid triple: " + report.condition + " fails");
  Classification c;
  c.canonical = t;
  c.to_canonical = semidirect_identity(t.field, t.p_dim);
  if (!is_zero(t.Lambda)) {
    c.tag = FamilyTag::Lie;
    if (t.lambda != scale(-Scalar::one(t.field), t.Lambda)) {
      throw TheoremViolation("valid triple with Lambda != 0 but lambda != -Lambda");
    }
    return c;
  }
  if (!is_zero(t.lambda)) {
    c.tag = FamilyTag::LambdaOnly;
    std::size_t r0 = 0;
    while (t.lambda[r0].is_zero()) ++r0;
    const Scalar inv = t.lambda[r0].inverse();
    Vector theta(t.p_dim);
    for (std::size_t p = 0; p < t.p_dim; ++p) theta[p] = t.f(p, r0) * inv;
    for (std::size_t p = 0; p < t.p_dim; ++p) {
      for (std::size_t q = 0; q < t.p_dim; ++q) {
        if (t.f(p, q) != theta[p] * t.lambda[q]) {
          throw TheoremViolation("valid triple with Lambda = 0, lambda != 0 but f is not theta (x) lambda");
        }
      }
    }
    c.canonical.f = Matrix(t.field, t.p_dim, t.p_dim);
    c.to_canonical.v = theta;
    c.theta = std::move(theta);
    return c;
  }
  c.tag = t.f.is_zero() ? FamilyTag::Abelian : FamilyTag::FormOnly;
  return c;
}

Dim1Triple lambda_family(const Vector& lambda) {
  if (lambda.empty() || is_zero(lambda)) throw PreconditionViolated("P^lambda needs a nonzero lambda");
  const FieldSpec field = lambda[0].field();
  Dim1Triple t = Dim1Triple::zero(field, lambda.size());
  t.lambda = lambda;
  return t;
}

Dim1Triple form_family(const Matrix& f) {
  if (f.rows() != f.cols()) throw DimensionMismatch("f must be square");
  if (f.is_zero()) throw PreconditionViolated("P(f) needs a nonzero f");
  Dim1Triple t = Dim1Triple::zero(f.field(), f.rows());
  t.f = f;
  return t;
}

Dim1Triple lie_family(const Vector& Lambda, const Matrix& f) {
  if (Lambda.empty() || is_zero(Lambda)) throw PreconditionViolated("P_(Lambda,f) needs a nonzero Lambda");
  if (f.rows() != Lambda.size() || f.cols() != Lambda.size()) throw DimensionMismatch("f does not match Lambda");
  const std::size_t d = Lambda.size();
  for (std::size_t p = 0; p < d; ++p) {
    for (std::size_t q = 0; q < d; ++q) {
      for (std::size_t r = 0; r < d; ++r) {
        const Scalar s = Lambda[p] * f(q, r) + Lambda[r] * f(p, q) - Lambda[q] * f(p, r);
        if (!s.is_zero()) {
          throw PreconditionViolated("Lambda(p)f(q,r) + Lambda(r)f(p,q) - Lambda(q)f(p,r) = 0 fails at (" +
                                     std::to_string(p + 1) + ", " + std::to_string(q + 1) + ", " +
                                     std::to_string(r + 1) + ")");
        }
      }
    }
  }
  for (std::size_t q = 0; q < d; ++q) {
    if (!f(q, q).is_zero()) throw TheoremViolation("compatible (Lambda, f) with f(q, q) != 0");
  }
  Dim1Triple t = Dim1Triple::zero(f.field(), d);
  t.Lambda = Lambda;
  t.lambda = scale(-Scalar::one(f.field()), Lambda);
  t.f = f;
  return t;
}

AlgebraTable build_family(const Dim1Triple& t) {
  const TripleReport report = validate_triple(t);
  if (!report.valid) throw PreconditionViolated("invalid triple: " + report.condition + " fails");
  AlgebraTable table = build_table(t);
  if (!is_zero(t.Lambda) && !is_lie(LeibnizAlgebra::checked(table))) {
    throw TheoremViolation("P_(Lambda,f) table is not a Lie algebra");
  }
  return table;
}

bool verify_morphism(const Dim1Triple& src, const Dim1Triple& dst, const MorphismTriple& m) {
  check_pair(src, dst);
  check_morphism_shape(src, m);
  const Vector lambda_psi = pull(dst.lambda, m.psi);
  const Vector Lambda_psi = pull(dst.Lambda, m.psi);
  bool holds = scale(m.u, src.lambda) == scale(m.u, lambda_psi) && scale(m.u, src.Lambda) == scale(m.u, Lambda_psi);
  if (holds) {
    const Matrix f_psi = pull(dst.f, m.psi);
    for (std::size_t p = 0; p < src.p_dim && holds; ++p) {
      for (std::size_t q = 0; q < src.p_dim; ++q) {
        if (m.u * src.f(p, q) != f_psi(p, q) + m.v[p] * lambda_psi[q] + m.v[q] * Lambda_psi[p]) {
          holds = false;
          break;
        }
      }
    }
  }
  const bool preserves = is_homomorphism(build_table(src), build_table(dst), morphism_matrix(m));
  if (holds != preserves) {
    throw TheoremViolation("morphism equations (" + std::string(holds ? "hold" : "fail") +
                           ") disagree with bracket preservation for v = " + vector_text(m.v) +
                           ", u = " + m.u.to_string());
  }
  return holds;
}

std::vector<MorphismTriple> enumerate_morphisms(const Dim1Triple& src, const Dim1Triple& dst, std::uint64_t budget) {
  check_pair(src, dst);
  if (!src.field.is_finite()) throw UnsupportedMode("morphism enumeration needs a prime field; use verify_morphism");
  if (src.is_zero()) throw PreconditionViolated("morphism enumeration needs a nonzero source triple");
  const FieldSpec field = src.field;
  const std::uint64_t p = field.characteristic();
  const std::size_t d = src.p_dim;
  const std::uint64_t candidates = saturating_power(p, d * d + d + 1);
  if (candidates > budget) {
    throw BudgetExceeded("morphism enumeration visits " + std::to_string(candidates) + " triples, over the budget of " +
                         std::to_string(budget));
  }
  const auto vs = all_vectors(field, d);
  std::vector<MorphismTriple> out;
  for (const Matrix& psi : all_matrices(field, d, d, budget)) {
    const Vector lambda_psi = pull(dst.lambda, psi);
    const Vector Lambda_psi = pull(dst.Lambda, psi);
    const Matrix f_psi = pull(dst.f, psi);
    const bool forms_match = src.lambda == lambda_psi && src.Lambda == Lambda_psi;
    for (std::uint64_t uv = 0; uv < p; ++uv) {
      const Scalar u = Scalar::residue(field, uv);
      if (!u.is_zero() && !forms_match) continue;
      for (const Vector& v : vs) {
        bool ok = true;
        for (std::size_t a = 0; a < d && ok; ++a) {
          for (std::size_t b = 0; b < d; ++b) {
            if (u * src.f(a, b) != f_psi(a, b) + v[a] * lambda_psi[b] + v[b] * Lambda_psi[a]) {
              ok = false;
              break;
            }
          }
        }
        if (ok) out.push_back({v, u, psi});
      }
    }
  }
  return out;
}

std::optional<MorphismTriple> are_isomorphic(const Dim1Triple& a, const Dim1Triple& b, std::uint64_t budget) {
  check_pair(a, b);
  if (!a.field.is_finite()) {
    throw UnsupportedMode("isomorphism search needs a prime field; over Q supply a witness to verify");
  }
  const FieldSpec field = a.field;
  const std::uint64_t p = field.characteristic();
  const std::size_t d = a.p_dim;
  const std::uint64_t candidates = saturating_power(p, d * d + d + 1);
  if (candidates > budget) {
    throw BudgetExceeded("isomorphism search visits up to " + std::to_string(candidates) +
                         " triples, over the budget of " + std::to_string(budget));
  }
  const auto vs = all_vectors(field, d);
  for (const Matrix& psi : invertible_matrices(field, d, budget)) {
    if (a.Lambda != pull(b.Lambda, psi) || a.lambda != pull(b.lambda, psi)) continue;
    const Matrix f_psi = pull(b.f, psi);
    const Vector lambda_psi = pull(b.lambda, psi);
    const Vector Lambda_psi = pull(b.Lambda, psi);
    for (std::uint64_t uv = 1; uv < p; ++uv) {
      const Scalar u = Scalar::residue(field, uv);
      for (const Vector& v : vs) {
        bool ok = true;
        for (std::size_t x = 0; x < d && ok; ++x) {
          for (std::size_t y = 0; y < d; ++y) {
            if (u * a.f(x, y) != f_psi(x, y) + v[x] * lambda_psi[y] + v[y] * Lambda_psi[x]) {
              ok = false;
              break;
            }
          }
        }
        if (!ok) continue;
        MorphismTriple witness{v, u, psi};
        const bool zero_a = a.is_zero();
        const bool zero_b = b.is_zero();
        if (!zero_a && !zero_b && classify(a).tag != classify(b).tag) {
          throw TheoremViolation("isomorphism found between triples of different families");
        }
        return witness;
      }
    }
  }
  return std::nullopt;
}

bool verify_isomorphism_witness(const Dim1Triple& a, const Dim1Triple& b, const MorphismTriple& m) {
  return verify_morphism(a, b, m) && is_invertible(m);
}

SemidirectElement semidirect_identity(FieldSpec field, std::size_t p_dim) {
  return {zero_vector(field, p_dim), Scalar::one(field), Matrix::identity(field, p_dim)};
}

namespace {

void require_unit(const SemidirectElement& x) {
  if (x.u.is_zero()) throw PreconditionViolated("semidirect element with u = 0");
  if (!is_invertible(x.psi)) throw PreconditionViolated("semidirect element with a singular psi");
}

}  // namespace

SemidirectElement semidirect_mul(const SemidirectElement& x, const SemidirectElement& y) {
  require_unit(x);
  require_unit(y);
  if (x.v.size() != y.v.size()) throw DimensionMismatch("semidirect factors of different p_dim");
  return compose(x, y);
}

SemidirectElement semidirect_inv(const SemidirectElement& x) {
  require_unit(x);
  const Scalar u_inv = x.u.inverse();
  const Matrix psi_inv = inverse(x.psi);
  return {scale(-u_inv, pull(x.v, psi_inv)), u_inv, psi_inv};
}

namespace {

std::uint64_t code(const SemidirectElement& x) { return kernels::encode_map(morphism_matrix(x)); }

// Closed-form automorphisms of a triple already in canonical form.
std::vector<SemidirectElement> described_automorphisms(const Classification& c, std::uint64_t budget) {
  const Dim1Triple& t = c.canonical;
  const FieldSpec field = t.field;
  const std::uint64_t p = field.characteristic();
  const std::size_t d = t.p_dim;
  const auto vs = all_vectors(field, d);
  std::vector<SemidirectElement> out;
  for (const Matrix& psi : invertible_matrices(field, d, budget)) {
    const Matrix f_psi = pull(t.f, psi);
    for (std::uint64_t uv = 1; uv < p; ++uv) {
      const Scalar u = Scalar::residue(field, uv);
      switch (c.tag) {
        case FamilyTag::LambdaOnly:
          if (pull(t.lambda, psi) == t.lambda) out.push_back({zero_vector(field, d), u, psi});
          break;
        case FamilyTag::FormOnly: {
          bool ok = true;
          for (std::size_t a = 0; a < d && ok; ++a) {
            for (std::size_t b = 0; b < d; ++b) {
              if (u * t.f(a, b) != f_psi(a, b)) {
                ok = false;
                break;
              }
            }
          }
          if (ok) {
            for (const Vector& v : vs) out.push_back({v, u, psi});
          }
          break;
        }
        case FamilyTag::Lie: {
          if (pull(t.Lambda, psi) != t.Lambda) break;
          for (const Vector& v : vs) {
            // u f(a,b) = f(psi a, psi b) + Lambda(v(b) a - v(a) b)
            bool ok = true;
            for (std::size_t a = 0; a < d && ok; ++a) {
              for (std::size_t b = 0; b < d; ++b) {
                if (u * t.f(a, b) != f_psi(a, b) + v[b] * t.Lambda[a] - v[a] * t.Lambda[b]) {
                  ok = false;
                  break;
                }
              }
            }
            if (ok) out.push_back({v, u, psi});
          }
          break;
        }
        case FamilyTag::Abelian:
          break;
      }
    }
  }
  return out;
}

}  // namespace

AutomorphismReport automorphism_group(const Dim1Triple& t, const AutomorphismOptions& options) {
  check_triple_shape(t);
  if (!t.field.is_finite()) throw UnsupportedMode("automorphism groups are enumerated over a prime field");
  if (t.is_zero()) throw PreconditionViolated("automorphism_group needs a nonzero triple");
  const Classification c = classify(t);
  const std::uint64_t p = t.field.characteristic();
  const std::size_t d = t.p_dim;
  if (saturating_power(p, d * d + d + 1) > options.budget) {
    throw BudgetExceeded("automorphism enumeration over budget for p_dim = " + std::to_string(d));
  }

  AutomorphismReport report;
  report.tag = c.tag;
  report.seed = options.seed;
  const SemidirectElement sigma = c.to_canonical;
  const SemidirectElement sigma_inv = semidirect_inv(sigma);
  for (const auto& h : described_automorphisms(c, options.budget)) {
    report.elements.push_back(semidirect_mul(semidirect_mul(sigma_inv, h), sigma));
  }
  std::sort(report.elements.begin(), report.elements.end(),
            [](const auto& x, const auto& y) { return code(x) < code(y); });
  report.order = report.elements.size();

  std::vector<std::uint64_t> codes;
  codes.reserve(report.elements.size());
  for (const auto& x : report.elements) codes.push_back(code(x));
  const std::unordered_set<std::uint64_t> members(codes.begin(), codes.end());

  const kernels::DenseTable dense = kernels::to_dense(build_table(t));
  const auto brute =
      kernels::homomorphism_codes(dense, dense, kernels::Execution::Parallel, options.budget, /*invertible_only=*/true);
  report.brute_force_order = brute.size();
  {
    std::vector<std::uint64_t> sorted = codes;
    std::sort(sorted.begin(), sorted.end());
    report.matches_brute_force = members.size() == codes.size() && std::includes(brute.begin(), brute.end(),
                                                                                   sorted.begin(), sorted.end());
  }

  const SemidirectElement e = semidirect_identity(t.field, d);
  report.identity_ok = members.count(code(e)) == 1;
  report.inverses_ok = true;
  report.factorization_ok = true;
  for (const auto& x : report.elements) {
    const SemidirectElement inv = semidirect_inv(x);
    if (members.count(code(inv)) == 0 || semidirect_mul(x, inv) != e || semidirect_mul(inv, x) != e ||
        semidirect_mul(x, e) != x || semidirect_mul(e, x) != x) {
      report.inverses_ok = false;
    }
    const SemidirectElement translation{pull(x.v, inverse(x.psi)), Scalar::one(t.field), Matrix::identity(t.field, d)};
    const SemidirectElement linear{zero_vector(t.field, d), x.u, x.psi};
    if (semidirect_mul(translation, linear) != x) report.factorization_ok = false;
  }

  report.closed = true;
  report.composition_preserved = true;
  auto check_pair_product = [&](const SemidirectElement& x, const SemidirectElement& y) {
    const SemidirectElement xy = semidirect_mul(x, y);
    ++report.pairs_checked;
    if (members.count(code(xy)) == 0) report.closed = false;
    if (multiply(morphism_matrix(x), morphism_matrix(y)) != morphism_matrix(xy)) report.composition_preserved = false;
  };
  const std::uint64_t order = report.order;
  if (order * order <= options.pair_budget) {
    report.pairs_exhaustive = true;
    for (const auto& x : report.elements) {
      for (const auto& y : report.elements) check_pair_product(x, y);
    }
  } else if (order > 0) {
    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<std::size_t> pick(0, report.elements.size() - 1);
    for (std::uint64_t i = 0; i < options.pair_budget; ++i) {
      check_pair_product(report.elements[pick(rng)], report.elements[pick(rng)]);
    }
  }

  // Greedy generating set: add any element outside the subgroup generated so far.
  std::set<std::uint64_t> generated{code(e)};
  for (const auto& x : report.elements) {
    if (generated.count(code(x))) continue;
    report.generators.push_back(x);
    std::vector<SemidirectElement> frontier{e};
    std::set<std::uint64_t> seen{code(e)};
    while (!frontier.empty()) {
      std::vector<SemidirectElement> next;
      for (const auto& y : frontier) {
        for (const auto& g : report.generators) {
          SemidirectElement yg = semidirect_mul(y, g);
          if (seen.insert(code(yg)).second) next.push_back(std::move(yg));
        }
      }
      frontier = std::move(next);
    }
    generated = std::move(seen);
  }
  return report;
}

}  // namespace leibniz
