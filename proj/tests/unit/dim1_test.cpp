#include <gtest/gtest.h>

#include <set>

#include "generators.hpp"
#include "leibniz/builtins.hpp"
#include "leibniz/dim1.hpp"
#include "leibniz/errors.hpp"
#include "oracles.hpp"
#include "triples.hpp"

namespace {

using namespace leibniz;

const FieldSpec kQ = FieldSpec::rationals();
const FieldSpec kGF2 = FieldSpec::prime(2);
const FieldSpec kGF3 = FieldSpec::prime(3);

Vector v(FieldSpec field, std::vector<long long> xs) {
  Vector out;
  for (auto x : xs) out.push_back(Scalar::from_int(field, x));
  return out;
}

Dim1Triple triple(FieldSpec field, std::vector<long long> lambda, std::vector<long long> Lambda,
                  std::vector<std::vector<long long>> f) {
  return {field, lambda.size(), v(field, lambda), v(field, Lambda), Matrix::from_ints(field, f)};
}

AlgebraTable from_file_shape(FieldSpec field, std::size_t n, std::vector<std::tuple<int, int, int, int>> entries) {
  std::vector<AlgebraTable::Entry> out;
  for (auto [i, j, k, c] : entries)
    out.push_back({std::size_t(i - 1), std::size_t(j - 1), std::size_t(k - 1), Scalar::from_int(field, c)});
  return AlgebraTable::from_entries(field, n, out);
}

LeibnizAlgebra b2(FieldSpec field) { return LeibnizAlgebra::checked(builtin("b2", field).table); }

// Validity is exactly the Leibniz identity of the built table.
TEST(Triple, ValidityMatchesLeibnizOracle) {
  for (const auto& [field, d] : std::vector<std::pair<FieldSpec, std::size_t>>{{kGF2, 1}, {kGF2, 2}, {kGF3, 1}, {kGF3, 2}}) {
    const auto forms = all_vectors(field, d);
    for (const auto& lambda : forms)
      for (const auto& Lambda : forms)
        for (const auto& f : all_matrices(field, d, d, 100000)) {
          const Dim1Triple t{field, d, lambda, Lambda, f};
          ASSERT_EQ(validate_triple(t).valid, oracle::leibniz_basis(oracle::from_library(build_table(t))));
        }
  }
}

TEST(Extract, Cases) {
  const auto lam = extract_triple(LeibnizAlgebra::checked(from_file_shape(kQ, 2, {{1, 2, 1, 1}})));
  EXPECT_EQ(lam.triple, triple(kQ, {1}, {0}, {{0}}));

  const auto ex3 = extract_triple(LeibnizAlgebra::checked(builtin("ex3dim").table));
  EXPECT_EQ(ex3.triple, triple(kQ, {0, 0}, {0, 0}, {{1, 0}, {0, 1}}));

  const auto b = extract_triple(b2(kQ));
  EXPECT_EQ(b.triple, triple(kQ, {-1, 1}, {1, -1}, {{0, 0}, {0, 0}}));

  EXPECT_THROW(extract_triple(LeibnizAlgebra::checked(builtin("l5").table)), PreconditionViolated);
  EXPECT_THROW(extract_triple(LeibnizAlgebra::checked(AlgebraTable(kQ, 2))), PreconditionViolated);
}

TEST(Extract, BasisReproducesTable) {
  for (const FieldSpec field : {kGF2, kGF3}) {
    gen::Rng rng(field.characteristic());
    for (const auto& t : support::all_valid_triples(field, 2)) {
      const AlgebraTable g = build_table(t);
      const Matrix basis = gen::matrix(field, 3, 3, rng, 0.2);
      if (!is_invertible(basis)) continue;
      const LeibnizAlgebra moved = LeibnizAlgebra::checked(change_basis(g, basis));
      const Extraction e = extract_triple(moved);
      ASSERT_EQ(build_table(e.triple), change_basis(moved, e.basis));
      // A different complement gives an isomorphic triple and the same family.
      ASSERT_EQ(classify(e.triple).tag, classify(t).tag);
      ASSERT_TRUE(are_isomorphic(t, e.triple).has_value());
    }
  }
}

TEST(Classify, Cases) {
  EXPECT_EQ(classify(triple(kQ, {1}, {0}, {{0}})).tag, FamilyTag::LambdaOnly);
  EXPECT_EQ(classify(triple(kQ, {0, 0}, {0, 0}, {{1, 0}, {0, 1}})).tag, FamilyTag::FormOnly);
  const Classification lie = classify(extract_triple(b2(kQ)).triple);
  EXPECT_EQ(lie.tag, FamilyTag::Lie);
  EXPECT_TRUE(lie.canonical.f.is_zero());
  EXPECT_EQ(classify(Dim1Triple::zero(kQ, 2)).tag, FamilyTag::Abelian);
  EXPECT_THROW(classify(triple(kQ, {0}, {1}, {{0}})), PreconditionViolated);
}

// f = theta (x) lambda is normalized away by (v = theta, u = 1, psi = Id).
TEST(Classify, LambdaFamilyNormalization) {
  const Dim1Triple t = triple(kQ, {1, 0}, {0, 0}, {{2, 0}, {3, 0}});
  ASSERT_TRUE(validate_triple(t).valid);
  const Classification c = classify(t);
  EXPECT_EQ(c.tag, FamilyTag::LambdaOnly);
  ASSERT_TRUE(c.theta.has_value());
  EXPECT_EQ(*c.theta, v(kQ, {2, 3}));
  EXPECT_TRUE(c.canonical.f.is_zero());
  EXPECT_TRUE(verify_isomorphism_witness(t, c.canonical, c.to_canonical));
  EXPECT_TRUE(verify_morphism(t, c.canonical, {v(kQ, {2, 3}), Scalar::one(kQ), Matrix::identity(kQ, 2)}));
}

TEST(Classify, ToCanonicalAlwaysVerifies) {
  for (const FieldSpec field : {kGF2, kGF3}) {
    std::set<FamilyTag> seen;
    for (const auto& t : support::all_valid_triples(field, 2)) {
      const Classification c = classify(t);
      seen.insert(c.tag);
      ASSERT_TRUE(verify_isomorphism_witness(t, c.canonical, c.to_canonical));
      ASSERT_EQ(classify(c.canonical).tag, c.tag);
    }
    EXPECT_EQ(seen.size(), 3u);
  }
}

TEST(Families, BuildCases) {
  EXPECT_EQ(build_family(lambda_family(v(kQ, {1}))), from_file_shape(kQ, 2, {{1, 2, 1, 1}}));
  EXPECT_EQ(build_family(form_family(Matrix::from_ints(kQ, {{1, 0}, {0, 1}}))), builtin("ex3dim").table);
  const AlgebraTable lie = build_family(lie_family(v(kGF3, {1, -1}), Matrix(kGF3, 2, 2)));
  EXPECT_TRUE(is_lie(LeibnizAlgebra::checked(lie)));
  EXPECT_FALSE(oracle::homomorphisms(oracle::from_library(lie), oracle::from_library(builtin("b2", kGF3).table), true)
                   .empty());
  EXPECT_THROW(lie_family(v(kQ, {1, 0}), Matrix::from_ints(kQ, {{0, 1}, {0, 0}})), PreconditionViolated);
  EXPECT_THROW(lambda_family(v(kQ, {0})), PreconditionViolated);
}

TEST(Families, LieAndNonLie) {
  for (const FieldSpec field : {kGF2, kGF3}) {
    for (const auto& t : support::all_valid_triples(field, 2)) {
      const Classification c = classify(t);
      const bool lie = is_lie(LeibnizAlgebra::checked(build_table(c.canonical)));
      if (c.tag == FamilyTag::Lie) {
        ASSERT_TRUE(lie);
      }
      if (c.tag == FamilyTag::LambdaOnly) {
        ASSERT_FALSE(lie);
      }
    }
  }
}

TEST(Family, Names) {
  for (auto tag : {FamilyTag::LambdaOnly, FamilyTag::FormOnly, FamilyTag::Lie, FamilyTag::Abelian})
    EXPECT_EQ(parse_family(family_name(tag)), tag);
  EXPECT_EQ(family_name(FamilyTag::LambdaOnly), "P_lambda");
  EXPECT_FALSE(parse_family("P_mu").has_value());
}

TEST(Morphism, VerifyCases) {
  const Dim1Triple t = triple(kGF3, {0, 0}, {0, 0}, {{1, 0}, {0, 1}});
  EXPECT_TRUE(verify_morphism(t, t, semidirect_identity(kGF3, 2)));
  const MorphismTriple scale2{v(kGF3, {0, 0}), Scalar::from_int(kGF3, 2), Matrix::identity(kGF3, 2)};
  EXPECT_FALSE(verify_morphism(t, t, scale2));
  const Dim1Triple doubled = triple(kGF3, {0, 0}, {0, 0}, {{2, 0}, {0, 2}});
  EXPECT_TRUE(verify_morphism(t, doubled, scale2));
}

// Morphisms from the equations are exactly the bracket-preserving maps (counts and
// elements), and composition matches the matrix product.
TEST(Morphism, BijectionWithBruteForce) {
  for (const auto& [field, d] : std::vector<std::pair<FieldSpec, std::size_t>>{{kGF2, 1}, {kGF3, 1}, {kGF2, 2}}) {
    const auto triples = support::all_valid_triples(field, d);
    for (std::size_t i = 0; i < triples.size(); i += (d == 2 ? 3 : 1))
      for (std::size_t j = 0; j < triples.size(); j += (d == 2 ? 5 : 1)) {
        const auto ms = enumerate_morphisms(triples[i], triples[j]);
        ASSERT_EQ(support::morphism_codes(ms), support::oracle_morphisms(triples[i], triples[j], false));
        for (std::size_t k = 0; k + 1 < ms.size() && k < 4; ++k) {
          if (i != j) break;
          const MorphismTriple c = compose(ms[k], ms[k + 1]);
          ASSERT_TRUE(verify_morphism(triples[i], triples[i], c));
          ASSERT_EQ(morphism_matrix(c), multiply(morphism_matrix(ms[k]), morphism_matrix(ms[k + 1])));
        }
      }
  }
  EXPECT_THROW(enumerate_morphisms(Dim1Triple::zero(kGF2, 1), triple(kGF2, {1}, {0}, {{0}})), PreconditionViolated);
  EXPECT_THROW(enumerate_morphisms(triple(kQ, {1}, {0}, {{0}}), triple(kQ, {1}, {0}, {{0}})), UnsupportedMode);
}

TEST(Isomorphism, Cases) {
  const auto w = are_isomorphic(triple(kGF2, {1, 0}, {0, 0}, {{0, 0}, {0, 0}}),
                                triple(kGF2, {0, 1}, {0, 0}, {{0, 0}, {0, 0}}));
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->psi, Matrix::from_ints(kGF2, {{0, 1}, {1, 0}}));

  const Dim1Triple f = triple(kGF3, {0, 0}, {0, 0}, {{1, 0}, {0, 1}});
  const Dim1Triple f2 = triple(kGF3, {0, 0}, {0, 0}, {{2, 0}, {0, 2}});
  EXPECT_TRUE(are_isomorphic(f, f2).has_value());
  EXPECT_TRUE(verify_isomorphism_witness(
      f, f2, {v(kGF3, {0, 0}), Scalar::from_int(kGF3, 2), Matrix::identity(kGF3, 2)}));

  EXPECT_FALSE(are_isomorphic(f, triple(kGF3, {1, 0}, {0, 0}, {{0, 0}, {0, 0}})).has_value());
  EXPECT_THROW(are_isomorphic(triple(kQ, {1}, {0}, {{0}}), triple(kQ, {1}, {0}, {{0}})), UnsupportedMode);
  // Over Q the witness route still works.
  EXPECT_TRUE(verify_isomorphism_witness(triple(kQ, {0, 0}, {0, 0}, {{1, 0}, {0, 1}}),
                                         triple(kQ, {0, 0}, {0, 0}, {{2, 0}, {0, 2}}),
                                         {v(kQ, {0, 0}), Scalar::from_int(kQ, 2), Matrix::identity(kQ, 2)}));
}

TEST(Isomorphism, TrichotomyAndLambdaFamily) {
  for (const FieldSpec field : {kGF2, kGF3}) {
    const auto triples = support::all_valid_triples(field, 2);
    for (std::size_t i = 0; i < triples.size(); i += 7)
      for (std::size_t j = 0; j < triples.size(); j += 5) {
        const auto w = are_isomorphic(triples[i], triples[j]);
        if (classify(triples[i]).tag != classify(triples[j]).tag) {
          ASSERT_FALSE(w.has_value());
        }
        if (w) {
          ASSERT_TRUE(verify_isomorphism_witness(triples[i], triples[j], *w));
        }
        // The oracle agrees on existence.
        ASSERT_EQ(w.has_value(), !support::oracle_morphisms(triples[i], triples[j], true).empty());
      }
    for (const auto& a : all_vectors(field, 2))
      for (const auto& b : all_vectors(field, 2))
        if (!is_zero(a) && !is_zero(b)) {
          ASSERT_TRUE(are_isomorphic(lambda_family(a), lambda_family(b)).has_value());
        }
  }
}

TEST(Isomorphism, BuildExtractRoundTrip) {
  gen::Rng rng(303);
  int checked = 0;
  while (checked < 40) {
    const FieldSpec field = checked % 2 ? kGF2 : kGF3;
    const Dim1Triple t = gen::triple(field, 1 + rng.below(3), rng);
    if (t.is_zero() || !validate_triple(t).valid) continue;
    ++checked;
    const Dim1Triple back = extract_triple(LeibnizAlgebra::checked(build_table(t))).triple;
    ASSERT_TRUE(are_isomorphic(t, back).has_value());
  }
}

std::vector<SemidirectElement> group_elements(FieldSpec field, std::size_t d) {
  std::vector<SemidirectElement> out;
  for (const auto& psi : invertible_matrices(field, d, 100000))
    for (std::uint64_t u = 1; u < field.characteristic(); ++u)
      for (const auto& vv : all_vectors(field, d)) out.push_back({vv, Scalar::residue(field, u), psi});
  return out;
}

TEST(Semidirect, GroupAxiomsExhaustive) {
  const auto group = group_elements(kGF2, 2);
  ASSERT_EQ(group.size(), 24u);
  const SemidirectElement id = semidirect_identity(kGF2, 2);
  for (const auto& x : group) {
    ASSERT_EQ(semidirect_mul(x, id), x);
    ASSERT_EQ(semidirect_mul(id, x), x);
    ASSERT_EQ(semidirect_mul(x, semidirect_inv(x)), id);
    ASSERT_EQ(semidirect_mul(semidirect_inv(x), x), id);
    const SemidirectElement translation{apply_left(x.v, inverse(x.psi)), Scalar::one(kGF2), Matrix::identity(kGF2, 2)};
    const SemidirectElement linear{zero_vector(kGF2, 2), x.u, x.psi};
    ASSERT_EQ(semidirect_mul(translation, linear), x);
    for (const auto& y : group) {
      ASSERT_EQ(morphism_matrix(semidirect_mul(x, y)), multiply(morphism_matrix(x), morphism_matrix(y)));
      for (const auto& z : group)
        ASSERT_EQ(semidirect_mul(semidirect_mul(x, y), z), semidirect_mul(x, semidirect_mul(y, z)));
    }
  }
}

TEST(Semidirect, SubgroupsOverGF3) {
  const auto group = group_elements(kGF3, 1);
  const SemidirectElement id = semidirect_identity(kGF3, 1);
  for (const auto& x : group) {
    for (const auto& vv : all_vectors(kGF3, 1)) {
      // Translations (v, 1, Id) form a normal subgroup.
      const SemidirectElement t{vv, Scalar::one(kGF3), Matrix::identity(kGF3, 1)};
      const SemidirectElement conj = semidirect_mul(semidirect_mul(x, t), semidirect_inv(x));
      ASSERT_TRUE(conj.u.is_one());
      ASSERT_EQ(conj.psi, Matrix::identity(kGF3, 1));
    }
    // (0, u, psi) elements are closed under products.
    const SemidirectElement lin{zero_vector(kGF3, 1), x.u, x.psi};
    ASSERT_TRUE(is_zero(semidirect_mul(lin, lin).v));
  }
  const SemidirectElement singular{zero_vector(kGF3, 1), Scalar::one(kGF3), Matrix(kGF3, 1, 1)};
  EXPECT_THROW(semidirect_mul(singular, id), PreconditionViolated);
  const SemidirectElement zero_u{zero_vector(kGF3, 1), Scalar::zero(kGF3), Matrix::identity(kGF3, 1)};
  EXPECT_THROW(semidirect_inv(zero_u), PreconditionViolated);
}

TEST(Automorphisms, LambdaOverGF2SquaredHasOrderTwo) {
  const Dim1Triple t = lambda_family(v(kGF2, {1, 0}));
  const auto oracle_order = support::oracle_morphisms(t, t, true).size();
  const AutomorphismReport r = automorphism_group(t);
  EXPECT_EQ(oracle_order, 2u);
  EXPECT_EQ(r.order, 2u);
  EXPECT_TRUE(r.consistent());
  std::set<std::string> psis;
  for (const auto& x : r.elements) psis.insert(to_string(x.psi.row(0)) + to_string(x.psi.row(1)));
  // psi(e2) = e2 and psi(e1) in {e1, e1 + e2}; columns are images.
  EXPECT_EQ(psis, (std::set<std::string>{to_string(v(kGF2, {1, 0})) + to_string(v(kGF2, {0, 1})),
                                         to_string(v(kGF2, {1, 0})) + to_string(v(kGF2, {1, 1}))}));
}

TEST(Automorphisms, AgreeWithOracleOrders) {
  for (const FieldSpec field : {kGF2, kGF3}) {
    const auto triples = support::all_valid_triples(field, 2);
    for (std::size_t i = 0; i < triples.size(); i += 11) {
      const AutomorphismReport r = automorphism_group(triples[i]);
      ASSERT_TRUE(r.consistent()) << i;
      ASSERT_EQ(r.order, support::oracle_morphisms(triples[i], triples[i], true).size());
    }
  }
  const AutomorphismReport lie = automorphism_group(lie_family(v(kGF3, {1, -1}), Matrix(kGF3, 2, 2)));
  EXPECT_TRUE(lie.consistent());
  EXPECT_THROW(automorphism_group(Dim1Triple::zero(kGF2, 2)), PreconditionViolated);
}

}  // namespace
