#include <gtest/gtest.h>

#include "generators.hpp"
#include "leibniz/algebra.hpp"
#include "leibniz/builtins.hpp"
#include "leibniz/errors.hpp"
#include "leibniz/kernels/census.hpp"
#include "leibniz/metabelian.hpp"
#include "oracles.hpp"

namespace {

using namespace leibniz;

const FieldSpec kQ = FieldSpec::rationals();
const FieldSpec kGF2 = FieldSpec::prime(2);
const FieldSpec kGF3 = FieldSpec::prime(3);

Vector e(FieldSpec field, std::size_t n, std::size_t i) { return unit_vector(field, n, i - 1); }

Subspace span_units(FieldSpec field, std::size_t n, std::vector<std::size_t> ones) {
  std::vector<Vector> gens;
  for (auto i : ones) gens.push_back(e(field, n, i));
  return Subspace::span(field, n, gens);
}

LeibnizAlgebra l5() { return LeibnizAlgebra::checked(builtin("l5").table); }
LeibnizAlgebra ex3() { return LeibnizAlgebra::checked(builtin("ex3dim").table); }

TEST(Bracket, TableValues) {
  EXPECT_EQ(bracket(l5(), e(kQ, 4, 1), e(kQ, 4, 2)), e(kQ, 4, 2));
  EXPECT_EQ(bracket(ex3(), e(kQ, 3, 2), e(kQ, 3, 2)), e(kQ, 3, 1));
  EXPECT_EQ(bracket(l5(), zero_vector(kQ, 4), e(kQ, 4, 3)), zero_vector(kQ, 4));
  EXPECT_THROW(bracket(l5(), e(kQ, 3, 1), e(kQ, 4, 1)), DimensionMismatch);
}

TEST(Bracket, BilinearOnRandomVectors) {
  gen::Rng rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const AlgebraTable g = gen::table(kQ, 3, rng, 0.4);
    const Vector x = gen::vector(kQ, 3, rng), y = gen::vector(kQ, 3, rng), z = gen::vector(kQ, 3, rng);
    const Scalar s = gen::scalar(kQ, rng);
    ASSERT_EQ(bracket(g, add(x, scale(s, y)), z), add(bracket(g, x, z), scale(s, bracket(g, y, z))));
    ASSERT_EQ(bracket(g, z, add(x, scale(s, y))), add(bracket(g, z, x), scale(s, bracket(g, z, y))));
  }
}

TEST(Leibniz, Cases) {
  EXPECT_TRUE(is_leibniz(l5()).holds);
  EXPECT_TRUE(is_leibniz(ex3()).holds);
  const AlgebraTable bad = AlgebraTable::from_entries(kQ, 2, {{0, 0, 0, Scalar::one(kQ)}});
  const BracketReport report = is_leibniz(bad);
  ASSERT_FALSE(report.holds);
  EXPECT_EQ(report.witness->indices, (std::vector<std::size_t>{0, 0, 0}));
  EXPECT_EQ(report.witness->lhs, e(kQ, 2, 1));
  EXPECT_EQ(report.witness->rhs, zero_vector(kQ, 2));
  EXPECT_THROW(LeibnizAlgebra::checked(bad), PreconditionViolated);
}

// The basis-triple check agrees with the identity quantified over all vectors.
TEST(Leibniz, AgreesWithAllVectorOracle) {
  for (std::uint64_t t = 0; t < 256; ++t) {
    const AlgebraTable g = kernels::census_table(kGF2, 2, t);
    ASSERT_EQ(is_leibniz(g).holds, oracle::leibniz_all_vectors(oracle::from_library(g))) << t;
  }
  gen::Rng rng(41);
  for (int trial = 0; trial < 300; ++trial) {
    const AlgebraTable g = gen::table(kGF3, 2, rng, 0.2);
    ASSERT_EQ(is_leibniz(g).holds, oracle::leibniz_all_vectors(oracle::from_library(g)));
  }
}

TEST(Lie, Cases) {
  EXPECT_TRUE(is_lie(l5()));
  EXPECT_FALSE(is_lie(ex3()));
  EXPECT_TRUE(is_lie(LeibnizAlgebra::checked(AlgebraTable(kQ, 3))));
}

// In characteristic 2 a skew table may still have [x, x] != 0; the oracle tests every x.
TEST(Lie, CharacteristicTwoAgreesWithOracle) {
  for (std::uint64_t t = 0; t < 256; ++t) {
    const AlgebraTable g = kernels::census_table(kGF2, 2, t);
    if (!is_leibniz(g).holds) continue;
    ASSERT_EQ(is_lie(LeibnizAlgebra::checked(g)), oracle::lie(oracle::from_library(g))) << t;
  }
}

TEST(Identities, PartialSkewAndEquivalentLawOnCases) {
  for (const auto& name : builtin_names()) {
    for (const FieldSpec field : {kQ, kGF2, kGF3}) {
      const LeibnizAlgebra g = LeibnizAlgebra::checked(builtin(name, field).table);
      const IdentityCheck skew = check_partial_skew(g);
      EXPECT_TRUE(skew.holds) << name;
      EXPECT_TRUE(skew.exhaustive);
      EXPECT_EQ(skew.instances, g.dim() * g.dim() * g.dim() * g.dim());
      EXPECT_TRUE(check_equivalent_law(g).holds) << name;
    }
  }
  const LeibnizAlgebra abelian = LeibnizAlgebra::checked(AlgebraTable(kQ, 3));
  EXPECT_TRUE(check_partial_skew(abelian).holds);
  EXPECT_TRUE(check_equivalent_law(abelian).holds);
}

TEST(Identities, SampledModeIsSeeded) {
  const LeibnizAlgebra g = l5();
  const IdentityCheck a = check_partial_skew(g, {.trials = 50, .seed = 9, .exhaustive_budget = 0});
  const IdentityCheck b = check_partial_skew(g, {.trials = 50, .seed = 9, .exhaustive_budget = 0});
  EXPECT_TRUE(a.holds);
  EXPECT_FALSE(a.exhaustive);
  EXPECT_EQ(a.instances, 50u);
  EXPECT_EQ(a.seed, 9u);
  EXPECT_EQ(a.instances, b.instances);
}

TEST(DerivedSeries, Cases) {
  const auto l5_series = derived_series(l5());
  ASSERT_EQ(l5_series.size(), 4u);
  EXPECT_EQ(l5_series[1], span_units(kQ, 4, {2, 3, 4}));
  EXPECT_EQ(l5_series[2], span_units(kQ, 4, {4}));
  EXPECT_EQ(l5_series[3].dim(), 0u);

  const auto ex3_series = derived_series(ex3());
  ASSERT_EQ(ex3_series.size(), 3u);
  EXPECT_EQ(ex3_series[1], span_units(kQ, 3, {1}));
  EXPECT_EQ(ex3_series[2].dim(), 0u);

  const auto abelian = derived_series(LeibnizAlgebra::checked(AlgebraTable(kQ, 2)));
  ASSERT_EQ(abelian.size(), 2u);
  EXPECT_EQ(abelian[1].dim(), 0u);
}

TEST(BracketSpan, Cases) {
  const Subspace all4 = Subspace::full(kQ, 4);
  EXPECT_EQ(bracket_span(l5(), all4, all4), span_units(kQ, 4, {2, 3, 4}));
  EXPECT_EQ(bracket_span(ex3(), Subspace::full(kQ, 3), Subspace::full(kQ, 3)), span_units(kQ, 3, {1}));
  const Subspace b = span_units(kQ, 4, {3, 4});
  EXPECT_EQ(bracket_span(l5(), b, b).dim(), 0u);
}

TEST(Metabelian, CasesAndWitness) {
  EXPECT_TRUE(is_metabelian(ex3()));
  EXPECT_FALSE(is_metabelian(l5()));
  EXPECT_TRUE(is_metabelian(LeibnizAlgebra::checked(AlgebraTable(kQ, 2))));
  const auto w = metabelian_witness(l5());
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ((std::vector<std::size_t>{w->i, w->j, w->k, w->l}), (std::vector<std::size_t>{0, 1, 0, 2}));
  EXPECT_EQ(w->value, e(kQ, 4, 4));
  EXPECT_FALSE(metabelian_witness(ex3()).has_value());
}

TEST(Closures, Cases) {
  const LeibnizAlgebra g = l5();
  EXPECT_EQ(subalgebra_closure(g, span_units(kQ, 4, {1, 2})), span_units(kQ, 4, {1, 2}));
  EXPECT_EQ(subalgebra_closure(g, span_units(kQ, 4, {2, 3})), span_units(kQ, 4, {2, 3, 4}));
  EXPECT_EQ(subalgebra_closure(g, Subspace::zero(kQ, 4)), Subspace::zero(kQ, 4));
  EXPECT_EQ(ideal_closure(g, span_units(kQ, 4, {4})), span_units(kQ, 4, {4}));
  EXPECT_EQ(ideal_closure(g, span_units(kQ, 4, {1})), Subspace::full(kQ, 4));
}

TEST(Subalgebras, AbelianCases) {
  EXPECT_TRUE(is_abelian_subalgebra(l5(), span_units(kQ, 4, {3, 4})));
  EXPECT_FALSE(is_abelian_subalgebra(l5(), span_units(kQ, 4, {1, 2})));
  EXPECT_TRUE(is_abelian_subalgebra(l5(), Subspace::zero(kQ, 4)));
}

TEST(Quotient, Cases) {
  const LeibnizAlgebra g = l5();
  const Quotient q = quotient(g, derived_subalgebra(g));
  EXPECT_EQ(q.table.dim(), 1u);
  EXPECT_TRUE(q.table.is_zero());

  const Quotient trivial = quotient(g, Subspace::zero(kQ, 4));
  EXPECT_EQ(trivial.table, static_cast<const AlgebraTable&>(g));
  EXPECT_EQ(trivial.projection, Matrix::identity(kQ, 4));

  const Quotient q3 = quotient(ex3(), span_units(kQ, 3, {1}));
  EXPECT_EQ(q3.table.dim(), 2u);
  EXPECT_TRUE(q3.table.is_zero());

  EXPECT_THROW(quotient(g, span_units(kQ, 4, {3})), PreconditionViolated);
}

TEST(Extension, Cases) {
  EXPECT_TRUE(is_extension_of_abelian_by_abelian(ex3()));
  EXPECT_FALSE(is_extension_of_abelian_by_abelian(l5()));
  EXPECT_TRUE(is_extension_of_abelian_by_abelian(LeibnizAlgebra::checked(AlgebraTable(kQ, 2))));
}

// Random valid tables: products of random datums in a random basis, plus every Leibniz
// table of the small census.
std::vector<LeibnizAlgebra> random_valid_tables(std::uint64_t seed, int count) {
  std::vector<LeibnizAlgebra> out;
  gen::Rng rng(seed);
  for (int i = 0; i < count; ++i) {
    const FieldSpec field = rng.chance(0.5) ? kGF2 : kGF3;
    const auto d = random_valid_datum(field, 1 + rng.below(2), 1 + rng.below(2), rng.below(1u << 30));
    AlgebraTable g = build_metabelian_product(d.datum);
    Matrix basis = gen::matrix(field, g.dim(), g.dim(), rng, 0.2);
    if (is_invertible(basis)) g = change_basis(g, basis);
    out.push_back(LeibnizAlgebra::checked(g));
  }
  for (std::uint64_t t = 0; t < 6561; ++t) {
    AlgebraTable g = kernels::census_table(kGF3, 2, t);
    if (is_leibniz(g).holds) out.push_back(LeibnizAlgebra::checked(std::move(g)));
  }
  return out;
}

TEST(Properties, InvariantsOnValidTables) {
  gen::Rng rng(1234);
  for (const LeibnizAlgebra& g : random_valid_tables(77, 150)) {
    const FieldSpec field = g.field();
    ASSERT_TRUE(check_partial_skew(g).holds);
    ASSERT_TRUE(check_equivalent_law(g).holds);
    ASSERT_EQ(is_metabelian(g), is_extension_of_abelian_by_abelian(g));

    const auto series = derived_series(g);
    for (std::size_t i = 1; i + 1 < series.size(); ++i) ASSERT_LT(series[i].dim(), series[i - 1].dim());
    const Subspace gp = derived_subalgebra(g);
    ASSERT_EQ(ideal_closure(g, gp), gp);
    ASSERT_TRUE(is_two_sided_ideal(g, gp));
    ASSERT_TRUE(quotient(g, gp).table.is_zero());

    const Subspace seed = gen::subspace(field, g.dim(), rng);
    const Subspace bigger = subspace_sum(seed, gen::subspace(field, g.dim(), rng));
    const Subspace sub = subalgebra_closure(g, seed);
    const Subspace id = ideal_closure(g, seed);
    ASSERT_EQ(subalgebra_closure(g, sub), sub);
    ASSERT_EQ(ideal_closure(g, id), id);
    ASSERT_TRUE(subalgebra_closure(g, bigger).contains(sub));
    ASSERT_TRUE(ideal_closure(g, bigger).contains(id));
    ASSERT_TRUE(is_subalgebra(g, sub));
    ASSERT_TRUE(is_two_sided_ideal(g, id));
    ASSERT_TRUE(id.contains(sub));
  }
}

// Metabelian and ideal predicates agree with the all-vector oracle.
TEST(Properties, PredicatesAgreeWithOracle) {
  gen::Rng rng(555);
  for (const LeibnizAlgebra& g : random_valid_tables(99, 40)) {
    if (oracle::power(g.field().characteristic(), g.dim()) > 64) continue;
    const oracle::Table t = oracle::from_library(g);
    ASSERT_EQ(is_metabelian(g), oracle::metabelian(t));
    ASSERT_EQ(derived_subalgebra(g).dim(), oracle::dimension(t, oracle::derived(t)));
    for (int k = 0; k < 5; ++k) {
      const Subspace s = gen::subspace(g.field(), g.dim(), rng);
      oracle::Mask gens = 0;
      for (std::size_t r = 0; r < s.dim(); ++r) {
        oracle::Vec v;
        for (const auto& c : s.basis_vector(r)) v.push_back(static_cast<std::uint32_t>(c.residue_value()));
        gens |= oracle::Mask{1} << oracle::encode(t.p, v);
      }
      const oracle::Mask m = oracle::span(t, gens);
      ASSERT_EQ(is_abelian_subalgebra(g, s), oracle::abelian(t, m));
      ASSERT_EQ(is_two_sided_ideal(g, s), oracle::ideal(t, m));
    }
  }
}

TEST(ChangeBasis, IsAnIsomorphism) {
  gen::Rng rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    const LeibnizAlgebra g = l5();
    const Matrix basis = gen::matrix(kQ, 4, 4, rng, 0.3);
    if (!is_invertible(basis)) continue;
    const AlgebraTable h = change_basis(g, basis);
    EXPECT_TRUE(is_leibniz(h).holds);
    // e_j of h maps to row j of `basis` in g.
    EXPECT_TRUE(is_homomorphism(h, g, transpose(basis)));
    EXPECT_EQ(is_lie(LeibnizAlgebra::checked(h)), true);
    EXPECT_EQ(derived_subalgebra(h).dim(), 3u);
  }
}

TEST(ChangeField, ReportsVanishedConstants) {
  const FieldChange over2 = builtin("l5", kGF2);
  EXPECT_EQ(over2.vanished.size(), 2u);  // [e1,e4] = 2e4 and its skew partner
  EXPECT_TRUE(is_leibniz(over2.table).holds);
  EXPECT_TRUE(builtin("l5", kGF3).vanished.empty());
  const AlgebraTable half = AlgebraTable::from_entries(kQ, 1, {{0, 0, 0, Scalar::parse(kQ, "1/2")}});
  EXPECT_THROW(change_field(half, kGF2), PreconditionViolated);
}

TEST(Builtins, Names) {
  EXPECT_TRUE(is_builtin("ex5dim"));
  EXPECT_FALSE(is_builtin("nope"));
  EXPECT_EQ(builtin_names().size(), 5u);
  EXPECT_THROW(builtin("nope"), PreconditionViolated);
}

}  // namespace
