#include <gtest/gtest.h>

#include <fstream>
#include <json.hpp>

#include "leibniz/builtins.hpp"
#include "leibniz/errors.hpp"
#include "leibniz/ito.hpp"
#include "leibniz/kernels/census.hpp"
#include "leibniz/metabelian.hpp"
#include "oracles.hpp"

namespace {

using namespace leibniz;

const FieldSpec kQ = FieldSpec::rationals();
const FieldSpec kGF2 = FieldSpec::prime(2);
const FieldSpec kGF3 = FieldSpec::prime(3);

Subspace span_rows(FieldSpec field, std::size_t n, std::vector<std::vector<long long>> rows) {
  std::vector<Vector> gens;
  for (auto& r : rows) {
    Vector v;
    for (auto x : r) v.push_back(Scalar::from_int(field, x));
    gens.push_back(v);
  }
  return Subspace::span(field, n, gens);
}

LeibnizAlgebra named(const std::string& name, FieldSpec field) {
  return LeibnizAlgebra::checked(builtin(name, field).table);
}

DecompositionWitness witness(const LeibnizAlgebra& g, Subspace a, Subspace b) {
  const std::size_t d = subspace_sum(a, b).dim();
  return {std::move(a), std::move(b), d, d == g.dim()};
}

TEST(AbelianPairs, HeisenbergDecomposes) {
  const LeibnizAlgebra g = named("heisenberg", kGF2);
  const AbelianPairReport report = find_abelian_pairs(g);
  EXPECT_GT(report.spanning_pairs, 0u);
  EXPECT_EQ(report.max_abelian_sum_dim, 3u);
  const auto w = witness(g, span_rows(kGF2, 3, {{1, 0, 0}, {0, 0, 1}}), span_rows(kGF2, 3, {{0, 1, 0}, {0, 0, 1}}));
  EXPECT_TRUE(w.spans_g);
  EXPECT_TRUE(verify_ito_corollary(g, w));
  for (const auto& listed : report.witnesses) {
    EXPECT_TRUE(is_abelian_subalgebra(g, listed.a));
    EXPECT_TRUE(is_abelian_subalgebra(g, listed.b));
    EXPECT_EQ(listed.sum_dim, subspace_sum(listed.a, listed.b).dim());
    EXPECT_TRUE(listed.spans_g);
  }
}

TEST(AbelianPairs, ThreeDimensionalAlgebraHasNoSpanningPairOverGF3) {
  const LeibnizAlgebra g = named("ex3dim", kGF3);
  const AbelianPairReport report = find_abelian_pairs(g);
  EXPECT_EQ(report.spanning_pairs, 0u);
  EXPECT_TRUE(is_metabelian(g));
  const oracle::Table t = oracle::from_library(g);
  EXPECT_FALSE(oracle::decomposable(t, oracle::subspaces(t)));
}

// Over GF(2) the isotropic vector e2 + e3 exists, yet every abelian subspace still lies
// in span{e1, e2 + e3}, so no pair spans.
TEST(AbelianPairs, ThreeDimensionalAlgebraOverOtherFields) {
  const LeibnizAlgebra g2 = named("ex3dim", kGF2);
  const oracle::Table t = oracle::from_library(g2);
  EXPECT_FALSE(oracle::decomposable(t, oracle::subspaces(t)));
  EXPECT_EQ(find_abelian_pairs(g2).spanning_pairs, 0u);
  // Over GF(5), 2^2 = -1: A = span{e1, e2 + 2e3} and B = span{e2 + 3e3} are abelian and span.
  const FieldSpec gf5 = FieldSpec::prime(5);
  const LeibnizAlgebra g5 = named("ex3dim", gf5);
  EXPECT_GT(find_abelian_pairs(g5).spanning_pairs, 0u);
  EXPECT_TRUE(verify_ito_corollary(
      g5, witness(g5, span_rows(gf5, 3, {{1, 0, 0}, {0, 1, 2}}), span_rows(gf5, 3, {{0, 1, 3}}))));
}

TEST(AbelianPairs, FiveDimensionalAlgebraMaxSumIsFour) {
  const LeibnizAlgebra g = named("ex5dim", kGF2);
  const AbelianPairReport report = find_abelian_pairs(g);
  EXPECT_EQ(report.max_abelian_sum_dim, 4u);
  EXPECT_EQ(report.spanning_pairs, 0u);
  ASSERT_TRUE(report.max_witness.has_value());
  EXPECT_EQ(report.max_witness->sum_dim, 4u);
  const oracle::Table t = oracle::from_library(g);
  EXPECT_EQ(oracle::max_abelian_sum(t, oracle::subspaces(t)), 4u);
}

TEST(AbelianPairs, ListingCapKeepsCounting) {
  const LeibnizAlgebra g = named("heisenberg", kGF3);
  const auto all = find_abelian_pairs(g);
  const auto capped = find_abelian_pairs(g, {.max_listed = 1});
  EXPECT_EQ(capped.witnesses.size(), 1u);
  EXPECT_EQ(capped.spanning_pairs, all.spanning_pairs);
  EXPECT_EQ(all.witnesses.size(), all.spanning_pairs);
}

TEST(AbelianPairs, RefusesQAndBudget) {
  EXPECT_THROW(find_abelian_pairs(named("heisenberg", kQ)), UnsupportedMode);
  EXPECT_THROW(find_abelian_pairs(named("ex5dim", kGF2), {.budget = 100}), BudgetExceeded);
}

TEST(ItoVerification, WitnessesAreRevalidated) {
  const LeibnizAlgebra g = named("heisenberg", kQ);
  const Subspace a = span_rows(kQ, 3, {{1, 0, 0}, {0, 0, 1}});
  const Subspace b = span_rows(kQ, 3, {{0, 1, 0}, {0, 0, 1}});
  EXPECT_TRUE(verify_ito_corollary(g, witness(g, a, b)));

  const Subspace not_abelian = span_rows(kQ, 3, {{1, 0, 0}, {0, 1, 0}});
  EXPECT_THROW(verify_ito_corollary(g, witness(g, not_abelian, b)), PreconditionViolated);
  EXPECT_THROW(verify_ito_corollary(g, witness(g, a, a)), PreconditionViolated);
  auto lying = witness(g, a, b);
  lying.sum_dim = 2;
  EXPECT_THROW(verify_ito_corollary(g, lying), PreconditionViolated);
}

TEST(ItoVerification, AbelianAlgebra) {
  const LeibnizAlgebra g = LeibnizAlgebra::checked(AlgebraTable(kQ, 3));
  EXPECT_TRUE(verify_ito_corollary(g, witness(g, Subspace::full(kQ, 3), Subspace::full(kQ, 3))));
}

// A product of a datum with abelian V and P decomposes as V + P.
TEST(ItoVerification, DatumProductsWithAbelianFactors) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const FieldSpec field = seed % 2 ? kGF2 : kGF3;
    const auto d = random_valid_datum(field, 2, 2, seed).datum;
    const LeibnizAlgebra g = LeibnizAlgebra::checked(build_metabelian_product(d));
    const Subspace v = span_rows(field, 4, {{1, 0, 0, 0}, {0, 1, 0, 0}});
    const Subspace p = span_rows(field, 4, {{0, 0, 1, 0}, {0, 0, 0, 1}});
    ASSERT_TRUE(is_abelian_subalgebra(g, v));
    if (!is_abelian_subalgebra(g, p)) continue;
    EXPECT_TRUE(verify_ito_corollary(g, witness(g, v, p)));
  }
}

TEST(ItoIdeal, Cases) {
  const LeibnizAlgebra g = named("l5", kQ);
  const Subspace zero = Subspace::zero(kQ, 4);
  const Subspace b = span_rows(kQ, 4, {{0, 0, 1, 0}, {0, 0, 0, 1}});
  const Subspace e4 = span_rows(kQ, 4, {{0, 0, 0, 1}});
  EXPECT_TRUE(verify_ito_ideal(g, b, e4, zero));
  EXPECT_TRUE(verify_ito_ideal(g, b, e4, e4));
  // span{e3} is not an ideal: [e2, e3] = e4 leaves it.
  EXPECT_THROW(verify_ito_ideal(g, b, e4, span_rows(kQ, 4, {{0, 0, 1, 0}})), PreconditionViolated);
  // g' is an ideal but not inside B + span{e4}.
  EXPECT_THROW(verify_ito_ideal(g, b, e4, derived_subalgebra(g)), PreconditionViolated);
}

TEST(ExhaustiveRun, ReportShape) {
  const ItoReport r = run_ito_exhaustive(named("heisenberg", kGF3));
  EXPECT_EQ(r.mode, ItoMode::ExhaustiveFiniteField);
  EXPECT_TRUE(r.ito_violations.empty());
  EXPECT_TRUE(r.metabelian);
  EXPECT_EQ(r.decompositions_found, r.pairs.spanning_pairs);
  EXPECT_EQ(r.max_abelian_sum_dim, 3u);
}

TEST(RankCertificate, FiveDimensionalAlgebra) {
  const LeibnizAlgebra g = named("ex5dim", kGF2);
  const RankCertificate cert = commuting_rank_certificate(g);
  EXPECT_TRUE(cert.holds);
  EXPECT_FALSE(cert.failure.has_value());
  EXPECT_EQ(cert.max_abelian_dim, 3u);
  // Spot values: span{e4, e5} and span{e1, e4} are abelian.
  EXPECT_TRUE(is_abelian_subalgebra(g, span_rows(kGF2, 5, {{0, 0, 0, 1, 0}, {0, 0, 0, 0, 1}})));
  EXPECT_TRUE(is_abelian_subalgebra(g, span_rows(kGF2, 5, {{1, 0, 0, 0, 0}, {0, 0, 0, 1, 0}})));
  EXPECT_THROW(commuting_rank_certificate(named("l5", kGF2)), PreconditionViolated);
  EXPECT_TRUE(commuting_rank_certificate(named("ex5dim", kGF3)).holds);
}

kernels::CensusCounts kernel_census(std::uint32_t p, std::size_t n, bool ideal_form, kernels::Execution exec) {
  return kernels::census_kernel(p, n, 0, kernels::census_table_count(p, n), {exec, ideal_form});
}

TEST(Census, KernelMatchesBruteForceOracle) {
  for (const auto& [p, n] : std::vector<std::pair<std::uint32_t, std::size_t>>{{2, 1}, {3, 1}, {2, 2}, {3, 2}}) {
    const oracle::CensusCounts o = oracle::census(p, n);
    const kernels::CensusCounts k = kernel_census(p, n, false, kernels::Execution::Parallel);
    EXPECT_EQ(k.tables, oracle::power(p, n * n * n));
    EXPECT_EQ(k.leibniz, o.leibniz);
    EXPECT_EQ(k.lie, o.lie);
    EXPECT_EQ(k.metabelian, o.metabelian);
    EXPECT_EQ(k.decomposable, o.decomposable);
    EXPECT_EQ(k.decomposable_not_metabelian, o.decomposable_not_metabelian);
    EXPECT_EQ(k.metabelian_not_decomposable, o.metabelian_not_decomposable);
  }
}

TEST(Census, KernelMatchesLibraryReference) {
  for (const auto& [p, n] : std::vector<std::pair<std::uint32_t, std::size_t>>{{2, 1}, {2, 2}, {3, 2}}) {
    const FieldSpec field = FieldSpec::prime(p);
    EXPECT_EQ(kernel_census(p, n, true, kernels::Execution::Serial), census_reference(field, n, true));
  }
}

TEST(Census, SerialAndParallelAgreeOnRanges) {
  for (const auto& [begin, end] : std::vector<std::pair<std::uint64_t, std::uint64_t>>{
           {0, 1}, {0, 100000}, {12345, 54321}, {(1u << 27) - 70000, 1u << 27}}) {
    const auto s = kernels::census_kernel(2, 3, begin, end, {kernels::Execution::Serial, true});
    const auto q = kernels::census_kernel(2, 3, begin, end, {kernels::Execution::Parallel, true});
    EXPECT_EQ(s, q) << begin << ".." << end;
  }
}

TEST(Census, TableIndexEncoding) {
  // Digit 1 of t is c[0][0][1] in dimension 2: t = 2 gives [e1, e1] = e2.
  const AlgebraTable g = kernels::census_table(kGF2, 2, 2);
  EXPECT_TRUE(g.coefficient(0, 0, 1).is_one());
  EXPECT_EQ(g.nonzero_entries().size(), 1u);
  EXPECT_EQ(kernels::census_table_count(3, 2), 6561u);
}

TEST(Census, BudgetRefusedBeforeScanning) {
  EXPECT_THROW(census_small_leibniz(kGF2, 3), BudgetExceeded);
  EXPECT_THROW(census_small_leibniz(kGF3, 3, {.allow_large = true}), BudgetExceeded);
  EXPECT_THROW(census_small_leibniz(kQ, 2), UnsupportedMode);
}

nlohmann::json load_golden(const std::string& name) {
  std::ifstream in(std::string(LEIBNIZ_TEST_DIR) + "/golden/" + name);
  if (!in) throw std::runtime_error("missing golden file " + name);
  return nlohmann::json::parse(in);
}

void expect_golden(const kernels::CensusCounts& c, const nlohmann::json& g) {
  const auto first = [](std::uint64_t t) { return t == kernels::kNoTable ? nlohmann::json(nullptr) : nlohmann::json(t); };
  EXPECT_EQ(c.tables, g["tables"].get<std::uint64_t>());
  EXPECT_EQ(c.leibniz, g["leibniz"].get<std::uint64_t>());
  EXPECT_EQ(c.lie, g["lie"].get<std::uint64_t>());
  EXPECT_EQ(c.metabelian, g["metabelian"].get<std::uint64_t>());
  EXPECT_EQ(c.decomposable, g["decomposable"].get<std::uint64_t>());
  EXPECT_EQ(c.extension, g["extension_of_abelian_by_abelian"].get<std::uint64_t>());
  EXPECT_EQ(c.decomposable_not_metabelian, g["decomposable_not_metabelian"].get<std::uint64_t>());
  EXPECT_EQ(c.metabelian_not_decomposable, g["metabelian_not_decomposable"].get<std::uint64_t>());
  EXPECT_EQ(c.extension_mismatches, g["metabelian_extension_mismatches"].get<std::uint64_t>());
  EXPECT_EQ(c.ideal_form_tuples, g["ideal_form_tuples"].get<std::uint64_t>());
  EXPECT_EQ(c.ideal_form_violations, g["ideal_form_violations"].get<std::uint64_t>());
  EXPECT_EQ(first(c.first_converse_failure), g["first_converse_failure"]);
  EXPECT_EQ(first(c.first_violation), g["first_violation"]);
}

TEST(Census, PinnedGoldenCounts) {
  for (const auto& [file, p, n] : std::vector<std::tuple<std::string, std::uint32_t, std::size_t>>{
           {"census_gf2_dim1.json", 2, 1}, {"census_gf3_dim1.json", 3, 1},
           {"census_gf2_dim2.json", 2, 2}, {"census_gf3_dim2.json", 3, 2}}) {
    const auto report = census_small_leibniz(FieldSpec::prime(p), n, {.ideal_form = true});
    SCOPED_TRACE(file);
    expect_golden(report.counts, load_golden(file)["result"]["counts"]);
  }
}

}  // namespace
