#include <gmpxx.h>
#include <gtest/gtest.h>

#include "generators.hpp"
#include "leibniz/errors.hpp"
#include "leibniz/field.hpp"

namespace {

using leibniz::FieldSpec;
using leibniz::Rational;
using leibniz::Scalar;

TEST(FieldSpec, PrimeCheckedAtConstruction) {
  EXPECT_EQ(FieldSpec::prime(7).characteristic(), 7u);
  EXPECT_THROW(FieldSpec::prime(1), leibniz::PreconditionViolated);
  EXPECT_THROW(FieldSpec::prime(9), leibniz::PreconditionViolated);
  EXPECT_THROW(FieldSpec::prime(0), leibniz::PreconditionViolated);
  EXPECT_EQ(FieldSpec::rationals().to_string(), "Q");
  EXPECT_EQ(FieldSpec::prime(3).to_string(), "GF(3)");
}

TEST(Rational, StoredReducedWithPositiveDenominator) {
  EXPECT_EQ(Rational(6, -4).to_string(), "-3/2");
  EXPECT_EQ(Rational(0, -5).to_string(), "0");
  EXPECT_EQ(Rational(10, 5).to_string(), "2");
  EXPECT_EQ(Rational::parse("-12/18").to_string(), "-2/3");
  EXPECT_THROW(Rational(1, 0), std::domain_error);
  EXPECT_THROW(Rational::parse("1/x"), leibniz::ParseError);
}

TEST(Rational, NoOverflowPastSixtyFourBits) {
  const Rational big(std::int64_t{1} << 62);
  Rational acc = big;
  for (int i = 0; i < 4; ++i) acc = acc * big;
  mpq_class expected(mpz_class(1) << 310);
  EXPECT_EQ(acc.to_mpq(), expected);
  EXPECT_EQ((acc / acc).to_string(), "1");
  EXPECT_EQ((acc - acc).to_string(), "0");
}

// Every operation agrees with GMP on random operands.
TEST(Rational, MatchesGmpOracle) {
  gen::Rng rng(11);
  for (int trial = 0; trial < 2000; ++trial) {
    const Scalar a = gen::scalar(FieldSpec::rationals(), rng);
    const Scalar b = gen::scalar(FieldSpec::rationals(), rng);
    const mpq_class qa = a.rational_value().to_mpq();
    const mpq_class qb = b.rational_value().to_mpq();
    EXPECT_EQ((a + b).rational_value().to_mpq(), qa + qb);
    EXPECT_EQ((a - b).rational_value().to_mpq(), qa - qb);
    EXPECT_EQ((a * b).rational_value().to_mpq(), qa * qb);
    if (!b.is_zero()) {
      const mpq_class quotient = qa / qb;
      EXPECT_EQ((a / b).rational_value().to_mpq(), quotient);
      EXPECT_GT((a / b).rational_value().to_mpq().get_den(), 0);
    }
  }
}

class FieldAxioms : public ::testing::TestWithParam<FieldSpec> {};

TEST_P(FieldAxioms, HoldOnRandomTriples) {
  const FieldSpec field = GetParam();
  gen::Rng rng(2024 + field.characteristic());
  const Scalar zero = Scalar::zero(field);
  const Scalar one = Scalar::one(field);
  for (int trial = 0; trial < 3000; ++trial) {
    const Scalar a = gen::scalar(field, rng);
    const Scalar b = gen::scalar(field, rng);
    const Scalar c = gen::scalar(field, rng);
    ASSERT_EQ((a + b) + c, a + (b + c));
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a + b, b + a);
    ASSERT_EQ(a * b, b * a);
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ(a + zero, a);
    ASSERT_EQ(a * one, a);
    ASSERT_EQ(a + (-a), zero);
    if (!a.is_zero()) {
      ASSERT_EQ(a.inverse() * a, one);
    }
  }
  EXPECT_THROW(zero.inverse(), std::domain_error);
}

INSTANTIATE_TEST_SUITE_P(Fields, FieldAxioms,
                         ::testing::Values(FieldSpec::rationals(), FieldSpec::prime(2), FieldSpec::prime(3),
                                           FieldSpec::prime(7), FieldSpec::prime(4294967291u)));

TEST(Scalar, ResiduesAgreeWithIntegerOracle) {
  const FieldSpec field = FieldSpec::prime(101);
  for (long long a = -150; a < 150; a += 7)
    for (long long b = -150; b < 150; b += 11) {
      const auto mod = [](long long x) { return static_cast<std::uint64_t>(((x % 101) + 101) % 101); };
      EXPECT_EQ((Scalar::from_int(field, a) * Scalar::from_int(field, b)).residue_value(), mod(a * b));
      EXPECT_EQ((Scalar::from_int(field, a) - Scalar::from_int(field, b)).residue_value(), mod(a - b));
    }
}

TEST(Scalar, RationalReductionModP) {
  const FieldSpec gf7 = FieldSpec::prime(7);
  // 1/3 = 5 in GF(7) since 3 * 5 = 15 = 1.
  EXPECT_EQ(Scalar::parse(gf7, "1/3").residue_value(), 5u);
  EXPECT_EQ(Scalar::parse(gf7, "-1").residue_value(), 6u);
  EXPECT_THROW(Scalar::from_rational(gf7, Rational(1, 7)), std::domain_error);
}

TEST(Scalar, MixedFieldsRejected) {
  EXPECT_THROW(Scalar::one(FieldSpec::prime(2)) + Scalar::one(FieldSpec::prime(3)), leibniz::FieldMismatch);
  EXPECT_THROW(Scalar::one(FieldSpec::rationals()) * Scalar::one(FieldSpec::prime(3)), leibniz::FieldMismatch);
  EXPECT_THROW(Scalar::one(FieldSpec::rationals()).residue_value(), leibniz::FieldMismatch);
}

TEST(Scalar, SerializedAsStrings) {
  EXPECT_EQ(Scalar::parse(FieldSpec::rationals(), "4/6").to_string(), "2/3");
  EXPECT_EQ(Scalar::parse(FieldSpec::rationals(), "-3").to_string(), "-3");
  EXPECT_EQ(Scalar::parse(FieldSpec::prime(5), "-3").to_string(), "2");
}

TEST(Vectors, AllVectorsLexicographic) {
  const auto all = leibniz::all_vectors(FieldSpec::prime(3), 2);
  ASSERT_EQ(all.size(), 9u);
  EXPECT_EQ(leibniz::to_string(all[1]), leibniz::to_string({Scalar::zero(FieldSpec::prime(3)),
                                                            Scalar::one(FieldSpec::prime(3))}));
  EXPECT_THROW(leibniz::all_vectors(FieldSpec::rationals(), 2), leibniz::UnsupportedMode);
}

}  // namespace
