#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace leibniz {

/// The ground field: the rationals or a prime field GF(p).
class FieldSpec {
 public:
  /// Q.
  constexpr FieldSpec() = default;

  static constexpr FieldSpec rationals() { return FieldSpec{}; }
  /// GF(p); throws PreconditionViolated unless p is prime and fits in 32 bits.
  static FieldSpec prime(std::uint64_t p);

  constexpr bool is_rational() const { return modulus_ == 0; }
  constexpr bool is_finite() const { return modulus_ != 0; }
  /// 0 for Q, p for GF(p).
  constexpr std::uint32_t characteristic() const { return modulus_; }

  /// "Q" or "GF(p)".
  std::string to_string() const;

  friend constexpr bool operator==(FieldSpec, FieldSpec) = default;

 private:
  explicit constexpr FieldSpec(std::uint32_t p) : modulus_(p) {}
  std::uint32_t modulus_ = 0;
};

bool is_prime(std::uint64_t n);

/// Exact rational number, always reduced with a positive denominator.
///
/// Values whose numerator and denominator fit in 63 bits are kept inline; anything
/// larger spills into an immutable shared GMP rational. Arithmetic never overflows.
class Rational {
 public:
  Rational() = default;
  Rational(long long n);  // NOLINT(google-explicit-constructor)
  /// Throws std::domain_error on a zero denominator.
  Rational(long long num, long long den);
  explicit Rational(const mpq_class& q);

  /// Accepts "a", "-a", "a/b", "-a/b" in decimal; nullopt-like failure is reported by
  /// throwing ParseError with a description of the offending text.
  static Rational parse(std::string_view text);

  bool is_zero() const { return !big_ && num_ == 0; }
  bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
  bool is_integer() const;
  int sign() const;

  mpq_class to_mpq() const;
  /// Numerator / denominator as decimal strings.
  std::string numerator_string() const;
  std::string denominator_string() const;
  /// "a/b" reduced, or "a" when b = 1.
  std::string to_string() const;
  std::size_t hash() const;

  Rational operator-() const;
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  /// Throws std::domain_error when dividing by zero.
  friend Rational operator/(const Rational& a, const Rational& b);
  friend bool operator==(const Rational& a, const Rational& b);

 private:
  static Rational from_wide(__int128 num, __int128 den);
  static Rational from_big(mpq_class q);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::shared_ptr<const mpq_class> big_;
};

/// An element of a field described by a FieldSpec.
///
/// Binary operations between scalars of different fields throw FieldMismatch.
/// The default-constructed scalar is zero in Q.
class Scalar {
 public:
  Scalar() = default;

  static Scalar zero(FieldSpec field);
  static Scalar one(FieldSpec field);
  static Scalar from_int(FieldSpec field, long long value);
  /// Maps a rational into the field; throws std::domain_error if the denominator
  /// vanishes modulo p.
  static Scalar from_rational(FieldSpec field, const Rational& value);
  /// Residue in [0, p) for GF(p); throws FieldMismatch for Q.
  static Scalar residue(FieldSpec field, std::uint64_t value);
  /// Parses an integer or fraction, reduced into the field. Throws ParseError.
  static Scalar parse(FieldSpec field, std::string_view text);

  FieldSpec field() const { return field_; }
  bool is_zero() const { return field_.is_finite() ? residue_ == 0 : rational_.is_zero(); }
  bool is_one() const { return field_.is_finite() ? residue_ == 1 : rational_.is_one(); }

  /// GF(p) representative in [0, p). Throws FieldMismatch over Q.
  std::uint64_t residue_value() const;
  /// Q value. Throws FieldMismatch over GF(p).
  const Rational& rational_value() const;

  /// Multiplicative inverse; std::domain_error for zero.
  Scalar inverse() const;

  /// "a/b" reduced ("a" when b = 1) over Q; decimal residue over GF(p).
  std::string to_string() const;
  std::size_t hash() const;

  Scalar operator-() const;
  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar& operator+=(const Scalar& other) { return *this = *this + other; }
  Scalar& operator-=(const Scalar& other) { return *this = *this - other; }
  Scalar& operator*=(const Scalar& other) { return *this = *this * other; }
  /// Equal iff same field and same value.
  friend bool operator==(const Scalar& a, const Scalar& b);

 private:
  FieldSpec field_;
  std::uint64_t residue_ = 0;
  Rational rational_;
};

/// Coordinate vector over a field; the field is carried by the entries.
using Vector = std::vector<Scalar>;

Vector zero_vector(FieldSpec field, std::size_t n);
/// e_i, 0-based.
Vector unit_vector(FieldSpec field, std::size_t n, std::size_t i);
bool is_zero(const Vector& v);
Vector add(const Vector& a, const Vector& b);
Vector subtract(const Vector& a, const Vector& b);
Vector scale(const Scalar& s, const Vector& v);
/// a += s * b
void axpy(Vector& a, const Scalar& s, const Vector& b);
std::string to_string(const Vector& v);

/// All vectors of GF(p)^n in lexicographic order (first coordinate most significant).
/// Throws UnsupportedMode over Q.
std::vector<Vector> all_vectors(FieldSpec field, std::size_t n);

}  // namespace leibniz
