#include "leibniz/field.hpp"

#include <functional>
#include <limits>
#include <stdexcept>
#include <utility>

#include "leibniz/errors.hpp"

namespace leibniz {

namespace {

constexpr std::int64_t kSmallMax = std::numeric_limits<std::int64_t>::max();

unsigned __int128 gcd_u128(unsigned __int128 a, unsigned __int128 b) {
  while (b != 0) {
    const unsigned __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

unsigned __int128 abs_u128(__int128 v) {
  return v < 0 ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
}

mpz_class to_mpz(__int128 v) {
  const bool negative = v < 0;
  unsigned __int128 mag = abs_u128(v);
  const auto hi = static_cast<unsigned long>(mag >> 64);
  const auto lo = static_cast<unsigned long>(mag & 0xffffffffffffffffULL);
  mpz_class result = hi;
  result <<= 64;
  result += lo;
  return negative ? mpz_class(-result) : result;
}

bool fits_small(const mpz_class& z) {
  return mpz_fits_slong_p(z.get_mpz_t()) != 0 && z != std::numeric_limits<long>::min();
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
  std::int64_t t = 0;
  std::int64_t new_t = 1;
  auto r = static_cast<std::int64_t>(p);
  auto new_r = static_cast<std::int64_t>(a % p);
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (r != 1) throw std::domain_error("zero has no inverse");
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(t);
}

std::uint64_t reduce_mod(const Rational& value, std::uint32_t p, bool* ok) {
  const mpq_class q = value.to_mpq();
  const std::uint64_t den = mpz_fdiv_ui(q.get_den_mpz_t(), p);
  if (den == 0) {
    *ok = false;
    return 0;
  }
  *ok = true;
  const std::uint64_t num = mpz_fdiv_ui(q.get_num_mpz_t(), p);
  return num * mod_inverse(den, p) % p;
}

void check_same_field(const Scalar& a, const Scalar& b) {
  if (a.field() != b.field()) {
    throw FieldMismatch("scalar over " + a.field().to_string() + " combined with scalar over " +
                        b.field().to_string());
  }
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p > std::numeric_limits<std::uint32_t>::max() || !is_prime(p)) {
    throw PreconditionViolated("GF(" + std::to_string(p) + ") is not a prime field");
  }
  return FieldSpec(static_cast<std::uint32_t>(p));
}

std::string FieldSpec::to_string() const {
  return is_rational() ? "Q" : "GF(" + std::to_string(modulus_) + ")";
}

// ---------------------------------------------------------------------------
// Rational

Rational::Rational(long long n) : num_(n), den_(1) {
  if (n == std::numeric_limits<long long>::min()) *this = from_wide(n, 1);
}

Rational::Rational(long long num, long long den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  *this = from_wide(num, den);
}

Rational::Rational(const mpq_class& q) { *this = from_big(q); }

Rational Rational::from_wide(__int128 num, __int128 den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const unsigned __int128 g = gcd_u128(abs_u128(num), static_cast<unsigned __int128>(den));
  if (g > 1) {
    num /= static_cast<__int128>(g);
    den /= static_cast<__int128>(g);
  }
  if (num >= -kSmallMax && num <= kSmallMax && den <= kSmallMax) {
    Rational r;
    r.num_ = static_cast<std::int64_t>(num);
    r.den_ = static_cast<std::int64_t>(den);
    return r;
  }
  mpq_class q(to_mpz(num), to_mpz(den));
  q.canonicalize();
  Rational r;
  r.big_ = std::make_shared<const mpq_class>(std::move(q));
  return r;
}

Rational Rational::from_big(mpq_class q) {
  q.canonicalize();
  if (fits_small(q.get_num()) && fits_small(q.get_den())) {
    Rational r;
    r.num_ = q.get_num().get_si();
    r.den_ = q.get_den().get_si();
    return r;
  }
  Rational r;
  r.big_ = std::make_shared<const mpq_class>(std::move(q));
  return r;
}

Rational Rational::parse(std::string_view text) {
  auto valid_integer = [](std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s) {
      if (c < '0' || c > '9') return false;
    }
    return true;
  };
  auto strip_plus = [](std::string_view s) {
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    return std::string(s);
  };
  const auto slash = text.find('/');
  const std::string_view num_text = text.substr(0, slash);
  const std::string_view den_text = slash == std::string_view::npos ? "1" : text.substr(slash + 1);
  if (!valid_integer(num_text) || !valid_integer(den_text)) {
    throw ParseError("malformed coefficient \"" + std::string(text) + "\"");
  }
  const mpz_class num(strip_plus(num_text), 10);
  const mpz_class den(strip_plus(den_text), 10);
  if (den == 0) throw ParseError("zero denominator in coefficient \"" + std::string(text) + "\"");
  return from_big(mpq_class(num, den));
}

bool Rational::is_integer() const { return big_ ? big_->get_den() == 1 : den_ == 1; }

int Rational::sign() const {
  if (big_) return sgn(*big_);
  return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0);
}

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

std::string Rational::numerator_string() const {
  return big_ ? big_->get_num().get_str() : std::to_string(num_);
}

std::string Rational::denominator_string() const {
  return big_ ? big_->get_den().get_str() : std::to_string(den_);
}

std::string Rational::to_string() const {
  if (is_integer()) return numerator_string();
  return numerator_string() + "/" + denominator_string();
}

std::size_t Rational::hash() const {
  if (big_) return std::hash<std::string>{}(big_->get_str());
  return std::hash<std::int64_t>{}(num_) * 31 + std::hash<std::int64_t>{}(den_);
}

Rational Rational::operator-() const {
  if (big_) return from_big(-*big_);
  Rational r = *this;
  r.num_ = -num_;
  return r;
}

Rational operator+(const Rational& a, const Rational& b) {
  if (a.big_ || b.big_) return Rational::from_big(a.to_mpq() + b.to_mpq());
  if (a.den_ == 1 && b.den_ == 1) {
    return Rational::from_wide(static_cast<__int128>(a.num_) + b.num_, 1);
  }
  return Rational::from_wide(static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_,
                             static_cast<__int128>(a.den_) * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  if (a.big_ || b.big_) return Rational::from_big(a.to_mpq() * b.to_mpq());
  return Rational::from_wide(static_cast<__int128>(a.num_) * b.num_, static_cast<__int128>(a.den_) * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw std::domain_error("division by zero");
  if (a.big_ || b.big_) return Rational::from_big(a.to_mpq() / b.to_mpq());
  return Rational::from_wide(static_cast<__int128>(a.num_) * b.den_, static_cast<__int128>(a.den_) * b.num_);
}

bool operator==(const Rational& a, const Rational& b) {
  // Both sides are canonical, so small and big representations never alias.
  if (a.big_ || b.big_) return a.big_ && b.big_ && *a.big_ == *b.big_;
  return a.num_ == b.num_ && a.den_ == b.den_;
}

// ---------------------------------------------------------------------------
// Scalar

Scalar Scalar::zero(FieldSpec field) {
  Scalar s;
  s.field_ = field;
  return s;
}

Scalar Scalar::one(FieldSpec field) { return from_int(field, 1); }

Scalar Scalar::from_int(FieldSpec field, long long value) {
  Scalar s;
  s.field_ = field;
  if (field.is_finite()) {
    const auto p = static_cast<long long>(field.characteristic());
    long long r = value % p;
    if (r < 0) r += p;
    s.residue_ = static_cast<std::uint64_t>(r);
  } else {
    s.rational_ = Rational(value);
  }
  return s;
}

Scalar Scalar::from_rational(FieldSpec field, const Rational& value) {
  Scalar s;
  s.field_ = field;
  if (field.is_finite()) {
    bool ok = false;
    s.residue_ = reduce_mod(value, field.characteristic(), &ok);
    if (!ok) {
      throw std::domain_error(value.to_string() + " has a denominator divisible by " +
                              std::to_string(field.characteristic()));
    }
  } else {
    s.rational_ = value;
  }
  return s;
}

Scalar Scalar::residue(FieldSpec field, std::uint64_t value) {
  if (!field.is_finite()) throw FieldMismatch("residues only exist over prime fields");
  Scalar s;
  s.field_ = field;
  s.residue_ = value % field.characteristic();
  return s;
}

Scalar Scalar::parse(FieldSpec field, std::string_view text) {
  const Rational value = Rational::parse(text);
  try {
    return from_rational(field, value);
  } catch (const std::domain_error&) {
    throw ParseError("coefficient \"" + std::string(text) + "\" is undefined over " + field.to_string());
  }
}

std::uint64_t Scalar::residue_value() const {
  if (!field_.is_finite()) throw FieldMismatch("scalar over Q has no residue");
  return residue_;
}

const Rational& Scalar::rational_value() const {
  if (field_.is_finite()) throw FieldMismatch("scalar over " + field_.to_string() + " is not rational");
  return rational_;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("zero has no inverse");
  Scalar s = *this;
  if (field_.is_finite()) {
    s.residue_ = mod_inverse(residue_, field_.characteristic());
  } else {
    s.rational_ = Rational(1) / rational_;
  }
  return s;
}

std::string Scalar::to_string() const {
  return field_.is_finite() ? std::to_string(residue_) : rational_.to_string();
}

std::size_t Scalar::hash() const {
  const std::size_t base = std::hash<std::uint32_t>{}(field_.characteristic());
  return base ^ (field_.is_finite() ? std::hash<std::uint64_t>{}(residue_) : rational_.hash()) * 1099511628211ULL;
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  if (field_.is_finite()) {
    s.residue_ = residue_ == 0 ? 0 : field_.characteristic() - residue_;
  } else {
    s.rational_ = -rational_;
  }
  return s;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  check_same_field(a, b);
  Scalar s = a;
  if (a.field_.is_finite()) {
    s.residue_ = (a.residue_ + b.residue_) % a.field_.characteristic();
  } else {
    s.rational_ = a.rational_ + b.rational_;
  }
  return s;
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
  check_same_field(a, b);
  Scalar s = a;
  if (a.field_.is_finite()) {
    s.residue_ = a.residue_ * b.residue_ % a.field_.characteristic();
  } else {
    s.rational_ = a.rational_ * b.rational_;
  }
  return s;
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  check_same_field(a, b);
  return a * b.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.field_ != b.field_) return false;
  return a.field_.is_finite() ? a.residue_ == b.residue_ : a.rational_ == b.rational_;
}

// ---------------------------------------------------------------------------
// Vectors

Vector zero_vector(FieldSpec field, std::size_t n) { return Vector(n, Scalar::zero(field)); }

Vector unit_vector(FieldSpec field, std::size_t n, std::size_t i) {
  Vector v = zero_vector(field, n);
  v.at(i) = Scalar::one(field);
  return v;
}

bool is_zero(const Vector& v) {
  for (const auto& s : v) {
    if (!s.is_zero()) return false;
  }
  return true;
}

namespace {
void check_lengths(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) {
    throw DimensionMismatch("vector lengths " + std::to_string(a.size()) + " and " + std::to_string(b.size()));
  }
}
}  // namespace

Vector add(const Vector& a, const Vector& b) {
  check_lengths(a, b);
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Vector subtract(const Vector& a, const Vector& b) {
  check_lengths(a, b);
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

Vector scale(const Scalar& s, const Vector& v) {
  Vector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = s * v[i];
  return out;
}

void axpy(Vector& a, const Scalar& s, const Vector& b) {
  check_lengths(a, b);
  if (s.is_zero()) return;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!b[i].is_zero()) a[i] += s * b[i];
  }
}

std::string to_string(const Vector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += v[i].to_string();
  }
  return out + ")";
}

std::vector<Vector> all_vectors(FieldSpec field, std::size_t n) {
  if (!field.is_finite()) throw UnsupportedMode("cannot enumerate vectors over Q");
  const std::uint64_t p = field.characteristic();
  std::vector<Vector> out;
  std::vector<std::uint64_t> digits(n, 0);
  while (true) {
    Vector v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = Scalar::residue(field, digits[i]);
    out.push_back(std::move(v));
    std::size_t pos = n;
    while (pos > 0) {
      --pos;
      if (++digits[pos] < p) break;
      digits[pos] = 0;
      if (pos == 0) return out;
    }
    if (n == 0) return out;
  }
}

}  // namespace leibniz
