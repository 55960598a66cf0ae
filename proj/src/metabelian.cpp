#include "leibniz/metabelian.hpp"

#include <array>
#include <random>

#include "leibniz/errors.hpp"

namespace leibniz {

namespace {

Vector slice(const std::vector<Scalar>& tensor, std::size_t offset, std::size_t len) {
  return Vector(tensor.begin() + static_cast<std::ptrdiff_t>(offset),
                tensor.begin() + static_cast<std::ptrdiff_t>(offset + len));
}

void check_shape(const std::vector<Scalar>& tensor, std::size_t expected, FieldSpec field, const char* name) {
  if (tensor.size() != expected) {
    throw DimensionMismatch(std::string(name) + " has " + std::to_string(tensor.size()) + " entries, expected " +
                            std::to_string(expected));
  }
  for (const auto& s : tensor) {
    if (s.field() != field) throw FieldMismatch(std::string(name) + " mixes fields");
  }
}

void check_shape(const MetabelianDatum& d) {
  check_shape(d.left_act, d.v_dim * d.p_dim * d.v_dim, d.field, "left action");
  check_shape(d.right_act, d.p_dim * d.v_dim * d.v_dim, d.field, "right action");
  check_shape(d.f, d.p_dim * d.p_dim * d.v_dim, d.field, "f");
}

void check_shape(const LieMetabelianDatum& d) {
  check_shape(d.act, d.p_dim * d.v_dim * d.v_dim, d.field, "action");
  check_shape(d.f, d.p_dim * d.p_dim * d.v_dim, d.field, "f");
}

// w <| e_q
Vector left_of(const MetabelianDatum& d, const Vector& w, std::size_t q) {
  Vector out = zero_vector(d.field, d.v_dim);
  for (std::size_t x = 0; x < d.v_dim; ++x) {
    if (!w[x].is_zero()) axpy(out, w[x], d.left(x, q));
  }
  return out;
}

// e_p |> w
Vector right_of(const MetabelianDatum& d, std::size_t p, const Vector& w) {
  Vector out = zero_vector(d.field, d.v_dim);
  for (std::size_t x = 0; x < d.v_dim; ++x) {
    if (!w[x].is_zero()) axpy(out, w[x], d.right(p, x));
  }
  return out;
}

Vector action_of(const LieMetabelianDatum& d, std::size_t p, const Vector& w) {
  Vector out = zero_vector(d.field, d.v_dim);
  for (std::size_t x = 0; x < d.v_dim; ++x) {
    if (!w[x].is_zero()) axpy(out, w[x], d.action(p, x));
  }
  return out;
}

DatumReport failure(std::string axiom, std::vector<std::size_t> indices, Vector lhs, Vector rhs) {
  return {false, std::move(axiom), std::move(indices), std::move(lhs), std::move(rhs)};
}

void fill(std::vector<Scalar>& out, const Vector& v) { out.insert(out.end(), v.begin(), v.end()); }

// Shared by both random samplers: an entry is nonzero with probability `density`.
class TensorSampler {
 public:
  TensorSampler(FieldSpec field, std::uint64_t seed) : field_(field), rng_(seed) {}

  double density() {
    static constexpr std::array<double, 5> kLadder{0.0, 1.0 / 16, 1.0 / 8, 1.0 / 4, 1.0 / 2};
    return kLadder[std::uniform_int_distribution<std::size_t>(0, kLadder.size() - 1)(rng_)];
  }

  void draw(std::vector<Scalar>& tensor) {
    const double rate = density();
    std::bernoulli_distribution nonzero(rate);
    std::uniform_int_distribution<std::uint64_t> value(1, field_.characteristic() - 1);
    for (auto& s : tensor) s = nonzero(rng_) ? Scalar::residue(field_, value(rng_)) : Scalar::zero(field_);
  }

 private:
  FieldSpec field_;
  std::mt19937_64 rng_;
};

}  // namespace

MetabelianDatum MetabelianDatum::zero(FieldSpec field, std::size_t v_dim, std::size_t p_dim) {
  const Scalar z = Scalar::zero(field);
  return {field,
          v_dim,
          p_dim,
          std::vector<Scalar>(v_dim * p_dim * v_dim, z),
          std::vector<Scalar>(p_dim * v_dim * v_dim, z),
          std::vector<Scalar>(p_dim * p_dim * v_dim, z)};
}

Vector MetabelianDatum::left(std::size_t x, std::size_t p) const {
  return slice(left_act, (x * p_dim + p) * v_dim, v_dim);
}
Vector MetabelianDatum::right(std::size_t p, std::size_t x) const {
  return slice(right_act, (p * v_dim + x) * v_dim, v_dim);
}
Vector MetabelianDatum::form(std::size_t p, std::size_t q) const { return slice(f, (p * p_dim + q) * v_dim, v_dim); }
void MetabelianDatum::set_left(std::size_t x, std::size_t p, std::size_t y, const Scalar& value) {
  left_act.at((x * p_dim + p) * v_dim + y) = value;
}
void MetabelianDatum::set_right(std::size_t p, std::size_t x, std::size_t y, const Scalar& value) {
  right_act.at((p * v_dim + x) * v_dim + y) = value;
}
void MetabelianDatum::set_form(std::size_t p, std::size_t q, std::size_t y, const Scalar& value) {
  f.at((p * p_dim + q) * v_dim + y) = value;
}

LieMetabelianDatum LieMetabelianDatum::zero(FieldSpec field, std::size_t v_dim, std::size_t p_dim) {
  const Scalar z = Scalar::zero(field);
  return {field, v_dim, p_dim, std::vector<Scalar>(p_dim * v_dim * v_dim, z),
          std::vector<Scalar>(p_dim * p_dim * v_dim, z)};
}

Vector LieMetabelianDatum::action(std::size_t p, std::size_t x) const {
  return slice(act, (p * v_dim + x) * v_dim, v_dim);
}
Vector LieMetabelianDatum::form(std::size_t p, std::size_t q) const {
  return slice(f, (p * p_dim + q) * v_dim, v_dim);
}
void LieMetabelianDatum::set_action(std::size_t p, std::size_t x, std::size_t y, const Scalar& value) {
  act.at((p * v_dim + x) * v_dim + y) = value;
}
void LieMetabelianDatum::set_form(std::size_t p, std::size_t q, std::size_t y, const Scalar& value) {
  f.at((p * p_dim + q) * v_dim + y) = value;
}

std::string DatumReport::describe() const {
  if (valid) return "valid";
  std::string out = "axiom " + axiom + " fails at (";
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (i > 0) out += ", ";
    out += std::to_string(indices[i] + 1);
  }
  return out + "): " + to_string(lhs) + " != " + to_string(rhs);
}

DatumReport validate_datum(const MetabelianDatum& d) {
  check_shape(d);
  const std::size_t nv = d.v_dim;
  const std::size_t np = d.p_dim;
  for (std::size_t x = 0; x < nv; ++x) {
    for (std::size_t p = 0; p < np; ++p) {
      for (std::size_t q = 0; q < np; ++q) {
        Vector lhs = left_of(d, d.left(x, p), q);
        Vector rhs = left_of(d, d.left(x, q), p);
        if (lhs != rhs) return failure("(x<|p)<|q = (x<|q)<|p", {x, p, q}, std::move(lhs), std::move(rhs));
      }
    }
  }
  for (std::size_t p = 0; p < np; ++p) {
    for (std::size_t x = 0; x < nv; ++x) {
      for (std::size_t q = 0; q < np; ++q) {
        Vector lhs = right_of(d, p, d.left(x, q));
        Vector mid = left_of(d, d.right(p, x), q);
        if (lhs != mid) return failure("p|>(x<|q) = (p|>x)<|q", {p, x, q}, std::move(lhs), std::move(mid));
      }
    }
  }
  for (std::size_t p = 0; p < np; ++p) {
    for (std::size_t x = 0; x < nv; ++x) {
      for (std::size_t q = 0; q < np; ++q) {
        Vector mid = left_of(d, d.right(p, x), q);
        Vector rhs = scale(-Scalar::one(d.field), right_of(d, p, d.right(q, x)));
        if (mid != rhs) return failure("(p|>x)<|q = -p|>(q|>x)", {p, x, q}, std::move(mid), std::move(rhs));
      }
    }
  }
  for (std::size_t p = 0; p < np; ++p) {
    for (std::size_t q = 0; q < np; ++q) {
      for (std::size_t r = 0; r < np; ++r) {
        Vector lhs = add(subtract(right_of(d, p, d.form(q, r)), left_of(d, d.form(p, q), r)),
                         left_of(d, d.form(p, r), q));
        if (!is_zero(lhs)) {
          return failure("p|>f(q,r) - f(p,q)<|r + f(p,r)<|q = 0", {p, q, r}, std::move(lhs),
                         zero_vector(d.field, nv));
        }
      }
    }
  }
  return {};
}

DatumReport validate_lie_datum(const LieMetabelianDatum& d) {
  check_shape(d);
  const std::size_t nv = d.v_dim;
  const std::size_t np = d.p_dim;
  for (std::size_t p = 0; p < np; ++p) {
    for (std::size_t q = 0; q < np; ++q) {
      for (std::size_t x = 0; x < nv; ++x) {
        Vector lhs = action_of(d, p, d.action(q, x));
        Vector rhs = action_of(d, q, d.action(p, x));
        if (lhs != rhs) return failure("p|>(q|>x) = q|>(p|>x)", {p, q, x}, std::move(lhs), std::move(rhs));
      }
    }
  }
  for (std::size_t p = 0; p < np; ++p) {
    Vector diag = d.form(p, p);
    if (!is_zero(diag)) return failure("f(p,p) = 0", {p}, std::move(diag), zero_vector(d.field, nv));
  }
  for (std::size_t p = 0; p < np; ++p) {
    for (std::size_t q = p + 1; q < np; ++q) {
      Vector lhs = d.form(p, q);
      Vector rhs = scale(-Scalar::one(d.field), d.form(q, p));
      if (lhs != rhs) return failure("f(p,p) = 0", {p, q}, std::move(lhs), std::move(rhs));
    }
  }
  for (std::size_t p = 0; p < np; ++p) {
    for (std::size_t q = 0; q < np; ++q) {
      for (std::size_t r = 0; r < np; ++r) {
        Vector sum = add(add(action_of(d, p, d.form(q, r)), action_of(d, q, d.form(r, p))),
                         action_of(d, r, d.form(p, q)));
        if (!is_zero(sum)) {
          return failure("p|>f(q,r) + q|>f(r,p) + r|>f(p,q) = 0", {p, q, r}, std::move(sum),
                         zero_vector(d.field, nv));
        }
      }
    }
  }
  return {};
}

AlgebraTable build_metabelian_product(const MetabelianDatum& d) {
  const DatumReport report = validate_datum(d);
  if (!report.valid) throw PreconditionViolated("invalid metabelian datum: " + report.describe());
  const std::size_t nv = d.v_dim;
  const std::size_t np = d.p_dim;
  const std::size_t n = nv + np;
  const Vector zero_p = zero_vector(d.field, np);
  std::vector<Scalar> c;
  c.reserve(n * n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Vector v;
      if (i < nv && j < nv) {
        v = zero_vector(d.field, nv);
      } else if (i < nv) {
        v = d.left(i, j - nv);
      } else if (j < nv) {
        v = d.right(i - nv, j);
      } else {
        v = d.form(i - nv, j - nv);
      }
      fill(c, v);
      fill(c, zero_p);
    }
  }
  return AlgebraTable(d.field, n, std::move(c));
}

MetabelianDatum as_leibniz_datum(const LieMetabelianDatum& d) {
  check_shape(d);
  MetabelianDatum out = MetabelianDatum::zero(d.field, d.v_dim, d.p_dim);
  out.right_act = d.act;
  out.f = d.f;
  for (std::size_t p = 0; p < d.p_dim; ++p) {
    for (std::size_t x = 0; x < d.v_dim; ++x) {
      const Vector v = d.action(p, x);
      for (std::size_t y = 0; y < d.v_dim; ++y) out.set_left(x, p, y, -v[y]);
    }
  }
  return out;
}

AlgebraTable build_lie_metabelian_product(const LieMetabelianDatum& d) {
  const DatumReport report = validate_lie_datum(d);
  if (!report.valid) throw PreconditionViolated("invalid Lie metabelian datum: " + report.describe());
  const std::size_t nv = d.v_dim;
  const std::size_t np = d.p_dim;
  const std::size_t n = nv + np;
  const Vector zero_p = zero_vector(d.field, np);
  std::vector<Scalar> c;
  c.reserve(n * n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Vector v;
      if (i < nv && j < nv) {
        v = zero_vector(d.field, nv);
      } else if (i < nv) {
        v = scale(-Scalar::one(d.field), d.action(j - nv, i));
      } else if (j < nv) {
        v = d.action(i - nv, j);
      } else {
        v = d.form(i - nv, j - nv);
      }
      fill(c, v);
      fill(c, zero_p);
    }
  }
  return AlgebraTable(d.field, n, std::move(c));
}

RandomDatum random_valid_datum(FieldSpec field, std::size_t v_dim, std::size_t p_dim, std::uint64_t seed,
                               std::uint64_t max_attempts) {
  if (!field.is_finite()) throw UnsupportedMode("random datums are drawn over a prime field");
  TensorSampler sampler(field, seed);
  RandomDatum out{MetabelianDatum::zero(field, v_dim, p_dim), 0};
  while (out.attempts < max_attempts) {
    ++out.attempts;
    sampler.draw(out.datum.left_act);
    sampler.draw(out.datum.right_act);
    sampler.draw(out.datum.f);
    if (validate_datum(out.datum).valid) return out;
  }
  throw BudgetExceeded("no valid metabelian datum after " + std::to_string(out.attempts) + " attempts");
}

RandomLieDatum random_valid_lie_datum(FieldSpec field, std::size_t v_dim, std::size_t p_dim, std::uint64_t seed,
                                      std::uint64_t max_attempts) {
  if (!field.is_finite()) throw UnsupportedMode("random datums are drawn over a prime field");
  TensorSampler sampler(field, seed);
  RandomLieDatum out{LieMetabelianDatum::zero(field, v_dim, p_dim), 0};
  while (out.attempts < max_attempts) {
    ++out.attempts;
    sampler.draw(out.datum.act);
    // f is drawn above the diagonal and mirrored, so only the other axioms can fail.
    std::vector<Scalar> upper(out.datum.f.size());
    sampler.draw(upper);
    for (std::size_t p = 0; p < p_dim; ++p) {
      for (std::size_t q = 0; q < p_dim; ++q) {
        for (std::size_t y = 0; y < v_dim; ++y) {
          const Scalar& u = upper[(std::min(p, q) * p_dim + std::max(p, q)) * v_dim + y];
          out.datum.set_form(p, q, y, p == q ? Scalar::zero(field) : (p < q ? u : -u));
        }
      }
    }
    if (validate_lie_datum(out.datum).valid) return out;
  }
  throw BudgetExceeded("no valid Lie metabelian datum after " + std::to_string(out.attempts) + " attempts");
}

ExtractedDatum extract_datum(const LeibnizAlgebra& g) {
  if (!is_metabelian(g)) throw PreconditionViolated("extract_datum needs a metabelian algebra");
  const Subspace derived = derived_subalgebra(g);
  const std::vector<std::size_t> complement = derived.non_pivots();
  const std::size_t nv = derived.dim();
  const std::size_t np = complement.size();
  const FieldSpec field = g.field();

  std::vector<Vector> rows = derived.basis_vectors();
  for (std::size_t c : complement) rows.push_back(unit_vector(field, g.dim(), c));
  ExtractedDatum out{MetabelianDatum::zero(field, nv, np), Matrix::from_rows(field, rows, g.dim())};

  auto in_v = [&](const Vector& w) {
    if (!derived.contains(w)) throw TheoremViolation("a bracket leaves the derived subalgebra");
    return derived.coordinates(w);
  };
  for (std::size_t x = 0; x < nv; ++x) {
    for (std::size_t p = 0; p < np; ++p) {
      const Vector l = in_v(bracket(g, rows[x], rows[nv + p]));
      const Vector r = in_v(bracket(g, rows[nv + p], rows[x]));
      for (std::size_t y = 0; y < nv; ++y) {
        out.datum.set_left(x, p, y, l[y]);
        out.datum.set_right(p, x, y, r[y]);
      }
    }
  }
  for (std::size_t p = 0; p < np; ++p) {
    for (std::size_t q = 0; q < np; ++q) {
      const Vector v = in_v(g.basis_bracket_vector(complement[p], complement[q]));
      for (std::size_t y = 0; y < nv; ++y) out.datum.set_form(p, q, y, v[y]);
    }
  }
  const DatumReport report = validate_datum(out.datum);
  if (!report.valid) throw TheoremViolation("datum extracted from a metabelian algebra is invalid: " + report.describe());
  return out;
}

}  // namespace leibniz
