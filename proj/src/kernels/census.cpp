#include "leibniz/kernels/census.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <string>
#include <vector>

#include "leibniz/errors.hpp"
#include "leibniz/subspace.hpp"

namespace leibniz::kernels {

CensusCounts& CensusCounts::operator+=(const CensusCounts& other) {
  tables += other.tables;
  leibniz += other.leibniz;
  lie += other.lie;
  metabelian += other.metabelian;
  decomposable += other.decomposable;
  extension += other.extension;
  decomposable_not_metabelian += other.decomposable_not_metabelian;
  metabelian_not_decomposable += other.metabelian_not_decomposable;
  extension_mismatches += other.extension_mismatches;
  ideal_form_tuples += other.ideal_form_tuples;
  ideal_form_violations += other.ideal_form_violations;
  first_converse_failure = std::min(first_converse_failure, other.first_converse_failure);
  first_violation = std::min(first_violation, other.first_violation);
  return *this;
}

std::uint64_t census_table_count(std::uint32_t p, std::size_t n) { return saturating_power(p, n * n * n); }

AlgebraTable census_table(FieldSpec field, std::size_t n, std::uint64_t t) {
  if (!field.is_finite()) throw UnsupportedMode("the census enumerates tables over a prime field");
  const std::uint64_t p = field.characteristic();
  std::vector<Scalar> c;
  c.reserve(n * n * n);
  for (std::size_t q = 0; q < n * n * n; ++q) {
    c.push_back(Scalar::residue(field, t % p));
    t /= p;
  }
  return AlgebraTable(field, n, std::move(c));
}

namespace {

using Code = std::uint8_t;
constexpr std::size_t kMaxN = 6;

// Vectors of GF(p)^n are coded as sum_k x_k p^k.
struct Context {
  std::uint32_t p = 0;
  std::size_t n = 0;
  std::size_t vectors = 0;
  std::vector<Code> add;      // vectors x vectors
  std::vector<Code> neg;      // vectors
  std::vector<Code> smul;     // p x vectors
  std::vector<Code> digits;   // vectors x n
  std::vector<Code> unit;     // n

  struct Space {
    std::uint64_t mask = 0;
    std::vector<Code> basis;
  };
  std::vector<Space> spaces;
  std::size_t full = 0;
  std::vector<std::size_t> sum;                    // spaces x spaces
  std::vector<std::vector<std::size_t>> contained;  // ideals of interest inside each space

  Context(std::uint32_t prime, std::size_t dim) : p(prime), n(dim) {
    vectors = saturating_power(p, n);
    add.resize(vectors * vectors);
    neg.resize(vectors);
    smul.resize(p * vectors);
    digits.resize(vectors * n);
    for (std::size_t x = 0; x < vectors; ++x) {
      std::size_t rest = x;
      for (std::size_t k = 0; k < n; ++k) {
        digits[x * n + k] = static_cast<Code>(rest % p);
        rest /= p;
      }
    }
    auto encode = [&](const std::array<std::uint32_t, kMaxN>& d) {
      std::size_t code = 0;
      for (std::size_t k = n; k-- > 0;) code = code * p + d[k];
      return static_cast<Code>(code);
    };
    for (std::size_t x = 0; x < vectors; ++x) {
      std::array<std::uint32_t, kMaxN> d{};
      for (std::size_t k = 0; k < n; ++k) d[k] = (p - digits[x * n + k]) % p;
      neg[x] = encode(d);
      for (std::size_t y = 0; y < vectors; ++y) {
        for (std::size_t k = 0; k < n; ++k) d[k] = (digits[x * n + k] + digits[y * n + k]) % p;
        add[x * vectors + y] = encode(d);
      }
      for (std::uint32_t s = 0; s < p; ++s) {
        for (std::size_t k = 0; k < n; ++k) d[k] = s * digits[x * n + k] % p;
        smul[s * vectors + x] = encode(d);
      }
    }
    std::size_t power = 1;
    for (std::size_t k = 0; k < n; ++k) {
      unit.push_back(static_cast<Code>(power));
      power *= p;
    }

    const FieldSpec field = FieldSpec::prime(p);
    const auto all = all_vectors(field, n);
    auto code_of = [&](const Vector& v) {
      std::size_t code = 0;
      for (std::size_t k = n; k-- > 0;) code = code * p + v[k].residue_value();
      return static_cast<Code>(code);
    };
    for (const auto& s : enumerate_subspaces(field, n)) {
      Space space;
      for (const auto& v : all) {
        if (s.contains(v)) space.mask |= std::uint64_t{1} << code_of(v);
      }
      for (const auto& b : s.basis_vectors()) space.basis.push_back(code_of(b));
      spaces.push_back(std::move(space));
    }
    full = spaces.size() - 1;
    const std::size_t count = spaces.size();
    sum.resize(count * count);
    for (std::size_t a = 0; a < count; ++a) {
      for (std::size_t b = 0; b < count; ++b) {
        std::vector<Code> gens = spaces[a].basis;
        gens.insert(gens.end(), spaces[b].basis.begin(), spaces[b].basis.end());
        sum[a * count + b] = index_of(closure_mask(gens));
      }
    }
    contained.resize(count);
    for (std::size_t s = 0; s < count; ++s) {
      for (std::size_t h = 0; h < count; ++h) {
        if ((spaces[h].mask & ~spaces[s].mask) == 0) contained[s].push_back(h);
      }
    }
  }

  std::uint64_t closure_mask(const std::vector<Code>& gens) const {
    std::uint64_t mask = 1;  // the zero vector
    for (Code g : gens) {
      std::uint64_t next = mask;
      for (std::size_t x = 0; x < vectors; ++x) {
        if (!(mask >> x & 1)) continue;
        for (std::uint32_t s = 1; s < p; ++s) next |= std::uint64_t{1} << add[x * vectors + smul[s * vectors + g]];
      }
      mask = next;
    }
    return mask;
  }

  std::size_t index_of(std::uint64_t mask) const {
    for (std::size_t i = 0; i < spaces.size(); ++i) {
      if (spaces[i].mask == mask) return i;
    }
    throw TheoremViolation("census: subspace sum missing from the enumeration");
  }
};

// One table, held as the codes of [e_i, e_j].
class Evaluator {
 public:
  explicit Evaluator(const Context& ctx) : ctx_(ctx) {}

  void load(std::uint64_t t) {
    const std::size_t pairs = ctx_.n * ctx_.n;
    for (std::size_t q = 0; q < pairs; ++q) {
      c_[q] = static_cast<Code>(t % ctx_.vectors);
      t /= ctx_.vectors;
    }
  }
  // Advances to the next table index; pair 0 moves fastest.
  void next() {
    const std::size_t pairs = ctx_.n * ctx_.n;
    for (std::size_t q = 0; q < pairs; ++q) {
      if (++c_[q] < ctx_.vectors) return;
      c_[q] = 0;
    }
  }

  Code pair(std::size_t i, std::size_t j) const { return c_[i * ctx_.n + j]; }

  // [e_i, y]
  Code left(std::size_t i, Code y) const {
    Code acc = 0;
    const Code* d = &ctx_.digits[y * ctx_.n];
    for (std::size_t m = 0; m < ctx_.n; ++m) {
      if (d[m] != 0) acc = ctx_.add[acc * ctx_.vectors + ctx_.smul[d[m] * ctx_.vectors + c_[i * ctx_.n + m]]];
    }
    return acc;
  }
  // [x, e_k]
  Code right(Code x, std::size_t k) const {
    Code acc = 0;
    const Code* d = &ctx_.digits[x * ctx_.n];
    for (std::size_t m = 0; m < ctx_.n; ++m) {
      if (d[m] != 0) acc = ctx_.add[acc * ctx_.vectors + ctx_.smul[d[m] * ctx_.vectors + c_[m * ctx_.n + k]]];
    }
    return acc;
  }
  Code bracket(Code x, Code y) const {
    Code acc = 0;
    const Code* d = &ctx_.digits[x * ctx_.n];
    for (std::size_t a = 0; a < ctx_.n; ++a) {
      if (d[a] != 0) acc = ctx_.add[acc * ctx_.vectors + ctx_.smul[d[a] * ctx_.vectors + left(a, y)]];
    }
    return acc;
  }

  bool leibniz() const {
    const std::size_t n = ctx_.n;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
          const Code lhs = left(i, pair(j, k));
          const Code rhs = ctx_.add[right(pair(i, j), k) * ctx_.vectors + ctx_.neg[right(pair(i, k), j)]];
          if (lhs != rhs) return false;
        }
      }
    }
    return true;
  }

  bool lie() const {
    for (std::size_t i = 0; i < ctx_.n; ++i) {
      if (pair(i, i) != 0) return false;
      for (std::size_t j = i + 1; j < ctx_.n; ++j) {
        if (pair(i, j) != ctx_.neg[pair(j, i)]) return false;
      }
    }
    return true;
  }

  bool commute(const std::vector<Code>& xs) const {
    for (Code x : xs) {
      for (Code y : xs) {
        if (bracket(x, y) != 0) return false;
      }
    }
    return true;
  }

  bool ideal(const Context::Space& h) const {
    for (Code x : h.basis) {
      for (std::size_t i = 0; i < ctx_.n; ++i) {
        if (!(h.mask >> left(i, x) & 1) || !(h.mask >> right(x, i) & 1)) return false;
      }
    }
    return true;
  }

  // [[h, h], [h, h]] = 0.
  bool metabelian_on(const std::vector<Code>& basis) const {
    std::vector<Code> products;
    products.reserve(basis.size() * basis.size());
    for (Code x : basis) {
      for (Code y : basis) products.push_back(bracket(x, y));
    }
    return commute(products);
  }

  std::vector<Code> brackets() const { return {c_.begin(), c_.begin() + ctx_.n * ctx_.n}; }

 private:
  const Context& ctx_;
  std::array<Code, kMaxN * kMaxN> c_{};
};

void scan(const Context& ctx, std::uint64_t begin, std::uint64_t end, bool ideal_form, CensusCounts& out) {
  if (begin >= end) return;
  Evaluator ev(ctx);
  ev.load(begin);
  const std::size_t count = ctx.spaces.size();
  std::vector<char> abelian(count);
  std::vector<char> ideal(count);
  std::vector<char> h_metabelian(count);
  for (std::uint64_t t = begin; t < end; ev.next(), ++t) {
    ++out.tables;
    if (!ev.leibniz()) continue;
    ++out.leibniz;
    if (ev.lie()) ++out.lie;

    const std::vector<Code> derived = ev.brackets();
    const bool metabelian = ev.commute(derived);
    std::uint64_t derived_mask = 0;
    for (Code c : derived) derived_mask |= std::uint64_t{1} << c;

    bool extension = false;
    for (std::size_t s = 0; s < count; ++s) {
      abelian[s] = ev.commute(ctx.spaces[s].basis);
      if (abelian[s] && (derived_mask & ~ctx.spaces[s].mask) == 0) extension = true;
    }
    bool decomposable = false;
    for (std::size_t a = 0; a < count && !decomposable; ++a) {
      if (!abelian[a]) continue;
      for (std::size_t b = a; b < count; ++b) {
        if (abelian[b] && ctx.sum[a * count + b] == ctx.full) {
          decomposable = true;
          break;
        }
      }
    }

    if (metabelian) ++out.metabelian;
    if (extension) ++out.extension;
    if (extension != metabelian) ++out.extension_mismatches;
    if (decomposable) ++out.decomposable;
    if (decomposable && !metabelian) {
      ++out.decomposable_not_metabelian;
      out.first_violation = std::min(out.first_violation, t);
    }
    if (metabelian && !decomposable) {
      ++out.metabelian_not_decomposable;
      out.first_converse_failure = std::min(out.first_converse_failure, t);
    }

    if (!ideal_form) continue;
    for (std::size_t h = 0; h < count; ++h) {
      ideal[h] = ev.ideal(ctx.spaces[h]);
      h_metabelian[h] = ideal[h] && ev.metabelian_on(ctx.spaces[h].basis);
    }
    for (std::size_t a = 0; a < count; ++a) {
      if (!abelian[a]) continue;
      for (std::size_t b = a; b < count; ++b) {
        if (!abelian[b]) continue;
        for (std::size_t h : ctx.contained[ctx.sum[a * count + b]]) {
          if (!ideal[h]) continue;
          ++out.ideal_form_tuples;
          if (!h_metabelian[h]) {
            ++out.ideal_form_violations;
            out.first_violation = std::min(out.first_violation, t);
          }
        }
      }
    }
  }
}

}  // namespace

CensusCounts census_kernel(std::uint32_t p, std::size_t n, std::uint64_t begin, std::uint64_t end,
                           const CensusKernelOptions& options) {
  if (!is_prime(p)) throw PreconditionViolated("census modulus " + std::to_string(p) + " is not prime");
  if (n == 0 || n > kMaxN || saturating_power(p, n) > kMaxCensusVectors) {
    throw UnsupportedMode("census kernel needs 1 <= n and p^n <= " + std::to_string(kMaxCensusVectors));
  }
  end = std::min(end, census_table_count(p, n));
  const Context ctx(p, n);
  CensusCounts total;
  if (options.execution == Execution::Serial || begin >= end) {
    scan(ctx, begin, end, options.ideal_form, total);
    return total;
  }
  constexpr std::uint64_t kBlock = 1 << 14;
  const std::uint64_t blocks = (end - begin + kBlock - 1) / kBlock;
#pragma omp parallel
  {
    CensusCounts local;
#pragma omp for schedule(dynamic, 1) nowait
    for (std::int64_t b = 0; b < static_cast<std::int64_t>(blocks); ++b) {
      const std::uint64_t lo = begin + static_cast<std::uint64_t>(b) * kBlock;
      scan(ctx, lo, std::min(end, lo + kBlock), options.ideal_form, local);
    }
#pragma omp critical
    total += local;
  }
  return total;
}

}  // namespace leibniz::kernels
