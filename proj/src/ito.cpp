#include "leibniz/ito.hpp"

#include <string>

#include "leibniz/builtins.hpp"
#include "leibniz/errors.hpp"

namespace leibniz {

namespace {

std::string describe(const Subspace& s) {
  std::string out = "span{";
  const auto basis = s.basis_vectors();
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (i > 0) out += ", ";
    out += to_string(basis[i]);
  }
  return out + "}";
}

void require_finite(const AlgebraTable& g, const char* what) {
  if (!g.field().is_finite()) {
    throw UnsupportedMode(std::string(what) + " enumerates subspaces and needs a prime field; over Q supply a witness");
  }
}

}  // namespace

AbelianPairReport find_abelian_pairs(const LeibnizAlgebra& g, const AbelianPairOptions& options) {
  require_finite(g, "abelian pair search");
  AbelianPairReport report;
  for_each_subspace(
      g.field(), g.dim(),
      [&](const Subspace& s) {
        if (is_abelian_subalgebra(g, s)) report.abelian.push_back(s);
      },
      options.budget);

  const std::size_t n = g.dim();
  const auto& abelian = report.abelian;
  for (std::size_t i = 0; i < abelian.size(); ++i) {
    for (std::size_t j = i; j < abelian.size(); ++j) {
      const std::size_t bound = abelian[i].dim() + abelian[j].dim();
      // The zero subspace is always abelian, so the first pair always gets examined.
      if (report.pairs_examined > 0 && bound <= report.max_abelian_sum_dim && bound < n) continue;
      ++report.pairs_examined;
      const std::size_t sum_dim = subspace_sum(abelian[i], abelian[j]).dim();
      const bool spans = sum_dim == n;
      if (!report.max_witness || sum_dim > report.max_abelian_sum_dim) {
        report.max_abelian_sum_dim = sum_dim;
        report.max_witness = DecompositionWitness{abelian[i], abelian[j], sum_dim, spans};
      }
      if (spans) {
        ++report.spanning_pairs;
        if (report.witnesses.size() < options.max_listed) {
          report.witnesses.push_back({abelian[i], abelian[j], sum_dim, spans});
        }
      }
    }
  }
  return report;
}

bool verify_ito_corollary(const LeibnizAlgebra& g, const DecompositionWitness& w) {
  if (!is_abelian_subalgebra(g, w.a)) throw PreconditionViolated("witness rejected: A = " + describe(w.a) + " is not abelian");
  if (!is_abelian_subalgebra(g, w.b)) throw PreconditionViolated("witness rejected: B = " + describe(w.b) + " is not abelian");
  const std::size_t sum_dim = subspace_sum(w.a, w.b).dim();
  if (sum_dim != w.sum_dim) {
    throw PreconditionViolated("witness rejected: dim(A + B) is " + std::to_string(sum_dim) + ", not " +
                               std::to_string(w.sum_dim));
  }
  if (!w.spans_g || sum_dim != g.dim()) throw PreconditionViolated("witness rejected: A + B does not span g");
  if (const auto bad = metabelian_witness(g)) {
    throw TheoremViolation("g = A + B with A = " + describe(w.a) + ", B = " + describe(w.b) +
                           " abelian, yet [[e" + std::to_string(bad->i + 1) + ", e" + std::to_string(bad->j + 1) +
                           "], [e" + std::to_string(bad->k + 1) + ", e" + std::to_string(bad->l + 1) +
                           "]] = " + to_string(bad->value));
  }
  return true;
}

bool verify_ito_ideal(const LeibnizAlgebra& g, const Subspace& a, const Subspace& b, const Subspace& h) {
  if (!is_abelian_subalgebra(g, a)) throw PreconditionViolated("A = " + describe(a) + " is not an abelian subalgebra");
  if (!is_abelian_subalgebra(g, b)) throw PreconditionViolated("B = " + describe(b) + " is not an abelian subalgebra");
  if (!is_two_sided_ideal(g, h)) throw PreconditionViolated("h = " + describe(h) + " is not a two-sided ideal");
  if (!subspace_sum(a, b).contains(h)) throw PreconditionViolated("h = " + describe(h) + " is not contained in A + B");
  const Subspace hh = bracket_span(g, h, h);
  const Subspace top = bracket_span(g, hh, hh);
  if (top.dim() != 0) {
    throw TheoremViolation("ideal h = " + describe(h) + " inside A + B has [[h, h], [h, h]] = " + describe(top));
  }
  return true;
}

ItoReport run_ito_exhaustive(const LeibnizAlgebra& g, const AbelianPairOptions& options) {
  ItoReport report;
  report.mode = ItoMode::ExhaustiveFiniteField;
  report.pairs = find_abelian_pairs(g, options);
  report.decompositions_found = report.pairs.spanning_pairs;
  report.max_abelian_sum_dim = report.pairs.max_abelian_sum_dim;
  report.metabelian = is_metabelian(g);
  for (const auto& w : report.pairs.witnesses) {
    try {
      verify_ito_corollary(g, w);
    } catch (const TheoremViolation& e) {
      report.ito_violations.push_back(e.what());
    }
  }
  return report;
}

CensusReport census_small_leibniz(FieldSpec field, std::size_t dim, const CensusOptions& options) {
  if (!field.is_finite()) throw UnsupportedMode("the census enumerates tables over a prime field");
  const std::uint64_t tables = kernels::census_table_count(field.characteristic(), dim);
  const std::uint64_t budget = options.allow_large ? std::max(options.budget, kLargeCensusBudget) : options.budget;
  if (tables > budget) {
    throw BudgetExceeded("census over " + field.to_string() + " in dimension " + std::to_string(dim) + " has " +
                         std::to_string(tables) + " tables, over the budget of " + std::to_string(budget) +
                         (options.allow_large ? "" : "; large runs need an explicit opt-in"));
  }
  CensusReport report;
  report.field = field;
  report.dim = dim;
  report.ideal_form = options.ideal_form;
  report.counts = kernels::census_kernel(field.characteristic(), dim, 0, tables,
                                         {options.execution, options.ideal_form});
  const auto& c = report.counts;
  if (c.decomposable_not_metabelian > 0 || c.ideal_form_violations > 0) {
    throw TheoremViolation("census over " + field.to_string() + " in dimension " + std::to_string(dim) + ": " +
                           std::to_string(c.decomposable_not_metabelian) +
                           " decomposable tables are not metabelian, " + std::to_string(c.ideal_form_violations) +
                           " ideal tuples fail; first offending table index " + std::to_string(c.first_violation));
  }
  return report;
}

kernels::CensusCounts census_reference(FieldSpec field, std::size_t dim, bool ideal_form, std::uint64_t budget) {
  if (!field.is_finite()) throw UnsupportedMode("the census enumerates tables over a prime field");
  const std::uint64_t tables = kernels::census_table_count(field.characteristic(), dim);
  if (tables > budget) throw BudgetExceeded("reference census over budget");
  const std::vector<Subspace> spaces = enumerate_subspaces(field, dim);
  const std::size_t count = spaces.size();

  kernels::CensusCounts out;
  for (std::uint64_t t = 0; t < tables; ++t) {
    ++out.tables;
    AlgebraTable table = kernels::census_table(field, dim, t);
    if (!is_leibniz(table).holds) continue;
    const LeibnizAlgebra g = LeibnizAlgebra::checked(std::move(table));
    ++out.leibniz;
    if (is_lie(g)) ++out.lie;
    const bool metabelian = is_metabelian(g);
    const bool extension = is_extension_of_abelian_by_abelian(g);
    const bool decomposable = find_abelian_pairs(g).spanning_pairs > 0;
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

    std::vector<char> abelian(count);
    std::vector<char> ideal(count);
    for (std::size_t s = 0; s < count; ++s) {
      abelian[s] = is_abelian_subalgebra(g, spaces[s]);
      ideal[s] = is_two_sided_ideal(g, spaces[s]);
    }
    for (std::size_t a = 0; a < count; ++a) {
      if (!abelian[a]) continue;
      for (std::size_t b = a; b < count; ++b) {
        if (!abelian[b]) continue;
        const Subspace sum = subspace_sum(spaces[a], spaces[b]);
        for (std::size_t h = 0; h < count; ++h) {
          if (!ideal[h] || !sum.contains(spaces[h])) continue;
          ++out.ideal_form_tuples;
          const Subspace hh = bracket_span(g, spaces[h], spaces[h]);
          if (bracket_span(g, hh, hh).dim() != 0) {
            ++out.ideal_form_violations;
            out.first_violation = std::min(out.first_violation, t);
          }
        }
      }
    }
  }
  return out;
}

RankCertificate commuting_rank_certificate(const LeibnizAlgebra& g, std::uint64_t budget) {
  require_finite(g, "the rank certificate");
  if (g.dim() != 5 || !(static_cast<const AlgebraTable&>(g) == builtin("ex5dim", g.field()).table)) {
    throw PreconditionViolated("the rank certificate applies only to the five-dimensional algebra "
                               "[e1,e2] = e3, [e1,e3] = e4, [e2,e3] = e5");
  }
  RankCertificate cert;
  for_each_subspace(
      g.field(), g.dim(),
      [&](const Subspace& s) {
        if (!is_abelian_subalgebra(g, s)) return;
        ++cert.abelian_subalgebras;
        cert.max_abelian_dim = std::max(cert.max_abelian_dim, s.dim());
        Matrix head(g.field(), s.dim(), 3);
        for (std::size_t r = 0; r < s.dim(); ++r) {
          for (std::size_t c = 0; c < 3; ++c) head.set(r, c, s.basis()(r, c));
        }
        if (rank(head) > 1 && cert.holds) {
          cert.holds = false;
          cert.failure = s;
        }
      },
      budget);
  return cert;
}

}  // namespace leibniz
