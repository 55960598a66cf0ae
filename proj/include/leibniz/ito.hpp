#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "leibniz/algebra.hpp"
#include "leibniz/kernels/census.hpp"
#include "leibniz/kernels/execution.hpp"
#include "leibniz/subspace.hpp"

namespace leibniz {

/// Two abelian subalgebras and the dimension of their sum.
struct DecompositionWitness {
  Subspace a;
  Subspace b;
  std::size_t sum_dim = 0;
  bool spans_g = false;
};

struct AbelianPairOptions {
  std::uint64_t budget = kDefaultEnumerationBudget;
  /// Spanning pairs kept in `witnesses`; all of them are still counted.
  std::size_t max_listed = std::numeric_limits<std::size_t>::max();
};

struct AbelianPairReport {
  /// Abelian subspaces in enumeration order.
  std::vector<Subspace> abelian;
  /// Unordered pairs {A, B} (A may equal B) whose sum was computed. Pairs whose
  /// dimensions cannot beat the running maximum or span g are skipped.
  std::uint64_t pairs_examined = 0;
  std::size_t max_abelian_sum_dim = 0;
  /// First pair reaching max_abelian_sum_dim.
  std::optional<DecompositionWitness> max_witness;
  std::uint64_t spanning_pairs = 0;
  std::vector<DecompositionWitness> witnesses;
};

/// Exhaustive search over abelian subalgebras of g (abelian subspaces are automatically
/// subalgebras). Throws UnsupportedMode over Q; supply a witness to
/// verify_ito_corollary instead.
AbelianPairReport find_abelian_pairs(const LeibnizAlgebra& g, const AbelianPairOptions& options = {});

/// Revalidates the witness (PreconditionViolated naming the failed condition), then
/// requires g to be metabelian. A non-metabelian g throws TheoremViolation.
bool verify_ito_corollary(const LeibnizAlgebra& g, const DecompositionWitness& w);

/// a, b abelian subalgebras, h a two-sided ideal inside a + b (all revalidated);
/// requires [h, h] to be abelian, else TheoremViolation.
bool verify_ito_ideal(const LeibnizAlgebra& g, const Subspace& a, const Subspace& b, const Subspace& h);

enum class ItoMode { ExhaustiveFiniteField, SuppliedWitness };

struct ItoReport {
  ItoMode mode = ItoMode::ExhaustiveFiniteField;
  std::uint64_t decompositions_found = 0;
  std::vector<std::string> ito_violations;
  std::size_t max_abelian_sum_dim = 0;
  bool metabelian = false;
  AbelianPairReport pairs;
};

/// find_abelian_pairs followed by verify_ito_corollary on every listed spanning pair.
/// A failed verification is recorded in ito_violations rather than thrown.
ItoReport run_ito_exhaustive(const LeibnizAlgebra& g, const AbelianPairOptions& options = {});

/// Largest table count the census accepts when large runs are opted into.
inline constexpr std::uint64_t kLargeCensusBudget = std::uint64_t{1} << 27;

struct CensusOptions {
  std::uint64_t budget = kDefaultEnumerationBudget;
  /// Raises the budget to kLargeCensusBudget (dimension 3 over GF(2)).
  bool allow_large = false;
  kernels::Execution execution = kernels::Execution::Parallel;
  /// Also check every (A, B, h) tuple.
  bool ideal_form = false;
};

struct CensusReport {
  FieldSpec field;
  std::size_t dim = 0;
  bool ideal_form = false;
  kernels::CensusCounts counts;
};

/// Every structure-constant table of dimension `dim` over GF(p). Throws BudgetExceeded
/// before scanning when p^(dim^3) is over budget and TheoremViolation if a decomposable
/// table fails to be metabelian, or an ideal inside A + B has non-abelian [h, h].
CensusReport census_small_leibniz(FieldSpec field, std::size_t dim, const CensusOptions& options = {});

/// The same census computed table by table with the generic exact routines
/// (is_leibniz, find_abelian_pairs, quotient, ...). Slow; a cross-check for the kernel.
kernels::CensusCounts census_reference(FieldSpec field, std::size_t dim, bool ideal_form,
                                       std::uint64_t budget = 100'000);

/// Outcome of the rank test on abelian subalgebras of the five-dimensional example.
struct RankCertificate {
  bool holds = true;
  std::uint64_t abelian_subalgebras = 0;
  std::size_t max_abelian_dim = 0;
  /// First abelian subalgebra whose basis has rank > 1 on the first three coordinates.
  std::optional<Subspace> failure;
};

/// For the five-dimensional algebra [e1,e2] = e3, [e1,e3] = e4, [e2,e3] = e5 over a
/// prime field: every abelian subalgebra's basis has rank <= 1 on coordinates 1..3.
/// Throws PreconditionViolated when g is not that algebra.
RankCertificate commuting_rank_certificate(const LeibnizAlgebra& g,
                                         std::uint64_t budget = kDefaultEnumerationBudget);

}  // namespace leibniz
