#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>

#include "leibniz/algebra.hpp"
#include "leibniz/kernels/execution.hpp"

namespace leibniz::kernels {

inline constexpr std::uint64_t kNoTable = std::numeric_limits<std::uint64_t>::max();

/// Tallies over a range of structure-constant tables.
///
/// Table t assigns c[i][j][k] the base-p digit of t at position (i*n + j)*n + k,
/// position 0 least significant. "decomposable" means a pair of abelian subspaces
/// spans g; "extension" means some abelian subspace contains every bracket, found by
/// search rather than read off g'.
struct CensusCounts {
  std::uint64_t tables = 0;
  std::uint64_t leibniz = 0;
  std::uint64_t lie = 0;
  std::uint64_t metabelian = 0;
  std::uint64_t decomposable = 0;
  std::uint64_t extension = 0;
  std::uint64_t decomposable_not_metabelian = 0;
  std::uint64_t metabelian_not_decomposable = 0;
  std::uint64_t extension_mismatches = 0;
  /// (A, B, h) with A <= B abelian (by enumeration index) and h a two-sided ideal in A + B.
  std::uint64_t ideal_form_tuples = 0;
  std::uint64_t ideal_form_violations = 0;
  std::uint64_t first_converse_failure = kNoTable;
  std::uint64_t first_violation = kNoTable;

  CensusCounts& operator+=(const CensusCounts& other);
  friend bool operator==(const CensusCounts&, const CensusCounts&) = default;
};

struct CensusKernelOptions {
  Execution execution = Execution::Parallel;
  bool ideal_form = false;
};

/// Largest p^n the kernel handles (membership sets are 64-bit masks).
inline constexpr std::uint64_t kMaxCensusVectors = 64;

/// p^(n^3), saturating.
std::uint64_t census_table_count(std::uint32_t p, std::size_t n);

/// The table with index `t` in the order above.
AlgebraTable census_table(FieldSpec field, std::size_t n, std::uint64_t t);

/// Scans tables [begin, end). Throws UnsupportedMode when p^n exceeds kMaxCensusVectors.
CensusCounts census_kernel(std::uint32_t p, std::size_t n, std::uint64_t begin, std::uint64_t end,
                           const CensusKernelOptions& options = {});

}  // namespace leibniz::kernels
