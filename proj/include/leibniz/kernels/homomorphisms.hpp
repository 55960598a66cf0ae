#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "leibniz/algebra.hpp"
#include "leibniz/kernels/execution.hpp"
#include "leibniz/matrix.hpp"

namespace leibniz::kernels {

/// Structure constants over GF(p) as plain residues.
struct DenseTable {
  std::uint32_t p = 2;
  std::size_t n = 0;
  std::vector<std::uint32_t> c;  ///< index (i*n + j)*n + k
};

/// Throws UnsupportedMode over Q.
DenseTable to_dense(const AlgebraTable& g);

/// Largest dimension the dense kernels accept.
inline constexpr std::size_t kMaxDenseDim = 8;

/// Brute force over every linear map src -> dst (dst.n x src.n matrices): returns the
/// codes of those preserving the bracket, in increasing order. A code is the matrix
/// read row-major as a base-p number, first entry most significant. Throws
/// BudgetExceeded when p^(n*m) exceeds `budget`.
std::vector<std::uint64_t> homomorphism_codes(const DenseTable& src, const DenseTable& dst, Execution execution,
                                              std::uint64_t budget, bool invertible_only = false);

std::uint64_t encode_map(const Matrix& phi);
Matrix decode_map(FieldSpec field, std::size_t rows, std::size_t cols, std::uint64_t code);

}  // namespace leibniz::kernels
