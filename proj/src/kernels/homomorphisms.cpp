#include "leibniz/kernels/homomorphisms.hpp"

#include <array>
#include <string>

#if defined(_OPENMP)
#include <omp.h>
#endif

#include "leibniz/errors.hpp"

namespace leibniz::kernels {

int max_threads() {
#if defined(_OPENMP)
  return omp_get_max_threads();
#else
  return 1;
#endif
}

DenseTable to_dense(const AlgebraTable& g) {
  if (!g.field().is_finite()) throw UnsupportedMode("dense kernels need a prime field");
  if (g.dim() > kMaxDenseDim) throw UnsupportedMode("dense kernels support dimension at most 8");
  DenseTable t;
  t.p = g.field().characteristic();
  t.n = g.dim();
  t.c.reserve(g.coefficients().size());
  for (const auto& s : g.coefficients()) t.c.push_back(static_cast<std::uint32_t>(s.residue_value()));
  return t;
}

std::uint64_t encode_map(const Matrix& phi) {
  if (!phi.field().is_finite()) throw UnsupportedMode("map codes need a prime field");
  const std::uint64_t p = phi.field().characteristic();
  std::uint64_t code = 0;
  for (std::size_t r = 0; r < phi.rows(); ++r) {
    for (std::size_t c = 0; c < phi.cols(); ++c) code = code * p + phi(r, c).residue_value();
  }
  return code;
}

Matrix decode_map(FieldSpec field, std::size_t rows, std::size_t cols, std::uint64_t code) {
  const std::uint64_t p = field.characteristic();
  Matrix phi(field, rows, cols);
  for (std::size_t idx = rows * cols; idx-- > 0;) {
    phi.set(idx / cols, idx % cols, Scalar::residue(field, code % p));
    code /= p;
  }
  return phi;
}

namespace {

using Entries = std::array<std::uint32_t, kMaxDenseDim * kMaxDenseDim>;

bool preserves_bracket(const DenseTable& src, const DenseTable& dst, const Entries& phi) {
  const std::size_t n = src.n;
  const std::size_t m = dst.n;
  const std::uint64_t p = src.p;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const std::uint32_t* cij = &src.c[(i * n + j) * n];
      for (std::size_t r = 0; r < m; ++r) {
        std::uint64_t lhs = 0;
        for (std::size_t k = 0; k < n; ++k) lhs += static_cast<std::uint64_t>(cij[k]) * phi[r * n + k];
        std::uint64_t rhs = 0;
        for (std::size_t a = 0; a < m; ++a) {
          const std::uint64_t xa = phi[a * n + i];
          if (xa == 0) continue;
          for (std::size_t b = 0; b < m; ++b) {
            const std::uint64_t yb = phi[b * n + j];
            if (yb == 0) continue;
            rhs += xa * yb % p * dst.c[(a * m + b) * m + r];
          }
        }
        if (lhs % p != rhs % p) return false;
      }
    }
  }
  return true;
}

bool invertible(const Entries& phi, std::size_t n, std::uint32_t p) {
  std::array<std::uint64_t, kMaxDenseDim * kMaxDenseDim> a{};
  for (std::size_t i = 0; i < n * n; ++i) a[i] = phi[i];
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot * n + col] == 0) ++pivot;
    if (pivot == n) return false;
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a[pivot * n + c], a[col * n + c]);
    }
    // Inverse of the pivot by Fermat.
    std::uint64_t inv = 1;
    std::uint64_t base = a[col * n + col];
    for (std::uint64_t e = p - 2; e > 0; e >>= 1) {
      if (e & 1) inv = inv * base % p;
      base = base * base % p;
    }
    for (std::size_t r = col + 1; r < n; ++r) {
      const std::uint64_t factor = a[r * n + col] * inv % p;
      if (factor == 0) continue;
      for (std::size_t c = col; c < n; ++c) a[r * n + c] = (a[r * n + c] + (p - factor) * a[col * n + c]) % p;
    }
  }
  return true;
}

void scan_block(const DenseTable& src, const DenseTable& dst, std::uint64_t begin, std::uint64_t end,
                bool invertible_only, std::vector<std::uint64_t>& out) {
  const std::size_t entries = src.n * dst.n;
  Entries phi{};
  std::uint64_t code = begin;
  for (std::size_t idx = entries; idx-- > 0;) {
    phi[idx] = static_cast<std::uint32_t>(code % src.p);
    code /= src.p;
  }
  for (std::uint64_t current = begin; current < end; ++current) {
    if ((!invertible_only || invertible(phi, src.n, src.p)) && preserves_bracket(src, dst, phi)) {
      out.push_back(current);
    }
    for (std::size_t idx = entries; idx-- > 0;) {
      if (++phi[idx] < src.p) break;
      phi[idx] = 0;
    }
  }
}

}  // namespace

std::vector<std::uint64_t> homomorphism_codes(const DenseTable& src, const DenseTable& dst, Execution execution,
                                              std::uint64_t budget, bool invertible_only) {
  if (src.p != dst.p) throw FieldMismatch("homomorphism search across different prime fields");
  if (invertible_only && src.n != dst.n) return {};
  const std::uint64_t total = saturating_power(src.p, src.n * dst.n);
  if (total > budget) {
    throw BudgetExceeded("brute-force map enumeration visits " + std::to_string(total) +
                         " candidates, over the budget of " + std::to_string(budget));
  }
  std::vector<std::uint64_t> result;
  if (execution == Execution::Serial) {
    scan_block(src, dst, 0, total, invertible_only, result);
    return result;
  }
  constexpr std::uint64_t kBlock = 4096;
  const std::uint64_t blocks = (total + kBlock - 1) / kBlock;
  std::vector<std::vector<std::uint64_t>> per_block(blocks);
#pragma omp parallel for schedule(dynamic, 4)
  for (std::int64_t b = 0; b < static_cast<std::int64_t>(blocks); ++b) {
    const std::uint64_t begin = static_cast<std::uint64_t>(b) * kBlock;
    const std::uint64_t end = std::min(total, begin + kBlock);
    scan_block(src, dst, begin, end, invertible_only, per_block[static_cast<std::size_t>(b)]);
  }
  for (auto& block : per_block) result.insert(result.end(), block.begin(), block.end());
  return result;
}

}  // namespace leibniz::kernels
