#pragma once
// linalg.hpp
// Exact integer determinant and rank via fraction-free (Bareiss)
// elimination.  This is the algebraic side of the admissibility test:
// a complex is admissible iff its 8x8 incidence submatrix is
// nonsingular over the rationals.

#include <cstdint>
#include <vector>

#include "xray/geometry.hpp"

namespace xray {

// Dense row-major integer matrix.  Sized for incidence work, not for
// general numerics.
struct ExactMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<std::int64_t> entries;

  ExactMatrix() = default;
  ExactMatrix(int r, int c);  // zero-filled; throws on negative dims

  static ExactMatrix from_incidence(const IncidenceMatrix& m);
  static ExactMatrix identity(int n);

  std::int64_t& at(int r, int c) { return entries[r * cols + c]; }
  std::int64_t at(int r, int c) const { return entries[r * cols + c]; }
};

// Exact determinant.  Requires a square matrix of dimension <= 12;
// throws std::invalid_argument otherwise.  Intermediate values are
// minors of the input; if one ever leaves the range where exactness is
// guaranteed (impossible for incidence-scale entries), the function
// throws std::overflow_error rather than return a wrong answer.
std::int64_t determinant_exact(const ExactMatrix& m);

// Exact rank over the rationals, dimensions up to 32.  Same overflow
// policy as determinant_exact.
int rank_exact(const ExactMatrix& m);

// Algebraic admissibility oracle.
bool is_admissible_rank(const Complex& c);

namespace detail {

struct ElimResult {
  int rank;
  std::int64_t det;  // 0 when singular
};

// One Bareiss pass over the 8x8 incidence submatrix of the given line
// mask, producing rank and determinant together.  Entries along the way
// are minors of a 0/1 matrix, so plain 64-bit arithmetic is exact.
ElimResult eliminate_incidence8(std::uint32_t line_mask) noexcept;

}  // namespace detail

}  // namespace xray
