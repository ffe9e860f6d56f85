// linalg.cpp
// Bareiss elimination: the classical fraction-free schedule
//   a[r][c] <- (a[r][c]*pivot - a[r][col]*a[p][c]) / previous_pivot
// keeps every intermediate an exact minor of the input, so the
// divisions never truncate.  Rank-deficient columns are skipped, which
// preserves that property on the surviving column set.

#include "xray/linalg.hpp"

#include <bit>
#include <cstdlib>
#include <stdexcept>

namespace xray {

namespace {

using Wide = __int128;

// Intermediates are capped so that products of two of them still fit a
// signed 128-bit value with room to spare.
constexpr Wide kEntryCap = Wide{1} << 62;

struct WideElim {
  int rank;
  Wide det;
};

WideElim eliminate_wide(std::vector<Wide>& a, int rows, int cols) {
  int rank = 0;
  int sign = 1;
  Wide prev = 1;
  Wide last_pivot = 1;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int p = -1;
    for (int r = rank; r < rows; ++r) {
      if (a[r * cols + col] != 0) {
        p = r;
        break;
      }
    }
    if (p < 0) continue;
    if (p != rank) {
      for (int c = 0; c < cols; ++c)
        std::swap(a[p * cols + c], a[rank * cols + c]);
      sign = -sign;
    }
    Wide pivot = a[rank * cols + col];
    for (int r = rank + 1; r < rows; ++r) {
      Wide factor = a[r * cols + col];
      for (int c = col + 1; c < cols; ++c) {
        Wide t = (a[r * cols + c] * pivot - factor * a[rank * cols + c]) / prev;
        if (t > kEntryCap || t < -kEntryCap)
          throw std::overflow_error(
              "exact elimination: intermediate minor exceeds 2^62");
        a[r * cols + c] = t;
      }
      a[r * cols + col] = 0;
    }
    prev = pivot;
    last_pivot = pivot;
    ++rank;
  }
  Wide det = 0;
  if (rows == cols && rank == rows)
    det = sign > 0 ? last_pivot : -last_pivot;
  return {rank, det};
}

std::vector<Wide> widen(const ExactMatrix& m) {
  std::vector<Wide> a(m.entries.size());
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = m.entries[i];
  return a;
}

}  // namespace

ExactMatrix::ExactMatrix(int r, int c) : rows(r), cols(c) {
  if (r < 0 || c < 0)
    throw std::invalid_argument("ExactMatrix: negative dimension");
  entries.assign(static_cast<std::size_t>(r) * c, 0);
}

ExactMatrix ExactMatrix::from_incidence(const IncidenceMatrix& m) {
  ExactMatrix out(kComplexSize, kPointCount);
  for (int r = 0; r < kComplexSize; ++r)
    for (int c = 0; c < kPointCount; ++c) out.at(r, c) = m.entries[r][c];
  return out;
}

ExactMatrix ExactMatrix::identity(int n) {
  ExactMatrix out(n, n);
  for (int i = 0; i < n; ++i) out.at(i, i) = 1;
  return out;
}

std::int64_t determinant_exact(const ExactMatrix& m) {
  if (m.rows != m.cols)
    throw std::invalid_argument("determinant_exact: matrix must be square");
  if (m.rows > 12)
    throw std::invalid_argument("determinant_exact: dimension capped at 12");
  if (m.rows == 0) return 1;  // empty product
  auto a = widen(m);
  Wide det = eliminate_wide(a, m.rows, m.cols).det;
  if (det > kEntryCap || det < -kEntryCap)
    throw std::overflow_error("determinant_exact: result exceeds 2^62");
  return static_cast<std::int64_t>(det);
}

int rank_exact(const ExactMatrix& m) {
  if (m.rows > 32 || m.cols > 32)
    throw std::invalid_argument("rank_exact: dimensions capped at 32");
  if (m.rows == 0 || m.cols == 0) return 0;
  auto a = widen(m);
  return eliminate_wide(a, m.rows, m.cols).rank;
}

bool is_admissible_rank(const Complex& c) {
  return detail::eliminate_incidence8(c.mask()).det != 0;
}

namespace detail {

ElimResult eliminate_incidence8(std::uint32_t line_mask) noexcept {
  // Minors of an 8x8 0/1 matrix stay below 100 in absolute value, so
  // the whole pass runs in plain 64-bit arithmetic.
  std::int64_t a[64] = {};
  int row = 0;
  while (line_mask) {
    int l = std::countr_zero(line_mask);
    line_mask &= line_mask - 1;
    auto [x, y] = kLines.endpoints[l];
    a[row * 8 + x] = 1;
    a[row * 8 + y] = 1;
    ++row;
  }

  int rank = 0;
  int sign = 1;
  std::int64_t prev = 1;
  std::int64_t last_pivot = 1;
  for (int col = 0; col < 8 && rank < 8; ++col) {
    int p = -1;
    for (int r = rank; r < 8; ++r) {
      if (a[r * 8 + col] != 0) {
        p = r;
        break;
      }
    }
    if (p < 0) continue;
    if (p != rank) {
      for (int c = col; c < 8; ++c) std::swap(a[p * 8 + c], a[rank * 8 + c]);
      sign = -sign;
    }
    std::int64_t pivot = a[rank * 8 + col];
    for (int r = rank + 1; r < 8; ++r) {
      std::int64_t factor = a[r * 8 + col];
      for (int c = col + 1; c < 8; ++c)
        a[r * 8 + c] = (a[r * 8 + c] * pivot - factor * a[rank * 8 + c]) / prev;
      a[r * 8 + col] = 0;
    }
    prev = pivot;
    last_pivot = pivot;
    ++rank;
  }
  std::int64_t det = rank == 8 ? sign * last_pivot : 0;
  return {rank, det};
}

}  // namespace detail

}  // namespace xray
