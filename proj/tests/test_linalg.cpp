// test_linalg.cpp
// Bareiss elimination is checked against two slow-but-obvious oracles:
// cofactor expansion for determinants and an exhaustive largest-nonzero-
// minor search for rank.  The two admissibility oracles (rank vs graph)
// are then cross-checked on a random complex sample; the exhaustive
// cross-check over all complexes lives with the sweep tests.

#include <bit>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "xray/checker.hpp"
#include "xray/geometry.hpp"
#include "xray/linalg.hpp"

using namespace xray;

namespace {

using Grid = std::vector<std::vector<std::int64_t>>;

__int128 cofactor_det(const Grid& m) {
  std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  __int128 sum = 0;
  int sign = 1;
  for (std::size_t j = 0; j < n; ++j) {
    Grid sub(n - 1, std::vector<std::int64_t>(n - 1));
    for (std::size_t r = 1; r < n; ++r) {
      std::size_t cc = 0;
      for (std::size_t c = 0; c < n; ++c) {
        if (c == j) continue;
        sub[r - 1][cc++] = m[r][c];
      }
    }
    sum += sign * static_cast<__int128>(m[0][j]) * cofactor_det(sub);
    sign = -sign;
  }
  return sum;
}

Grid to_grid(const ExactMatrix& m) {
  Grid g(m.rows, std::vector<std::int64_t>(m.cols));
  for (int r = 0; r < m.rows; ++r)
    for (int c = 0; c < m.cols; ++c) g[r][c] = m.at(r, c);
  return g;
}

// Rank as the size of the largest square submatrix with nonzero
// determinant.  Exponential, fine for dimensions up to 6.
int minor_rank(const ExactMatrix& m) {
  int bound = std::min(m.rows, m.cols);
  for (int k = bound; k >= 1; --k) {
    for (std::uint32_t rs = 0; rs < (1u << m.rows); ++rs) {
      if (std::popcount(rs) != k) continue;
      for (std::uint32_t cs = 0; cs < (1u << m.cols); ++cs) {
        if (std::popcount(cs) != k) continue;
        Grid sub;
        for (int r = 0; r < m.rows; ++r) {
          if (!((rs >> r) & 1)) continue;
          std::vector<std::int64_t> row;
          for (int c = 0; c < m.cols; ++c)
            if ((cs >> c) & 1) row.push_back(m.at(r, c));
          sub.push_back(row);
        }
        if (cofactor_det(sub) != 0) return k;
      }
    }
  }
  return 0;
}

ExactMatrix random_matrix(std::mt19937_64& rng, int rows, int cols,
                          int span) {
  ExactMatrix m(rows, cols);
  for (auto& e : m.entries)
    e = static_cast<std::int64_t>(rng() % (2 * span + 1)) - span;
  return m;
}

}  // namespace

TEST_CASE("matrix construction and guards") {
  CHECK_THROWS_AS(ExactMatrix(-1, 3), std::invalid_argument);
  auto id = ExactMatrix::identity(5);
  CHECK(determinant_exact(id) == 1);
  CHECK(rank_exact(id) == 5);

  ExactMatrix rect(3, 5);
  CHECK_THROWS_AS(determinant_exact(rect), std::invalid_argument);
  CHECK_THROWS_AS(determinant_exact(ExactMatrix(13, 13)),
                  std::invalid_argument);
  CHECK_THROWS_AS(rank_exact(ExactMatrix(33, 2)), std::invalid_argument);
  CHECK(rank_exact(ExactMatrix(4, 7)) == 0);
  CHECK(determinant_exact(ExactMatrix(0, 0)) == 1);
  CHECK(rank_exact(ExactMatrix(0, 0)) == 0);
}

TEST_CASE("determinant matches cofactor expansion") {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 300; ++trial) {
    int n = 1 + static_cast<int>(rng() % 7);
    auto m = random_matrix(rng, n, n, 9);
    auto want = cofactor_det(to_grid(m));
    CHECK(determinant_exact(m) == static_cast<std::int64_t>(want));
  }
}

TEST_CASE("duplicated rows force a zero determinant") {
  std::mt19937_64 rng(102);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 2 + static_cast<int>(rng() % 6);
    auto m = random_matrix(rng, n, n, 9);
    int src = static_cast<int>(rng() % n);
    int dst = static_cast<int>((src + 1 + rng() % (n - 1)) % n);
    for (int c = 0; c < n; ++c) m.at(dst, c) = m.at(src, c);
    CHECK(determinant_exact(m) == 0);
    CHECK(rank_exact(m) < n);
  }
}

TEST_CASE("rank matches the largest nonzero minor") {
  std::mt19937_64 rng(103);
  for (int trial = 0; trial < 200; ++trial) {
    int rows = 1 + static_cast<int>(rng() % 6);
    int cols = 1 + static_cast<int>(rng() % 6);
    // Small span makes rank-deficient samples common.
    auto m = random_matrix(rng, rows, cols, 2);
    CHECK(rank_exact(m) == minor_rank(m));
  }
}

TEST_CASE("the combined incidence pass agrees with the generic routines") {
  std::mt19937_64 rng(104);
  for (int trial = 0; trial < 500; ++trial) {
    auto c = unrank_complex(rng() % kComplexCount);
    auto m = ExactMatrix::from_incidence(incidence_submatrix(c));
    auto combined = detail::eliminate_incidence8(c.mask());
    CHECK(combined.det == determinant_exact(m));
    CHECK(combined.rank == rank_exact(m));
  }
}

TEST_CASE("rank oracle and graph oracle agree on a random sample") {
  std::mt19937_64 rng(105);
  for (int trial = 0; trial < 3000; ++trial) {
    auto c = unrank_complex(rng() % kComplexCount);
    auto verdict = is_admissible_graph(c);
    CHECK(is_admissible_rank(c) == verdict.admissible);

    // Rank defect equals the number of bipartite components, omitted
    // points counted as singletons.
    auto m = ExactMatrix::from_incidence(incidence_submatrix(c));
    CHECK(rank_exact(m) == kPointCount - verdict.bipartite_components);
  }
}

TEST_CASE("admissible determinants are signed powers of two") {
  std::array<std::pair<PointId, PointId>, 8> pairs{{{0, 1},
                                                    {1, 2},
                                                    {0, 2},
                                                    {2, 3},
                                                    {4, 5},
                                                    {5, 6},
                                                    {4, 6},
                                                    {6, 7}}};
  auto two_triangles = Complex::from_point_pairs(pairs);
  auto det =
      determinant_exact(ExactMatrix::from_incidence(incidence_submatrix(
          two_triangles)));
  CHECK(std::abs(det) == 4);  // 2^(number of components)

  std::array<std::pair<PointId, PointId>, 8> cyc{{{0, 1},
                                                  {1, 2},
                                                  {2, 3},
                                                  {3, 4},
                                                  {4, 5},
                                                  {5, 6},
                                                  {6, 7},
                                                  {0, 7}}};
  auto eight_cycle = Complex::from_point_pairs(cyc);
  CHECK(is_admissible_rank(eight_cycle) == false);
  CHECK(detail::eliminate_incidence8(eight_cycle.mask()).rank == 7);

  std::mt19937_64 rng(106);
  int seen = 0;
  while (seen < 200) {
    auto c = unrank_complex(rng() % kComplexCount);
    auto r = detail::eliminate_incidence8(c.mask());
    if (r.det == 0) continue;
    ++seen;
    auto comps = components(c);
    CHECK(std::abs(r.det) == (std::int64_t{1} << comps.size()));
  }
}
