// test_transform.cpp
// Rational arithmetic gets randomized algebraic identities plus
// cross-multiplication checks; the transform gets exact round trips on
// admissible complexes and kernel properties on inadmissible ones.

#include <cstdint>
#include <numeric>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "xray/checker.hpp"
#include "xray/geometry.hpp"
#include "xray/linalg.hpp"
#include "xray/rational.hpp"
#include "xray/transform.hpp"

using namespace xray;

namespace {

Rational rnd_rational(std::mt19937_64& rng) {
  auto n = static_cast<std::int64_t>(rng() % 41) - 20;
  auto d = static_cast<std::int64_t>(rng() % 20) + 1;
  return {n, d};
}

PointFunction rnd_function(std::mt19937_64& rng, bool integers) {
  PointFunction f;
  for (auto& x : f)
    x = integers ? Rational(static_cast<std::int64_t>(rng() % 201) - 100)
                 : rnd_rational(rng);
  return f;
}

Complex rnd_complex(std::mt19937_64& rng) {
  return unrank_complex(rng() % kComplexCount);
}

}  // namespace

TEST_CASE("rational normalization and accessors") {
  CHECK(Rational().num() == 0);
  CHECK(Rational().den() == 1);
  CHECK(Rational(6, -4) == Rational(-3, 2));
  CHECK(Rational(6, -4).to_string() == "-3/2");
  CHECK(Rational(-8, -2).to_string() == "4");
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(0, -7).den() == 1);
  CHECK(Rational(5).is_integer());
  CHECK(!Rational(5, 3).is_integer());
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
  CHECK_THROWS_AS(Rational(3, 4) / Rational(0), std::domain_error);
}

TEST_CASE("rational arithmetic identities") {
  std::mt19937_64 rng(991);
  for (int trial = 0; trial < 500; ++trial) {
    Rational a = rnd_rational(rng), b = rnd_rational(rng),
             c = rnd_rational(rng);
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == Rational(0));
    CHECK(a + (-a) == Rational(0));
    if (!b.is_zero()) CHECK((a / b) * b == a);

    // Cross-multiplied ground truth for the sum.
    Rational s = a + b;
    __int128 lhs = static_cast<__int128>(s.num()) * a.den() * b.den();
    __int128 rhs = (static_cast<__int128>(a.num()) * b.den() +
                    static_cast<__int128>(b.num()) * a.den()) *
                   s.den();
    CHECK(lhs == rhs);
    CHECK(std::gcd(s.num(), s.den()) == 1);
    CHECK(s.den() > 0);

    CHECK((a < b) == (static_cast<__int128>(a.num()) * b.den() <
                      static_cast<__int128>(b.num()) * a.den()));
  }
}

TEST_CASE("rational overflow throws instead of wrapping") {
  Rational big(std::int64_t{1} << 62);
  CHECK_THROWS_AS(big * big, std::overflow_error);
  // 128-bit intermediates keep legitimate results exact.
  Rational a(std::int64_t{1} << 40, 3);
  Rational b(1, (std::int64_t{1} << 20) + 1);
  CHECK((a * b).num() == (std::int64_t{1} << 40));
  CHECK((a * b).den() == 3 * ((std::int64_t{1} << 20) + 1));
}

TEST_CASE("forward sums follow ascending line order") {
  std::array<std::pair<PointId, PointId>, 8> pairs{{{0, 1},
                                                    {1, 2},
                                                    {0, 2},
                                                    {2, 3},
                                                    {4, 5},
                                                    {5, 6},
                                                    {4, 6},
                                                    {6, 7}}};
  auto c = Complex::from_point_pairs(pairs);
  PointFunction f{1, 2, 3, 4, 5, 6, 7, 8};
  auto s = xray_forward(f, c);
  // Lines sort to {0,1},{0,2},{1,2},{2,3},{4,5},{4,6},{5,6},{6,7}.
  CHECK(s.sums[0] == Rational(3));
  CHECK(s.sums[1] == Rational(4));
  CHECK(s.sums[2] == Rational(5));
  CHECK(s.sums[3] == Rational(7));
  CHECK(s.sums[4] == Rational(11));
  CHECK(s.sums[5] == Rational(12));
  CHECK(s.sums[6] == Rational(13));
  CHECK(s.sums[7] == Rational(15));

  PointFunction ones;
  ones.fill(Rational(1));
  for (const auto& sum : xray_forward(ones, c).sums)
    CHECK(sum == Rational(2));
}

TEST_CASE("reconstruction inverts the forward map exactly") {
  std::mt19937_64 rng(992);
  int done = 0;
  while (done < 150) {
    auto c = rnd_complex(rng);
    if (!is_admissible_rank(c)) continue;
    ++done;
    auto f = rnd_function(rng, done % 2 == 0);
    auto got = reconstruct(xray_forward(f, c));
    CHECK(got == f);
  }
}

TEST_CASE("a rational fixture reconstructs bit for bit") {
  std::array<std::pair<PointId, PointId>, 8> pairs{{{0, 1},
                                                    {1, 2},
                                                    {0, 2},
                                                    {2, 3},
                                                    {4, 5},
                                                    {5, 6},
                                                    {4, 6},
                                                    {6, 7}}};
  auto c = Complex::from_point_pairs(pairs);
  PointFunction f{Rational(1),      Rational(1, 2), Rational(-3),
                  Rational(7),      Rational(0),    Rational(2, 3),
                  Rational(-1, 6),  Rational(5)};
  CHECK(reconstruct(xray_forward(f, c)) == f);
}

TEST_CASE("singular systems throw with the graph-side verdict attached") {
  std::mt19937_64 rng(993);
  int done = 0;
  while (done < 150) {
    auto c = rnd_complex(rng);
    auto verdict = is_admissible_graph(c);
    if (verdict.admissible) continue;
    ++done;
    auto s = xray_forward(rnd_function(rng, false), c);
    try {
      reconstruct(s);
      FAIL("reconstruct accepted an inadmissible complex");
    } catch (const NotInvertibleError& e) {
      CHECK(e.verdict().admissible == false);
      CHECK(e.verdict().omitted_points == verdict.omitted_points);
      CHECK(e.verdict().bipartite_components == verdict.bipartite_components);
    }
  }
}

TEST_CASE("kernel dimension, primitivity, and annihilation") {
  std::mt19937_64 rng(994);
  for (int trial = 0; trial < 400; ++trial) {
    auto c = rnd_complex(rng);
    auto verdict = is_admissible_graph(c);
    auto basis = kernel_basis(c);
    CHECK(basis.size() ==
          static_cast<std::size_t>(verdict.bipartite_components));
    for (const auto& v : basis) {
      std::int64_t g = 0;
      bool leading_seen = false;
      for (const auto& x : v) {
        CHECK(x.is_integer());
        g = std::gcd(g, x.num());
        if (!leading_seen && !x.is_zero()) {
          CHECK(x.num() > 0);
          leading_seen = true;
        }
      }
      CHECK(leading_seen);  // never the zero vector
      CHECK(g == 1);
      for (const auto& sum : xray_forward(v, c).sums)
        CHECK(sum == Rational(0));
    }
    // Offsetting a solution by a kernel vector never changes the sums.
    if (!basis.empty()) {
      auto f = rnd_function(rng, true);
      auto base = xray_forward(f, c);
      PointFunction shifted = f;
      for (int i = 0; i < kPointCount; ++i) shifted[i] += basis[0][i];
      CHECK(xray_forward(shifted, c).sums == base.sums);
    }
  }
}

TEST_CASE("admissible complexes have empty kernels") {
  std::array<std::pair<PointId, PointId>, 8> pairs{{{0, 1},
                                                    {1, 2},
                                                    {0, 2},
                                                    {2, 3},
                                                    {4, 5},
                                                    {5, 6},
                                                    {4, 6},
                                                    {6, 7}}};
  CHECK(kernel_basis(Complex::from_point_pairs(pairs)).empty());
}

TEST_CASE("the 8-cycle kernel is the alternating function") {
  std::array<std::pair<PointId, PointId>, 8> cyc{{{0, 1},
                                                  {1, 2},
                                                  {2, 3},
                                                  {3, 4},
                                                  {4, 5},
                                                  {5, 6},
                                                  {6, 7},
                                                  {0, 7}}};
  auto c = Complex::from_point_pairs(cyc);
  auto basis = kernel_basis(c);
  REQUIRE(basis.size() == 1);
  for (int i = 0; i < kPointCount; ++i)
    CHECK(basis[0][i] == Rational(i % 2 == 0 ? 1 : -1));
}

TEST_CASE("an omitted point yields its indicator as a kernel vector") {
  std::array<std::pair<PointId, PointId>, 8> pairs{{{0, 1},
                                                    {1, 2},
                                                    {0, 2},
                                                    {2, 3},
                                                    {3, 4},
                                                    {4, 5},
                                                    {3, 5},
                                                    {5, 6}}};
  auto c = Complex::from_point_pairs(pairs);  // omits point 7
  auto basis = kernel_basis(c);
  REQUIRE(basis.size() == 1);
  for (int i = 0; i < kPointCount; ++i)
    CHECK(basis[0][i] == Rational(i == 7 ? 1 : 0));
}
