// transform.cpp
// Reconstruction is plain Gauss-Jordan over the rationals on the 8x9
// augmented system; the kernel comes from the reduced echelon form of
// the unaugmented matrix, one basis vector per free column.

#include "xray/transform.hpp"

#include <numeric>
#include <string>

namespace xray {

namespace {

constexpr int kN = kPointCount;

std::string describe(const AdmissibilityVerdict& v) {
  return "reconstruct: inadmissible complex (" +
         std::to_string(v.omitted_points.size()) + " omitted points, " +
         std::to_string(v.bipartite_components) + " bipartite components)";
}

// Reduced row echelon form in place; returns the pivot column of each
// pivot row (ascending).
template <int Cols>
std::vector<int> rref(std::array<std::array<Rational, Cols>, kN>& a,
                      int active_cols) {
  std::vector<int> pivot_cols;
  int row = 0;
  for (int col = 0; col < active_cols && row < kN; ++col) {
    int p = -1;
    for (int r = row; r < kN; ++r)
      if (!a[r][col].is_zero()) {
        p = r;
        break;
      }
    if (p < 0) continue;
    std::swap(a[p], a[row]);
    Rational inv = a[row][col];
    for (int c = 0; c < Cols; ++c) a[row][c] = a[row][c] / inv;
    for (int r = 0; r < kN; ++r) {
      if (r == row || a[r][col].is_zero()) continue;
      Rational f = a[r][col];
      for (int c = 0; c < Cols; ++c) a[r][c] -= f * a[row][c];
    }
    pivot_cols.push_back(col);
    ++row;
  }
  return pivot_cols;
}

}  // namespace

LineSums xray_forward(const PointFunction& f, const Complex& c) {
  LineSums out{c, {}};
  auto ls = c.lines();
  for (int i = 0; i < kComplexSize; ++i) {
    auto [a, b] = line_endpoints(ls[i]);
    out.sums[i] = f[a] + f[b];
  }
  return out;
}

NotInvertibleError::NotInvertibleError(AdmissibilityVerdict v)
    : std::runtime_error(describe(v)), verdict_(std::move(v)) {}

PointFunction reconstruct(const LineSums& s) {
  std::array<std::array<Rational, kN + 1>, kN> aug{};
  auto ls = s.complex.lines();
  for (int r = 0; r < kN; ++r) {
    auto [a, b] = line_endpoints(ls[r]);
    aug[r][a] = Rational(1);
    aug[r][b] = Rational(1);
    aug[r][kN] = s.sums[r];
  }
  auto pivots = rref<kN + 1>(aug, kN);
  if (pivots.size() < kN)
    throw NotInvertibleError(is_admissible_graph(s.complex));
  // Full rank: the left block is the identity, solution sits in the
  // last column.
  PointFunction f{};
  for (int i = 0; i < kN; ++i) f[i] = aug[i][kN];
  return f;
}

std::vector<PointFunction> kernel_basis(const Complex& c) {
  std::array<std::array<Rational, kN>, kN> m{};
  auto ls = c.lines();
  for (int r = 0; r < kN; ++r) {
    auto [a, b] = line_endpoints(ls[r]);
    m[r][a] = Rational(1);
    m[r][b] = Rational(1);
  }
  auto pivots = rref<kN>(m, kN);

  std::array<bool, kN> is_pivot{};
  for (int col : pivots) is_pivot[col] = true;

  std::vector<PointFunction> basis;
  for (int free_col = 0; free_col < kN; ++free_col) {
    if (is_pivot[free_col]) continue;
    PointFunction v{};
    v[free_col] = Rational(1);
    for (std::size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = -m[r][free_col];

    // Scale to primitive integers, leading entry positive.
    std::int64_t den_lcm = 1;
    for (const Rational& x : v) den_lcm = std::lcm(den_lcm, x.den());
    std::int64_t num_gcd = 0;
    for (Rational& x : v) {
      x *= Rational(den_lcm);
      num_gcd = std::gcd(num_gcd, x.num());
    }
    if (num_gcd > 1)
      for (Rational& x : v) x /= Rational(num_gcd);
    for (const Rational& x : v) {
      if (x.is_zero()) continue;
      if (x.num() < 0)
        for (Rational& y : v) y = -y;
      break;
    }
    basis.push_back(v);
  }
  return basis;
}

}  // namespace xray
