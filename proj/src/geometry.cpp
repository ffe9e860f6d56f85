// geometry.cpp
// Encodings and the colex rank/unrank bijection.  The combinatorial
// number system gives rank(mask) = sum_i C(s_i, i+1) over the set bit
// positions s_0 < s_1 < ... < s_7; unrank inverts greedily from the
// largest binomial down.

#include "xray/geometry.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace xray {

namespace {

// C(n,k) for n <= 28, k <= 8: everything rank/unrank needs.
constexpr auto kChoose = [] {
  std::array<std::array<std::uint64_t, kComplexSize + 1>, kLineCount + 1> c{};
  for (int n = 0; n <= kLineCount; ++n) {
    c[n][0] = 1;
    for (int k = 1; k <= kComplexSize && k <= n; ++k)
      c[n][k] = c[n - 1][k - 1] + (k <= n - 1 ? c[n - 1][k] : 0);
  }
  return c;
}();

}  // namespace

std::uint64_t binomial(int n, int k) {
  if (n < 0 || k < 0)
    throw std::invalid_argument("binomial: negative argument");
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) {
    std::uint64_t factor = static_cast<std::uint64_t>(n - k + i);
    if (r > ~std::uint64_t{0} / factor)
      throw std::out_of_range("binomial: value exceeds 64 bits");
    r = r * factor / i;  // exact: r * factor is divisible by i here
  }
  return r;
}

LineId line_index(PointId a, PointId b) {
  if (a >= kPointCount || b >= kPointCount)
    throw std::out_of_range("line_index: point id out of range");
  if (a == b)
    throw std::invalid_argument("line_index: endpoints must be distinct");
  return static_cast<LineId>(detail::kLines.pair_index[a][b]);
}

std::pair<PointId, PointId> line_endpoints(LineId l) {
  if (l >= kLineCount)
    throw std::out_of_range("line_endpoints: line id out of range");
  return detail::kLines.endpoints[l];
}

std::uint8_t line_point_mask(LineId l) {
  if (l >= kLineCount)
    throw std::out_of_range("line_point_mask: line id out of range");
  return detail::kLines.point_mask[l];
}

Complex Complex::from_mask(std::uint32_t mask) {
  if (mask & ~kAllLinesMask)
    throw std::invalid_argument("Complex: mask has bits beyond line 27");
  if (std::popcount(mask) != kComplexSize)
    throw std::invalid_argument("Complex: a complex has exactly 8 lines, got " +
                                std::to_string(std::popcount(mask)));
  return Complex(mask);
}

Complex Complex::from_lines(std::span<const LineId> lines) {
  std::uint32_t mask = 0;
  for (LineId l : lines) {
    if (l >= kLineCount)
      throw std::out_of_range("Complex: line id out of range");
    if ((mask >> l) & 1u)
      throw std::invalid_argument("Complex: duplicate line " +
                                  std::to_string(int{l}));
    mask |= 1u << l;
  }
  return from_mask(mask);
}

Complex Complex::from_point_pairs(
    std::span<const std::pair<PointId, PointId>> pairs) {
  std::uint32_t mask = 0;
  for (auto [a, b] : pairs) {
    LineId l = line_index(a, b);
    if ((mask >> l) & 1u)
      throw std::invalid_argument("Complex: duplicate line {" +
                                  std::to_string(int{a}) + "," +
                                  std::to_string(int{b}) + "}");
    mask |= 1u << l;
  }
  return from_mask(mask);
}

std::array<LineId, kComplexSize> Complex::lines() const {
  std::array<LineId, kComplexSize> out{};
  std::uint32_t m = mask_;
  for (int i = 0; i < kComplexSize; ++i) {
    out[i] = static_cast<LineId>(std::countr_zero(m));
    m &= m - 1;
  }
  return out;
}

IncidenceMatrix incidence_submatrix(const Complex& c) {
  IncidenceMatrix m{};
  auto ls = c.lines();
  for (int r = 0; r < kComplexSize; ++r) {
    auto [a, b] = detail::kLines.endpoints[ls[r]];
    m.entries[r][a] = 1;
    m.entries[r][b] = 1;
  }
  return m;
}

namespace detail {

std::uint32_t unrank_mask(std::uint64_t r) noexcept {
  std::uint32_t mask = 0;
  for (int k = kComplexSize; k >= 1; --k) {
    // Largest s with C(s,k) <= r; s >= k-1 always works since C(k-1,k)=0.
    int s = k - 1;
    while (s + 1 < kLineCount && kChoose[s + 1][k] <= r) ++s;
    mask |= 1u << s;
    r -= kChoose[s][k];
  }
  return mask;
}

std::uint64_t rank_mask(std::uint32_t mask) noexcept {
  std::uint64_t r = 0;
  int k = 1;
  while (mask) {
    int s = std::countr_zero(mask);
    mask &= mask - 1;
    r += kChoose[s][k++];
  }
  return r;
}

}  // namespace detail

Complex unrank_complex(std::uint64_t r) {
  if (r >= kComplexCount)
    throw std::out_of_range("unrank_complex: rank " + std::to_string(r) +
                            " >= " + std::to_string(kComplexCount));
  return Complex::from_mask(detail::unrank_mask(r));
}

std::uint64_t rank_complex(const Complex& c) {
  return detail::rank_mask(c.mask());
}

std::uint32_t next_complex_mask(std::uint32_t mask) {
  // Gosper's hack: next integer with the same popcount.
  std::uint32_t c = mask & -mask;
  std::uint32_t r = mask + c;
  return r | (((mask ^ r) >> 2) / c);
}

}  // namespace xray
