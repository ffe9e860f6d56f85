#pragma once
// geometry.hpp
// The 8-point space, its 28 lines (unordered point pairs), and 8-line
// complexes.  A complex is stored as a 28-bit mask; colex order on the
// 8-subsets of lines coincides with numeric order on the masks, which
// gives cheap rank/unrank and a branch-free successor for sweeps.

#include <array>
#include <cstdint>
#include <span>
#include <utility>

namespace xray {

using PointId = std::uint8_t;  // 0..7
using LineId = std::uint8_t;   // 0..27, colex rank of the endpoint pair

inline constexpr int kPointCount = 8;
inline constexpr int kLineCount = 28;
inline constexpr int kComplexSize = 8;
inline constexpr std::uint64_t kComplexCount = 3'108'105;  // C(28,8)
inline constexpr std::uint8_t kAllPointsMask = 0xFF;
inline constexpr std::uint32_t kAllLinesMask = 0x0FFFFFFF;

// Exact binomial coefficient; throws std::out_of_range if the value
// would not fit in 64 bits, std::invalid_argument on negative input.
std::uint64_t binomial(int n, int k);

// Colex index of the pair {a,b}: for i < j the line is j*(j-1)/2 + i.
// Throws std::invalid_argument if a == b, std::out_of_range if a or b >= 8.
LineId line_index(PointId a, PointId b);

// Endpoints of a line, ascending.  Inverse of line_index.
// Throws std::out_of_range if l >= 28.
std::pair<PointId, PointId> line_endpoints(LineId l);

// 8-bit point mask with the two endpoint bits of the line set.
std::uint8_t line_point_mask(LineId l);

// An unordered set of exactly 8 distinct lines.
class Complex {
 public:
  // Throws std::invalid_argument unless mask has exactly 8 of the low
  // 28 bits set and no others.
  static Complex from_mask(std::uint32_t mask);

  // Throws std::invalid_argument on duplicates or size != 8, and
  // std::out_of_range on a line id >= 28.
  static Complex from_lines(std::span<const LineId> lines);

  // Convenience: 8 endpoint pairs, validated pairwise as in line_index.
  static Complex from_point_pairs(
      std::span<const std::pair<PointId, PointId>> pairs);

  std::uint32_t mask() const { return mask_; }
  bool contains(LineId l) const { return (mask_ >> l) & 1u; }

  // The 8 member lines in ascending order.
  std::array<LineId, kComplexSize> lines() const;

  friend bool operator==(const Complex&, const Complex&) = default;

 private:
  explicit Complex(std::uint32_t mask) : mask_(mask) {}
  std::uint32_t mask_;
};

// Rows are the complex's lines in ascending LineId order, columns are
// points; each row has exactly two 1 entries.
struct IncidenceMatrix {
  std::array<std::array<int, kPointCount>, kComplexSize> entries;
};

IncidenceMatrix incidence_submatrix(const Complex& c);

// Bijection between ranks 0..3,108,104 and complexes, in colex order.
// unrank_complex throws std::out_of_range for r >= kComplexCount.
Complex unrank_complex(std::uint64_t r);
std::uint64_t rank_complex(const Complex& c);

// Successor of an 8-element mask in colex order (Gosper's hack).  The
// caller owns the iteration bound; past the last complex this yields a
// mask with bit 28 set.
std::uint32_t next_complex_mask(std::uint32_t mask);

namespace detail {

// Unvalidated mask-level rank/unrank used by the sweep loops.
std::uint32_t unrank_mask(std::uint64_t r) noexcept;
std::uint64_t rank_mask(std::uint32_t mask) noexcept;

// Line lookup tables, built once at compile time.
struct LineTables {
  std::array<std::pair<PointId, PointId>, kLineCount> endpoints;
  std::array<std::uint8_t, kLineCount> point_mask;
  std::array<std::array<std::int8_t, kPointCount>, kPointCount> pair_index;
};

constexpr LineTables make_line_tables() {
  LineTables t{};
  for (auto& row : t.pair_index) row.fill(-1);
  int next = 0;
  for (int j = 1; j < kPointCount; ++j) {
    for (int i = 0; i < j; ++i) {
      t.endpoints[next] = {static_cast<PointId>(i), static_cast<PointId>(j)};
      t.point_mask[next] = static_cast<std::uint8_t>((1u << i) | (1u << j));
      t.pair_index[i][j] = static_cast<std::int8_t>(next);
      t.pair_index[j][i] = static_cast<std::int8_t>(next);
      ++next;
    }
  }
  return t;
}

inline constexpr LineTables kLines = make_line_tables();

}  // namespace detail

}  // namespace xray
