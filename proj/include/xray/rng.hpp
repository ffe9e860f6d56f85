#pragma once
// rng.hpp
// Seeded sampling with portable output: mt19937_64 is pinned by the
// standard, and rejection sampling avoids the implementation-defined
// behavior of uniform_int_distribution.

#include <cstdint>
#include <random>

#include "xray/geometry.hpp"

namespace xray {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  // Uniform over [0, n); throws std::invalid_argument on n == 0.
  std::uint64_t next_below(std::uint64_t n);

  // Uniform over [lo, hi] inclusive; throws on lo > hi.
  std::int64_t next_int(std::int64_t lo, std::int64_t hi);

 private:
  std::mt19937_64 gen_;
};

Complex random_complex(Rng& rng);

}  // namespace xray
