// rng.cpp

#include "xray/rng.hpp"

#include <limits>
#include <stdexcept>

namespace xray {

std::uint64_t Rng::next_below(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("next_below: empty range");
  // Reject draws from the final partial block so every residue is
  // equally likely.
  std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() -
      std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t draw;
  do {
    draw = gen_();
  } while (draw >= limit);
  return draw % n;
}

std::int64_t Rng::next_int(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw std::invalid_argument("next_int: empty range");
  std::uint64_t span = static_cast<std::uint64_t>(hi) -
                       static_cast<std::uint64_t>(lo) + 1;
  if (span == 0) {  // the full 64-bit range
    return static_cast<std::int64_t>(gen_());
  }
  return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) +
                                   next_below(span));
}

Complex random_complex(Rng& rng) {
  return unrank_complex(rng.next_below(kComplexCount));
}

}  // namespace xray
