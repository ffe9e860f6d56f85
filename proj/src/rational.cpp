// rational.cpp

#include "xray/rational.hpp"

#include <limits>
#include <ostream>
#include <stdexcept>
#include <utility>

namespace xray {

namespace {

using Wide = __int128;

Wide abs128(Wide x) { return x < 0 ? -x : x; }

Wide gcd128(Wide a, Wide b) {
  a = abs128(a);
  b = abs128(b);
  while (b) {
    Wide t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// Reduce n/d to lowest terms with positive denominator, checked back
// into 64 bits.
std::pair<std::int64_t, std::int64_t> normalized(Wide n, Wide d) {
  if (d == 0) throw std::domain_error("Rational: zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  Wide g = gcd128(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  if (n > std::numeric_limits<std::int64_t>::max() ||
      n < std::numeric_limits<std::int64_t>::min() ||
      d > std::numeric_limits<std::int64_t>::max())
    throw std::overflow_error("Rational: value exceeds 64 bits");
  return {static_cast<std::int64_t>(n), static_cast<std::int64_t>(d)};
}

Rational from_wide(Wide n, Wide d) {
  auto [nn, dd] = normalized(n, d);
  return Rational(nn, dd);
}

}  // namespace

Rational::Rational(std::int64_t n, std::int64_t d) {
  auto [nn, dd] = normalized(n, d);
  num_ = nn;
  den_ = dd;
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator-() const { return from_wide(-Wide{num_}, den_); }

Rational operator+(const Rational& a, const Rational& b) {
  return from_wide(Wide{a.num_} * b.den_ + Wide{b.num_} * a.den_,
                   Wide{a.den_} * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
  return from_wide(Wide{a.num_} * b.den_ - Wide{b.num_} * a.den_,
                   Wide{a.den_} * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
  return from_wide(Wide{a.num_} * b.num_, Wide{a.den_} * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) throw std::domain_error("Rational: division by zero");
  return from_wide(Wide{a.num_} * b.den_, Wide{a.den_} * b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  Wide lhs = Wide{a.num_} * b.den_;
  Wide rhs = Wide{b.num_} * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.to_string();
}

}  // namespace xray
