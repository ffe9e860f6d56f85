#pragma once
// transform.hpp
// The transform itself: a function on the 8 points maps to its sums
// over a complex's 8 lines.  Admissible complexes invert exactly;
// inadmissible ones expose their kernel.

#include <array>
#include <stdexcept>
#include <vector>

#include "xray/checker.hpp"
#include "xray/geometry.hpp"
#include "xray/rational.hpp"

namespace xray {

using PointFunction = std::array<Rational, kPointCount>;

struct LineSums {
  Complex complex;
  std::array<Rational, kComplexSize> sums;  // ascending LineId order
};

// Sum of f over the endpoints of each line of c.
LineSums xray_forward(const PointFunction& f, const Complex& c);

// Raised when reconstruction meets a singular system; carries the
// graph-side explanation of why.
class NotInvertibleError : public std::runtime_error {
 public:
  explicit NotInvertibleError(AdmissibilityVerdict v);
  const AdmissibilityVerdict& verdict() const { return verdict_; }

 private:
  AdmissibilityVerdict verdict_;
};

// Exact inverse of xray_forward.  Throws NotInvertibleError exactly
// when the complex is inadmissible.
PointFunction reconstruct(const LineSums& s);

// Basis of the kernel: point functions with zero sum on every line of
// c.  One vector per unit of rank defect (so empty iff admissible),
// each normalized to primitive integers with positive leading entry,
// ordered by free column.
std::vector<PointFunction> kernel_basis(const Complex& c);

}  // namespace xray
