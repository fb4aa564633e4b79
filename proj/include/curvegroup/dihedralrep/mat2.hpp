#pragma once

#include <cstddef>
#include <string>

#include "curvegroup/cyclo/cyc_number.hpp"

namespace curvegroup::dihedralrep {

using cyclo::CycNumber;

/// [[a, b], [c, d]] over one cyclotomic field.
struct Mat2 {
  CycNumber a, b, c, d;

  static Mat2 identity(std::uint32_t conductor);
  static Mat2 scalar(const CycNumber& z);
  static Mat2 diagonal(const CycNumber& x, const CycNumber& y);
  static Mat2 antidiagonal(const CycNumber& x, const CycNumber& y);

  std::uint32_t conductor() const { return a.conductor(); }
  CycNumber determinant() const { return a * d - b * c; }
  bool is_scalar() const { return b.is_zero() && c.is_zero() && a == d; }
  bool is_identity() const { return is_scalar() && a.is_one(); }

  /// General inverse through the determinant; throws std::domain_error when
  /// singular.
  Mat2 inverse() const;

  friend Mat2 operator*(const Mat2& x, const Mat2& y);
  Mat2 scaled(const CycNumber& z) const { return {a * z, b * z, c * z, d * z}; }
  Mat2 pow(std::int64_t n) const;

  bool operator==(const Mat2& o) const { return a == o.a && b == o.b && c == o.c && d == o.d; }
  bool operator!=(const Mat2& o) const { return !(*this == o); }

  std::size_t hash() const;
  std::string to_string() const;
};

struct Mat2Hash {
  std::size_t operator()(const Mat2& m) const { return m.hash(); }
};

}  // namespace curvegroup::dihedralrep
