#include "curvegroup/dihedralrep/mat2.hpp"

#include <stdexcept>

namespace curvegroup::dihedralrep {

namespace {

// Inverse of a unit; roots of unity are inverted by powering, which is much
// cheaper than the extended gcd at large conductors.
CycNumber unit_inverse(const CycNumber& z) {
  if (z.is_zero()) throw std::domain_error("Mat2: singular matrix");
  const std::int64_t n = z.conductor();
  const std::int64_t bound = n % 2 == 0 ? n : 2 * n;
  const CycNumber p = z.pow(bound - 1);
  if ((p * z).is_one()) return p;
  return z.inverse();
}

CycNumber product(const CycNumber& x, const CycNumber& y) {
  if (x.is_zero()) return x;
  if (y.is_zero()) return y;
  return x * y;
}

CycNumber sum_of_products(const CycNumber& x1, const CycNumber& y1, const CycNumber& x2, const CycNumber& y2) {
  const bool first = !x1.is_zero() && !y1.is_zero();
  const bool second = !x2.is_zero() && !y2.is_zero();
  if (first && second) return x1 * y1 + x2 * y2;
  if (first) return x1 * y1;
  if (second) return x2 * y2;
  return CycNumber::zero(x1.conductor());
}

}  // namespace

Mat2 Mat2::identity(std::uint32_t conductor) { return scalar(CycNumber::one(conductor)); }

Mat2 Mat2::scalar(const CycNumber& z) { return diagonal(z, z); }

Mat2 Mat2::diagonal(const CycNumber& x, const CycNumber& y) {
  const CycNumber zero = CycNumber::zero(x.conductor());
  return {x, zero, zero, y};
}

Mat2 Mat2::antidiagonal(const CycNumber& x, const CycNumber& y) {
  const CycNumber zero = CycNumber::zero(x.conductor());
  return {zero, x, y, zero};
}

Mat2 Mat2::inverse() const {
  const CycNumber inv_det = unit_inverse(determinant());
  return {product(d, inv_det), product(-b, inv_det), product(-c, inv_det), product(a, inv_det)};
}

Mat2 operator*(const Mat2& x, const Mat2& y) {
  return {sum_of_products(x.a, y.a, x.b, y.c), sum_of_products(x.a, y.b, x.b, y.d),
          sum_of_products(x.c, y.a, x.d, y.c), sum_of_products(x.c, y.b, x.d, y.d)};
}

Mat2 Mat2::pow(std::int64_t n) const {
  if (n < 0) return inverse().pow(-n);
  Mat2 result = identity(conductor());
  Mat2 base = *this;
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

std::size_t Mat2::hash() const {
  std::size_t h = a.hash();
  for (const CycNumber* z : {&b, &c, &d}) h ^= z->hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

std::string Mat2::to_string() const {
  return "[[" + a.to_string() + ", " + b.to_string() + "], [" + c.to_string() + ", " + d.to_string() + "]]";
}

}  // namespace curvegroup::dihedralrep
