#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "curvegroup/cyclo/cyclotomic.hpp"

namespace curvegroup::cyclo {

/// e(a/b) = exp(2 pi i a/b), stored with gcd(a, b) = 1 and 0 <= a < b.
class CycPhase {
 public:
  CycPhase(std::int64_t a, std::int64_t b);

  std::int64_t numerator() const { return a_; }
  std::int64_t denominator() const { return b_; }

  CycPhase operator+(const CycPhase& o) const;
  CycPhase operator-() const { return {-a_, b_}; }
  CycPhase operator-(const CycPhase& o) const { return *this + (-o); }
  CycPhase operator*(std::int64_t n) const;

  bool operator==(const CycPhase&) const = default;
  std::string to_string() const;

 private:
  std::int64_t a_, b_;
};

/// Element of Q(zeta_N) in the power basis 1, zeta, ..., zeta^{phi-1}.
///
/// Stored as integer numerators over one positive denominator with no common
/// factor, so equal field elements have identical representations.
class CycNumber {
 public:
  /// Zero of Q(zeta_1) = Q.
  CycNumber();

  static CycNumber zero(std::uint32_t conductor);
  static CycNumber one(std::uint32_t conductor) { return from_rational(conductor, 1); }
  static CycNumber from_rational(std::uint32_t conductor, const mpq_class& value);
  /// zeta_N^j for any integer j.
  static CycNumber zeta_power(std::uint32_t conductor, std::int64_t j);
  /// Coordinates in the power basis; length must equal phi(N).
  static CycNumber from_coordinates(std::uint32_t conductor, const std::vector<mpq_class>& coords);

  std::uint32_t conductor() const { return ctx_->conductor; }
  std::uint32_t degree() const { return ctx_->phi; }
  mpq_class coordinate(std::size_t i) const;
  std::vector<mpq_class> coordinates() const;
  /// Nonzero (coefficient, power) pairs in increasing power.
  std::vector<std::pair<mpq_class, std::uint32_t>> terms() const;

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;

  CycNumber operator-() const;
  friend CycNumber operator+(const CycNumber& a, const CycNumber& b);
  friend CycNumber operator-(const CycNumber& a, const CycNumber& b);
  friend CycNumber operator*(const CycNumber& a, const CycNumber& b);
  friend CycNumber operator/(const CycNumber& a, const CycNumber& b) { return a * b.inverse(); }
  CycNumber& operator+=(const CycNumber& o) { return *this = *this + o; }
  CycNumber& operator*=(const CycNumber& o) { return *this = *this * o; }

  /// Throws std::domain_error on zero.
  CycNumber inverse() const;
  CycNumber pow(std::int64_t n) const;

  bool operator==(const CycNumber& o) const;
  bool operator!=(const CycNumber& o) const { return !(*this == o); }

  std::size_t hash() const;
  /// `zeta12: [(-1,0)]`
  std::string to_string() const;

 private:
  CycNumber(const CyclotomicContext* ctx, std::vector<mpz_class> num, mpz_class den);
  void normalize();
  void check_same_field(const CycNumber& o) const;

  const CyclotomicContext* ctx_;
  std::vector<mpz_class> num_;
  mpz_class den_;
};

struct CycNumberHash {
  std::size_t operator()(const CycNumber& z) const { return z.hash(); }
};

inline CycNumber add(const CycNumber& a, const CycNumber& b) { return a + b; }
inline CycNumber mul(const CycNumber& a, const CycNumber& b) { return a * b; }
inline CycNumber neg(const CycNumber& a) { return -a; }
inline CycNumber inv(const CycNumber& a) { return a.inverse(); }

/// e(a/b) in Q(zeta_N); throws ConductorMismatch unless b divides N.
CycNumber root_of_unity(const CycPhase& phase, std::uint32_t conductor);

/// Least n >= 1 with z^n = 1, or nullopt when z is not a root of unity.
/// Throws std::domain_error on zero.
std::optional<std::uint64_t> scalar_order(const CycNumber& z);

/// Image of z under Q(zeta_N) -> Q(zeta_{MN}), zeta_N -> zeta_{MN}^M.
CycNumber embed(const CycNumber& z, std::uint32_t multiplier);

}  // namespace curvegroup::cyclo
