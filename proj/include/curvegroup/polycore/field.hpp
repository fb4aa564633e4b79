#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace curvegroup::polycore {

/// Raised when two operands live over different coefficient domains.
class DomainMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::size_t hash_mpz(const mpz_class& z);
std::size_t hash_mpq(const mpq_class& q);

/// Primality certificate used by PrimeField: trial division by small primes
/// followed by a deterministic strong pseudoprime test for 64-bit inputs.
bool is_prime_u64(std::uint64_t n);

/// The rationals. Elements are always canonical (reduced, positive denominator).
class RationalField {
 public:
  using Element = mpq_class;

  Element zero() const { return Element(0); }
  Element one() const { return Element(1); }
  Element from_int(long v) const { return Element(v); }
  Element from_rational(const mpq_class& q) const { return q; }

  bool is_zero(const Element& a) const { return sgn(a) == 0; }
  bool is_one(const Element& a) const { return a == 1; }
  bool equal(const Element& a, const Element& b) const { return a == b; }
  bool is_negative(const Element& a) const { return sgn(a) < 0; }

  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element neg(const Element& a) const { return -a; }
  Element inv(const Element& a) const {
    if (is_zero(a)) throw std::domain_error("division by zero in Q");
    return 1 / a;
  }
  Element div(const Element& a, const Element& b) const { return a * inv(b); }

  std::string to_string(const Element& a) const { return a.get_str(); }
  std::size_t hash(const Element& a) const { return hash_mpq(a); }
  std::string name() const { return "Q"; }

  bool operator==(const RationalField&) const { return true; }
};

/// F_p for a prime p < 2^63. Elements are residues in [0, p).
class PrimeField {
 public:
  using Element = std::uint64_t;

  explicit PrimeField(std::uint64_t p);

  std::uint64_t characteristic() const { return p_; }

  Element zero() const { return 0; }
  Element one() const { return 1; }
  Element from_int(long v) const;
  Element from_mpz(const mpz_class& z) const;
  /// Fails with std::domain_error when p divides the denominator.
  Element from_rational(const mpq_class& q) const;

  bool is_zero(Element a) const { return a == 0; }
  bool is_one(Element a) const { return a == 1; }
  bool equal(Element a, Element b) const { return a == b; }
  bool is_negative(Element) const { return false; }

  Element add(Element a, Element b) const {
    Element s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Element sub(Element a, Element b) const { return a >= b ? a - b : a + (p_ - b); }
  Element mul(Element a, Element b) const {
    return static_cast<Element>((static_cast<unsigned __int128>(a) * b) % p_);
  }
  Element neg(Element a) const { return a == 0 ? 0 : p_ - a; }
  Element pow(Element a, std::uint64_t e) const;
  Element inv(Element a) const;
  Element div(Element a, Element b) const { return mul(a, inv(b)); }

  std::string to_string(Element a) const { return std::to_string(a); }
  std::size_t hash(Element a) const { return std::hash<Element>{}(a); }
  std::string name() const { return "F_" + std::to_string(p_); }

  bool operator==(const PrimeField& other) const { return p_ == other.p_; }

 private:
  std::uint64_t p_;
};

inline constexpr std::uint64_t kDefaultPrime = 2147483647ULL;
inline constexpr std::uint64_t kSecondPrime = 1000000007ULL;

}  // namespace curvegroup::polycore
