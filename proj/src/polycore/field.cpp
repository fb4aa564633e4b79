#include "curvegroup/polycore/field.hpp"

#include <array>

namespace curvegroup::polycore {

std::size_t hash_mpz(const mpz_class& z) {
  const mpz_srcptr raw = z.get_mpz_t();
  std::size_t h = static_cast<std::size_t>(raw->_mp_size) * 0x9e3779b97f4a7c15ULL;
  const int limbs = raw->_mp_size < 0 ? -raw->_mp_size : raw->_mp_size;
  for (int i = 0; i < limbs; ++i) {
    h ^= static_cast<std::size_t>(raw->_mp_d[i]) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

std::size_t hash_mpq(const mpq_class& q) {
  std::size_t h = hash_mpz(q.get_num());
  return h ^ (hash_mpz(q.get_den()) * 0xff51afd7ed558ccdULL + (h << 6) + (h >> 2));
}

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  a %= m;
  while (e > 0) {
    if (e & 1) result = mulmod(result, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return result;
}

bool strong_probable_prime(std::uint64_t n, std::uint64_t base) {
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  std::uint64_t x = powmod(base, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int i = 1; i < s; ++i) {
    x = mulmod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  constexpr std::array<std::uint64_t, 12> kSmall = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (std::uint64_t p : kSmall) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  for (std::uint64_t d = 41; d < 1000 && d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  // These bases are a proven deterministic set below 2^64.
  for (std::uint64_t base : kSmall) {
    if (!strong_probable_prime(n, base)) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
  if (p >= (1ULL << 63) || !is_prime_u64(p)) {
    throw std::invalid_argument("PrimeField: " + std::to_string(p) + " is not a supported prime");
  }
}

PrimeField::Element PrimeField::from_int(long v) const {
  if (v >= 0) return static_cast<Element>(v) % p_;
  const Element m = static_cast<Element>(-(v + 1)) % p_;  // avoids overflow at LONG_MIN
  return neg((m + 1) % p_);
}

PrimeField::Element PrimeField::from_mpz(const mpz_class& z) const {
  static_assert(sizeof(unsigned long) == sizeof(std::uint64_t));
  return mpz_fdiv_ui(z.get_mpz_t(), p_);
}

PrimeField::Element PrimeField::from_rational(const mpq_class& q) const {
  const Element den = from_mpz(q.get_den());
  if (den == 0) {
    throw std::domain_error("denominator " + q.get_den().get_str() + " vanishes in " + name());
  }
  return div(from_mpz(q.get_num()), den);
}

PrimeField::Element PrimeField::pow(Element a, std::uint64_t e) const { return powmod(a, e, p_); }

PrimeField::Element PrimeField::inv(Element a) const {
  if (a == 0) throw std::domain_error("division by zero in " + name());
  return powmod(a, p_ - 2, p_);
}

}  // namespace curvegroup::polycore
