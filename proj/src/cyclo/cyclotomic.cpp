#include "curvegroup/cyclo/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>

namespace curvegroup::cyclo {

namespace {

using IntPoly = std::vector<mpz_class>;


// Exact quotient by a monic divisor.
IntPoly divide_exact(IntPoly a, const IntPoly& b) {
  const std::size_t db = b.size() - 1;
  IntPoly quot(a.size() - db);
  for (std::size_t i = a.size(); i-- > db;) {
    const mpz_class c = a[i];
    quot[i - db] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) mpz_submul(a[i - db + j].get_mpz_t(), c.get_mpz_t(), b[j].get_mpz_t());
  }
  for (std::size_t i = 0; i < db; ++i) {
    if (a[i] != 0) throw std::logic_error("cyclotomic_polynomial: inexact division");
  }
  return quot;
}

std::mutex registry_mutex;
std::map<std::uint32_t, IntPoly> poly_cache;
std::map<std::uint32_t, std::unique_ptr<const CyclotomicContext>> context_cache;

const IntPoly& cached_polynomial(std::uint32_t n) {
  if (auto it = poly_cache.find(n); it != poly_cache.end()) return it->second;
  IntPoly result(n + 1);
  result[0] = -1;
  result[n] = 1;
  for (std::uint32_t d = 1; d < n; ++d) {
    if (n % d == 0) result = divide_exact(std::move(result), cached_polynomial(d));
  }
  return poly_cache.emplace(n, std::move(result)).first->second;
}

std::unique_ptr<const CyclotomicContext> build_context(std::uint32_t n) {
  auto ctx = std::make_unique<CyclotomicContext>();
  ctx->conductor = n;
  ctx->modulus = cached_polynomial(n);
  ctx->phi = static_cast<std::uint32_t>(ctx->modulus.size() - 1);
  const std::uint32_t phi = ctx->phi;
  const std::uint32_t count = std::max(n, 2 * phi - 1);
  ctx->reductions.reserve(count);
  IntPoly current(phi);
  current[0] = 1;
  for (std::uint32_t j = 0; j < count; ++j) {
    std::vector<std::pair<std::uint32_t, mpz_class>> sparse;
    for (std::uint32_t i = 0; i < phi; ++i) {
      if (current[i] != 0) sparse.emplace_back(i, current[i]);
    }
    ctx->reductions.push_back(std::move(sparse));
    // multiply by x, then fold the x^phi coefficient back with Phi_N monic
    const mpz_class top = current[phi - 1];
    for (std::uint32_t i = phi - 1; i > 0; --i) current[i] = current[i - 1];
    current[0] = 0;
    if (top != 0) {
      for (std::uint32_t i = 0; i < phi; ++i) mpz_submul(current[i].get_mpz_t(), top.get_mpz_t(), ctx->modulus[i].get_mpz_t());
    }
  }
  return ctx;
}

}  // namespace

std::vector<mpz_class> cyclotomic_polynomial(std::uint32_t n) {
  if (n == 0) throw std::invalid_argument("cyclotomic_polynomial: N must be positive");
  std::lock_guard lock(registry_mutex);
  return cached_polynomial(n);
}

std::uint32_t euler_phi(std::uint32_t n) {
  if (n == 0) throw std::invalid_argument("euler_phi: n must be positive");
  std::uint32_t result = n;
  for (std::uint32_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

const CyclotomicContext& cyclotomic_context(std::uint32_t n) {
  if (n == 0) throw std::invalid_argument("cyclotomic_context: N must be positive");
  std::lock_guard lock(registry_mutex);
  auto& slot = context_cache[n];
  if (!slot) slot = build_context(n);
  return *slot;
}

}  // namespace curvegroup::cyclo
