#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace curvegroup::cyclo {

class ConductorMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Integer coefficients of Phi_N, constant term first.
std::vector<mpz_class> cyclotomic_polynomial(std::uint32_t n);

std::uint32_t euler_phi(std::uint32_t n);

/// Shared data for Q(zeta_N): Phi_N and the residues of x^j mod Phi_N.
struct CyclotomicContext {
  std::uint32_t conductor = 1;
  std::uint32_t phi = 1;
  std::vector<mpz_class> modulus;
  /// reductions[j] = x^j mod Phi_N as sparse (index, coefficient) pairs, for
  /// 0 <= j < max(N, 2 phi - 1).
  std::vector<std::vector<std::pair<std::uint32_t, mpz_class>>> reductions;
};

/// Process-wide cached context; the returned pointer stays valid for the
/// lifetime of the program. Thread-safe.
const CyclotomicContext& cyclotomic_context(std::uint32_t n);

}  // namespace curvegroup::cyclo
