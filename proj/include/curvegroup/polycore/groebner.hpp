#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "curvegroup/polycore/multipoly.hpp"
#include "curvegroup/polycore/unipoly.hpp"

namespace curvegroup::polycore {

struct GroebnerStats {
  std::size_t pairs_considered = 0;
  std::size_t pairs_reduced = 0;
  std::size_t product_criterion_skips = 0;
  std::size_t chain_criterion_skips = 0;
};

/// Reduced Groebner basis under grevlex: monic, inter-reduced, sorted by
/// increasing leading monomial. The zero ideal yields an empty basis.
/// Buchberger's algorithm with the normal selection strategy and both
/// Buchberger criteria.
std::vector<FpPoly> groebner(std::vector<FpPoly> generators, GroebnerStats* stats = nullptr);

/// Complete reduction of f modulo `basis` (any finite set; unique when
/// `basis` is a Groebner basis).
FpPoly normal_form(const FpPoly& f, const std::vector<FpPoly>& basis);

/// Monomials outside the initial ideal, in increasing grevlex order, or
/// std::nullopt when there are infinitely many.
std::optional<std::vector<Monomial>> standard_monomials(const std::vector<FpPoly>& basis, int nvars);

/// Vector-space dimension of F_p[x]/(basis); std::nullopt means Infinite.
std::optional<std::size_t> quotient_dimension(const std::vector<FpPoly>& basis, int nvars);

/// Eliminant Res_y(f, g) of two bivariate polynomials, where y is variable
/// `eliminate` and the result is a polynomial in the other variable. Formal
/// y-degrees are the actual y-degrees of f and g; computed by evaluation at
/// deg f * deg g + 1 points and interpolation.
UniPoly<PrimeField> eliminant_resultant(const FpPoly& f, const FpPoly& g, int eliminate);

/// Restriction of a bivariate polynomial to fixed_var = a, as a univariate
/// polynomial in the other variable.
UniPoly<PrimeField> specialize(const FpPoly& f, int fixed_var, PrimeField::Element a);

}  // namespace curvegroup::polycore
