#include "curvegroup/curvelab/curve.hpp"

#include <limits>

namespace curvegroup::curvelab {

using polycore::Monomial;
using polycore::RationalField;

namespace {

QPoly var(int nvars, int index) { return QPoly::variable(RationalField{}, nvars, index); }

QPoly monomial_power(int nvars, int index, int exponent) {
  return QPoly::term(RationalField{}, nvars, Monomial::variable(index, exponent), mpq_class(1));
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

QPoly build_F(const fpcore::GroupParams& params) {
  const int p = static_cast<int>(params.p());
  const int q = static_cast<int>(params.q());
  const int m = static_cast<int>(params.m());
  const QPoly sm = monomial_power(4, 0, m);
  const QPoly left = polycore::pow(sm * var(4, 2) + monomial_power(4, 1, q), static_cast<unsigned>(p));
  const QPoly right = polycore::pow(sm * var(4, 3) + monomial_power(4, 1, p), static_cast<unsigned>(q));
  auto quotient = polycore::exact_divide(left - right, sm);
  if (!quotient) throw NotDivisible("build_F: numerator not divisible by s^m for " + params.to_string());
  return *quotient;
}

polycore::WeightedGrading curve_weights(const fpcore::GroupParams& params) {
  return polycore::WeightedGrading(params.weights());
}

std::uint64_t derived_seed(std::uint64_t seed, int attempt) {
  if (attempt == 0) return seed;
  return splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(attempt)));
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("uniform_below: empty range");
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  for (;;) {
    const std::uint64_t v = rng();
    if (v < limit) return v % bound;
  }
}

QPoly random_form(std::mt19937_64& rng, int degree) {
  if (degree < 0) throw std::invalid_argument("random_form: negative degree");
  std::vector<QPoly::Term> terms;
  for (int a = degree; a >= 0; --a) {
    for (int b = degree - a; b >= 0; --b) {
      const auto u = static_cast<long>(uniform_below(rng, 40));
      const long c = u < 20 ? u - 20 : u - 19;
      terms.push_back({Monomial{a, b, degree - a - b}, mpq_class(c)});
    }
  }
  return QPoly::from_terms(RationalField{}, 3, std::move(terms));
}

CurveInstance curve_build(std::int64_t q, std::int64_t k, std::uint64_t seed, int resample) {
  const auto params = fpcore::GroupParams::dihedral(q, k);
  CurveInstance curve;
  curve.name = "C(" + std::to_string(q) + "," + std::to_string(k) + ")";
  curve.params = params;
  curve.base_seed = seed;
  curve.resample = resample;
  curve.seed = derived_seed(seed, resample);
  std::mt19937_64 rng(curve.seed);
  const int kk = static_cast<int>(k);
  curve.forms.push_back(random_form(rng, kk));
  curve.forms.push_back(random_form(rng, kk));
  curve.forms.push_back(random_form(rng, static_cast<int>(q - 2) * kk));
  curve.forms.push_back(QPoly::constant(RationalField{}, 3, mpq_class(1)));
  curve.equation = polycore::substitute_homogeneous(build_F(params), std::span<const QPoly>(curve.forms),
                                                    curve_weights(params));
  curve.degree = static_cast<int>(params.curve_degree());
  curve.expected_points = static_cast<std::uint64_t>(sing_count_formula(q, k, k));
  curve.expected_tjurina = static_cast<std::uint64_t>(tjurina_total_formula(q, k, k));
  return curve;
}

CurveInstance zariski_quartic() {
  const QPoly x = var(3, 0), y = var(3, 1), z = var(3, 2);
  CurveInstance curve;
  curve.name = "zariski-quartic";
  curve.equation = x * x * y * y + y * y * z * z + z * z * x * x - (x * y * z * (x + y + z)).scaled(mpq_class(2));
  curve.degree = 4;
  curve.expected_points = 3;
  curve.expected_tjurina = 6;
  return curve;
}

std::int64_t sing_count_formula(std::int64_t q, std::int64_t k, std::int64_t l) { return (2 * q * l - 3 * k) * l; }

std::int64_t tjurina_total_formula(std::int64_t q, std::int64_t k, std::int64_t l) {
  return sing_count_formula(q, k, l) * (q - 1);
}

namespace {

void check_genus_params(std::int64_t q, std::int64_t k, std::int64_t l) {
  if (q < 3 || q % 2 == 0) throw std::invalid_argument("genus: q must be odd and >= 3");
  if (k <= 0 || l < k) throw std::invalid_argument("genus: need 1 <= k <= l");
}

}  // namespace

std::int64_t genus_theorem(std::int64_t q, std::int64_t k) {
  check_genus_params(q, k, k);
  const std::int64_t r = (q - 1) / 2;
  return 1 - 6 * k * r + k * k * r + 4 * k * k * r * r;
}

std::int64_t genus_general(std::int64_t q, std::int64_t k, std::int64_t l) {
  check_genus_params(q, k, l);
  const std::int64_t r = (q - 1) / 2;
  return 1 + 3 * k + 2 * k * k - 3 * l - 4 * k * l + 2 * l * l - 6 * l * r - 5 * k * l * r + 6 * l * l * r +
         4 * l * l * r * r;
}

std::int64_t genus_degree_oracle(std::int64_t degree, std::int64_t points, std::int64_t delta) {
  if (degree < 3) throw std::invalid_argument("genus_degree_oracle: degree must be at least 3");
  return (degree - 1) * (degree - 2) / 2 - points * delta;
}

}  // namespace curvegroup::curvelab
