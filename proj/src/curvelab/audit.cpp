#include "curvegroup/curvelab/audit.hpp"

#include <stdexcept>

#include "curvegroup/polycore/groebner.hpp"
#include "curvegroup/polycore/linear_algebra.hpp"
#include "curvegroup/polycore/unipoly.hpp"

namespace curvegroup::curvelab {

using polycore::FpPoly;
using polycore::Monomial;
using polycore::PrimeField;
using Uni = polycore::UniPoly<PrimeField>;

bool SingularityAudit::matches(std::optional<std::uint64_t> expected_points,
                               std::optional<std::uint64_t> expected_tjurina) const {
  if (!consistent()) return false;
  if (expected_points && points != *expected_points) return false;
  if (expected_tjurina && tjurina != expected_tjurina) return false;
  return true;
}

namespace {

using Chart = std::array<std::array<std::uint64_t, 3>, 3>;

Chart random_chart(const PrimeField& field, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (;;) {
    Chart chart;
    polycore::DenseMatrix<PrimeField> m(field, 3, 3);
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) {
        chart[i][j] = uniform_below(rng, field.characteristic());
        m.at(i, j) = chart[i][j];
      }
    }
    if (!field.is_zero(polycore::determinant(m))) return chart;
  }
}

// f(chart * xi)
FpPoly apply_chart(const FpPoly& f, const Chart& chart) {
  const PrimeField& field = f.field();
  std::vector<FpPoly> images;
  for (const auto& row : chart) {
    std::vector<FpPoly::Term> terms;
    for (int j = 0; j < 3; ++j) terms.push_back({Monomial::variable(j), row[static_cast<std::size_t>(j)]});
    images.push_back(FpPoly::from_terms(field, 3, std::move(terms)));
  }
  return polycore::substitute(f, std::span<const FpPoly>(images));
}

// Squarefree degree of det(lambda I - M_x) for multiplication by variable 0
// on F_p[x,y]/(basis), from det evaluations at T + 1 points.
std::uint64_t charpoly_points(const std::vector<FpPoly>& basis, const std::vector<Monomial>& standard) {
  const PrimeField& field = basis.front().field();
  const std::size_t t = standard.size();
  if (t == 0) return 0;
  std::vector<std::vector<PrimeField::Element>> mx(t, std::vector<PrimeField::Element>(t, 0));
  for (std::size_t j = 0; j < t; ++j) {
    const FpPoly shifted = FpPoly::term(field, 2, standard[j] * Monomial::variable(0), field.one());
    const FpPoly reduced = polycore::normal_form(shifted, basis);
    for (const auto& term : reduced.terms()) {
      std::size_t i = 0;
      while (i < t && !(standard[i] == term.monomial)) ++i;
      if (i == t) throw std::logic_error("audit: normal form left the standard monomials");
      mx[i][j] = term.coeff;
    }
  }
  std::vector<PrimeField::Element> xs, ys;
  for (std::size_t e = 0; e <= t; ++e) {
    const auto lambda = static_cast<PrimeField::Element>(e);
    polycore::DenseMatrix<PrimeField> m(field, t, t);
    for (std::size_t i = 0; i < t; ++i) {
      for (std::size_t j = 0; j < t; ++j) m.at(i, j) = field.neg(mx[i][j]);
      m.at(i, i) = field.add(m.at(i, i), lambda);
    }
    xs.push_back(lambda);
    ys.push_back(polycore::determinant(std::move(m)));
  }
  const Uni charpoly = polycore::interpolate(field, std::span<const PrimeField::Element>(xs),
                                             std::span<const PrimeField::Element>(ys));
  return static_cast<std::uint64_t>(polycore::squarefree_part(charpoly).degree());
}

int degree_or_minus_one(const Uni& u) { return u.is_zero() ? -1 : u.degree(); }

SingularityAudit audit_chart(const FpPoly& f, std::uint64_t prime, const Chart& chart) {
  SingularityAudit audit;
  audit.prime = prime;
  audit.chart = chart;
  const FpPoly g = apply_chart(f, chart);
  const FpPoly h = polycore::dehomogenize(g, 0);
  const FpPoly hx = polycore::derivative(h, 0);
  const FpPoly hy = polycore::derivative(h, 1);
  const auto basis = polycore::groebner({h, hx, hy});
  audit.basis_size = basis.size();
  const FpPoly euler = polycore::dehomogenize(polycore::derivative(g, 0), 0);
  audit.euler_consistent = polycore::normal_form(euler, basis).is_zero();
  const auto standard = polycore::standard_monomials(basis, 2);
  if (!standard) return audit;
  audit.tjurina = standard->size();
  if (standard->empty()) {
    audit.eliminants.gcd_degree = 0;
    return audit;
  }
  audit.charpoly_points = charpoly_points(basis, *standard);
  if (hx.is_zero() || hy.is_zero()) return audit;

  const Uni r1 = polycore::eliminant_resultant(hx, hy, 1);
  const Uni r2 = polycore::eliminant_resultant(h, hy, 1);
  auto& e = audit.eliminants;
  e.res_partials_degree = degree_or_minus_one(r1);
  e.res_curve_degree = degree_or_minus_one(r2);
  if (r1.is_zero() || r2.is_zero()) return audit;
  const Uni s1 = polycore::squarefree_part(r1);
  const Uni s2 = polycore::squarefree_part(r2);
  e.res_partials_squarefree = s1.degree();
  e.res_curve_squarefree = s2.degree();
  e.gcd_degree = polycore::gcd(s1, s2).degree();
  audit.points = static_cast<std::uint64_t>(e.gcd_degree);
  return audit;
}

std::uint64_t mix_seed(std::uint64_t seed, int attempt) { return derived_seed(seed ^ 0x5eed5eed5eedULL, attempt + 1); }

}  // namespace

SingularityAudit singularity_audit(const CurveInstance& curve, std::uint64_t prime, std::uint64_t chart_seed) {
  const PrimeField field(prime);
  if (curve.equation.is_zero() || !curve.equation.is_homogeneous() || curve.equation.nvars() != 3) {
    throw std::invalid_argument("singularity_audit: curve must be a nonzero ternary form");
  }
  if (static_cast<std::uint64_t>(curve.degree) * curve.degree + 1 >= prime) {
    throw std::invalid_argument("singularity_audit: prime too small for the curve degree");
  }
  const FpPoly f = polycore::to_prime_field(curve.equation, field);
  if (f.total_degree() != curve.equation.total_degree()) {
    throw std::domain_error("singularity_audit: curve degree drops modulo p");
  }
  SingularityAudit audit;
  for (int attempt = 0; attempt < kMaxChartAttempts; ++attempt) {
    audit = audit_chart(f, prime, random_chart(field, mix_seed(chart_seed, attempt)));
    audit.chart_seed = chart_seed;
    audit.chart_attempts = attempt + 1;
    // An infinite quotient is a property of the curve, not of the chart.
    if (audit.consistent() || !audit.tjurina) break;
  }
  return audit;
}

AuditedCurve build_and_audit(std::int64_t q, std::int64_t k, std::uint64_t seed, std::uint64_t prime,
                             std::uint64_t chart_seed) {
  AuditedCurve result;
  for (int resample = 0; resample <= kMaxResamples; ++resample) {
    result.curve = curve_build(q, k, seed, resample);
    result.audit = singularity_audit(result.curve, prime, chart_seed);
    result.pass = result.audit.matches(result.curve.expected_points, result.curve.expected_tjurina);
    if (result.pass) break;
  }
  return result;
}

}  // namespace curvegroup::curvelab
