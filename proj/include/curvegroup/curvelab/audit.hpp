#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>

#include "curvegroup/curvelab/curve.hpp"
#include "curvegroup/polycore/field.hpp"

namespace curvegroup::curvelab {

inline constexpr int kMaxChartAttempts = 4;
inline constexpr int kMaxResamples = 5;

struct EliminantData {
  int res_partials_degree = -1;     // Res_y(f_x, f_y)
  int res_curve_degree = -1;        // Res_y(f, f_y)
  int res_partials_squarefree = -1;
  int res_curve_squarefree = -1;
  int gcd_degree = -1;
};

struct SingularityAudit {
  std::uint64_t prime = 0;
  std::uint64_t chart_seed = 0;
  int chart_attempts = 0;
  /// Row-major; new coordinates xi = chart * xi'.
  std::array<std::array<std::uint64_t, 3>, 3> chart{};
  /// Distinct singular points in the affine chart (from the eliminants).
  std::uint64_t points = 0;
  /// Total Tjurina number dim F_p[x,y]/(f, f_x, f_y); nullopt if infinite.
  std::optional<std::uint64_t> tjurina;
  /// Squarefree degree of the characteristic polynomial of x on the
  /// quotient, an independent count of the same points.
  std::uint64_t charpoly_points = 0;
  EliminantData eliminants;
  /// The xi0-partial lies in (f, f_x, f_y), as homogeneity requires.
  bool euler_consistent = false;
  std::size_t basis_size = 0;

  /// Finite quotient, Euler check, and both point counts agree.
  bool consistent() const { return tjurina.has_value() && euler_consistent && points == charpoly_points; }
  bool matches(std::optional<std::uint64_t> expected_points, std::optional<std::uint64_t> expected_tjurina) const;
};

/// Reduces the curve mod p, applies a random invertible chart over F_p,
/// dehomogenizes at xi0 = 1 and measures the singular scheme. A chart whose
/// two point counts disagree is redrawn, up to kMaxChartAttempts times.
SingularityAudit singularity_audit(const CurveInstance& curve, std::uint64_t prime, std::uint64_t chart_seed);

struct AuditedCurve {
  CurveInstance curve;
  SingularityAudit audit;
  bool pass = false;
};

/// curve_build followed by singularity_audit; on a mismatch with the
/// predicted counts the forms are redrawn from derived seeds, at most
/// kMaxResamples times. The last attempt is returned either way.
AuditedCurve build_and_audit(std::int64_t q, std::int64_t k, std::uint64_t seed, std::uint64_t prime,
                             std::uint64_t chart_seed);

}  // namespace curvegroup::curvelab
