#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "curvegroup/fpcore/presentation.hpp"
#include "curvegroup/polycore/multipoly.hpp"

namespace curvegroup::curvelab {

using polycore::QPoly;

class NotDivisible : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// ((s^m x + t^q)^p - (s^m y + t^p)^q) / s^m in variables s, t, x, y.
/// Throws NotDivisible if the division is inexact, which would be a bug.
QPoly build_F(const fpcore::GroupParams& params);

/// (k, l, ql - mk, pl - mk) for s, t, x, y.
polycore::WeightedGrading curve_weights(const fpcore::GroupParams& params);

/// A projective plane curve in xi0, xi1, xi2 with its provenance.
struct CurveInstance {
  /// "C(q,k)" or "zariski-quartic".
  std::string name;
  std::optional<fpcore::GroupParams> params;
  /// S, T, X, Y; empty for fixtures.
  std::vector<QPoly> forms;
  QPoly equation{polycore::RationalField{}, 3};
  /// Seed the forms were drawn from, and the user seed it derives from.
  std::uint64_t seed = 0;
  std::uint64_t base_seed = 0;
  int resample = 0;
  int degree = 0;
  std::optional<std::uint64_t> expected_points;
  std::optional<std::uint64_t> expected_tjurina;
};

/// Seed for resample attempt i of a user seed (attempt 0 is the seed itself).
std::uint64_t derived_seed(std::uint64_t seed, int attempt);

/// Uniform integer in [0, bound) by rejection, so draws are reproducible
/// across standard libraries.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

/// Homogeneous form of the given degree in xi0, xi1, xi2 with every
/// coefficient drawn uniformly from [-20, 20] \ {0}.
QPoly random_form(std::mt19937_64& rng, int degree);

/// C(q,k): S, T of degree k, X of degree (q-2)k, Y = 1, drawn from
/// derived_seed(seed, resample).
CurveInstance curve_build(std::int64_t q, std::int64_t k, std::uint64_t seed, int resample = 0);

/// x^2 y^2 + y^2 z^2 + z^2 x^2 - 2xyz(x + y + z) in xi0, xi1, xi2.
CurveInstance zariski_quartic();

std::int64_t sing_count_formula(std::int64_t q, std::int64_t k, std::int64_t l);
std::int64_t tjurina_total_formula(std::int64_t q, std::int64_t k, std::int64_t l);

std::int64_t genus_theorem(std::int64_t q, std::int64_t k);
std::int64_t genus_general(std::int64_t q, std::int64_t k, std::int64_t l);
/// (d - 1)(d - 2)/2 - N delta
std::int64_t genus_degree_oracle(std::int64_t degree, std::int64_t points, std::int64_t delta);

}  // namespace curvegroup::curvelab
