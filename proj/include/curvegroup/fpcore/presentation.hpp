#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "curvegroup/fpcore/word.hpp"

namespace curvegroup::fpcore {

/// Generators plus relator words, each relator read as "= identity".
class Presentation {
 public:
  Presentation(int generator_count, std::vector<Word> relators, std::string name = {});

  int generator_count() const { return generator_count_; }
  const std::vector<Word>& relators() const& { return relators_; }
  // By value on temporaries, so range-for over presentation_H(...).relators() is safe.
  std::vector<Word> relators() && { return std::move(relators_); }
  const std::string& name() const { return name_; }

  std::string to_string() const;

 private:
  int generator_count_;
  std::vector<Word> relators_;
  std::string name_;
};

/// (mu, nu) with mu*p + nu*q = 1 and 0 <= nu < p. Throws std::invalid_argument
/// unless p, q > 1 are coprime.
std::pair<std::int64_t, std::int64_t> bezout(std::int64_t p, std::int64_t q);

/// Parameters (p, q, m, k, l) of the curve family, validated on construction.
class GroupParams {
 public:
  GroupParams(std::int64_t p, std::int64_t q, std::int64_t m, std::int64_t k, std::int64_t l);

  /// The p = m = 2, k = l case with q odd >= 3.
  static GroupParams dihedral(std::int64_t q, std::int64_t k);

  std::int64_t p() const { return p_; }
  std::int64_t q() const { return q_; }
  std::int64_t m() const { return m_; }
  std::int64_t k() const { return k_; }
  std::int64_t l() const { return l_; }
  std::int64_t mu() const { return mu_; }
  std::int64_t nu() const { return nu_; }

  bool is_dihedral() const { return p_ == 2 && m_ == 2; }
  /// (q - 1) / 2; only meaningful for odd q.
  std::int64_t r() const { return (q_ - 1) / 2; }

  /// Weights of s, t, x, y: k, l, ql - mk, pl - mk.
  std::vector<long> weights() const;
  std::int64_t curve_degree() const { return p_ * q_ * l_ - m_ * k_; }

  /// beta^mu alpha^nu
  Word a0() const;

  std::string to_string() const;

  bool operator==(const GroupParams&) const = default;

 private:
  std::int64_t p_, q_, m_, k_, l_;
  std::int64_t mu_ = 0, nu_ = 0;
};

/// < alpha, beta | alpha^p = beta^q >
Presentation presentation_G(std::int64_t p, std::int64_t q);

/// G<p,q> plus [alpha, a0^m] and [beta, a0^m].
Presentation presentation_pi1_U(const GroupParams& params);

/// The rho-image word beta^{ql} a0^{-mk}.
Word rho_image(const GroupParams& params);

/// presentation_pi1_U plus beta^{ql} a0^{-mk}.
Presentation presentation_complement(const GroupParams& params);

/// H(q;k): alpha^2 = beta^q, beta^{qk} = (beta^-r alpha)^{2k}, and the two
/// commutation relations, emitted for every k.
Presentation presentation_H(std::int64_t q, std::int64_t k);

}  // namespace curvegroup::fpcore
