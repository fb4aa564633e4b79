#pragma once

#include <cstdint>

#include <gmpxx.h>

#include "curvegroup/fpcore/word.hpp"

namespace curvegroup::fpcore {

/// alpha^M beta^N with M in {0, 1}. N is left unreduced.
struct NormalForm {
  int alpha_exponent = 0;
  mpz_class beta_exponent = 0;

  bool operator==(const NormalForm& other) const {
    return alpha_exponent == other.alpha_exponent && beta_exponent == other.beta_exponent;
  }
};

/// Rewrites w into alpha^M beta^N using beta^n alpha^{+-1} -> alpha^{2n+-1}
/// beta^{2nr} and alpha^2 -> beta^q, where q = 2r + 1 is odd.
///
/// Both rules hold in H(q;1): alpha^2 = beta^q is central and beta^r alpha =
/// alpha beta^-r. They are not consequences of the H(q;k) relations for
/// k > 1, so the result is an identity in H(q;1) and its quotients.
NormalForm normal_form(const Word& w, std::int64_t q);

/// N reduced into [0, beta_order).
NormalForm reduce(const NormalForm& nf, std::int64_t beta_order);

/// alpha^M beta^N as a word; N must fit in 64 bits.
Word to_word(const NormalForm& nf);

}  // namespace curvegroup::fpcore
