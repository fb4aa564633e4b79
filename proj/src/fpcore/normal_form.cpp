#include "curvegroup/fpcore/normal_form.hpp"

#include <stdexcept>

namespace curvegroup::fpcore {

namespace {

// Splits a = 2j + e with e in {0, 1}.
std::pair<int, mpz_class> halve(const mpz_class& a) {
  mpz_class j;
  const unsigned long e = mpz_fdiv_q_ui(j.get_mpz_t(), a.get_mpz_t(), 2);
  return {static_cast<int>(e), j};
}

}  // namespace

NormalForm normal_form(const Word& w, std::int64_t q) {
  if (q < 3 || q % 2 == 0) throw std::invalid_argument("normal_form: q must be odd and >= 3");
  const long r = static_cast<long>((q - 1) / 2);
  const long q_long = static_cast<long>(q);
  NormalForm nf;
  for (const auto& s : w.syllables()) {
    if (s.generator == kBeta) {
      nf.beta_exponent += mpz_class(std::to_string(s.exponent));
      continue;
    }
    if (s.generator != kAlpha) throw std::invalid_argument("normal_form: word uses a generator other than a, b");
    // alpha^e = alpha^{e0} (alpha^2)^j and alpha^2 = beta^q is central.
    const auto [e0, j] = halve(mpz_class(std::to_string(s.exponent)));
    if (e0 == 1) {
      // alpha^M beta^N alpha = alpha^{M + 2N + 1} beta^{2Nr}
      const mpz_class total = nf.alpha_exponent + 2 * nf.beta_exponent + 1;
      const auto [m, half] = halve(total);
      nf.alpha_exponent = m;
      nf.beta_exponent = 2 * r * nf.beta_exponent + q_long * half;
    }
    nf.beta_exponent += q_long * j;
  }
  return nf;
}

NormalForm reduce(const NormalForm& nf, std::int64_t beta_order) {
  if (beta_order <= 0) throw std::invalid_argument("reduce: beta order must be positive");
  NormalForm out = nf;
  mpz_fdiv_r_ui(out.beta_exponent.get_mpz_t(), nf.beta_exponent.get_mpz_t(), static_cast<unsigned long>(beta_order));
  return out;
}

Word to_word(const NormalForm& nf) {
  if (!nf.beta_exponent.fits_slong_p()) throw std::overflow_error("to_word: beta exponent exceeds 64 bits");
  return Word::alpha(nf.alpha_exponent) * Word::beta(nf.beta_exponent.get_si());
}

}  // namespace curvegroup::fpcore
