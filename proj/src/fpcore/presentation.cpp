#include "curvegroup/fpcore/presentation.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace curvegroup::fpcore {

Presentation::Presentation(int generator_count, std::vector<Word> relators, std::string name)
    : generator_count_(generator_count), relators_(std::move(relators)), name_(std::move(name)) {
  if (generator_count <= 0 || generator_count > kMaxGenerators) {
    throw std::invalid_argument("Presentation: generator count out of range");
  }
  for (const auto& r : relators_) {
    if (r.max_generator() >= generator_count) throw std::invalid_argument("Presentation: relator uses unknown generator");
  }
}

std::string Presentation::to_string() const {
  std::ostringstream out;
  out << "< ";
  for (int g = 0; g < generator_count_; ++g) out << (g ? ", " : "") << static_cast<char>('a' + g);
  out << " |";
  for (std::size_t i = 0; i < relators_.size(); ++i) out << (i ? ", " : " ") << relators_[i].to_string();
  out << " >";
  return out.str();
}

std::pair<std::int64_t, std::int64_t> bezout(std::int64_t p, std::int64_t q) {
  if (p <= 1 || q <= 1) throw std::invalid_argument("bezout: p and q must exceed 1");
  if (std::gcd(p, q) != 1) throw std::invalid_argument("bezout: p and q must be coprime");
  for (std::int64_t nu = 0; nu < p; ++nu) {
    if ((1 - nu * q) % p == 0) return {(1 - nu * q) / p, nu};
  }
  throw std::logic_error("bezout: no solution");  // unreachable for coprime inputs
}

GroupParams::GroupParams(std::int64_t p, std::int64_t q, std::int64_t m, std::int64_t k, std::int64_t l)
    : p_(p), q_(q), m_(m), k_(k), l_(l) {
  if (p <= 1 || q <= 1 || m <= 1) throw std::invalid_argument("GroupParams: p, q, m must exceed 1");
  if (k <= 0 || l <= 0) throw std::invalid_argument("GroupParams: k, l must be positive");
  if (std::gcd(p, q) != 1) throw std::invalid_argument("GroupParams: gcd(p, q) must be 1");
  if (p * l < m * k || q * l < m * k) throw std::invalid_argument("GroupParams: need pl >= mk and ql >= mk");
  std::tie(mu_, nu_) = bezout(p, q);
}

GroupParams GroupParams::dihedral(std::int64_t q, std::int64_t k) {
  if (q < 3 || q % 2 == 0) throw std::invalid_argument("dihedral case needs odd q >= 3");
  return GroupParams(2, q, 2, k, k);
}

std::vector<long> GroupParams::weights() const {
  return {static_cast<long>(k_), static_cast<long>(l_), static_cast<long>(q_ * l_ - m_ * k_),
          static_cast<long>(p_ * l_ - m_ * k_)};
}

Word GroupParams::a0() const { return Word::beta(mu_) * Word::alpha(nu_); }

std::string GroupParams::to_string() const {
  std::ostringstream out;
  out << "(p,q,m,k,l)=(" << p_ << ',' << q_ << ',' << m_ << ',' << k_ << ',' << l_ << ')';
  return out.str();
}

Presentation presentation_G(std::int64_t p, std::int64_t q) {
  if (p <= 1 || q <= 1 || std::gcd(p, q) != 1) throw std::invalid_argument("presentation_G: need coprime p, q > 1");
  return Presentation(2, {Word::alpha(p) * Word::beta(-q)}, "G<" + std::to_string(p) + "," + std::to_string(q) + ">");
}

namespace {

std::vector<Word> pi1_U_relators(const GroupParams& params) {
  const Word central = params.a0().power(params.m());
  return {Word::alpha(params.p()) * Word::beta(-params.q()), commutator(Word::alpha(), central),
          commutator(Word::beta(), central)};
}

}  // namespace

Presentation presentation_pi1_U(const GroupParams& params) {
  return Presentation(2, pi1_U_relators(params), "pi1(U) " + params.to_string());
}

Word rho_image(const GroupParams& params) {
  return Word::beta(params.q() * params.l()) * params.a0().power(-params.m() * params.k());
}

Presentation presentation_complement(const GroupParams& params) {
  auto relators = pi1_U_relators(params);
  relators.push_back(rho_image(params));
  return Presentation(2, std::move(relators), "pi1(P2 - C) " + params.to_string());
}

Presentation presentation_H(std::int64_t q, std::int64_t k) {
  if (q < 3 || q % 2 == 0) throw std::invalid_argument("presentation_H: q must be odd and >= 3");
  if (k <= 0) throw std::invalid_argument("presentation_H: k must be positive");
  const std::int64_t r = (q - 1) / 2;
  const Word a0 = Word::beta(-r) * Word::alpha();
  const Word a0_squared = a0.power(2);
  std::vector<Word> relators{
      Word::alpha(2) * Word::beta(-q),
      Word::beta(q * k) * a0.power(-2 * k),
      commutator(Word::alpha(), a0_squared),
      commutator(Word::beta(), a0_squared),
  };
  return Presentation(2, std::move(relators), "H(" + std::to_string(q) + ";" + std::to_string(k) + ")");
}

}  // namespace curvegroup::fpcore
