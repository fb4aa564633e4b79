#include "curvegroup/cyclo/cyc_number.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

#include "curvegroup/polycore/field.hpp"
#include "curvegroup/polycore/unipoly.hpp"

namespace curvegroup::cyclo {

CycPhase::CycPhase(std::int64_t a, std::int64_t b) {
  if (b <= 0) throw std::invalid_argument("CycPhase: denominator must be positive");
  a %= b;
  if (a < 0) a += b;
  const std::int64_t g = std::gcd(a, b);
  a_ = a / g;
  b_ = b / g;
}

CycPhase CycPhase::operator+(const CycPhase& o) const {
  const std::int64_t l = std::lcm(b_, o.b_);
  return {(a_ * (l / b_) + o.a_ * (l / o.b_)) % l, l};
}

CycPhase CycPhase::operator*(std::int64_t n) const {
  const std::int64_t m = n % b_;
  return {(a_ * m) % b_, b_};
}

std::string CycPhase::to_string() const { return std::to_string(a_) + "/" + std::to_string(b_); }

CycNumber::CycNumber() : CycNumber(&cyclotomic_context(1), {0}, 1) {}

CycNumber::CycNumber(const CyclotomicContext* ctx, std::vector<mpz_class> num, mpz_class den)
    : ctx_(ctx), num_(std::move(num)), den_(std::move(den)) {
  normalize();
}

void CycNumber::normalize() {
  if (den_ == 1) return;
  if (den_ < 0) {
    den_ = -den_;
    for (auto& c : num_) c = -c;
  }
  mpz_class g = den_;
  for (const auto& c : num_) {
    if (c == 0) continue;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) return;
  }
  if (is_zero()) {
    den_ = 1;
    return;
  }
  for (auto& c : num_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
}

void CycNumber::check_same_field(const CycNumber& o) const {
  if (ctx_ != o.ctx_) {
    throw ConductorMismatch("cyclotomic conductors differ: " + std::to_string(conductor()) + " vs " +
                            std::to_string(o.conductor()));
  }
}

CycNumber CycNumber::zero(std::uint32_t conductor) {
  const auto& ctx = cyclotomic_context(conductor);
  return CycNumber(&ctx, std::vector<mpz_class>(ctx.phi), 1);
}

CycNumber CycNumber::from_rational(std::uint32_t conductor, const mpq_class& value) {
  const auto& ctx = cyclotomic_context(conductor);
  std::vector<mpz_class> num(ctx.phi);
  num[0] = value.get_num();
  return CycNumber(&ctx, std::move(num), value.get_den());
}

CycNumber CycNumber::zeta_power(std::uint32_t conductor, std::int64_t j) {
  const auto& ctx = cyclotomic_context(conductor);
  std::int64_t e = j % static_cast<std::int64_t>(conductor);
  if (e < 0) e += conductor;
  std::vector<mpz_class> num(ctx.phi);
  for (const auto& [i, c] : ctx.reductions[static_cast<std::size_t>(e)]) num[i] = c;
  return CycNumber(&ctx, std::move(num), 1);
}

CycNumber CycNumber::from_coordinates(std::uint32_t conductor, const std::vector<mpq_class>& coords) {
  const auto& ctx = cyclotomic_context(conductor);
  if (coords.size() != ctx.phi) throw std::invalid_argument("CycNumber: coordinate count must equal phi(N)");
  mpz_class den = 1;
  for (const auto& c : coords) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  std::vector<mpz_class> num(ctx.phi);
  for (std::size_t i = 0; i < coords.size(); ++i) num[i] = coords[i].get_num() * (den / coords[i].get_den());
  return CycNumber(&ctx, std::move(num), den);
}

mpq_class CycNumber::coordinate(std::size_t i) const {
  mpq_class q(num_.at(i), den_);
  q.canonicalize();
  return q;
}

std::vector<mpq_class> CycNumber::coordinates() const {
  std::vector<mpq_class> out;
  out.reserve(num_.size());
  for (std::size_t i = 0; i < num_.size(); ++i) out.push_back(coordinate(i));
  return out;
}

std::vector<std::pair<mpq_class, std::uint32_t>> CycNumber::terms() const {
  std::vector<std::pair<mpq_class, std::uint32_t>> out;
  for (std::size_t i = 0; i < num_.size(); ++i) {
    if (num_[i] != 0) out.emplace_back(coordinate(i), static_cast<std::uint32_t>(i));
  }
  return out;
}

bool CycNumber::is_zero() const {
  for (const auto& c : num_) {
    if (c != 0) return false;
  }
  return true;
}

bool CycNumber::is_one() const { return is_rational() && den_ == 1 && num_[0] == 1; }

bool CycNumber::is_rational() const {
  for (std::size_t i = 1; i < num_.size(); ++i) {
    if (num_[i] != 0) return false;
  }
  return true;
}

CycNumber CycNumber::operator-() const {
  CycNumber out = *this;
  for (auto& c : out.num_) c = -c;
  return out;
}

CycNumber operator+(const CycNumber& a, const CycNumber& b) {
  a.check_same_field(b);
  std::vector<mpz_class> num(a.num_.size());
  if (a.den_ == b.den_) {
    for (std::size_t i = 0; i < num.size(); ++i) num[i] = a.num_[i] + b.num_[i];
    return CycNumber(a.ctx_, std::move(num), a.den_);
  }
  for (std::size_t i = 0; i < num.size(); ++i) num[i] = a.num_[i] * b.den_ + b.num_[i] * a.den_;
  return CycNumber(a.ctx_, std::move(num), a.den_ * b.den_);
}

CycNumber operator-(const CycNumber& a, const CycNumber& b) { return a + (-b); }

CycNumber operator*(const CycNumber& a, const CycNumber& b) {
  a.check_same_field(b);
  const std::size_t phi = a.num_.size();
  std::vector<mpz_class> full(2 * phi - 1);
  for (std::size_t i = 0; i < phi; ++i) {
    if (a.num_[i] == 0) continue;
    for (std::size_t j = 0; j < phi; ++j) {
      if (b.num_[j] == 0) continue;
      mpz_addmul(full[i + j].get_mpz_t(), a.num_[i].get_mpz_t(), b.num_[j].get_mpz_t());
    }
  }
  std::vector<mpz_class> num(full.begin(), full.begin() + static_cast<std::ptrdiff_t>(phi));
  for (std::size_t j = phi; j < full.size(); ++j) {
    if (full[j] == 0) continue;
    for (const auto& [i, c] : a.ctx_->reductions[j]) mpz_addmul(num[i].get_mpz_t(), full[j].get_mpz_t(), c.get_mpz_t());
  }
  return CycNumber(a.ctx_, std::move(num), a.den_ * b.den_);
}

CycNumber CycNumber::inverse() const {
  if (is_zero()) throw std::domain_error("CycNumber: inverse of zero");
  using polycore::RationalField;
  using Poly = polycore::UniPoly<RationalField>;
  const RationalField q;
  std::vector<mpq_class> modulus(ctx_->modulus.begin(), ctx_->modulus.end());
  const auto [g, s, t] = polycore::extended_gcd(Poly(q, coordinates()), Poly(q, std::move(modulus)));
  if (g.degree() != 0) throw std::logic_error("CycNumber: element not invertible modulo Phi_N");
  std::vector<mpq_class> coords(ctx_->phi);
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] = s[i];
  return from_coordinates(conductor(), coords);
}

CycNumber CycNumber::pow(std::int64_t n) const {
  if (n < 0) return inverse().pow(-n);
  CycNumber result = one(conductor());
  CycNumber base = *this;
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

bool CycNumber::operator==(const CycNumber& o) const {
  check_same_field(o);
  return den_ == o.den_ && num_ == o.num_;
}

std::size_t CycNumber::hash() const {
  std::size_t h = std::hash<std::uint32_t>{}(conductor());
  auto mix = [&h](std::size_t v) { h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
  mix(polycore::hash_mpz(den_));
  for (const auto& c : num_) mix(polycore::hash_mpz(c));
  return h;
}

std::string CycNumber::to_string() const {
  std::ostringstream out;
  out << "zeta" << conductor() << ": [";
  const char* sep = "";
  for (const auto& [c, i] : terms()) {
    out << sep << '(' << c.get_str() << ',' << i << ')';
    sep = ", ";
  }
  out << ']';
  return out.str();
}

CycNumber root_of_unity(const CycPhase& phase, std::uint32_t conductor) {
  if (conductor == 0 || conductor % static_cast<std::uint64_t>(phase.denominator()) != 0) {
    throw ConductorMismatch("root_of_unity: denominator " + std::to_string(phase.denominator()) +
                            " does not divide conductor " + std::to_string(conductor));
  }
  return CycNumber::zeta_power(conductor, phase.numerator() * (conductor / phase.denominator()));
}

std::optional<std::uint64_t> scalar_order(const CycNumber& z) {
  if (z.is_zero()) throw std::domain_error("scalar_order: zero has no multiplicative order");
  // Every root of unity in Q(zeta_N) has order dividing lcm(2, N).
  const std::uint64_t bound = z.conductor() % 2 == 0 ? z.conductor() : 2ULL * z.conductor();
  for (std::uint64_t d = 1; d <= bound; ++d) {
    if (bound % d == 0 && z.pow(static_cast<std::int64_t>(d)).is_one()) return d;
  }
  return std::nullopt;
}

CycNumber embed(const CycNumber& z, std::uint32_t multiplier) {
  if (multiplier == 0) throw std::invalid_argument("embed: multiplier must be positive");
  const std::uint32_t target = z.conductor() * multiplier;
  CycNumber out = CycNumber::zero(target);
  for (const auto& [c, i] : z.terms()) {
    out += CycNumber::zeta_power(target, static_cast<std::int64_t>(i) * multiplier) * CycNumber::from_rational(target, c);
  }
  return out;
}

}  // namespace curvegroup::cyclo
