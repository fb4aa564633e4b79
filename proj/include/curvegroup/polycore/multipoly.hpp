#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "curvegroup/polycore/field.hpp"
#include "curvegroup/polycore/monomial.hpp"

namespace curvegroup::polycore {

/// Sparse multivariate polynomial over `Field`. Terms are kept sorted in
/// descending graded reverse-lexicographic order and never carry a zero
/// coefficient, so equality and hashing are structural.
template <class Field>
class MultiPoly {
 public:
  using Coeff = typename Field::Element;

  struct Term {
    Monomial monomial;
    Coeff coeff;
  };

  MultiPoly(Field field, int nvars) : field_(std::move(field)), nvars_(nvars) {
    if (nvars < 0 || nvars > kMaxVariables) throw std::invalid_argument("MultiPoly: unsupported variable count");
  }

  static MultiPoly constant(const Field& field, int nvars, const Coeff& c) {
    MultiPoly p(field, nvars);
    if (!field.is_zero(c)) p.terms_.push_back({Monomial(), c});
    return p;
  }

  static MultiPoly variable(const Field& field, int nvars, int index) {
    if (index < 0 || index >= nvars) throw std::out_of_range("MultiPoly::variable");
    MultiPoly p(field, nvars);
    p.terms_.push_back({Monomial::variable(index), field.one()});
    return p;
  }

  static MultiPoly term(const Field& field, int nvars, const Monomial& m, const Coeff& c) {
    MultiPoly p(field, nvars);
    p.check_monomial(m);
    if (!field.is_zero(c)) p.terms_.push_back({m, c});
    return p;
  }

  /// Collects like terms, drops zeros and sorts.
  static MultiPoly from_terms(const Field& field, int nvars, std::vector<Term> terms) {
    MultiPoly p(field, nvars);
    std::unordered_map<Monomial, Coeff, MonomialHash> acc;
    acc.reserve(terms.size());
    for (auto& t : terms) {
      p.check_monomial(t.monomial);
      auto [it, inserted] = acc.try_emplace(t.monomial, t.coeff);
      if (!inserted) it->second = field.add(it->second, t.coeff);
    }
    p.terms_.reserve(acc.size());
    for (auto& [m, c] : acc) {
      if (!field.is_zero(c)) p.terms_.push_back({m, std::move(c)});
    }
    p.sort_terms();
    return p;
  }

  /// Trusts that `terms` are already sorted, distinct and nonzero.
  static MultiPoly from_sorted_terms(const Field& field, int nvars, std::vector<Term> terms) {
    MultiPoly p(field, nvars);
    p.terms_ = std::move(terms);
    return p;
  }

  const Field& field() const { return field_; }
  int nvars() const { return nvars_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// -1 for the zero polynomial.
  int total_degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, t.monomial.degree());
    return d;
  }

  int degree_in(int var) const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, t.monomial[var]);
    return d;
  }

  bool is_homogeneous() const {
    for (const auto& t : terms_) {
      if (t.monomial.degree() != terms_.front().monomial.degree()) return false;
    }
    return true;
  }

  const Term& leading_term() const {
    if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
    return terms_.front();
  }
  const Monomial& leading_monomial() const { return leading_term().monomial; }
  const Coeff& leading_coefficient() const { return leading_term().coeff; }

  Coeff coefficient(const Monomial& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m, [](const Term& t, const Monomial& key) {
      return grevlex_compare(t.monomial, key) > 0;
    });
    if (it != terms_.end() && it->monomial == m) return it->coeff;
    return field_.zero();
  }

  MultiPoly operator-() const {
    MultiPoly r = *this;
    for (auto& t : r.terms_) t.coeff = field_.neg(t.coeff);
    return r;
  }

  MultiPoly& operator+=(const MultiPoly& other) {
    add_scaled(field_.one(), Monomial(), other);
    return *this;
  }

  MultiPoly& operator-=(const MultiPoly& other) {
    add_scaled(field_.neg(field_.one()), Monomial(), other);
    return *this;
  }

  MultiPoly& operator*=(const MultiPoly& other) {
    *this = *this * other;
    return *this;
  }

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }

  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.check_compatible(b);
    if (a.is_zero() || b.is_zero()) return MultiPoly(a.field_, a.nvars_);
    if (a.size() == 1) return b.mul_term(a.terms_[0].monomial, a.terms_[0].coeff);
    if (b.size() == 1) return a.mul_term(b.terms_[0].monomial, b.terms_[0].coeff);
    std::unordered_map<Monomial, Coeff, MonomialHash> acc;
    acc.reserve(a.size() * b.size());
    const Field& f = a.field_;
    for (const auto& ta : a.terms_) {
      for (const auto& tb : b.terms_) {
        Coeff c = f.mul(ta.coeff, tb.coeff);
        auto [it, inserted] = acc.try_emplace(ta.monomial * tb.monomial, c);
        if (!inserted) it->second = f.add(it->second, c);
      }
    }
    MultiPoly r(f, a.nvars_);
    r.terms_.reserve(acc.size());
    for (auto& [m, c] : acc) {
      if (!f.is_zero(c)) r.terms_.push_back({m, std::move(c)});
    }
    r.sort_terms();
    return r;
  }

  MultiPoly scaled(const Coeff& c) const { return mul_term(Monomial(), c); }

  MultiPoly mul_term(const Monomial& m, const Coeff& c) const {
    MultiPoly r(field_, nvars_);
    if (field_.is_zero(c)) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.monomial * m, field_.mul(t.coeff, c)});
    return r;
  }

  /// this += c * m * g, in a single merge pass.
  void add_scaled(const Coeff& c, const Monomial& m, const MultiPoly& g) {
    check_compatible(g);
    if (field_.is_zero(c) || g.is_zero()) return;
    std::vector<Term> out;
    out.reserve(terms_.size() + g.terms_.size());
    auto it = terms_.begin();
    for (const auto& tg : g.terms_) {
      Monomial shifted = tg.monomial * m;
      while (it != terms_.end() && grevlex_compare(it->monomial, shifted) > 0) out.push_back(std::move(*it++));
      Coeff scaled = field_.mul(c, tg.coeff);
      if (it != terms_.end() && it->monomial == shifted) {
        Coeff sum = field_.add(it->coeff, scaled);
        if (!field_.is_zero(sum)) out.push_back({shifted, std::move(sum)});
        ++it;
      } else {
        out.push_back({shifted, std::move(scaled)});
      }
    }
    while (it != terms_.end()) out.push_back(std::move(*it++));
    terms_ = std::move(out);
  }

  Term pop_leading_term() {
    Term t = std::move(terms_.front());
    terms_.erase(terms_.begin());
    return t;
  }

  MultiPoly monic() const {
    if (is_zero()) return *this;
    return scaled(field_.inv(leading_coefficient()));
  }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    if (!(a.field_ == b.field_) || a.nvars_ != b.nvars_ || a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (!(a.terms_[i].monomial == b.terms_[i].monomial) || !a.field_.equal(a.terms_[i].coeff, b.terms_[i].coeff)) {
        return false;
      }
    }
    return true;
  }

  std::size_t hash() const {
    std::size_t h = static_cast<std::size_t>(nvars_);
    for (const auto& t : terms_) h = h * 0x100000001b3ULL ^ (t.monomial.hash() + 31 * field_.hash(t.coeff));
    return h;
  }

  void check_compatible(const MultiPoly& other) const {
    if (!(field_ == other.field_)) {
      throw DomainMismatch("polynomials over " + field_.name() + " and " + other.field_.name());
    }
    if (nvars_ != other.nvars_) throw DomainMismatch("polynomials in different variable counts");
  }

 private:
  void sort_terms() {
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& x, const Term& y) { return grevlex_compare(x.monomial, y.monomial) > 0; });
  }

  void check_monomial(const Monomial& m) const {
    for (int i = nvars_; i < kMaxVariables; ++i) {
      if (m[i] != 0) throw std::invalid_argument("monomial uses a variable outside the ring");
    }
  }

  Field field_;
  int nvars_;
  std::vector<Term> terms_;
};

using QPoly = MultiPoly<RationalField>;
using FpPoly = MultiPoly<PrimeField>;

template <class Field>
MultiPoly<Field> pow(const MultiPoly<Field>& f, unsigned exponent) {
  MultiPoly<Field> result = MultiPoly<Field>::constant(f.field(), f.nvars(), f.field().one());
  MultiPoly<Field> base = f;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

/// Returns the quotient when b divides a exactly, std::nullopt otherwise.
template <class Field>
std::optional<MultiPoly<Field>> exact_divide(const MultiPoly<Field>& a, const MultiPoly<Field>& b) {
  a.check_compatible(b);
  if (b.is_zero()) throw std::domain_error("exact_divide by the zero polynomial");
  const Field& f = a.field();
  MultiPoly<Field> remainder = a;
  std::vector<typename MultiPoly<Field>::Term> quotient;
  const auto& lead = b.leading_term();
  const auto lead_inv = f.inv(lead.coeff);
  while (!remainder.is_zero()) {
    const auto& top = remainder.leading_term();
    if (!lead.monomial.divides(top.monomial)) return std::nullopt;
    const Monomial m = top.monomial / lead.monomial;
    const auto c = f.mul(top.coeff, lead_inv);
    quotient.push_back({m, c});
    remainder.add_scaled(f.neg(c), m, b);
  }
  return MultiPoly<Field>::from_terms(f, a.nvars(), std::move(quotient));
}

template <class Field>
MultiPoly<Field> derivative(const MultiPoly<Field>& f, int var) {
  if (var < 0 || var >= f.nvars()) throw std::out_of_range("derivative: variable index");
  std::vector<typename MultiPoly<Field>::Term> out;
  for (const auto& t : f.terms()) {
    const int e = t.monomial[var];
    if (e == 0) continue;
    Monomial m = t.monomial;
    m.set(var, e - 1);
    out.push_back({m, f.field().mul(t.coeff, f.field().from_int(e))});
  }
  return MultiPoly<Field>::from_terms(f.field(), f.nvars(), std::move(out));
}

template <class Field>
std::vector<MultiPoly<Field>> partials(const MultiPoly<Field>& f) {
  std::vector<MultiPoly<Field>> grad;
  grad.reserve(static_cast<std::size_t>(f.nvars()));
  for (int i = 0; i < f.nvars(); ++i) grad.push_back(derivative(f, i));
  return grad;
}

/// Replaces variable i of f by images[i]; every image must live in the same
/// target ring. Powers of each image are cached.
template <class Field>
MultiPoly<Field> substitute(const MultiPoly<Field>& f, std::span<const MultiPoly<Field>> images) {
  if (images.size() != static_cast<std::size_t>(f.nvars())) {
    throw std::invalid_argument("substitute: need one image per variable");
  }
  if (images.empty()) return f;
  const Field& field = images[0].field();
  const int target_vars = images[0].nvars();
  for (const auto& img : images) img.check_compatible(images[0]);
  if (!(field == f.field())) throw DomainMismatch("substitute: coefficient domains differ");

  std::vector<std::vector<MultiPoly<Field>>> powers(images.size());
  auto power_of = [&](std::size_t var, int e) -> const MultiPoly<Field>& {
    auto& cache = powers[var];
    if (cache.empty()) cache.push_back(MultiPoly<Field>::constant(field, target_vars, field.one()));
    while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * images[var]);
    return cache[static_cast<std::size_t>(e)];
  };

  MultiPoly<Field> result(field, target_vars);
  for (const auto& t : f.terms()) {
    MultiPoly<Field> product = MultiPoly<Field>::constant(field, target_vars, t.coeff);
    for (std::size_t v = 0; v < images.size(); ++v) {
      const int e = t.monomial[static_cast<int>(v)];
      if (e > 0) product = product * power_of(v, e);
    }
    result += product;
  }
  return result;
}

template <class Field>
typename Field::Element evaluate(const MultiPoly<Field>& f, std::span<const typename Field::Element> point) {
  const Field& field = f.field();
  auto value = field.zero();
  for (const auto& t : f.terms()) {
    auto c = t.coeff;
    for (int v = 0; v < f.nvars(); ++v) {
      for (int e = 0; e < t.monomial[v]; ++e) c = field.mul(c, point[static_cast<std::size_t>(v)]);
    }
    value = field.add(value, c);
  }
  return value;
}

/// Reduces a rational polynomial modulo p; fails loudly if p divides a denominator.
inline FpPoly to_prime_field(const QPoly& f, const PrimeField& field) {
  std::vector<FpPoly::Term> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) terms.push_back({t.monomial, field.from_rational(t.coeff)});
  return FpPoly::from_terms(field, f.nvars(), std::move(terms));
}

/// Sets variable `var` to 1 and removes it from the ring.
template <class Field>
MultiPoly<Field> dehomogenize(const MultiPoly<Field>& f, int var) {
  std::vector<typename MultiPoly<Field>::Term> terms;
  for (const auto& t : f.terms()) {
    Monomial m;
    int j = 0;
    for (int i = 0; i < f.nvars(); ++i) {
      if (i == var) continue;
      m.set(j++, t.monomial[i]);
    }
    terms.push_back({m, t.coeff});
  }
  return MultiPoly<Field>::from_terms(f.field(), f.nvars() - 1, std::move(terms));
}

/// Weights per variable for a weighted grading; at least one must be positive.
class WeightedGrading {
 public:
  explicit WeightedGrading(std::vector<long> weights) : weights_(std::move(weights)) {
    bool positive = false;
    for (long w : weights_) {
      if (w < 0) throw std::invalid_argument("WeightedGrading: negative weight");
      positive = positive || w > 0;
    }
    if (!positive) throw std::invalid_argument("WeightedGrading: needs a positive weight");
  }

  std::span<const long> weights() const { return weights_; }
  long degree_of(const Monomial& m) const { return m.weighted_degree(weights_); }

 private:
  std::vector<long> weights_;
};

/// Maximum weighted degree over the terms; std::nullopt for the zero polynomial.
template <class Field>
std::optional<long> weighted_degree(const MultiPoly<Field>& f, const WeightedGrading& w) {
  if (f.is_zero()) return std::nullopt;
  long d = w.degree_of(f.terms().front().monomial);
  for (const auto& t : f.terms()) d = std::max(d, w.degree_of(t.monomial));
  return d;
}

template <class Field>
bool is_weighted_homogeneous(const MultiPoly<Field>& f, const WeightedGrading& w) {
  if (f.is_zero()) return true;
  const long d = w.degree_of(f.terms().front().monomial);
  return std::all_of(f.terms().begin(), f.terms().end(),
                     [&](const auto& t) { return w.degree_of(t.monomial) == d; });
}

/// Raised by substitute_homogeneous when a form has the wrong degree.
class DegreeMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Substitutes homogeneous forms for the variables of a weighted-homogeneous
/// f. Form i must be homogeneous of degree weights[i] (the zero form is
/// accepted for any degree). The result is checked to be homogeneous of the
/// weighted degree of f.
template <class Field>
MultiPoly<Field> substitute_homogeneous(const MultiPoly<Field>& f, std::span<const MultiPoly<Field>> forms,
                                        const WeightedGrading& weights) {
  if (forms.size() != static_cast<std::size_t>(f.nvars()) || weights.weights().size() != forms.size()) {
    throw std::invalid_argument("substitute_homogeneous: arity mismatch");
  }
  for (std::size_t i = 0; i < forms.size(); ++i) {
    const auto& form = forms[i];
    if (form.is_zero()) continue;
    if (!form.is_homogeneous() || form.total_degree() != weights.weights()[i]) {
      throw DegreeMismatch("form " + std::to_string(i) + " has degree " + std::to_string(form.total_degree()) +
                           ", expected homogeneous of degree " + std::to_string(weights.weights()[i]));
    }
  }
  if (!is_weighted_homogeneous(f, weights)) {
    throw std::invalid_argument("substitute_homogeneous: f is not weighted homogeneous");
  }
  MultiPoly<Field> result = substitute(f, forms);
  if (!result.is_zero() && (!result.is_homogeneous() || result.total_degree() != *weighted_degree(f, weights))) {
    throw std::logic_error("substitute_homogeneous: result is not homogeneous of the expected degree");
  }
  return result;
}

}  // namespace curvegroup::polycore
