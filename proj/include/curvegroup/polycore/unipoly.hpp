#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

#include "curvegroup/polycore/field.hpp"
#include "curvegroup/polycore/linear_algebra.hpp"

namespace curvegroup::polycore {

/// Dense univariate polynomial, coefficients stored low degree first with no
/// trailing zeros.
template <class Field>
class UniPoly {
 public:
  using Coeff = typename Field::Element;

  explicit UniPoly(Field field) : field_(std::move(field)) {}
  UniPoly(Field field, std::vector<Coeff> coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs)) { trim(); }

  static UniPoly monomial(const Field& field, std::size_t degree, const Coeff& c) {
    std::vector<Coeff> coeffs(degree + 1, field.zero());
    coeffs[degree] = c;
    return UniPoly(field, std::move(coeffs));
  }

  const Field& field() const { return field_; }
  const std::vector<Coeff>& coefficients() const { return coeffs_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  Coeff operator[](std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : field_.zero(); }
  const Coeff& leading_coefficient() const {
    if (is_zero()) throw std::logic_error("leading coefficient of zero polynomial");
    return coeffs_.back();
  }

  Coeff evaluate(const Coeff& x) const {
    auto acc = field_.zero();
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = field_.add(field_.mul(acc, x), *it);
    return acc;
  }

  UniPoly monic() const {
    if (is_zero()) return *this;
    return scaled(field_.inv(leading_coefficient()));
  }

  UniPoly scaled(const Coeff& c) const {
    std::vector<Coeff> out;
    out.reserve(coeffs_.size());
    for (const auto& a : coeffs_) out.push_back(field_.mul(a, c));
    return UniPoly(field_, std::move(out));
  }

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<Coeff> out(std::max(a.coeffs_.size(), b.coeffs_.size()), a.field_.zero());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.field_.add(a[i], b[i]);
    return UniPoly(a.field_, std::move(out));
  }

  friend UniPoly operator-(const UniPoly& a, const UniPoly& b) {
    std::vector<Coeff> out(std::max(a.coeffs_.size(), b.coeffs_.size()), a.field_.zero());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.field_.sub(a[i], b[i]);
    return UniPoly(a.field_, std::move(out));
  }

  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly(a.field_);
    const Field& f = a.field_;
    std::vector<Coeff> out(a.coeffs_.size() + b.coeffs_.size() - 1, f.zero());
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (f.is_zero(a.coeffs_[i])) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
        out[i + j] = f.add(out[i + j], f.mul(a.coeffs_[i], b.coeffs_[j]));
      }
    }
    return UniPoly(f, std::move(out));
  }

  friend bool operator==(const UniPoly& a, const UniPoly& b) {
    if (a.coeffs_.size() != b.coeffs_.size()) return false;
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (!a.field_.equal(a.coeffs_[i], b.coeffs_[i])) return false;
    }
    return true;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && field_.is_zero(coeffs_.back())) coeffs_.pop_back();
  }

  Field field_;
  std::vector<Coeff> coeffs_;
};

/// Euclidean division a = q*b + r with deg r < deg b.
template <class Field>
std::pair<UniPoly<Field>, UniPoly<Field>> divmod(const UniPoly<Field>& a, const UniPoly<Field>& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  const Field& f = a.field();
  std::vector<typename Field::Element> rem = a.coefficients();
  const int db = b.degree();
  if (a.degree() < db) return {UniPoly<Field>(f), a};
  std::vector<typename Field::Element> quot(static_cast<std::size_t>(a.degree() - db + 1), f.zero());
  const auto lead_inv = f.inv(b.leading_coefficient());
  for (int i = a.degree(); i >= db; --i) {
    const auto c = f.mul(rem[static_cast<std::size_t>(i)], lead_inv);
    quot[static_cast<std::size_t>(i - db)] = c;
    if (f.is_zero(c)) continue;
    for (int j = 0; j <= db; ++j) {
      auto& slot = rem[static_cast<std::size_t>(i - db + j)];
      slot = f.sub(slot, f.mul(c, b[static_cast<std::size_t>(j)]));
    }
  }
  rem.resize(static_cast<std::size_t>(db));
  return {UniPoly<Field>(f, std::move(quot)), UniPoly<Field>(f, std::move(rem))};
}

/// Monic gcd; gcd(0, 0) = 0.
template <class Field>
UniPoly<Field> gcd(UniPoly<Field> a, UniPoly<Field> b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// Returns (g, s, t) with s*a + t*b = g and g the monic gcd.
template <class Field>
std::tuple<UniPoly<Field>, UniPoly<Field>, UniPoly<Field>> extended_gcd(const UniPoly<Field>& a,
                                                                        const UniPoly<Field>& b) {
  const Field& f = a.field();
  UniPoly<Field> r0 = a, r1 = b;
  UniPoly<Field> s0(f, {f.one()}), s1(f);
  UniPoly<Field> t0(f), t1(f, {f.one()});
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::exchange(r1, std::move(r));
    s0 = std::exchange(s1, s0 - q * s1);
    t0 = std::exchange(t1, t0 - q * t1);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  const auto inv = f.inv(r0.leading_coefficient());
  return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

template <class Field>
UniPoly<Field> derivative(const UniPoly<Field>& p) {
  const Field& f = p.field();
  std::vector<typename Field::Element> out;
  for (std::size_t i = 1; i < p.coefficients().size(); ++i) {
    out.push_back(f.mul(p.coefficients()[i], f.from_int(static_cast<long>(i))));
  }
  return UniPoly<Field>(f, std::move(out));
}

/// p / gcd(p, p'), made monic. Valid when deg p is below the characteristic.
template <class Field>
UniPoly<Field> squarefree_part(const UniPoly<Field>& p) {
  if (p.is_zero()) throw std::domain_error("squarefree_part of the zero polynomial");
  if (p.degree() == 0) return UniPoly<Field>(p.field(), {p.field().one()});
  const auto g = gcd(p, derivative(p));
  return divmod(p, g).first.monic();
}

/// Sylvester determinant of coefficient vectors with prescribed formal
/// degrees (coefficients low degree first, padded with zeros).
template <class Field>
typename Field::Element sylvester_resultant(const Field& f, std::span<const typename Field::Element> a,
                                            std::size_t deg_a, std::span<const typename Field::Element> b,
                                            std::size_t deg_b) {
  const std::size_t n = deg_a + deg_b;
  if (n == 0) return f.one();
  DenseMatrix<Field> m(f, n, n);
  auto coeff = [&](std::span<const typename Field::Element> c, std::size_t i) {
    return i < c.size() ? c[i] : f.zero();
  };
  for (std::size_t row = 0; row < deg_b; ++row) {
    for (std::size_t k = 0; k <= deg_a; ++k) m.at(row, row + k) = coeff(a, deg_a - k);
  }
  for (std::size_t row = 0; row < deg_a; ++row) {
    for (std::size_t k = 0; k <= deg_b; ++k) m.at(deg_b + row, row + k) = coeff(b, deg_b - k);
  }
  return determinant(std::move(m));
}

/// Resultant of two nonzero polynomials as the Sylvester determinant.
template <class Field>
typename Field::Element resultant(const UniPoly<Field>& a, const UniPoly<Field>& b) {
  if (a.is_zero() || b.is_zero()) throw std::domain_error("resultant of the zero polynomial");
  return sylvester_resultant(a.field(), std::span(a.coefficients()), static_cast<std::size_t>(a.degree()),
                             std::span(b.coefficients()), static_cast<std::size_t>(b.degree()));
}

/// Lagrange interpolation through (xs[i], ys[i]) with distinct xs (Newton form).
template <class Field>
UniPoly<Field> interpolate(const Field& f, std::span<const typename Field::Element> xs,
                           std::span<const typename Field::Element> ys) {
  if (xs.size() != ys.size()) throw std::invalid_argument("interpolate: size mismatch");
  const std::size_t n = xs.size();
  std::vector<typename Field::Element> dd(ys.begin(), ys.end());
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t i = n - 1; i >= level; --i) {
      dd[i] = f.div(f.sub(dd[i], dd[i - 1]), f.sub(xs[i], xs[i - level]));
    }
  }
  UniPoly<Field> result(f);
  for (std::size_t i = n; i-- > 0;) {
    result = result * UniPoly<Field>(f, {f.neg(xs[i]), f.one()}) + UniPoly<Field>(f, {dd[i]});
  }
  return result;
}

}  // namespace curvegroup::polycore
