#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>

namespace curvegroup::polycore {

inline constexpr int kMaxVariables = 4;

/// Exponent vector over at most kMaxVariables variables. Unused trailing
/// slots are zero, so monomials from rings with fewer variables compare
/// consistently.
class Monomial {
 public:
  Monomial() { exps_.fill(0); }

  Monomial(std::initializer_list<int> exps) : Monomial(std::span<const int>(exps.begin(), exps.size())) {}

  explicit Monomial(std::span<const int> exps) {
    if (exps.size() > static_cast<std::size_t>(kMaxVariables)) {
      throw std::invalid_argument("Monomial: too many variables");
    }
    exps_.fill(0);
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] < 0) throw std::invalid_argument("Monomial: negative exponent");
      exps_[i] = exps[i];
      degree_ += exps[i];
    }
  }

  static Monomial variable(int index, int exponent = 1) {
    Monomial m;
    m.set(index, exponent);
    return m;
  }

  int operator[](int i) const { return exps_[static_cast<std::size_t>(i)]; }

  void set(int i, int value) {
    if (i < 0 || i >= kMaxVariables || value < 0) throw std::out_of_range("Monomial::set");
    degree_ += value - exps_[static_cast<std::size_t>(i)];
    exps_[static_cast<std::size_t>(i)] = value;
  }

  int degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }

  long weighted_degree(std::span<const long> weights) const {
    long d = 0;
    for (std::size_t i = 0; i < weights.size() && i < exps_.size(); ++i) d += weights[i] * exps_[i];
    return d;
  }

  bool divides(const Monomial& other) const {
    for (int i = 0; i < kMaxVariables; ++i) {
      if (exps_[i] > other.exps_[i]) return false;
    }
    return true;
  }

  Monomial operator*(const Monomial& other) const {
    Monomial r;
    for (int i = 0; i < kMaxVariables; ++i) r.exps_[i] = exps_[i] + other.exps_[i];
    r.degree_ = degree_ + other.degree_;
    return r;
  }

  /// Requires other.divides(*this).
  Monomial operator/(const Monomial& other) const {
    Monomial r;
    for (int i = 0; i < kMaxVariables; ++i) r.exps_[i] = exps_[i] - other.exps_[i];
    r.degree_ = degree_ - other.degree_;
    return r;
  }

  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (int i = 0; i < kMaxVariables; ++i) r.set(i, a.exps_[i] > b.exps_[i] ? a.exps_[i] : b.exps_[i]);
    return r;
  }

  friend bool coprime(const Monomial& a, const Monomial& b) {
    for (int i = 0; i < kMaxVariables; ++i) {
      if (a.exps_[i] > 0 && b.exps_[i] > 0) return false;
    }
    return true;
  }

  bool operator==(const Monomial& other) const { return exps_ == other.exps_; }

  std::size_t hash() const {
    std::size_t h = 0;
    for (int e : exps_) h = h * 1000003ULL + static_cast<std::size_t>(e);
    return h;
  }

 private:
  std::array<int, kMaxVariables> exps_{};
  int degree_ = 0;
};

/// Graded reverse-lexicographic comparison with variable 0 largest.
/// Returns a negative, zero, or positive value.
inline int grevlex_compare(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
  for (int i = kMaxVariables - 1; i >= 0; --i) {
    if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
  }
  return 0;
}

struct GrevlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return grevlex_compare(a, b) > 0; }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

}  // namespace curvegroup::polycore
