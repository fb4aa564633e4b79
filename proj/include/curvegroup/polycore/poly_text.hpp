#pragma once

#include <cctype>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "curvegroup/polycore/multipoly.hpp"

namespace curvegroup::polycore {

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline const std::vector<std::string>& stxy_names() {
  static const std::vector<std::string> names{"s", "t", "x", "y"};
  return names;
}
inline const std::vector<std::string>& xi_names() {
  static const std::vector<std::string> names{"xi0", "xi1", "xi2"};
  return names;
}
inline const std::vector<std::string>& xyz_names() {
  static const std::vector<std::string> names{"x", "y", "z"};
  return names;
}

/// Prints terms as `c*s^a*t^b` in descending grevlex order, joined by
/// ` + ` / ` - `. The zero polynomial prints as `0`.
template <class Field>
std::string to_text(const MultiPoly<Field>& f, std::span<const std::string> names) {
  if (names.size() < static_cast<std::size_t>(f.nvars())) throw std::invalid_argument("to_text: missing names");
  if (f.is_zero()) return "0";
  const Field& field = f.field();
  std::ostringstream out;
  bool first = true;
  for (const auto& t : f.terms()) {
    const bool negative = field.is_negative(t.coeff);
    const auto magnitude = negative ? field.neg(t.coeff) : t.coeff;
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    bool need_star = false;
    if (!field.is_one(magnitude) || t.monomial.is_one()) {
      out << field.to_string(magnitude);
      need_star = true;
    }
    for (int v = 0; v < f.nvars(); ++v) {
      const int e = t.monomial[v];
      if (e == 0) continue;
      if (need_star) out << '*';
      out << names[static_cast<std::size_t>(v)];
      if (e != 1) out << '^' << e;
      need_star = true;
    }
  }
  return out.str();
}

/// Inverse of to_text. Accepts any product of rational constants and
/// variable powers per term; whitespace is ignored.
template <class Field>
MultiPoly<Field> parse_poly(std::string_view text, const Field& field, std::span<const std::string> names) {
  const int nvars = static_cast<int>(names.size());
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) throw ParseError("empty polynomial text");
  std::size_t pos = 0;

  auto read_uint = [&]() -> std::string {
    const std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) throw ParseError("expected a number at offset " + std::to_string(start));
    return s.substr(start, pos - start);
  };

  std::vector<typename MultiPoly<Field>::Term> terms;
  bool first = true;
  while (pos < s.size()) {
    bool negative = false;
    if (s[pos] == '+' || s[pos] == '-') {
      negative = s[pos] == '-';
      ++pos;
    } else if (!first) {
      throw ParseError("expected '+' or '-' at offset " + std::to_string(pos));
    }
    first = false;
    mpq_class coeff(negative ? -1 : 1);
    Monomial mono;
    bool expect_factor = true;
    while (expect_factor) {
      if (pos >= s.size()) throw ParseError("unexpected end of polynomial text");
      if (std::isdigit(static_cast<unsigned char>(s[pos]))) {
        mpq_class value{mpz_class(read_uint())};
        if (pos < s.size() && s[pos] == '/') {
          ++pos;
          mpz_class den(read_uint());
          if (den == 0) throw ParseError("zero denominator");
          value /= mpq_class(den);
        }
        coeff *= value;
      } else if (std::isalpha(static_cast<unsigned char>(s[pos])) || s[pos] == '_') {
        const std::size_t start = pos;
        while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_')) ++pos;
        const std::string name = s.substr(start, pos - start);
        int index = -1;
        for (int v = 0; v < nvars; ++v) {
          if (names[static_cast<std::size_t>(v)] == name) index = v;
        }
        if (index < 0) throw ParseError("unknown variable '" + name + "'");
        int exponent = 1;
        if (pos < s.size() && s[pos] == '^') {
          ++pos;
          exponent = std::stoi(read_uint());
        }
        mono.set(index, mono[index] + exponent);
      } else {
        throw ParseError("unexpected character '" + std::string(1, s[pos]) + "'");
      }
      expect_factor = pos < s.size() && s[pos] == '*';
      if (expect_factor) ++pos;
    }
    terms.push_back({mono, field.from_rational(coeff)});
  }
  return MultiPoly<Field>::from_terms(field, nvars, std::move(terms));
}

}  // namespace curvegroup::polycore
