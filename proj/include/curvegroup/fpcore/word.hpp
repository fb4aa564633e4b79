#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace curvegroup::fpcore {

inline constexpr int kAlpha = 0;
inline constexpr int kBeta = 1;
/// Text letters are `a`..`z`; the group-theoretic code only ever uses a, b.
inline constexpr int kMaxGenerators = 26;

/// One run g^e of a word, e != 0.
struct Syllable {
  int generator;
  std::int64_t exponent;

  bool operator==(const Syllable&) const = default;
};

class WordParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Freely reduced word, run-length encoded: adjacent syllables have
/// distinct generators and no exponent is zero. Empty means identity.
class Word {
 public:
  Word() = default;

  static Word generator(int g, std::int64_t exponent = 1);
  static Word alpha(std::int64_t exponent = 1) { return generator(kAlpha, exponent); }
  static Word beta(std::int64_t exponent = 1) { return generator(kBeta, exponent); }

  /// Parses whitespace-separated tokens `a`, `b^-2`, ...; `1` or an empty
  /// string is the identity.
  static Word parse(std::string_view text);

  const std::vector<Syllable>& syllables() const { return syllables_; }
  bool is_identity() const { return syllables_.empty(); }
  /// Number of letters g^{+-1}.
  std::uint64_t length() const;
  /// Sum of exponents of generator g.
  std::int64_t exponent_sum(int g) const;
  int max_generator() const;

  /// Letter codes 2g (g) and 2g+1 (g^-1), one per letter.
  std::vector<int> letters() const;

  std::string to_string() const;

  Word inverse() const;
  Word power(std::int64_t n) const;

  friend Word operator*(const Word& a, const Word& b);
  bool operator==(const Word&) const = default;

 private:
  friend Word free_reduce(std::span<const Syllable> syllables);
  void append(const Syllable& s);

  std::vector<Syllable> syllables_;
};

/// Free reduction of an arbitrary syllable sequence (zero exponents and
/// repeated generators allowed).
Word free_reduce(std::span<const Syllable> syllables);

inline Word multiply(const Word& a, const Word& b) { return a * b; }
inline Word invert(const Word& w) { return w.inverse(); }
inline Word power(const Word& w, std::int64_t n) { return w.power(n); }

/// x y x^-1 y^-1
Word commutator(const Word& x, const Word& y);

/// Word from letter codes (see Word::letters).
Word word_from_letters(std::span<const int> letters);

}  // namespace curvegroup::fpcore
