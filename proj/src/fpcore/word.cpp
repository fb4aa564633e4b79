#include "curvegroup/fpcore/word.hpp"

#include <cctype>
#include <cstdlib>
#include <limits>
#include <sstream>

namespace curvegroup::fpcore {

namespace {

void check_generator(int g) {
  if (g < 0 || g >= kMaxGenerators) throw std::out_of_range("generator index " + std::to_string(g));
}

}  // namespace

void Word::append(const Syllable& s) {
  if (s.exponent == 0) return;
  check_generator(s.generator);
  if (!syllables_.empty() && syllables_.back().generator == s.generator) {
    syllables_.back().exponent += s.exponent;
    if (syllables_.back().exponent == 0) syllables_.pop_back();
  } else {
    syllables_.push_back(s);
  }
}

Word free_reduce(std::span<const Syllable> syllables) {
  Word w;
  for (const auto& s : syllables) w.append(s);
  return w;
}

Word Word::generator(int g, std::int64_t exponent) {
  const Syllable s{g, exponent};
  return free_reduce(std::span(&s, 1));
}

std::uint64_t Word::length() const {
  std::uint64_t n = 0;
  for (const auto& s : syllables_) n += static_cast<std::uint64_t>(s.exponent < 0 ? -s.exponent : s.exponent);
  return n;
}

std::int64_t Word::exponent_sum(int g) const {
  std::int64_t sum = 0;
  for (const auto& s : syllables_) {
    if (s.generator == g) sum += s.exponent;
  }
  return sum;
}

int Word::max_generator() const {
  int m = -1;
  for (const auto& s : syllables_) m = std::max(m, s.generator);
  return m;
}

std::vector<int> Word::letters() const {
  std::vector<int> out;
  out.reserve(length());
  for (const auto& s : syllables_) {
    const int code = 2 * s.generator + (s.exponent < 0 ? 1 : 0);
    const std::int64_t n = s.exponent < 0 ? -s.exponent : s.exponent;
    for (std::int64_t i = 0; i < n; ++i) out.push_back(code);
  }
  return out;
}

Word word_from_letters(std::span<const int> letters) {
  std::vector<Syllable> syllables;
  syllables.reserve(letters.size());
  for (int code : letters) syllables.push_back({code / 2, (code % 2) ? -1 : 1});
  return free_reduce(syllables);
}

std::string Word::to_string() const {
  if (syllables_.empty()) return "1";
  std::ostringstream out;
  for (std::size_t i = 0; i < syllables_.size(); ++i) {
    if (i > 0) out << ' ';
    out << static_cast<char>('a' + syllables_[i].generator);
    if (syllables_[i].exponent != 1) out << '^' << syllables_[i].exponent;
  }
  return out.str();
}

Word Word::parse(std::string_view text) {
  std::vector<Syllable> syllables;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    if (token == "1") continue;
    const char letter = token[0];
    if (letter < 'a' || letter > 'z') throw WordParseError("bad generator in token '" + token + "'");
    std::int64_t exponent = 1;
    if (token.size() > 1) {
      if (token[1] != '^' || token.size() == 2) throw WordParseError("bad token '" + token + "'");
      const std::string digits = token.substr(2);
      std::size_t consumed = 0;
      try {
        exponent = std::stoll(digits, &consumed);
      } catch (const std::exception&) {
        throw WordParseError("bad exponent in token '" + token + "'");
      }
      if (consumed != digits.size()) throw WordParseError("bad exponent in token '" + token + "'");
    }
    syllables.push_back({letter - 'a', exponent});
  }
  return free_reduce(syllables);
}

Word Word::inverse() const {
  Word w;
  w.syllables_.reserve(syllables_.size());
  for (auto it = syllables_.rbegin(); it != syllables_.rend(); ++it) w.syllables_.push_back({it->generator, -it->exponent});
  return w;
}

Word Word::power(std::int64_t n) const {
  if (n < 0) return inverse().power(-n);
  Word result;
  Word base = *this;
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

Word operator*(const Word& a, const Word& b) {
  Word w = a;
  for (const auto& s : b.syllables_) w.append(s);
  return w;
}

Word commutator(const Word& x, const Word& y) { return x * y * x.inverse() * y.inverse(); }

}  // namespace curvegroup::fpcore
