#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "curvegroup/enumeration/coset_enumeration.hpp"
#include "curvegroup/enumeration/smith.hpp"

using namespace curvegroup::enumeration;
using curvegroup::fpcore::GroupParams;
using curvegroup::fpcore::Presentation;
using curvegroup::fpcore::Word;

namespace {

Presentation pres(int gens, std::initializer_list<const char*> relators) {
  std::vector<Word> words;
  for (const char* r : relators) words.push_back(Word::parse(r));
  return Presentation(gens, std::move(words));
}

// gcd of all i x i minors by cofactor expansion; fine for 4 x 4.
mpz_class det(const std::vector<std::vector<mpz_class>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  mpz_class total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::vector<mpz_class>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<mpz_class> row;
      for (std::size_t c = 0; c < n; ++c) {
        if (c != j) row.push_back(m[i][c]);
      }
      minor.push_back(row);
    }
    const mpz_class term = m[0][j] * det(minor);
    total += (j % 2 == 0) ? term : mpz_class(-term);
  }
  return total;
}

void subsets(std::size_t n, std::size_t size, std::size_t start, std::vector<std::size_t>& cur,
             std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == size) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, size, i + 1, cur, out);
    cur.pop_back();
  }
}

mpz_class minor_gcd(const IntMatrix& m, std::size_t size) {
  std::vector<std::vector<std::size_t>> rows, cols;
  std::vector<std::size_t> cur;
  subsets(m.rows(), size, 0, cur, rows);
  subsets(m.cols(), size, 0, cur, cols);
  mpz_class g = 0;
  for (const auto& r : rows) {
    for (const auto& c : cols) {
      std::vector<std::vector<mpz_class>> sub(size, std::vector<mpz_class>(size));
      for (std::size_t i = 0; i < size; ++i) {
        for (std::size_t j = 0; j < size; ++j) sub[i][j] = m(r[i], c[j]);
      }
      g = gcd(g, det(sub));
    }
  }
  return g;
}

mpz_class abs_det(const IntMatrix& m) {
  std::vector<std::vector<mpz_class>> rows(m.rows(), std::vector<mpz_class>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) rows[i][j] = m(i, j);
  }
  return abs(det(rows));
}

std::uint64_t order(const Presentation& p, Strategy s = Strategy::Felsch) {
  const auto result = todd_coxeter(p, kDefaultCosetCap, s);
  REQUIRE(result.order.has_value());
  return *result.order;
}

}  // namespace

TEST_CASE("small coset enumerations") {
  CHECK(order(pres(1, {"a"})) == 1);
  CHECK(order(pres(1, {"a^7"})) == 7);
  CHECK(order(pres(2, {"a^2", "b^3", "a b a b"})) == 6);
  CHECK(order(pres(2, {"a^2", "b^2", "a b a b a b a b"})) == 8);
  CHECK(order(pres(2, {"a^4", "a^2 b^-2", "b^-1 a b a"})) == 8);  // quaternion
  CHECK(order(pres(2, {"a^2", "b^3", "a b a b a b a b a b"})) == 60);
  CHECK_THROWS(pres(0, {}));
}

TEST_CASE("strategy names") {
  CHECK(parse_strategy("hlt") == Strategy::Hlt);
  CHECK(parse_strategy("felsch") == Strategy::Felsch);
  CHECK_FALSE(parse_strategy("other").has_value());
  CHECK(to_string(Strategy::Hlt) == "hlt");
}

TEST_CASE("H(q;k) orders on the grid, both strategies") {
  for (std::int64_t q : {3, 5, 7, 9}) {
    for (std::int64_t k : {1, 2, 3}) {
      CAPTURE(q);
      CAPTURE(k);
      const auto expected = static_cast<std::uint64_t>(2 * q * (q - 1) * k);
      const auto h = curvegroup::fpcore::presentation_H(q, k);
      CHECK(order(h, Strategy::Felsch) == expected);
      CHECK(order(h, Strategy::Hlt) == expected);
      CHECK(order(curvegroup::fpcore::presentation_complement(GroupParams::dihedral(q, k))) == expected);
    }
  }
}

TEST_CASE("finished tables pass the audit") {
  const auto h = curvegroup::fpcore::presentation_H(5, 2);
  const auto result = todd_coxeter(h);
  REQUIRE(result.order == 80u);
  CHECK(result.table.rows() == 80);
  CHECK(audit_table(result.table, h).ok());
  for (int col = 0; col < result.table.columns(); ++col) CHECK(result.table(0, col) != CosetTable::kUndefined);
  CHECK(result.cosets_defined >= 80);
  CHECK(result.max_live >= 80);
}

TEST_CASE("enumeration is deterministic") {
  const auto h = curvegroup::fpcore::presentation_H(7, 2);
  const auto a = todd_coxeter(h);
  const auto b = todd_coxeter(h);
  CHECK(a.cosets_defined == b.cosets_defined);
  REQUIRE(a.table.rows() == b.table.rows());
  for (std::size_t i = 0; i < a.table.rows(); ++i) {
    for (int c = 0; c < a.table.columns(); ++c) CHECK(a.table(i, c) == b.table(i, c));
  }
}

TEST_CASE("cap exceeded") {
  const auto infinite = pres(2, {"a b a^-1 b^-1"});
  for (auto s : {Strategy::Hlt, Strategy::Felsch}) {
    const auto result = todd_coxeter(infinite, 500, s);
    CHECK(result.cap_exceeded());
    CHECK(result.table.rows() == 0);
  }
  CHECK(todd_coxeter(curvegroup::fpcore::presentation_H(9, 3), 10).cap_exceeded());
  CHECK(todd_coxeter(curvegroup::fpcore::presentation_G(2, 3), 1000).cap_exceeded());
}

TEST_CASE("smith normal form examples") {
  const auto d = smith_normal_form(IntMatrix(2, 2, {2, 0, 0, 3}));
  CHECK(d.diagonal == std::vector<mpz_class>{1, 6});
  CHECK(d.rank == 2);
  const auto z = smith_normal_form(IntMatrix(2, 3));
  CHECK(z.diagonal == std::vector<mpz_class>{0, 0});
  CHECK(z.rank == 0);
  CHECK(smith_normal_form(IntMatrix::identity(3)).diagonal == std::vector<mpz_class>{1, 1, 1});
  CHECK(smith_normal_form(IntMatrix(2, 2, {2, -3, 2, -5})).diagonal == std::vector<mpz_class>{1, 4});
}

TEST_CASE("smith normal form on random matrices") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t rows = 1 + rng() % 4, cols = 1 + rng() % 4;
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = static_cast<long>(rng() % 41) - 20;
    }
    if (trial % 5 == 0 && rows > 1) {  // force a dependent row
      for (std::size_t j = 0; j < cols; ++j) m(rows - 1, j) = m(0, j) * 3;
    }
    const auto s = smith_normal_form(m);
    IntMatrix diag(rows, cols);
    for (std::size_t i = 0; i < s.diagonal.size(); ++i) diag(i, i) = s.diagonal[i];
    CHECK(s.left * m * s.right == diag);
    CHECK(abs_det(s.left) == 1);
    CHECK(abs_det(s.right) == 1);
    for (std::size_t i = 0; i + 1 < s.diagonal.size(); ++i) {
      CHECK(s.diagonal[i] >= 0);
      if (s.diagonal[i] != 0) {
        CHECK(mpz_divisible_p(s.diagonal[i + 1].get_mpz_t(), s.diagonal[i].get_mpz_t()) != 0);
      } else {
        CHECK(s.diagonal[i + 1] == 0);
      }
    }
    mpz_class product = 1;
    for (std::size_t i = 1; i <= s.rank; ++i) {
      product *= s.diagonal[i - 1];
      CHECK(minor_gcd(m, i) == product);
    }
    if (s.rank < std::min(rows, cols)) CHECK(minor_gcd(m, s.rank + 1) == 0);
  }
}

TEST_CASE("smith normal form needs big integers") {
  IntMatrix m(3, 3, {1000003, 999983, 0, 0, 1000033, 999979, 1000037, 0, 999961});
  const auto s = smith_normal_form(m);
  CHECK(s.left * m * s.right == [&] {
    IntMatrix d(3, 3);
    for (std::size_t i = 0; i < 3; ++i) d(i, i) = s.diagonal[i];
    return d;
  }());
  CHECK(s.diagonal[2] == abs_det(m));
}

TEST_CASE("abelianization examples") {
  const auto h31 = abelianization(curvegroup::fpcore::presentation_H(3, 1));
  CHECK(h31.torsion == std::vector<mpz_class>{4});
  CHECK(h31.free_rank == 0);
  CHECK(h31.to_string() == "Z/4");
  const auto g23 = abelianization(curvegroup::fpcore::presentation_G(2, 3));
  CHECK(g23.torsion.empty());
  CHECK(g23.free_rank == 1);
  CHECK(g23.to_string() == "Z");
  const auto free2 = abelianization(pres(2, {}));
  CHECK(free2.free_rank == 2);
  CHECK(free2.to_string() == "Z^2");
  CHECK(abelianization(pres(1, {"a"})).to_string() == "1");
  CHECK(abelianization(pres(3, {"a^2", "b^4"})).to_string() == "Z x Z/2 x Z/4");
  CHECK(exponent_sum_matrix(pres(2, {"a^2 b^-3", "a b a^-1"})) == IntMatrix(2, 2, {2, -3, 0, 1}));
}

TEST_CASE("abelianization of H(q;k) is cyclic of order 2(q-1)k") {
  for (std::int64_t q : {3, 5, 7, 9}) {
    for (std::int64_t k : {1, 2, 3}) {
      const auto ab = abelianization(curvegroup::fpcore::presentation_H(q, k));
      CHECK(ab.is_cyclic());
      CHECK(ab.free_rank == 0);
      REQUIRE(ab.torsion.size() == 1);
      CHECK(ab.torsion[0] == 2 * (q - 1) * k);
    }
  }
}
