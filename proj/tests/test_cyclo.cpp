#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>
#include <thread>
#include <unordered_set>

#include "curvegroup/cyclo/cyc_number.hpp"
#include "curvegroup/cyclo/cyclotomic.hpp"

using namespace curvegroup::cyclo;

namespace {

std::vector<mpz_class> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

CycNumber random_element(std::mt19937_64& rng, std::uint32_t n) {
  std::vector<mpq_class> coords;
  for (std::uint32_t i = 0; i < euler_phi(n); ++i) {
    const long num = static_cast<long>(rng() % 21) - 10;
    const long den = 1 + static_cast<long>(rng() % 4);
    coords.emplace_back(num, den);
    coords.back().canonicalize();
  }
  return CycNumber::from_coordinates(n, coords);
}

// Evaluates sum c_j x^j at x = z by Horner.
CycNumber evaluate(const std::vector<mpz_class>& coeffs, const CycNumber& z) {
  CycNumber acc = CycNumber::zero(z.conductor());
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    acc = acc * z + CycNumber::from_rational(z.conductor(), mpq_class(*it));
  }
  return acc;
}

}  // namespace

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1) == ints({-1, 1}));
  CHECK(cyclotomic_polynomial(4) == ints({1, 0, 1}));
  CHECK(cyclotomic_polynomial(12) == ints({1, 0, -1, 0, 1}));
  CHECK(cyclotomic_polynomial(9) == ints({1, 0, 0, 1, 0, 0, 1}));
  // Phi_105 is the first with a coefficient of absolute value 2.
  const auto p105 = cyclotomic_polynomial(105);
  CHECK(p105.size() == 49);
  CHECK(std::count(p105.begin(), p105.end(), mpz_class(-2)) == 2);
  for (std::uint32_t n = 1; n <= 60; ++n) CHECK(cyclotomic_polynomial(n).size() == euler_phi(n) + 1);
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(84) == 24);
}

TEST_CASE("product of Phi_d over d | n is x^n - 1") {
  for (std::uint32_t n = 1; n <= 40; ++n) {
    std::vector<mpz_class> product{1};
    for (std::uint32_t d = 1; d <= n; ++d) {
      if (n % d) continue;
      const auto f = cyclotomic_polynomial(d);
      std::vector<mpz_class> next(product.size() + f.size() - 1, 0);
      for (std::size_t i = 0; i < product.size(); ++i) {
        for (std::size_t j = 0; j < f.size(); ++j) next[i + j] += product[i] * f[j];
      }
      product = next;
    }
    std::vector<mpz_class> expected(n + 1, 0);
    expected[0] = -1;
    expected[n] = 1;
    CHECK(product == expected);
  }
}

TEST_CASE("Phi_N vanishes at zeta_N") {
  for (std::uint32_t n = 1; n <= 60; ++n) {
    CAPTURE(n);
    CHECK(evaluate(cyclotomic_polynomial(n), CycNumber::zeta_power(n, 1)).is_zero());
    if (n > 24) continue;
    for (std::uint32_t j = 0; j < n; ++j) {
      const bool root = evaluate(cyclotomic_polynomial(n), CycNumber::zeta_power(n, j)).is_zero();
      CHECK(root == (std::gcd(j, n) == 1));
    }
  }
}

TEST_CASE("roots of unity") {
  CHECK(root_of_unity(CycPhase(1, 2), 12) == CycNumber::from_rational(12, -1));
  CHECK(root_of_unity(CycPhase(1, 3), 3) + root_of_unity(CycPhase(2, 3), 3) == CycNumber::from_rational(3, -1));
  CHECK((root_of_unity(CycPhase(5, 6), 6) * root_of_unity(CycPhase(1, 6), 6)).is_one());
  CHECK(root_of_unity(CycPhase(1, 4), 4).inverse() == root_of_unity(CycPhase(3, 4), 4));
  CHECK((root_of_unity(CycPhase(1, 12), 12) + -root_of_unity(CycPhase(1, 12), 12)).is_zero());
  CHECK(root_of_unity(CycPhase(-1, 4), 8) == root_of_unity(CycPhase(3, 4), 8));
  CHECK_THROWS_AS(root_of_unity(CycPhase(1, 5), 12), ConductorMismatch);
  CHECK(CycNumber::from_rational(12, -1).to_string() == "zeta12: [(-1,0)]");
  CHECK(CycNumber::zeta_power(12, 13) == CycNumber::zeta_power(12, 1));
  CHECK(CycNumber::zeta_power(12, -1) == CycNumber::zeta_power(12, 11));
}

TEST_CASE("root_of_unity(a/b)^b = 1") {
  for (std::int64_t b = 1; b <= 40; ++b) {
    for (std::int64_t a = 0; a < b; ++a) {
      if (std::gcd(a, b) != 1) continue;
      const auto z = root_of_unity(CycPhase(a, b), static_cast<std::uint32_t>(b));
      CHECK(z.pow(b).is_one());
      CHECK(scalar_order(z) == static_cast<std::uint64_t>(b));
    }
  }
}

TEST_CASE("phases") {
  CHECK(CycPhase(7, 4) == CycPhase(3, 4));
  CHECK(CycPhase(-1, 4) == CycPhase(3, 4));
  CHECK(CycPhase(1, 4) + CycPhase(1, 6) == CycPhase(5, 12));
  CHECK((CycPhase(1, 6) * 6).numerator() == 0);
  CHECK(-CycPhase(1, 3) == CycPhase(2, 3));
}

TEST_CASE("scalar orders") {
  CHECK(scalar_order(root_of_unity(CycPhase(1, 2), 12)) == 2u);
  CHECK(scalar_order(CycNumber::one(7)) == 1u);
  CHECK(scalar_order(CycNumber::from_rational(12, -1)) == 2u);
  CHECK_FALSE(scalar_order(CycNumber::one(12) + CycNumber::zeta_power(12, 1)).has_value());
  CHECK_FALSE(scalar_order(CycNumber::from_rational(5, 2)).has_value());
  CHECK_THROWS_AS(scalar_order(CycNumber::zero(12)), std::domain_error);
  // -zeta_5 has order 10 although the conductor is 5.
  CHECK(scalar_order(-CycNumber::zeta_power(5, 1)) == 10u);
}

TEST_CASE("field axioms on random elements") {
  std::mt19937_64 rng(99);
  for (std::uint32_t n : {1u, 3u, 8u, 12u, 15u, 20u, 40u}) {
    CAPTURE(n);
    const auto one = CycNumber::one(n), zero = CycNumber::zero(n);
    for (int trial = 0; trial < 500; ++trial) {
      const auto x = random_element(rng, n), y = random_element(rng, n), z = random_element(rng, n);
      CHECK((x * y) * z == x * (y * z));
      CHECK((x + y) + z == x + (y + z));
      CHECK(x * (y + z) == x * y + x * z);
      CHECK(x * y == y * x);
      CHECK(x + (-x) == zero);
      CHECK(x * one == x);
      CHECK(x - y == x + (-y));
      if (trial < 100 && !x.is_zero()) CHECK((x * x.inverse()).is_one());
    }
  }
  CHECK_THROWS_AS(CycNumber::zero(12).inverse(), std::domain_error);
}

TEST_CASE("conductors must match") {
  CHECK_THROWS_AS(CycNumber::one(12) + CycNumber::one(4), ConductorMismatch);
  CHECK_THROWS_AS(CycNumber::one(12) * CycNumber::one(4), ConductorMismatch);
  CHECK_THROWS(CycNumber::from_coordinates(12, {1, 2}));
}

TEST_CASE("canonical form and hashing") {
  const auto a = CycNumber::zeta_power(12, 3) * CycNumber::zeta_power(12, 3);
  const auto b = CycNumber::from_rational(12, -1);
  CHECK(a == b);
  CHECK(a.hash() == b.hash());
  CHECK(b.is_rational());
  CHECK_FALSE(CycNumber::zeta_power(12, 1).is_rational());
  const auto half = CycNumber::from_rational(12, mpq_class(1, 2));
  CHECK((half + half).is_one());
  std::unordered_set<CycNumber, CycNumberHash> seen;
  for (std::int64_t j = 0; j < 24; ++j) seen.insert(CycNumber::zeta_power(12, j));
  CHECK(seen.size() == 12);
  const auto t = (CycNumber::zeta_power(12, 1) + half).terms();
  REQUIRE(t.size() == 2);
  CHECK(t[0] == std::pair<mpq_class, std::uint32_t>{mpq_class(1, 2), 0});
  CHECK(t[1] == std::pair<mpq_class, std::uint32_t>{mpq_class(1), 1});
}

TEST_CASE("embedding is a ring homomorphism") {
  std::mt19937_64 rng(7);
  for (std::uint32_t n : {3u, 4u, 6u, 12u}) {
    for (std::uint32_t m : {2u, 3u, 5u}) {
      for (int trial = 0; trial < 50; ++trial) {
        const auto x = random_element(rng, n), y = random_element(rng, n);
        CHECK(embed(x + y, m) == embed(x, m) + embed(y, m));
        CHECK(embed(x * y, m) == embed(x, m) * embed(y, m));
        CHECK(embed(x, m).conductor() == n * m);
      }
      CHECK(embed(CycNumber::zeta_power(n, 1), m) == CycNumber::zeta_power(n * m, m));
      CHECK(embed(root_of_unity(CycPhase(1, n), n), m) == root_of_unity(CycPhase(1, n), n * m));
    }
  }
}

TEST_CASE("context registry is safe to share across threads") {
  std::vector<std::thread> pool;
  std::vector<const CyclotomicContext*> seen(8);
  for (int i = 0; i < 8; ++i) {
    pool.emplace_back([&, i] { seen[static_cast<std::size_t>(i)] = &cyclotomic_context(4 * 4 * 9); });
  }
  for (auto& t : pool) t.join();
  for (const auto* p : seen) CHECK(p == seen[0]);
  CHECK(seen[0]->phi == euler_phi(144));
}
