#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <unordered_set>

#include "curvegroup/dihedralrep/representation.hpp"
#include "curvegroup/enumeration/coset_enumeration.hpp"
#include "curvegroup/fpcore/presentation.hpp"

using namespace curvegroup::dihedralrep;
using curvegroup::cyclo::CycNumber;
using curvegroup::cyclo::CycPhase;
using curvegroup::cyclo::root_of_unity;
using curvegroup::fpcore::Word;

namespace {

CycNumber e(std::int64_t a, std::int64_t b, std::uint32_t n) { return root_of_unity(CycPhase(a, b), n); }

const std::int64_t kQs[] = {3, 5, 7, 9};
const std::int64_t kKs[] = {1, 2, 3};

}  // namespace

TEST_CASE("matrices at (3,1)") {
  const auto rep = build_rep(3, 1);
  CHECK(rep.conductor == 12);
  CHECK(rep.A == Mat2::antidiagonal(e(3, 4, 12), e(3, 4, 12)));
  CHECK(rep.B == Mat2::diagonal(e(5, 6, 12), e(1, 6, 12)));
  const auto minus_one = Mat2::scalar(CycNumber::from_rational(12, -1));
  CHECK(rep.A * rep.A == minus_one);
  const auto x = rep.B_inv * rep.A;
  CHECK(x * x == minus_one);
  CHECK(rep.A * rep.A_inv == Mat2::identity(12));
  CHECK(rep.B * rep.B_inv == Mat2::identity(12));
  CHECK(scalar_c(rep) == e(1, 2, 12));
  CHECK_THROWS_AS(build_rep(4, 1), std::invalid_argument);
}

TEST_CASE("Mat2 arithmetic") {
  const auto rep = build_rep(5, 2);
  CHECK(rep.conductor == 4 * 2 * 2 * 5);
  CHECK(rep.A.inverse() == rep.A_inv);
  CHECK(rep.B.pow(-3) == rep.B_inv.pow(3));
  CHECK(rep.B.pow(0).is_identity());
  CHECK((rep.A * rep.B).determinant() == rep.A.determinant() * rep.B.determinant());
  CHECK(Mat2::scalar(e(1, 4, 80)).is_scalar());
  CHECK_FALSE(rep.A.is_scalar());
  const Mat2 singular{CycNumber::one(80), CycNumber::one(80), CycNumber::one(80), CycNumber::one(80)};
  CHECK_THROWS_AS(singular.inverse(), std::domain_error);
}

TEST_CASE("the three relations hold on the grid") {
  for (auto q : kQs) {
    for (auto k : kKs) {
      CAPTURE(q);
      CAPTURE(k);
      const auto rep = build_rep(q, k);
      const auto report = verify_relations(rep.A, rep.B, q, k);
      CHECK(report.alpha_squared);
      CHECK(report.beta_power);
      CHECK(report.scalar);
      for (const auto& relator : curvegroup::fpcore::presentation_H(q, k).relators()) {
        CHECK(rep_eval(relator, rep).is_identity());
      }
    }
  }
}

TEST_CASE("a perturbed A breaks the first relation") {
  const auto rep = build_rep(3, 1);
  const Mat2 tampered{rep.A.a, -rep.A.b, rep.A.c, rep.A.d};
  const auto report = verify_relations(tampered, rep.B, 3, 1);
  CHECK_FALSE(report.alpha_squared);
  CHECK_FALSE(report.all());
}

TEST_CASE("rep_eval") {
  const auto rep = build_rep(3, 1);
  CHECK(rep_eval(Word(), rep).is_identity());
  CHECK(rep_eval(Word::alpha(2), rep) == Mat2::scalar(CycNumber::from_rational(12, -1)));
  CHECK(rep_eval(Word::parse("b^3 a^-1 b a^-1 b"), rep).is_identity());
  CHECK(rep_eval(Word::parse("a b^-2"), rep) == rep.A * rep.B_inv * rep.B_inv);
  CHECK_THROWS(rep_eval(Word::parse("c"), rep));
}

TEST_CASE("closure examples") {
  CHECK(closure(build_rep(3, 1))->order() == 12);
  CHECK(closure(build_rep(5, 1))->order() == 40);
  const auto trivial = closure(std::vector<Mat2>{Mat2::identity(12)});
  REQUIRE(trivial);
  CHECK(trivial->order() == 1);
  CHECK_FALSE(closure(build_rep(9, 3), 100).has_value());
  // An element of infinite order never closes.
  const Mat2 shear{CycNumber::one(4), CycNumber::one(4), CycNumber::zero(4), CycNumber::one(4)};
  CHECK_FALSE(closure(std::vector<Mat2>{shear}, 50).has_value());
}

TEST_CASE("closure witnesses evaluate to their elements") {
  const auto rep = build_rep(5, 2);
  const auto group = closure(rep);
  REQUIRE(group);
  REQUIRE(group->witnesses.size() == group->order());
  std::unordered_set<Mat2, Mat2Hash> distinct(group->elements.begin(), group->elements.end());
  CHECK(distinct.size() == group->order());
  CHECK(group->elements[0].is_identity());
  for (std::size_t i = 0; i < group->order(); ++i) CHECK(rep_eval(group->witnesses[i], rep) == group->elements[i]);
  // closed under products
  for (std::size_t i = 0; i < group->order(); i += 7) {
    for (std::size_t j = 0; j < group->order(); j += 5) {
      CHECK(distinct.count(group->elements[i] * group->elements[j]) == 1);
    }
  }
}

TEST_CASE("closure, coset enumeration and 2q(q-1)k agree on the grid") {
  for (auto q : kQs) {
    for (auto k : kKs) {
      CAPTURE(q);
      CAPTURE(k);
      const auto expected = static_cast<std::size_t>(2 * q * (q - 1) * k);
      const auto group = closure(build_rep(q, k));
      REQUIRE(group);
      CHECK(group->order() == expected);
      CHECK(curvegroup::enumeration::todd_coxeter(curvegroup::fpcore::presentation_H(q, k)).order == expected);
    }
  }
}

TEST_CASE("extension structure examples") {
  const auto s31 = extension_structure(*closure(build_rep(3, 1)), 3, 1);
  CHECK(s31.scalar_order == 2);
  CHECK(s31.pgl_order == 6);
  CHECK(s31.dihedral);
  CHECK(s31.central);
  const auto s51 = extension_structure(*closure(build_rep(5, 1)), 5, 1);
  CHECK(s51.scalar_order == 4);
  CHECK(s51.pgl_order == 10);
  const auto s52 = extension_structure(*closure(build_rep(5, 2)), 5, 2);
  CHECK(s52.scalar_order == 8);
  CHECK(s52.pgl_order == 10);
}

TEST_CASE("extension structure on the grid") {
  for (auto q : kQs) {
    for (auto k : kKs) {
      CAPTURE(q);
      CAPTURE(k);
      const auto s = extension_structure(*closure(build_rep(q, k)), q, k);
      CHECK(s.scalar_order == static_cast<std::uint64_t>(k * (q - 1)));
      CHECK(s.pgl_order == static_cast<std::uint64_t>(2 * q));
      CHECK(s.dihedral);
      CHECK(s.central);
      CHECK(s.c_order == static_cast<std::uint64_t>(k * (q - 1)));
      CHECK(s.scalars_generated_by_c);
    }
  }
}

TEST_CASE("a cyclic projective image is not dihedral") {
  // <B> alone: scalars plus a cyclic image of order q in PGL2.
  const auto rep = build_rep(5, 1);
  const auto group = closure(std::vector<Mat2>{rep.B});
  REQUIRE(group);
  const auto s = extension_structure(*group, 5, 1);
  CHECK(s.pgl_order == 5);
  CHECK_FALSE(s.dihedral);
}

TEST_CASE("alpha^M beta^N enumerates the image exactly") {
  for (auto q : kQs) {
    for (auto k : kKs) {
      CAPTURE(q);
      CAPTURE(k);
      const auto rep = build_rep(q, k);
      const auto group = closure(rep);
      REQUIRE(group);
      std::uint64_t beta_order = 1;
      for (Mat2 power = rep.B; !power.is_identity(); power = power * rep.B) ++beta_order;
      std::unordered_set<Mat2, Mat2Hash> images;
      Mat2 bn = Mat2::identity(rep.conductor);
      for (std::uint64_t n = 0; n < beta_order; ++n, bn = bn * rep.B) {
        images.insert(bn);
        images.insert(rep.A * bn);
      }
      // A is never a power of B, so the map is always injective.
      CHECK(images.size() == 2 * beta_order);
      const bool covers = images.size() == group->order();
      CHECK(covers == (2 * beta_order == group->order()));
      CHECK(covers == (k == 1 || std::gcd(q, k) == 1));
    }
  }
}

TEST_CASE("normal form soundness at k = 1") {
  for (auto q : kQs) {
    const auto report = normal_form_soundness(q, 1, 6);
    CHECK(report.ok());
    CHECK(report.words_checked == 5461);
    CHECK(report.beta_order == static_cast<std::uint64_t>(q * (q - 1)));
  }
}

TEST_CASE("normal form rewriting is not valid in H(q;3)") {
  // The rewriting rules are identities of H(q;1) only; for k = 3 the
  // representation separates some words from their rewritten forms.
  const auto report = normal_form_soundness(3, 3, 8);
  CHECK_FALSE(report.ok());
  REQUIRE(report.counterexample);
  const auto rep = build_rep(3, 3);
  const auto nf = curvegroup::fpcore::normal_form(*report.counterexample, 3);
  CHECK(rep_eval(*report.counterexample, rep) != rep_eval(curvegroup::fpcore::to_word(nf), rep));
}
