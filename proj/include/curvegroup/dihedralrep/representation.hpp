#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "curvegroup/dihedralrep/mat2.hpp"
#include "curvegroup/fpcore/normal_form.hpp"
#include "curvegroup/fpcore/word.hpp"

namespace curvegroup::dihedralrep {

inline constexpr std::uint64_t kDefaultClosureCap = 10'000;

/// The images of alpha and beta, with their inverses, over Q(zeta_N),
/// N = 4rkq.
struct Representation {
  std::int64_t q = 0, k = 0, r = 0;
  std::uint32_t conductor = 0;
  Mat2 A, B, A_inv, B_inv;
};

/// A = [[0, e(q/4rk)], [e(q/4rk), 0]], B = diag(e(1/2rk + r/q), e(1/2rk - r/q)).
Representation build_rep(std::int64_t q, std::int64_t k);

/// c = e(1/2rk) as an element of the representation's field.
CycNumber scalar_c(const Representation& rep);

struct RelationReport {
  bool alpha_squared = false;  // A^2 = B^q
  bool beta_power = false;     // B^{qk} = (B^-r A)^{2k}
  bool scalar = false;         // (B^-r A)^2 = c I

  bool all() const { return alpha_squared && beta_power && scalar; }
};

RelationReport verify_relations(const Mat2& A, const Mat2& B, std::int64_t q, std::int64_t k);

/// Image of w under alpha -> A, beta -> B. Only generators a and b may occur.
Mat2 rep_eval(const fpcore::Word& w, const Mat2& A, const Mat2& B);
Mat2 rep_eval(const fpcore::Word& w, const Representation& rep);

/// A finite matrix group with one witness word per element; witnesses are
/// words in the generator letters a, b, c, ...
struct MatrixGroup {
  std::vector<Mat2> generators;
  std::vector<Mat2> elements;
  std::vector<fpcore::Word> witnesses;

  std::size_t order() const { return elements.size(); }
};

/// Breadth-first closure under the generators and their inverses; nullopt
/// once more than cap elements are found.
std::optional<MatrixGroup> closure(const std::vector<Mat2>& generators, const std::vector<Mat2>& inverses,
                                   std::uint64_t cap = kDefaultClosureCap);
/// Inverses computed from the generators.
std::optional<MatrixGroup> closure(const std::vector<Mat2>& generators, std::uint64_t cap = kDefaultClosureCap);
std::optional<MatrixGroup> closure(const Representation& rep, std::uint64_t cap = kDefaultClosureCap);

struct ExtensionStructure {
  std::uint64_t scalar_order = 0;
  std::uint64_t pgl_order = 0;
  bool dihedral = false;
  bool central = false;
  /// Multiplicative order of c = e(1/2rk).
  std::uint64_t c_order = 0;
  /// The scalar elements are exactly the powers of (B^-r A)^2.
  bool scalars_generated_by_c = false;
};

/// Scalar subgroup, projective image, and a constructive dihedral check of
/// the projective image (t of order q, s of order 2 outside <t>, s t s^-1 =
/// t^-1). `central` means every scalar element commutes with every
/// generator of G.
ExtensionStructure extension_structure(const MatrixGroup& group, std::int64_t q, std::int64_t k);

struct SoundnessReport {
  std::uint64_t words_checked = 0;
  std::uint64_t failures = 0;
  std::uint64_t beta_order = 0;
  /// First failing letter sequence, as a word.
  std::optional<fpcore::Word> counterexample;

  bool ok() const { return failures == 0; }
};

/// Checks rep_eval(w) = rep_eval(a^M b^N) for (M, N) = normal_form(w, q) over
/// every sequence of at most max_length letters a^{+-1}, b^{+-1}, using the
/// (q, k) representation.
SoundnessReport normal_form_soundness(std::int64_t q, std::int64_t k, int max_length);

}  // namespace curvegroup::dihedralrep
