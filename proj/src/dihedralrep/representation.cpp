#include "curvegroup/dihedralrep/representation.hpp"

#include <numeric>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace curvegroup::dihedralrep {

using cyclo::CycPhase;
using cyclo::root_of_unity;
using fpcore::Word;

namespace {

void check_params(std::int64_t q, std::int64_t k) {
  if (q < 3 || q % 2 == 0) throw std::invalid_argument("representation: q must be odd and >= 3");
  if (k <= 0) throw std::invalid_argument("representation: k must be positive");
  if (2 * (q - 1) * k * q > std::int64_t{1} << 31) throw std::invalid_argument("representation: conductor too large");
}

}  // namespace

Representation build_rep(std::int64_t q, std::int64_t k) {
  check_params(q, k);
  Representation rep;
  rep.q = q;
  rep.k = k;
  rep.r = (q - 1) / 2;
  rep.conductor = static_cast<std::uint32_t>(4 * rep.r * k * q);
  const std::uint32_t n = rep.conductor;
  const CycPhase a_phase(q, 4 * rep.r * k);
  const CycPhase b1 = CycPhase(1, 2 * rep.r * k) + CycPhase(rep.r, q);
  const CycPhase b2 = CycPhase(1, 2 * rep.r * k) - CycPhase(rep.r, q);
  const auto e = [n](const CycPhase& p) { return root_of_unity(p, n); };
  rep.A = Mat2::antidiagonal(e(a_phase), e(a_phase));
  rep.A_inv = Mat2::antidiagonal(e(-a_phase), e(-a_phase));
  rep.B = Mat2::diagonal(e(b1), e(b2));
  rep.B_inv = Mat2::diagonal(e(-b1), e(-b2));
  return rep;
}

CycNumber scalar_c(const Representation& rep) { return root_of_unity(CycPhase(1, 2 * rep.r * rep.k), rep.conductor); }

RelationReport verify_relations(const Mat2& A, const Mat2& B, std::int64_t q, std::int64_t k) {
  check_params(q, k);
  const std::int64_t r = (q - 1) / 2;
  RelationReport report;
  report.alpha_squared = A * A == B.pow(q);
  const Mat2 a0 = B.pow(-r) * A;
  const Mat2 a0_squared = a0 * a0;
  report.beta_power = B.pow(q * k) == a0_squared.pow(k);
  const CycNumber c = root_of_unity(CycPhase(1, 2 * r * k), A.conductor());
  report.scalar = a0_squared == Mat2::scalar(c);
  return report;
}

Mat2 rep_eval(const Word& w, const Mat2& A, const Mat2& B) {
  return rep_eval(w, Representation{0, 0, 0, A.conductor(), A, B, A.inverse(), B.inverse()});
}

Mat2 rep_eval(const Word& w, const Representation& rep) {
  Mat2 out = Mat2::identity(rep.A.conductor());
  for (const auto& s : w.syllables()) {
    if (s.generator != fpcore::kAlpha && s.generator != fpcore::kBeta) {
      throw std::invalid_argument("rep_eval: only generators a and b are represented");
    }
    const bool alpha = s.generator == fpcore::kAlpha;
    const Mat2& base = s.exponent > 0 ? (alpha ? rep.A : rep.B) : (alpha ? rep.A_inv : rep.B_inv);
    out = out * base.pow(s.exponent > 0 ? s.exponent : -s.exponent);
  }
  return out;
}

std::optional<MatrixGroup> closure(const std::vector<Mat2>& generators, const std::vector<Mat2>& inverses,
                                   std::uint64_t cap) {
  if (generators.empty()) throw std::invalid_argument("closure: need at least one generator");
  if (generators.size() != inverses.size()) throw std::invalid_argument("closure: one inverse per generator");
  if (generators.size() > static_cast<std::size_t>(fpcore::kMaxGenerators)) {
    throw std::invalid_argument("closure: too many generators");
  }
  MatrixGroup group;
  group.generators = generators;
  std::unordered_map<Mat2, std::size_t, Mat2Hash> index;
  const Mat2 id = Mat2::identity(generators.front().conductor());
  group.elements.push_back(id);
  group.witnesses.emplace_back();
  index.emplace(id, 0);
  for (std::size_t i = 0; i < group.elements.size(); ++i) {
    for (std::size_t g = 0; g < generators.size(); ++g) {
      for (int sign : {1, -1}) {
        Mat2 next = group.elements[i] * (sign > 0 ? generators[g] : inverses[g]);
        if (index.count(next)) continue;
        if (group.elements.size() >= cap) return std::nullopt;
        index.emplace(next, group.elements.size());
        group.elements.push_back(std::move(next));
        group.witnesses.push_back(group.witnesses[i] * Word::generator(static_cast<int>(g), sign));
      }
    }
  }
  return group;
}

std::optional<MatrixGroup> closure(const std::vector<Mat2>& generators, std::uint64_t cap) {
  std::vector<Mat2> inverses;
  inverses.reserve(generators.size());
  for (const auto& g : generators) inverses.push_back(g.inverse());
  return closure(generators, inverses, cap);
}

std::optional<MatrixGroup> closure(const Representation& rep, std::uint64_t cap) {
  return closure({rep.A, rep.B}, {rep.A_inv, rep.B_inv}, cap);
}

namespace {

// Projective classes, keyed by the matrix scaled so its first nonzero entry
// is 1. Entries of a finite group are roots of unity, so inverses come from
// powering and are cached by value.
class ProjectiveClasses {
 public:
  explicit ProjectiveClasses(std::uint32_t conductor) : bound_(conductor % 2 == 0 ? conductor : 2LL * conductor) {}

  Mat2 normalize(const Mat2& m) {
    const CycNumber& lead = !m.a.is_zero() ? m.a : m.b;
    return m.scaled(inverse(lead));
  }

  // Class id of m, adding a new class if needed.
  std::size_t classify(const Mat2& m) {
    Mat2 key = normalize(m);
    auto [it, inserted] = ids_.emplace(std::move(key), reps_.size());
    if (inserted) reps_.push_back(m);
    return it->second;
  }

  std::optional<std::size_t> find(const Mat2& m) {
    auto it = ids_.find(normalize(m));
    if (it == ids_.end()) return std::nullopt;
    return it->second;
  }

  const std::vector<Mat2>& representatives() const { return reps_; }

 private:
  CycNumber inverse(const CycNumber& z) {
    auto it = inverse_cache_.find(z);
    if (it != inverse_cache_.end()) return it->second;
    CycNumber inv = z.pow(bound_ - 1);
    if (!(inv * z).is_one()) inv = z.inverse();
    inverse_cache_.emplace(z, inv);
    return inv;
  }

  std::int64_t bound_;
  std::unordered_map<Mat2, std::size_t, Mat2Hash> ids_;
  std::vector<Mat2> reps_;
  std::unordered_map<CycNumber, CycNumber, cyclo::CycNumberHash> inverse_cache_;
};

}  // namespace

ExtensionStructure extension_structure(const MatrixGroup& group, std::int64_t q, std::int64_t k) {
  check_params(q, k);
  if (group.elements.empty()) throw std::invalid_argument("extension_structure: empty group");
  const std::int64_t r = (q - 1) / 2;
  const std::uint32_t n = group.elements.front().conductor();
  ExtensionStructure out;

  std::vector<const Mat2*> scalars;
  for (const auto& m : group.elements) {
    if (m.is_scalar()) scalars.push_back(&m);
  }
  out.scalar_order = scalars.size();

  out.central = true;
  for (const Mat2* z : scalars) {
    for (const auto& g : group.generators) {
      if (*z * g != g * *z) out.central = false;
    }
  }

  const CycNumber c = root_of_unity(CycPhase(1, 2 * r * k), n);
  out.c_order = scalar_order(c).value_or(0);
  std::unordered_set<CycNumber, cyclo::CycNumberHash> powers;
  CycNumber power = CycNumber::one(n);
  for (std::uint64_t i = 0; i < out.c_order; ++i) {
    powers.insert(power);
    power = power * c;
  }
  out.scalars_generated_by_c = powers.size() == scalars.size();
  for (const Mat2* z : scalars) {
    if (!powers.count(z->a)) out.scalars_generated_by_c = false;
  }

  ProjectiveClasses pgl(n);
  for (const auto& m : group.elements) pgl.classify(m);
  out.pgl_order = pgl.representatives().size();

  if (out.pgl_order != static_cast<std::uint64_t>(2 * q)) return out;
  const auto& reps = pgl.representatives();
  const std::size_t id = *pgl.find(Mat2::identity(n));
  auto mul = [&](std::size_t x, std::size_t y) { return *pgl.find(reps[x] * reps[y]); };
  for (std::size_t t = 0; t < reps.size() && !out.dihedral; ++t) {
    std::vector<std::size_t> t_powers{id, t};
    while (t_powers.back() != id && t_powers.size() <= static_cast<std::size_t>(q)) {
      t_powers.push_back(mul(t_powers.back(), t));
    }
    if (t_powers.size() != static_cast<std::size_t>(q) + 1 || t_powers.back() != id) continue;
    const std::size_t t_inv = t_powers[static_cast<std::size_t>(q) - 1];
    const std::unordered_set<std::size_t> cyclic(t_powers.begin(), t_powers.end());
    for (std::size_t s = 0; s < reps.size(); ++s) {
      if (cyclic.count(s) || mul(s, s) != id) continue;
      if (mul(mul(s, t), s) == t_inv) {
        out.dihedral = true;
        break;
      }
    }
  }
  return out;
}

SoundnessReport normal_form_soundness(std::int64_t q, std::int64_t k, int max_length) {
  if (max_length < 0) throw std::invalid_argument("normal_form_soundness: negative length");
  const Representation rep = build_rep(q, k);
  SoundnessReport report;
  const auto o1 = cyclo::scalar_order(rep.B.a);
  const auto o2 = cyclo::scalar_order(rep.B.d);
  if (!o1 || !o2) throw std::logic_error("normal_form_soundness: B has infinite order");
  report.beta_order = std::lcm(*o1, *o2);

  // table[M][n] = A^M B^n
  std::vector<std::vector<Mat2>> table(2);
  Mat2 current = Mat2::identity(rep.conductor);
  for (std::uint64_t i = 0; i < report.beta_order; ++i) {
    table[0].push_back(current);
    table[1].push_back(rep.A * current);
    current = current * rep.B;
  }

  const Mat2* letters[4] = {&rep.A, &rep.A_inv, &rep.B, &rep.B_inv};
  std::vector<int> sequence;
  auto check = [&](const Mat2& value) {
    ++report.words_checked;
    const Word w = fpcore::word_from_letters(sequence);
    const auto nf = fpcore::reduce(fpcore::normal_form(w, q), static_cast<std::int64_t>(report.beta_order));
    if (value != table[nf.alpha_exponent][nf.beta_exponent.get_ui()]) {
      ++report.failures;
      if (!report.counterexample) report.counterexample = w;
    }
  };
  auto visit = [&](auto&& self, const Mat2& prefix) -> void {
    check(prefix);
    if (static_cast<int>(sequence.size()) == max_length) return;
    for (int code = 0; code < 4; ++code) {
      sequence.push_back(code);
      self(self, prefix * *letters[code]);
      sequence.pop_back();
    }
  };
  visit(visit, Mat2::identity(rep.conductor));
  return report;
}

}  // namespace curvegroup::dihedralrep
