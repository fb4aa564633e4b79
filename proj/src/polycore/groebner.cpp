#include "curvegroup/polycore/groebner.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>

namespace curvegroup::polycore {

namespace {

struct CriticalPair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
};

FpPoly s_polynomial(const FpPoly& f, const FpPoly& g) {
  const Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
  const PrimeField& field = f.field();
  // f and g are monic.
  FpPoly s = f.mul_term(l / f.leading_monomial(), field.one());
  s.add_scaled(field.neg(field.one()), l / g.leading_monomial(), g);
  return s;
}

const FpPoly* find_reducer(const Monomial& m, const std::vector<FpPoly>& basis) {
  for (const auto& g : basis) {
    if (!g.is_zero() && g.leading_monomial().divides(m)) return &g;
  }
  return nullptr;
}

class PairQueue {
 public:
  void push(std::size_t i, std::size_t j, const Monomial& l) {
    pairs_.push_back({i, j, l});
    pending_.insert(key(i, j));
  }

  bool empty() const { return pairs_.empty(); }

  /// Normal selection: smallest lcm in grevlex, ties broken by insertion order.
  CriticalPair pop() {
    auto best = pairs_.begin();
    for (auto it = pairs_.begin(); it != pairs_.end(); ++it) {
      if (grevlex_compare(it->lcm, best->lcm) < 0) best = it;
    }
    CriticalPair p = *best;
    pairs_.erase(best);
    pending_.erase(key(p.i, p.j));
    return p;
  }

  bool pending(std::size_t i, std::size_t j) const { return pending_.count(key(i, j)) > 0; }

 private:
  static std::pair<std::size_t, std::size_t> key(std::size_t i, std::size_t j) {
    return i < j ? std::pair{i, j} : std::pair{j, i};
  }

  std::vector<CriticalPair> pairs_;
  std::set<std::pair<std::size_t, std::size_t>> pending_;
};

}  // namespace

FpPoly normal_form(const FpPoly& f, const std::vector<FpPoly>& basis) {
  const PrimeField& field = f.field();
  FpPoly p = f;
  std::vector<FpPoly::Term> remainder;
  while (!p.is_zero()) {
    const auto& lead = p.leading_term();
    if (const FpPoly* g = find_reducer(lead.monomial, basis)) {
      const auto c = field.div(lead.coeff, g->leading_coefficient());
      p.add_scaled(field.neg(c), lead.monomial / g->leading_monomial(), *g);
    } else {
      remainder.push_back(p.pop_leading_term());
    }
  }
  return FpPoly::from_sorted_terms(field, f.nvars(), std::move(remainder));
}

std::vector<FpPoly> groebner(std::vector<FpPoly> generators, GroebnerStats* stats) {
  GroebnerStats local;
  GroebnerStats& st = stats ? *stats : local;
  std::vector<FpPoly> basis;
  PairQueue queue;

  auto add_element = [&](FpPoly g) {
    const std::size_t n = basis.size();
    for (std::size_t i = 0; i < n; ++i) {
      queue.push(i, n, lcm(basis[i].leading_monomial(), g.leading_monomial()));
    }
    basis.push_back(std::move(g));
  };

  for (auto& g : generators) {
    if (!basis.empty()) basis.front().check_compatible(g);
    if (!g.is_zero()) add_element(g.monic());
  }

  while (!queue.empty()) {
    const CriticalPair pair = queue.pop();
    ++st.pairs_considered;
    const auto& fi = basis[pair.i];
    const auto& fj = basis[pair.j];
    if (coprime(fi.leading_monomial(), fj.leading_monomial())) {
      ++st.product_criterion_skips;
      continue;
    }
    bool chain = false;
    for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
      if (k == pair.i || k == pair.j) continue;
      chain = basis[k].leading_monomial().divides(pair.lcm) && !queue.pending(pair.i, k) &&
              !queue.pending(pair.j, k);
    }
    if (chain) {
      ++st.chain_criterion_skips;
      continue;
    }
    ++st.pairs_reduced;
    FpPoly r = normal_form(s_polynomial(fi, fj), basis);
    if (!r.is_zero()) add_element(r.monic());
  }

  // Minimalize, then inter-reduce.
  std::vector<FpPoly> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      const auto& mi = basis[i].leading_monomial();
      const auto& mj = basis[j].leading_monomial();
      redundant = mj.divides(mi) && (!(mi == mj) || j < i);
    }
    if (!redundant) minimal.push_back(basis[i]);
  }
  std::vector<FpPoly> reduced;
  reduced.reserve(minimal.size());
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<FpPoly> others;
    for (std::size_t j = 0; j < minimal.size(); ++j) {
      if (j != i) others.push_back(minimal[j]);
    }
    FpPoly g = minimal[i];
    FpPoly::Term lead = g.pop_leading_term();
    FpPoly tail = normal_form(g, others);
    tail += FpPoly::term(g.field(), g.nvars(), lead.monomial, lead.coeff);
    reduced.push_back(tail.monic());
  }
  std::sort(reduced.begin(), reduced.end(), [](const FpPoly& a, const FpPoly& b) {
    return grevlex_compare(a.leading_monomial(), b.leading_monomial()) < 0;
  });
  return reduced;
}

std::optional<std::vector<Monomial>> standard_monomials(const std::vector<FpPoly>& basis, int nvars) {
  std::vector<int> bound(static_cast<std::size_t>(nvars), -1);
  for (const auto& g : basis) {
    const Monomial& m = g.leading_monomial();
    if (m.is_one()) return std::vector<Monomial>{};
    for (int v = 0; v < nvars; ++v) {
      if (m[v] == m.degree()) {
        auto& b = bound[static_cast<std::size_t>(v)];
        b = b < 0 ? m[v] : std::min(b, m[v]);
      }
    }
  }
  for (int b : bound) {
    if (b < 0) return std::nullopt;
  }
  std::vector<Monomial> out;
  std::vector<int> exps(static_cast<std::size_t>(nvars), 0);
  while (true) {
    const Monomial m{std::span<const int>(exps)};
    if (!find_reducer(m, basis)) out.push_back(m);
    int v = 0;
    while (v < nvars) {
      auto& e = exps[static_cast<std::size_t>(v)];
      if (++e < bound[static_cast<std::size_t>(v)]) break;
      e = 0;
      ++v;
    }
    if (v == nvars) break;
  }
  std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) { return grevlex_compare(a, b) < 0; });
  return out;
}

std::optional<std::size_t> quotient_dimension(const std::vector<FpPoly>& basis, int nvars) {
  auto monomials = standard_monomials(basis, nvars);
  if (!monomials) return std::nullopt;
  return monomials->size();
}

UniPoly<PrimeField> specialize(const FpPoly& f, int fixed_var, PrimeField::Element a) {
  if (f.nvars() != 2) throw std::invalid_argument("specialize: bivariate polynomial expected");
  const PrimeField& field = f.field();
  const int free_var = 1 - fixed_var;
  std::vector<PrimeField::Element> coeffs(static_cast<std::size_t>(std::max(0, f.degree_in(free_var) + 1)),
                                          field.zero());
  for (const auto& t : f.terms()) {
    auto& slot = coeffs[static_cast<std::size_t>(t.monomial[free_var])];
    slot = field.add(slot, field.mul(t.coeff, field.pow(a, static_cast<std::uint64_t>(t.monomial[fixed_var]))));
  }
  return UniPoly<PrimeField>(field, std::move(coeffs));
}

UniPoly<PrimeField> eliminant_resultant(const FpPoly& f, const FpPoly& g, int eliminate) {
  f.check_compatible(g);
  if (f.nvars() != 2) throw std::invalid_argument("eliminant_resultant: bivariate polynomials expected");
  if (f.is_zero() || g.is_zero()) throw std::domain_error("eliminant_resultant of the zero polynomial");
  const PrimeField& field = f.field();
  const int keep = 1 - eliminate;
  const auto deg_f = static_cast<std::size_t>(f.degree_in(eliminate));
  const auto deg_g = static_cast<std::size_t>(g.degree_in(eliminate));
  const auto bound = static_cast<std::size_t>(f.total_degree()) * static_cast<std::size_t>(g.total_degree());
  if (bound + 1 >= field.characteristic()) throw std::domain_error("eliminant_resultant: field too small");
  std::vector<PrimeField::Element> xs, ys;
  xs.reserve(bound + 1);
  ys.reserve(bound + 1);
  for (std::size_t i = 0; i <= bound; ++i) {
    const auto a = static_cast<PrimeField::Element>(i);
    const auto fa = specialize(f, keep, a);
    const auto ga = specialize(g, keep, a);
    xs.push_back(a);
    ys.push_back(sylvester_resultant(field, std::span(fa.coefficients()), deg_f, std::span(ga.coefficients()), deg_g));
  }
  return interpolate(field, std::span<const PrimeField::Element>(xs), std::span<const PrimeField::Element>(ys));
}

}  // namespace curvegroup::polycore
