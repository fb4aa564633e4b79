#include "curvegroup/enumeration/coset_enumeration.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <stdexcept>

namespace curvegroup::enumeration {

using fpcore::Presentation;
using fpcore::Word;

std::string_view to_string(Strategy s) { return s == Strategy::Hlt ? "hlt" : "felsch"; }

std::optional<Strategy> parse_strategy(std::string_view name) {
  if (name == "hlt") return Strategy::Hlt;
  if (name == "felsch") return Strategy::Felsch;
  return std::nullopt;
}

CosetTable::CosetTable(int generator_count, std::size_t rows)
    : generator_count_(generator_count), rows_(rows), data_(rows * 2 * generator_count, kUndefined) {}

int CosetTable::trace(int coset, const Word& w) const {
  for (const auto& s : w.syllables()) {
    const int column = 2 * s.generator + (s.exponent < 0 ? 1 : 0);
    const std::int64_t n = s.exponent < 0 ? -s.exponent : s.exponent;
    for (std::int64_t i = 0; i < n; ++i) {
      if (coset == kUndefined) return kUndefined;
      coset = (*this)(coset, column);
    }
  }
  return coset;
}

TableAudit audit_table(const CosetTable& table, const Presentation& pres) {
  TableAudit audit;
  const int cols = table.columns();
  const auto n = static_cast<int>(table.rows());
  audit.closed = true;
  audit.consistent = true;
  for (int c = 0; c < n; ++c) {
    for (int x = 0; x < cols; ++x) {
      const int d = table(c, x);
      if (d == CosetTable::kUndefined) {
        audit.closed = false;
        audit.consistent = false;
        continue;
      }
      if (d < 0 || d >= n || table(d, x ^ 1) != c) audit.consistent = false;
    }
  }
  audit.relators_trace = audit.closed && audit.consistent;
  for (int c = 0; audit.relators_trace && c < n; ++c) {
    for (const auto& r : pres.relators()) {
      if (table.trace(c, r) != c) {
        audit.relators_trace = false;
        break;
      }
    }
  }
  return audit;
}

namespace {

struct CapHit {};

class Enumerator {
 public:
  Enumerator(const Presentation& pres, std::uint64_t cap) : cols_(2 * pres.generator_count()), cap_(cap) {
    ceiling_ = 4 * cap;
    for (const auto& r : pres.relators()) {
      auto letters = r.letters();
      if (!letters.empty()) relators_.push_back(std::move(letters));
    }
    new_row();
  }

  void run_hlt() {
    for (int c = 0; c < rows(); ++c) {
      for (const auto& w : relators_) {
        if (!live(c)) break;
        scan_and_fill(c, w);
      }
      for (int x = 0; x < cols_ && live(c); ++x) {
        if (at(c, x) == CosetTable::kUndefined) define(c, x);
      }
    }
  }

  void run_felsch() {
    track_deductions_ = true;
    build_conjugates();
    // Relators must hold at the base coset even when it is never a gap.
    for (const auto& w : relators_) scan(0, w);
    process_deductions();
    int c = 0;
    int x = 0;
    for (;;) {
      if (!find_gap(c, x)) {
        c = 0;
        x = 0;
        if (!find_gap(c, x)) return;
      }
      define(c, x);
      process_deductions();
    }
  }

  /// Live cosets renumbered in breadth-first order from coset 0.
  CosetTable standardized(int generator_count) const {
    std::vector<int> order;
    std::vector<int> index(rows(), -1);
    order.push_back(0);
    index[0] = 0;
    for (std::size_t i = 0; i < order.size(); ++i) {
      for (int x = 0; x < cols_; ++x) {
        const int d = at(order[i], x);
        if (d != CosetTable::kUndefined && index[d] < 0) {
          index[d] = static_cast<int>(order.size());
          order.push_back(d);
        }
      }
    }
    CosetTable table(generator_count, order.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
      for (int x = 0; x < cols_; ++x) {
        const int d = at(order[i], x);
        table(i, x) = d == CosetTable::kUndefined ? CosetTable::kUndefined : index[d];
      }
    }
    return table;
  }

  std::uint64_t live_count() const { return live_; }
  std::uint64_t max_live() const { return max_live_; }
  std::uint64_t defined() const { return static_cast<std::uint64_t>(rows()); }

 private:
  int rows() const { return static_cast<int>(parent_.size()); }
  bool live(int c) const { return parent_[c] == c; }
  int& at(int c, int x) { return table_[static_cast<std::size_t>(c) * cols_ + x]; }
  int at(int c, int x) const { return table_[static_cast<std::size_t>(c) * cols_ + x]; }

  int new_row() {
    const int c = rows();
    parent_.push_back(c);
    table_.resize(table_.size() + cols_, CosetTable::kUndefined);
    ++live_;
    max_live_ = std::max(max_live_, live_);
    return c;
  }

  void define(int c, int x) {
    if (live_ >= cap_ || defined() >= ceiling_) throw CapHit{};
    const int d = new_row();
    at(c, x) = d;
    at(d, x ^ 1) = c;
    if (track_deductions_) deductions_.emplace_back(c, x);
  }

  void deduce(int f, int x, int b) {
    at(f, x) = b;
    at(b, x ^ 1) = f;
    if (track_deductions_) deductions_.emplace_back(f, x);
  }

  int rep(int c) {
    int root = c;
    while (parent_[root] != root) root = parent_[root];
    while (parent_[c] != root) {
      const int next = parent_[c];
      parent_[c] = root;
      c = next;
    }
    return root;
  }

  void merge(int a, int b, std::vector<int>& queue) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent_[b] = a;
    queue.push_back(b);
    --live_;
  }

  void coincidence(int a, int b) {
    std::vector<int> queue;
    merge(a, b, queue);
    for (std::size_t i = 0; i < queue.size(); ++i) {
      const int e = queue[i];
      for (int x = 0; x < cols_; ++x) {
        const int f = at(e, x);
        if (f == CosetTable::kUndefined) continue;
        at(f, x ^ 1) = CosetTable::kUndefined;
        const int e1 = rep(e);
        const int f1 = rep(f);
        if (at(e1, x) != CosetTable::kUndefined) {
          merge(f1, at(e1, x), queue);
        } else if (at(f1, x ^ 1) != CosetTable::kUndefined) {
          merge(e1, at(f1, x ^ 1), queue);
        } else {
          deduce(e1, x, f1);
        }
      }
    }
  }

  // Traces w from c in both directions; fills a single gap, or reports a
  // coincidence. With fill set, missing letters are defined as needed.
  void trace_relator(int c, const std::vector<int>& w, bool fill) {
    int f = c;
    int b = c;
    int i = 0;
    int j = static_cast<int>(w.size()) - 1;
    for (;;) {
      while (i <= j && at(f, w[i]) != CosetTable::kUndefined) f = at(f, w[i++]);
      if (i > j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j >= i && at(b, w[j] ^ 1) != CosetTable::kUndefined) b = at(b, w[j--] ^ 1);
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {
        deduce(f, w[i], b);
        return;
      }
      if (!fill) return;
      define(f, w[i]);
    }
  }

  void scan_and_fill(int c, const std::vector<int>& w) { trace_relator(c, w, true); }
  void scan(int c, const std::vector<int>& w) { trace_relator(c, w, false); }

  void build_conjugates() {
    std::vector<std::set<std::vector<int>>> by_letter(cols_);
    for (const auto& w : relators_) {
      std::vector<int> inv(w.rbegin(), w.rend());
      for (int& x : inv) x ^= 1;
      for (const std::vector<int>* base : {&w, static_cast<const std::vector<int>*>(&inv)}) {
        for (std::size_t s = 0; s < base->size(); ++s) {
          std::vector<int> rotated(base->begin() + s, base->end());
          rotated.insert(rotated.end(), base->begin(), base->begin() + s);
          by_letter[rotated.front()].insert(std::move(rotated));
        }
      }
    }
    conjugates_.assign(cols_, {});
    for (int x = 0; x < cols_; ++x) conjugates_[x].assign(by_letter[x].begin(), by_letter[x].end());
  }

  void process_deductions() {
    while (!deductions_.empty()) {
      const auto [a, x] = deductions_.back();
      deductions_.pop_back();
      if (!live(a)) continue;
      for (const auto& w : conjugates_[x]) {
        if (!live(a)) break;
        scan(a, w);
      }
      if (!live(a)) continue;
      const int b = at(a, x);
      if (b == CosetTable::kUndefined || !live(b)) continue;
      for (const auto& w : conjugates_[x ^ 1]) {
        if (!live(b)) break;
        scan(b, w);
      }
    }
  }

  bool find_gap(int& c, int& x) {
    for (; c < rows(); ++c, x = 0) {
      if (!live(c)) continue;
      for (; x < cols_; ++x) {
        if (at(c, x) == CosetTable::kUndefined) return true;
      }
    }
    return false;
  }

  int cols_;
  std::uint64_t cap_;
  std::uint64_t ceiling_;
  std::vector<std::vector<int>> relators_;
  std::vector<std::vector<std::vector<int>>> conjugates_;
  std::vector<int> parent_;
  std::vector<int> table_;
  std::vector<std::pair<int, int>> deductions_;
  bool track_deductions_ = false;
  std::uint64_t live_ = 0;
  std::uint64_t max_live_ = 0;
};

}  // namespace

EnumerationResult todd_coxeter(const Presentation& pres, std::uint64_t coset_cap, Strategy strategy) {
  if (coset_cap == 0) throw std::invalid_argument("todd_coxeter: coset cap must be positive");
  if (coset_cap > static_cast<std::uint64_t>(std::numeric_limits<int>::max() / 4)) {
    throw std::invalid_argument("todd_coxeter: coset cap too large");
  }
  Enumerator e(pres, coset_cap);
  EnumerationResult result;
  result.strategy = strategy;
  try {
    if (strategy == Strategy::Hlt) {
      e.run_hlt();
    } else {
      e.run_felsch();
    }
  } catch (const CapHit&) {
    result.cosets_defined = e.defined();
    result.max_live = e.max_live();
    return result;
  }
  result.cosets_defined = e.defined();
  result.max_live = e.max_live();
  result.table = e.standardized(pres.generator_count());
  if (result.table.rows() != e.live_count()) throw std::logic_error("todd_coxeter: live cosets not connected");
  if (!audit_table(result.table, pres).ok()) throw std::logic_error("todd_coxeter: completed table failed audit");
  result.order = result.table.rows();
  return result;
}

}  // namespace curvegroup::enumeration
