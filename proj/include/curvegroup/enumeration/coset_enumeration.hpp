#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "curvegroup/fpcore/presentation.hpp"

namespace curvegroup::enumeration {

inline constexpr std::uint64_t kDefaultCosetCap = 1'000'000;

enum class Strategy {
  Hlt,     // relator-driven: scan and fill every relator at each coset
  Felsch,  // definition-driven: fill the first gap, then process deductions
};

std::string_view to_string(Strategy s);
std::optional<Strategy> parse_strategy(std::string_view name);

/// Complete or partial coset table over letter columns 2g (g) and 2g+1 (g^-1).
class CosetTable {
 public:
  static constexpr int kUndefined = -1;

  CosetTable() = default;
  CosetTable(int generator_count, std::size_t rows);

  int generator_count() const { return generator_count_; }
  int columns() const { return 2 * generator_count_; }
  std::size_t rows() const { return rows_; }

  int operator()(std::size_t coset, int column) const { return data_[coset * columns() + column]; }
  int& operator()(std::size_t coset, int column) { return data_[coset * columns() + column]; }

  /// Coset reached from `coset` along the letters of w, or kUndefined.
  int trace(int coset, const fpcore::Word& w) const;

 private:
  int generator_count_ = 0;
  std::size_t rows_ = 0;
  std::vector<int> data_;
};

struct TableAudit {
  bool closed = false;
  bool consistent = false;
  bool relators_trace = false;

  bool ok() const { return closed && consistent && relators_trace; }
};

TableAudit audit_table(const CosetTable& table, const fpcore::Presentation& pres);

struct EnumerationResult {
  /// Group order, or nullopt when the live-coset cap was reached.
  std::optional<std::uint64_t> order;
  /// Total coset rows ever created, including ones later identified.
  std::uint64_t cosets_defined = 0;
  std::uint64_t max_live = 0;
  Strategy strategy = Strategy::Felsch;
  /// Standardized table; empty when the cap was reached.
  CosetTable table;

  bool cap_exceeded() const { return !order.has_value(); }
};

/// Todd-Coxeter enumeration of the cosets of the trivial subgroup.
///
/// Stops with CapExceeded once more than coset_cap cosets are live at the
/// same time, or once 4 * coset_cap rows have been created in total. A
/// finished table is standardized and audited; an audit failure throws
/// std::logic_error.
EnumerationResult todd_coxeter(const fpcore::Presentation& pres, std::uint64_t coset_cap = kDefaultCosetCap,
                               Strategy strategy = Strategy::Felsch);

}  // namespace curvegroup::enumeration
