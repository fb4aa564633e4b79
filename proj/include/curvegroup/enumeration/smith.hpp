#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "curvegroup/fpcore/presentation.hpp"

namespace curvegroup::enumeration {

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::size_t rows, std::size_t cols, std::initializer_list<long> entries);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  mpz_class& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const mpz_class& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool operator==(const IntMatrix&) const = default;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<mpz_class> data_;
};

struct SmithForm {
  /// min(rows, cols) entries, nonnegative, each dividing the next; zeros last.
  std::vector<mpz_class> diagonal;
  std::size_t rank = 0;
  /// Unimodular with left * M * right = diag.
  IntMatrix left;
  IntMatrix right;
};

SmithForm smith_normal_form(const IntMatrix& m);

/// Relators x generators matrix of exponent sums.
IntMatrix exponent_sum_matrix(const fpcore::Presentation& pres);

struct AbelianInvariants {
  /// Invariant factors > 1 in divisibility order.
  std::vector<mpz_class> torsion;
  std::size_t free_rank = 0;

  bool is_cyclic() const { return free_rank + torsion.size() <= 1; }
  /// "Z^2 x Z/4", "Z/12", or "1".
  std::string to_string() const;
};

AbelianInvariants abelianization(const fpcore::Presentation& pres);

}  // namespace curvegroup::enumeration
