#include "curvegroup/enumeration/smith.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace curvegroup::enumeration {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::initializer_list<long> entries) : IntMatrix(rows, cols) {
  if (entries.size() != rows * cols) throw std::invalid_argument("IntMatrix: entry count does not match shape");
  std::size_t i = 0;
  for (long e : entries) data_[i++] = e;
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("IntMatrix: shape mismatch in product");
  IntMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
    }
  }
  return c;
}

namespace {

// Row and column operations applied to the working matrix and mirrored into
// the transforms, so that left * original * right == work at all times.
struct Reducer {
  IntMatrix work, left, right;

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < work.cols(); ++j) std::swap(work(a, j), work(b, j));
    for (std::size_t j = 0; j < left.cols(); ++j) std::swap(left(a, j), left(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < work.rows(); ++i) std::swap(work(i, a), work(i, b));
    for (std::size_t i = 0; i < right.rows(); ++i) std::swap(right(i, a), right(i, b));
  }
  // row[target] += f * row[source]
  void add_row(std::size_t target, std::size_t source, const mpz_class& f) {
    for (std::size_t j = 0; j < work.cols(); ++j) work(target, j) += f * work(source, j);
    for (std::size_t j = 0; j < left.cols(); ++j) left(target, j) += f * left(source, j);
  }
  void add_col(std::size_t target, std::size_t source, const mpz_class& f) {
    for (std::size_t i = 0; i < work.rows(); ++i) work(i, target) += f * work(i, source);
    for (std::size_t i = 0; i < right.rows(); ++i) right(i, target) += f * right(i, source);
  }
  void negate_row(std::size_t r) {
    for (std::size_t j = 0; j < work.cols(); ++j) work(r, j) = -work(r, j);
    for (std::size_t j = 0; j < left.cols(); ++j) left(r, j) = -left(r, j);
  }

  // Smallest nonzero |entry| in the block starting at (t, t).
  bool find_pivot(std::size_t t, std::size_t& pi, std::size_t& pj) const {
    bool found = false;
    for (std::size_t i = t; i < work.rows(); ++i) {
      for (std::size_t j = t; j < work.cols(); ++j) {
        if (work(i, j) == 0) continue;
        if (!found || abs(work(i, j)) < abs(work(pi, pj))) {
          pi = i;
          pj = j;
          found = true;
        }
      }
    }
    return found;
  }

  // Clears row t and column t outside the pivot; true once both are clear
  // and the pivot divides the rest of the block.
  bool clear_cross(std::size_t t) {
    bool clean = true;
    const mpz_class pivot = work(t, t);
    for (std::size_t i = t + 1; i < work.rows(); ++i) {
      if (work(i, t) == 0) continue;
      mpz_class q;
      mpz_fdiv_q(q.get_mpz_t(), work(i, t).get_mpz_t(), pivot.get_mpz_t());
      add_row(i, t, -q);
      if (work(i, t) != 0) clean = false;
    }
    for (std::size_t j = t + 1; j < work.cols(); ++j) {
      if (work(t, j) == 0) continue;
      mpz_class q;
      mpz_fdiv_q(q.get_mpz_t(), work(t, j).get_mpz_t(), pivot.get_mpz_t());
      add_col(j, t, -q);
      if (work(t, j) != 0) clean = false;
    }
    if (!clean) return false;
    for (std::size_t i = t + 1; i < work.rows(); ++i) {
      for (std::size_t j = t + 1; j < work.cols(); ++j) {
        if (!mpz_divisible_p(work(i, j).get_mpz_t(), pivot.get_mpz_t())) {
          add_row(t, i, 1);
          return false;
        }
      }
    }
    return true;
  }
};

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
  Reducer r{m, IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols())};
  const std::size_t n = std::min(m.rows(), m.cols());
  SmithForm out;
  for (std::size_t t = 0; t < n; ++t) {
    std::size_t pi = t, pj = t;
    if (!r.find_pivot(t, pi, pj)) break;
    for (;;) {
      r.swap_rows(t, pi);
      r.swap_cols(t, pj);
      if (r.clear_cross(t)) break;
      r.find_pivot(t, pi, pj);
    }
    if (r.work(t, t) < 0) r.negate_row(t);
    ++out.rank;
  }
  out.diagonal.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.diagonal[i] = r.work(i, i);
  out.left = std::move(r.left);
  out.right = std::move(r.right);
  return out;
}

IntMatrix exponent_sum_matrix(const fpcore::Presentation& pres) {
  const auto gens = static_cast<std::size_t>(pres.generator_count());
  IntMatrix m(pres.relators().size(), gens);
  for (std::size_t i = 0; i < pres.relators().size(); ++i) {
    for (std::size_t g = 0; g < gens; ++g) {
      m(i, g) = static_cast<long>(pres.relators()[i].exponent_sum(static_cast<int>(g)));
    }
  }
  return m;
}

AbelianInvariants abelianization(const fpcore::Presentation& pres) {
  const SmithForm snf = smith_normal_form(exponent_sum_matrix(pres));
  AbelianInvariants out;
  for (const auto& d : snf.diagonal) {
    if (d > 1) out.torsion.push_back(d);
  }
  out.free_rank = static_cast<std::size_t>(pres.generator_count()) - snf.rank;
  return out;
}

std::string AbelianInvariants::to_string() const {
  if (free_rank == 0 && torsion.empty()) return "1";
  std::ostringstream out;
  const char* sep = "";
  if (free_rank == 1) {
    out << "Z";
    sep = " x ";
  } else if (free_rank > 1) {
    out << "Z^" << free_rank;
    sep = " x ";
  }
  for (const auto& d : torsion) {
    out << sep << "Z/" << d.get_str();
    sep = " x ";
  }
  return out.str();
}

}  // namespace curvegroup::enumeration
