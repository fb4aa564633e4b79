#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace curvegroup::polycore {

/// Dense row-major matrix over a field, only what elimination needs.
template <class Field>
struct DenseMatrix {
  using Coeff = typename Field::Element;

  DenseMatrix(const Field& f, std::size_t r, std::size_t c) : field(f), rows(r), cols(c), data(r * c, f.zero()) {}

  Coeff& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  const Coeff& at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }

  Field field;
  std::size_t rows;
  std::size_t cols;
  std::vector<Coeff> data;
};

/// Determinant by Gaussian elimination. Square matrices only.
template <class Field>
typename Field::Element determinant(DenseMatrix<Field> m) {
  const Field& f = m.field;
  const std::size_t n = m.rows;
  auto det = f.one();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && f.is_zero(m.at(pivot, col))) ++pivot;
    if (pivot == n) return f.zero();
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m.at(pivot, j), m.at(col, j));
      det = f.neg(det);
    }
    det = f.mul(det, m.at(col, col));
    const auto inv = f.inv(m.at(col, col));
    for (std::size_t i = col + 1; i < n; ++i) {
      if (f.is_zero(m.at(i, col))) continue;
      const auto factor = f.mul(m.at(i, col), inv);
      for (std::size_t j = col; j < n; ++j) m.at(i, j) = f.sub(m.at(i, j), f.mul(factor, m.at(col, j)));
    }
  }
  return det;
}

template <class Field>
std::size_t rank(DenseMatrix<Field> m) {
  const Field& f = m.field;
  std::size_t r = 0;
  for (std::size_t col = 0; col < m.cols && r < m.rows; ++col) {
    std::size_t pivot = r;
    while (pivot < m.rows && f.is_zero(m.at(pivot, col))) ++pivot;
    if (pivot == m.rows) continue;
    for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(pivot, j), m.at(r, j));
    const auto inv = f.inv(m.at(r, col));
    for (std::size_t i = r + 1; i < m.rows; ++i) {
      if (f.is_zero(m.at(i, col))) continue;
      const auto factor = f.mul(m.at(i, col), inv);
      for (std::size_t j = col; j < m.cols; ++j) m.at(i, j) = f.sub(m.at(i, j), f.mul(factor, m.at(r, j)));
    }
    ++r;
  }
  return r;
}

}  // namespace curvegroup::polycore
