#pragma once

#include <cstddef>
#include <vector>

#include "phyloag/error.hpp"
#include "phyloag/poly.hpp"
#include "phyloag/rational.hpp"

namespace phyloag {

// Dense row-major matrix.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T{})
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  // Rows must all have the same length.
  static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
    Matrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
    for (std::size_t r = 0; r < m.rows_; ++r) {
      if (rows[r].size() != m.cols_) throw ValidationError("ragged matrix rows");
      for (std::size_t c = 0; c < m.cols_; ++c) m(r, c) = rows[r][c];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<T> row(std::size_t r) const {
    return std::vector<T>(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using MatQ = Matrix<Rat>;
using MatP = Matrix<Poly>;

struct RankNullspace {
  std::size_t rank = 0;
  // Reduced basis: vector j has a 1 in its free column, 0 in the other free
  // columns. rank + nullspace.size() == cols.
  std::vector<std::vector<Rat>> nullspace;
  std::vector<std::size_t> pivot_columns;
};

// Fraction-free (Bareiss) elimination on the denominator-cleared matrix.
RankNullspace mat_rank_nullspace(const MatQ& m);
std::size_t mat_rank(const MatQ& m);

Rat determinant(const MatQ& m);
Poly determinant(const MatP& m);

// All t x t minors, rows-tuple major then column-tuple, both in increasing
// lexicographic order. Throws ValidationError when t is out of range.
std::vector<Rat> minors(const MatQ& m, std::size_t t);
std::vector<Poly> minors(const MatP& m, std::size_t t);

MatQ evaluate(const MatP& m, const Assignment& values);

// Increasing k-subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k);

}  // namespace phyloag
