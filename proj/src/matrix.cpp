#include "phyloag/matrix.hpp"

#include <unordered_map>

namespace phyloag {

std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    out.push_back(idx);
    if (k == 0) break;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

namespace {

struct Echelon {
  Matrix<Int> a;
  std::vector<std::size_t> pivots;
  int swap_sign = 1;
  Int row_scale = 1;  // product of the per-row denominator multipliers
};

// Fraction-free forward elimination. After the call, rows [0, rank) hold an
// echelon form whose entries are minors of the (row-scaled) input.
Echelon bareiss(const MatQ& m) {
  Echelon e;
  e.a = Matrix<Int>(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Int den = 1;
    for (std::size_t c = 0; c < m.cols(); ++c) den = lcm(den, m(r, c).get_den());
    e.row_scale *= den;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      Rat scaled = m(r, c) * den;
      e.a(r, c) = scaled.get_num();
    }
  }
  auto& a = e.a;
  Int prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    if (p != r) {
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
      e.swap_sign = -e.swap_sign;
    }
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      for (std::size_t j = c + 1; j < a.cols(); ++j) {
        Int v = a(r, c) * a(i, j) - a(i, c) * a(r, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = v;
      }
      a(i, c) = 0;
    }
    prev = a(r, c);
    e.pivots.push_back(c);
    ++r;
  }
  return e;
}

}  // namespace

RankNullspace mat_rank_nullspace(const MatQ& m) {
  Echelon e = bareiss(m);
  RankNullspace out;
  out.rank = e.pivots.size();
  out.pivot_columns = e.pivots;
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivots) is_pivot[c] = true;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rat> x(m.cols(), Rat(0));
    x[f] = 1;
    for (std::size_t i = out.rank; i-- > 0;) {
      std::size_t pc = e.pivots[i];
      Rat s = 0;
      for (std::size_t j = pc + 1; j < m.cols(); ++j) {
        if (x[j] != 0 && e.a(i, j) != 0) s += Rat(e.a(i, j)) * x[j];
      }
      Rat v = -s / Rat(e.a(i, pc));
      v.canonicalize();
      x[pc] = v;
    }
    out.nullspace.push_back(std::move(x));
  }
  return out;
}

std::size_t mat_rank(const MatQ& m) { return bareiss(m).pivots.size(); }

Rat determinant(const MatQ& m) {
  if (m.rows() != m.cols()) throw ValidationError("determinant of a non-square matrix");
  if (m.rows() == 0) return 1;
  Echelon e = bareiss(m);
  if (e.pivots.size() < m.rows()) return 0;
  Rat d(e.a(m.rows() - 1, m.cols() - 1) * e.swap_sign, e.row_scale);
  d.canonicalize();
  return d;
}

namespace {

// Laplace expansion along successive rows, memoized on the set of columns
// still available.
class PolyDeterminant {
 public:
  explicit PolyDeterminant(const MatP& m) : m_(m) {}

  Poly compute() {
    if (m_.rows() == 0) return Poly(1);
    return expand(0, (std::uint64_t{1} << m_.cols()) - 1);
  }

 private:
  Poly expand(std::size_t row, std::uint64_t cols) {
    if (row + 1 == m_.rows()) {
      for (std::size_t c = 0; c < m_.cols(); ++c) {
        if (cols >> c & 1u) return m_(row, c);
      }
    }
    auto it = memo_.find(cols);
    if (it != memo_.end()) return it->second;
    Poly out;
    int sign = 1;
    for (std::size_t c = 0; c < m_.cols(); ++c) {
      if (!(cols >> c & 1u)) continue;
      if (!m_(row, c).is_zero()) {
        Poly sub = expand(row + 1, cols & ~(std::uint64_t{1} << c));
        Poly term = m_(row, c) * sub;
        if (sign > 0) {
          out += term;
        } else {
          out -= term;
        }
      }
      sign = -sign;
    }
    memo_.emplace(cols, out);
    return out;
  }

  const MatP& m_;
  std::unordered_map<std::uint64_t, Poly> memo_;
};

template <class T>
Matrix<T> submatrix(const Matrix<T>& m, const std::vector<std::size_t>& rows,
                    const std::vector<std::size_t>& cols) {
  Matrix<T> out(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) out(i, j) = m(rows[i], cols[j]);
  }
  return out;
}

void check_minor_size(std::size_t rows, std::size_t cols, std::size_t t) {
  if (t == 0 || t > std::min(rows, cols)) {
    throw ValidationError("minor size " + std::to_string(t) + " out of range for a " +
                          std::to_string(rows) + "x" + std::to_string(cols) + " matrix");
  }
}

}  // namespace

Poly determinant(const MatP& m) {
  if (m.rows() != m.cols()) throw ValidationError("determinant of a non-square matrix");
  if (m.rows() > 24) throw ValidationError("symbolic determinant too large");
  return PolyDeterminant(m).compute();
}

std::vector<Rat> minors(const MatQ& m, std::size_t t) {
  check_minor_size(m.rows(), m.cols(), t);
  std::vector<Rat> out;
  auto row_sets = combinations(m.rows(), t);
  auto col_sets = combinations(m.cols(), t);
  for (const auto& rs : row_sets) {
    for (const auto& cs : col_sets) out.push_back(determinant(submatrix(m, rs, cs)));
  }
  return out;
}

std::vector<Poly> minors(const MatP& m, std::size_t t) {
  check_minor_size(m.rows(), m.cols(), t);
  std::vector<Poly> out;
  auto row_sets = combinations(m.rows(), t);
  auto col_sets = combinations(m.cols(), t);
  for (const auto& rs : row_sets) {
    for (const auto& cs : col_sets) out.push_back(determinant(submatrix(m, rs, cs)));
  }
  return out;
}

MatQ evaluate(const MatP& m, const Assignment& values) {
  MatQ out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = poly_eval(m(r, c), values);
  }
  return out;
}

}  // namespace phyloag
