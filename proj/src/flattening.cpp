#include "phyloag/flattening.hpp"

#include <bitset>

namespace phyloag {

Matrix<std::size_t> flattening_layout(std::size_t leaves, unsigned k, const Split& split) {
  if (split.is_trivial()) throw ValidationError("flattening needs a split with two nonempty sides");
  if (split.below.size() + split.complement.size() != leaves) throw ValidationError("split does not match the leaf count");
  std::size_t rows = 1;
  std::size_t cols = 1;
  for (std::size_t i = 0; i < split.below.size(); ++i) rows *= k;
  for (std::size_t i = 0; i < split.complement.size(); ++i) cols *= k;
  std::vector<std::size_t> weight(leaves, 1);
  for (std::size_t i = leaves - 1; i-- > 0;) weight[i] = weight[i + 1] * k;
  auto offsets = [&](const std::vector<std::size_t>& side, std::size_t count) {
    std::vector<std::size_t> out(count, 0);
    for (std::size_t idx = 0; idx < count; ++idx) {
      std::size_t rest = idx;
      for (std::size_t j = side.size(); j-- > 0;) {
        out[idx] += (rest % k) * weight[side[j]];
        rest /= k;
      }
    }
    return out;
  };
  auto row_off = offsets(split.below, rows);
  auto col_off = offsets(split.complement, cols);
  Matrix<std::size_t> layout(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) layout(r, c) = row_off[r] + col_off[c];
  }
  return layout;
}

namespace {

std::size_t leaf_count_of(std::size_t size, unsigned k) {
  std::size_t n = 0;
  std::size_t total = 1;
  while (total < size) {
    total *= k;
    ++n;
  }
  if (total != size) throw ValidationError("tensor length is not a power of k");
  return n;
}

template <class T>
Matrix<T> flatten_impl(const std::vector<T>& tensor, unsigned k, const Split& split) {
  auto layout = flattening_layout(leaf_count_of(tensor.size(), k), k, split);
  Matrix<T> m(layout.rows(), layout.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = tensor[layout(r, c)];
  }
  return m;
}

}  // namespace

MatQ flatten(const std::vector<Rat>& tensor, unsigned k, const Split& split) { return flatten_impl(tensor, k, split); }
MatP flatten(const std::vector<Poly>& tensor, unsigned k, const Split& split) { return flatten_impl(tensor, k, split); }
Matrix<double> flatten(const std::vector<double>& tensor, unsigned k, const Split& split) {
  return flatten_impl(tensor, k, split);
}

std::vector<Poly> coordinate_symbols(const PolynomialMap& map) {
  std::vector<Poly> out;
  out.reserve(map.coordinate_count());
  for (std::size_t i = 0; i < map.coordinate_count(); ++i) out.push_back(Poly::variable(map.coordinate_name(i)));
  return out;
}

std::size_t rank_at_point(const PolynomialMap& map, unsigned k, const Split& split, const Assignment& params) {
  return mat_rank(flatten(map.evaluate(params), k, split));
}

bool variety_membership_minors(const std::vector<Rat>& tensor, const Tree& tree, unsigned k, std::size_t r) {
  for (EdgeId e = 0; e < tree.edge_count(); ++e) {
    if (tree.is_leaf(tree.edge(e).child)) continue;
    Split s = edge_split(tree, e);
    if (s.is_trivial() || s.below.size() == 1 || s.complement.size() == 1) continue;
    if (mat_rank(flatten(tensor, k, s)) > r) return false;
  }
  return true;
}

Split quartet_split(const Tree& tree, QuartetSplit which) {
  if (tree.leaf_count() != 4) throw ValidationError("quartet splits need exactly four leaves");
  std::size_t partner = which == QuartetSplit::S12_34 ? 1 : which == QuartetSplit::S13_24 ? 2 : 3;
  return split_from_labels(tree, {tree.leaf_label(0), tree.leaf_label(partner)});
}

std::string to_string(QuartetSplit which) {
  switch (which) {
    case QuartetSplit::S12_34: return "(12)(34)";
    case QuartetSplit::S13_24: return "(13)(24)";
    case QuartetSplit::S14_23: return "(14)(23)";
  }
  return "";
}

bool named_variety_check(const std::vector<Rat>& tensor, const Tree& tree, QuartetSplit which) {
  if (tensor.size() != 16) throw ValidationError("named varieties need a 2x2x2x2 tensor");
  for (const Rat& m : minors(flatten(tensor, 2, quartet_split(tree, which)), 3)) {
    if (m != 0) return false;
  }
  return true;
}

std::unordered_map<VarId, Poly> diagonal_substitution(std::size_t leaves) {
  std::unordered_map<VarId, Poly> out;
  for (std::size_t sigma = 0; sigma < (std::size_t{1} << leaves); ++sigma) {
    std::string name = "p";
    for (std::size_t i = leaves; i-- > 0;) name += ((sigma >> i) & 1) ? '1' : '0';
    out.emplace(var(name), Poly::variable("p" + std::to_string(std::bitset<64>(sigma).count())));
  }
  return out;
}

MatP distinct_rows_cols(const MatP& m) {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    bool repeat = false;
    for (std::size_t prev : rows) repeat = repeat || m.row(prev) == m.row(r);
    if (!repeat) rows.push_back(r);
  }
  for (std::size_t c = 0; c < m.cols(); ++c) {
    bool repeat = false;
    for (std::size_t prev : cols) {
      bool same = true;
      for (std::size_t r = 0; r < m.rows() && same; ++r) same = m(r, prev) == m(r, c);
      repeat = repeat || same;
    }
    if (!repeat) cols.push_back(c);
  }
  MatP out(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) out(i, j) = m(rows[i], cols[j]);
  }
  return out;
}

MatP hankel_matrix() {
  MatP h(3, 3);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) h(i, j) = Poly::variable("p" + std::to_string(i + j));
  }
  return h;
}

}  // namespace phyloag
