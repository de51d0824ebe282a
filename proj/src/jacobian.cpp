#include <unordered_map>

#include "phyloag/invariants.hpp"

namespace phyloag {

namespace {

Rat power(const Rat& x, unsigned e) {
  Rat out(1);
  for (unsigned i = 0; i < e; ++i) out *= x;
  return out;
}

}  // namespace

MatQ jacobian_at(const PolynomialMap& map, const Assignment& params) {
  const auto vars = map.parameters();
  std::unordered_map<VarId, std::size_t> column;
  for (std::size_t j = 0; j < vars.size(); ++j) column.emplace(vars[j], j);
  MatQ jac(map.coordinate_count(), vars.size());
  for (std::size_t i = 0; i < map.coordinate_count(); ++i) {
    for (const auto& term : map.coordinate(i).terms()) {
      const auto& factors = term.mono.factors();
      std::vector<Rat> values;
      values.reserve(factors.size());
      for (const auto& [v, e] : factors) {
        auto it = params.find(v);
        if (it == params.end()) throw MissingVariable(var_name(v));
        values.push_back(it->second);
      }
      for (std::size_t f = 0; f < factors.size(); ++f) {
        auto col = column.find(factors[f].first);
        if (col == column.end()) continue;
        Rat d = term.coef * factors[f].second * power(values[f], factors[f].second - 1);
        for (std::size_t g = 0; g < factors.size(); ++g) {
          if (g != f) d *= power(values[g], factors[g].second);
        }
        jac(i, col->second) += d;
      }
    }
  }
  return jac;
}

JacobianDimension jacobian_dimension(const PolynomialMap& map, std::size_t points, std::uint64_t seed) {
  JacobianDimension out;
  CounterRng rng(seed);
  const auto vars = map.parameters();
  for (std::size_t i = 0; i < points; ++i) {
    std::size_t r = mat_rank(jacobian_at(map, random_point(vars, rng)));
    out.ranks.push_back(r);
    out.affine_rank = std::max(out.affine_rank, r);
  }
  out.projective_dim = static_cast<long>(out.affine_rank) - 1;
  return out;
}

}  // namespace phyloag
