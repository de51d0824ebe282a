#include <unordered_map>

#include "phyloag/fourier.hpp"
#include "phyloag/invariants.hpp"

namespace phyloag {

PolyListMap::PolyListMap(std::vector<Poly> polys, std::vector<std::string> names, std::vector<VarId> parameters)
    : polys_(std::move(polys)), names_(std::move(names)), params_(std::move(parameters)) {
  if (polys_.size() != names_.size()) throw ValidationError("one name per coordinate required");
}

PolyListMap PolyListMap::subset(const PolynomialMap& map, const std::vector<std::size_t>& indices) {
  std::vector<Poly> polys;
  std::vector<std::string> names;
  for (std::size_t i : indices) {
    polys.push_back(map.coordinate(i));
    names.push_back(map.coordinate_name(i));
  }
  return PolyListMap(std::move(polys), std::move(names), map.parameters());
}

PolyListMap PolyListMap::accumulated(const JointMap& map) {
  auto classes = symmetry_classes(map);
  std::vector<std::string> names;
  for (const auto& cls : classes) names.push_back(accumulated_name(map, cls));
  return PolyListMap(accumulate_classes(map, classes), std::move(names), map.parameters());
}

PolyListMap PolyListMap::fourier_mixture(const ModelSpec& model, std::size_t m) {
  if (m == 0) throw ValidationError("a mixture needs at least one component");
  if (m == 1) {
    MonomialMap single(model);
    std::vector<std::size_t> all(single.coordinate_count());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    return subset(single, all);
  }
  std::vector<Poly> polys;
  std::vector<std::string> names;
  std::vector<VarId> params;
  for (std::size_t i = 0; i < m; ++i) {
    ModelOptions opts;
    opts.k = model.k();
    opts.homogeneous = model.homogeneous();
    opts.symbol_suffix = model.symbol_suffix() + "_m" + std::to_string(i + 1);
    MonomialMap fm(ModelSpec(model.tree(), model.kind(), model.root().mode, opts));
    Poly weight = Poly::variable(var("s" + std::to_string(i)));
    if (polys.empty()) {
      polys.resize(fm.coordinate_count());
      for (std::size_t c = 0; c < fm.coordinate_count(); ++c) names.push_back(fm.coordinate_name(c));
    }
    for (std::size_t c = 0; c < fm.coordinate_count(); ++c) polys[c] += weight * fm.coordinate(c);
    auto p = fm.parameters();
    params.insert(params.end(), p.begin(), p.end());
  }
  for (std::size_t i = 0; i < m; ++i) params.push_back(var("s" + std::to_string(i)));
  return PolyListMap(std::move(polys), std::move(names), std::move(params));
}

namespace {

// Position of each coordinate variable of the form within the map.
std::unordered_map<VarId, std::size_t> coordinate_positions(const Poly& form, const PolynomialMap& map) {
  std::unordered_map<VarId, std::size_t> wanted;
  for (VarId v : form.variables()) wanted.emplace(v, SIZE_MAX);
  std::size_t missing = wanted.size();
  for (std::size_t i = 0; i < map.coordinate_count() && missing > 0; ++i) {
    auto id = VarTable::global().find(map.coordinate_name(i));
    if (!id) continue;
    auto it = wanted.find(*id);
    if (it != wanted.end() && it->second == SIZE_MAX) {
      it->second = i;
      --missing;
    }
  }
  for (const auto& [v, pos] : wanted) {
    if (pos == SIZE_MAX) throw ValidationError("'" + var_name(v) + "' is not a coordinate of the map");
  }
  return wanted;
}

}  // namespace

VanishResult vanishing_check(const Poly& form, const PolynomialMap& map, VanishMode mode, std::uint64_t seed,
                             std::size_t points) {
  auto positions = coordinate_positions(form, map);
  VanishResult result;
  if (mode == VanishMode::Symbolic) {
    std::unordered_map<VarId, Poly> subst;
    for (const auto& [v, pos] : positions) subst.emplace(v, map.coordinate(pos));
    result.vanishes = poly_substitute(form, subst).is_zero();
    return result;
  }
  CounterRng rng(seed);
  const auto params = map.parameters();
  for (std::size_t i = 0; i < points; ++i) {
    Assignment point = random_point(params, rng);
    auto values = map.evaluate(point);
    Assignment coords;
    for (const auto& [v, pos] : positions) coords.emplace(v, values[pos]);
    Rat value = poly_eval(form, coords);
    ++result.points;
    if (value != 0) {
      result.vanishes = false;
      result.witness = std::move(point);
      result.witness_value = value;
      return result;
    }
  }
  result.vanishes = true;
  return result;
}

}  // namespace phyloag
