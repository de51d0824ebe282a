#include "phyloag/paramap.hpp"

#include <functional>
#include <map>
#include <unordered_map>

namespace phyloag {

std::vector<Rat> PolynomialMap::evaluate(const Assignment& params) const {
  std::vector<Rat> out;
  out.reserve(coordinate_count());
  for (std::size_t i = 0; i < coordinate_count(); ++i) out.push_back(poly_eval(coordinate(i), params));
  return out;
}

std::vector<double> PolynomialMap::evaluate(const FloatAssignment& params) const {
  std::vector<double> out;
  out.reserve(coordinate_count());
  for (std::size_t i = 0; i < coordinate_count(); ++i) out.push_back(poly_eval(coordinate(i), params));
  return out;
}

Circuit build_circuit(const ModelSpec& model) {
  const Tree& tree = model.tree();
  const unsigned k = model.k();
  const auto& observed = model.observed_nodes();
  Circuit circuit;
  std::size_t count = model.coordinate_count();
  std::vector<int> state(tree.node_count(), -1);

  for (std::size_t flat = 0; flat < count; ++flat) {
    std::size_t rest = flat;
    for (std::size_t i = observed.size(); i-- > 0;) {
      state[observed[i]] = static_cast<int>(rest % k);
      rest /= k;
    }
    // Message of node v for parent state s is the product over its children
    // of the child factors; memoized per coordinate.
    std::map<std::pair<NodeId, unsigned>, Circuit::NodeRef> memo;
    std::function<Circuit::NodeRef(NodeId, unsigned)> value;
    auto factor = [&](NodeId c, unsigned s) {
      EdgeId e = *tree.parent_edge(c);
      const auto& t = model.edge_template(e);
      if (state[c] >= 0) {
        auto x = static_cast<unsigned>(state[c]);
        return circuit.mul(circuit.symbol(t.cell(s, x)), value(c, x));
      }
      Circuit::NodeRef sum = circuit.constant(0);
      for (unsigned x = 0; x < k; ++x) {
        sum = circuit.add(sum, circuit.mul(circuit.symbol(t.cell(s, x)), value(c, x)));
      }
      return sum;
    };
    value = [&](NodeId v, unsigned s) -> Circuit::NodeRef {
      auto key = std::make_pair(v, s);
      auto it = memo.find(key);
      if (it != memo.end()) return it->second;
      Circuit::NodeRef prod = circuit.constant(1);
      for (NodeId c : tree.children(v)) prod = circuit.mul(prod, factor(c, s));
      memo.emplace(key, prod);
      return prod;
    };
    auto root_term = [&](unsigned u) {
      Circuit::NodeRef prod = model.root().mode == RootMode::Free
                                  ? circuit.symbol(model.root().symbols[u])
                                  : circuit.constant(1);
      for (NodeId c : tree.children(tree.root())) prod = circuit.mul(prod, factor(c, u));
      return prod;
    };
    Circuit::NodeRef out;
    NodeId root = tree.root();
    if (state[root] >= 0) {
      out = root_term(static_cast<unsigned>(state[root]));
    } else {
      out = circuit.constant(0);
      for (unsigned u = 0; u < k; ++u) out = circuit.add(out, root_term(u));
    }
    if (model.root().mode == RootMode::Uniform) out = circuit.mul(circuit.constant(Rat(1, k)), out);
    circuit.add_output(out);
  }
  return circuit;
}

JointMap::JointMap(ModelSpec model)
    : model_(std::move(model)),
      count_(model_.coordinate_count()),
      circuit_(build_circuit(model_)),
      once_(new std::once_flag[count_]),
      polys_(count_) {}

const Poly& JointMap::coordinate(std::size_t flat) const {
  if (flat >= count_) throw ValidationError("coordinate index out of range");
  std::call_once(once_[flat], [&] { polys_[flat] = expand_coordinate(flat); });
  return polys_[flat];
}

Poly JointMap::expand_coordinate(std::size_t flat) const {
  const Tree& tree = model_.tree();
  const unsigned k = model_.k();
  std::vector<unsigned> state(tree.node_count(), 0);
  std::vector<bool> fixed(tree.node_count(), false);
  LeafPattern pat = pattern(flat);
  const auto& observed = model_.observed_nodes();
  for (std::size_t i = 0; i < observed.size(); ++i) {
    state[observed[i]] = pat.states[i];
    fixed[observed[i]] = true;
  }
  std::vector<NodeId> hidden;
  for (NodeId v = 0; v < tree.node_count(); ++v) {
    if (!fixed[v]) hidden.push_back(v);
  }
  const bool free_root = model_.root().mode == RootMode::Free;
  const Rat coef = free_root ? Rat(1) : Rat(1, k);
  std::unordered_map<Mono, Rat, MonoHash> acc;
  std::vector<unsigned> odometer(hidden.size(), 0);
  while (true) {
    for (std::size_t i = 0; i < hidden.size(); ++i) state[hidden[i]] = odometer[i];
    std::vector<Mono::Factor> factors;
    factors.reserve(tree.edge_count() + 1);
    if (free_root) factors.emplace_back(model_.root().symbols[state[tree.root()]], 1);
    for (EdgeId e = 0; e < tree.edge_count(); ++e) {
      const Edge& ed = tree.edge(e);
      factors.emplace_back(model_.edge_template(e).cell(state[ed.parent], state[ed.child]), 1);
    }
    Mono m = Mono::from_factors(std::move(factors));
    auto [it, inserted] = acc.try_emplace(std::move(m), coef);
    if (!inserted) it->second += coef;
    std::size_t i = 0;
    while (i < odometer.size() && ++odometer[i] == k) odometer[i++] = 0;
    if (i == odometer.size()) break;
  }
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc) terms.push_back({m, c});
  return Poly::from_terms(std::move(terms));
}

LeafPattern JointMap::pattern(std::size_t flat) const {
  LeafPattern p;
  p.flat = flat;
  const unsigned k = model_.k();
  p.states.assign(model_.observed_nodes().size(), 0);
  for (std::size_t i = p.states.size(); i-- > 0;) {
    p.states[i] = static_cast<unsigned>(flat % k);
    flat /= k;
  }
  return p;
}

std::size_t JointMap::flat_index(const std::vector<unsigned>& states) const {
  if (states.size() != model_.observed_nodes().size()) throw ValidationError("pattern length mismatch");
  std::size_t flat = 0;
  for (unsigned s : states) {
    if (s >= model_.k()) throw ValidationError("state out of range");
    flat = flat * model_.k() + s;
  }
  return flat;
}

std::size_t JointMap::parse_pattern(const std::string& text) const {
  std::vector<unsigned> states;
  for (char c : text) {
    if (c >= '0' && c <= '9') {
      states.push_back(static_cast<unsigned>(c - '0'));
    } else if (model_.k() == 4 && (c == 'A' || c == 'C' || c == 'G' || c == 'T')) {
      states.push_back(c == 'A' ? 0 : c == 'C' ? 1 : c == 'G' ? 2 : 3);
    } else {
      throw ParseError("invalid pattern character", states.size());
    }
  }
  return flat_index(states);
}

std::string JointMap::coordinate_name(std::size_t flat) const {
  std::string name = "p";
  for (unsigned s : pattern(flat).states) name += static_cast<char>('0' + s);
  return name;
}

std::vector<Rat> JointMap::evaluate(const Assignment& params) const { return circuit_.evaluate(params); }

std::vector<double> JointMap::evaluate(const FloatAssignment& params) const { return circuit_.evaluate(params); }

JointMap expand_map(const ModelSpec& model) {
  JointMap map(model);
  for (std::size_t i = 0; i < map.coordinate_count(); ++i) map.coordinate(i);
  return map;
}

int degree_profile(const JointMap& map) {
  int degree = -1;
  for (std::size_t i = 0; i < map.coordinate_count(); ++i) {
    const Poly& p = map.coordinate(i);
    if (p.is_zero()) continue;
    if (!p.is_homogeneous()) throw ValidationError("coordinate " + map.coordinate_name(i) + " is not homogeneous");
    if (degree >= 0 && p.total_degree() != degree) throw ValidationError("coordinates differ in degree");
    degree = p.total_degree();
  }
  return degree;
}

std::vector<Rat> eval_map(const JointMap& map, const Assignment& params) { return map.evaluate(params); }

std::vector<double> eval_map(const JointMap& map, const FloatAssignment& params) {
  return map.evaluate(params);
}

std::size_t PolyHash::operator()(const Poly& p) const {
  std::size_t h = p.size();
  for (const auto& t : p.terms()) {
    std::size_t th = t.mono.hash() ^ (std::hash<std::string>{}(to_string(t.coef)) << 1);
    h ^= th + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

std::vector<std::vector<std::size_t>> symmetry_classes(const PolynomialMap& map) {
  std::unordered_map<Poly, std::size_t, PolyHash> index;
  std::vector<std::vector<std::size_t>> classes;
  for (std::size_t i = 0; i < map.coordinate_count(); ++i) {
    auto [it, inserted] = index.try_emplace(map.coordinate(i), classes.size());
    if (inserted) classes.emplace_back();
    classes[it->second].push_back(i);
  }
  return classes;
}

std::vector<Poly> accumulate_classes(const PolynomialMap& map,
                                     const std::vector<std::vector<std::size_t>>& classes) {
  std::vector<Poly> out;
  out.reserve(classes.size());
  for (const auto& cls : classes) out.push_back(map.coordinate(cls.front()) * Rat(static_cast<long>(cls.size())));
  return out;
}

std::string accumulated_name(const JointMap& map, const std::vector<std::size_t>& cls) {
  std::string name = map.coordinate_name(cls.front());
  name[0] = 'P';
  return name;
}

}  // namespace phyloag
