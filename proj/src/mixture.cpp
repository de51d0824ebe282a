#include "phyloag/mixture.hpp"

namespace phyloag {

MixtureMap::MixtureMap(const std::vector<MixtureComponent>& components) {
  if (components.empty()) throw ValidationError("a mixture needs at least one component");
  const bool many = components.size() > 1;
  bool all_uniform = true;
  for (std::size_t i = 0; i < components.size(); ++i) {
    ModelOptions opts = components[i].options;
    if (many) opts.symbol_suffix += "_m" + std::to_string(i + 1);
    components_.push_back(std::make_unique<JointMap>(
        ModelSpec(components[i].tree, components[i].kind, components[i].root, opts)));
    all_uniform = all_uniform && components[i].root == RootMode::Uniform;
  }
  const auto& first = components_.front()->model();
  for (const auto& c : components_) {
    const auto& m = c->model();
    if (m.k() != first.k()) throw ValidationError("mixture components differ in the number of states");
    if (m.observed_nodes().size() != first.observed_nodes().size()) {
      throw ValidationError("mixture components differ in the number of observed nodes");
    }
    for (std::size_t l = 0; l < m.tree().leaf_count(); ++l) {
      if (m.tree().leaf_label(l) != first.tree().leaf_label(l)) {
        throw ValidationError("mixture components differ in their leaf labels");
      }
    }
  }
  if (many && all_uniform) {
    for (std::size_t i = 0; i < components_.size(); ++i) weights_.push_back(var("s" + std::to_string(i)));
  }
  count_ = first.coordinate_count();
  once_.reset(new std::once_flag[count_]);
  polys_.resize(count_);
}

const Poly& MixtureMap::coordinate(std::size_t index) const {
  if (index >= count_) throw ValidationError("coordinate index out of range");
  std::call_once(once_[index], [&] {
    Poly sum;
    for (std::size_t i = 0; i < components_.size(); ++i) {
      Poly term = components_[i]->coordinate(index);
      if (!weights_.empty()) term *= Poly::variable(weights_[i]);
      sum += term;
    }
    polys_[index] = std::move(sum);
  });
  return polys_[index];
}

std::vector<VarId> MixtureMap::parameters() const {
  std::vector<VarId> out;
  for (const auto& c : components_) {
    auto p = c->parameters();
    out.insert(out.end(), p.begin(), p.end());
  }
  out.insert(out.end(), weights_.begin(), weights_.end());
  return out;
}

namespace {

template <class T, class A>
std::vector<T> evaluate_mixture(const std::vector<std::unique_ptr<JointMap>>& components,
                                const std::vector<VarId>& weights, const A& params) {
  std::vector<T> sum;
  for (std::size_t i = 0; i < components.size(); ++i) {
    std::vector<T> v = components[i]->evaluate(params);
    if (!weights.empty()) {
      auto it = params.find(weights[i]);
      if (it == params.end()) throw MissingVariable(var_name(weights[i]));
      for (auto& x : v) x *= it->second;
    }
    if (sum.empty()) {
      sum = std::move(v);
    } else {
      for (std::size_t j = 0; j < sum.size(); ++j) sum[j] += v[j];
    }
  }
  return sum;
}

}  // namespace

std::vector<Rat> MixtureMap::evaluate(const Assignment& params) const {
  return evaluate_mixture<Rat>(components_, weights_, params);
}

std::vector<double> MixtureMap::evaluate(const FloatAssignment& params) const {
  return evaluate_mixture<double>(components_, weights_, params);
}

MixtureMap mixture_map(const std::vector<MixtureComponent>& components) { return MixtureMap(components); }

MixtureMap mixture_map(const Tree& tree, ModelKind kind, RootMode root, std::size_t m, const ModelOptions& options) {
  std::vector<MixtureComponent> components(m, MixtureComponent{tree, kind, root, options});
  return MixtureMap(components);
}

}  // namespace phyloag
