#pragma once

#include <memory>
#include <mutex>
#include <vector>

#include "phyloag/paramap.hpp"

namespace phyloag {

struct MixtureComponent {
  Tree tree;
  ModelKind kind;
  RootMode root;
  ModelOptions options;
};

// phi = w_1 phi_1 + ... + w_m phi_m with disjoint symbol pools (component i
// gets the suffix "_m<i>" when m > 1). The weights are 1 unless every
// component has a uniform root, in which case global symbols s0..s<m-1>
// are introduced.
class MixtureMap : public PolynomialMap {
 public:
  explicit MixtureMap(const std::vector<MixtureComponent>& components);

  std::size_t coordinate_count() const override { return count_; }
  const Poly& coordinate(std::size_t index) const override;
  std::string coordinate_name(std::size_t index) const override {
    return components_.front()->coordinate_name(index);
  }
  std::vector<VarId> parameters() const override;
  std::vector<Rat> evaluate(const Assignment& params) const override;
  std::vector<double> evaluate(const FloatAssignment& params) const override;

  unsigned k() const { return components_.front()->model().k(); }
  const Tree& tree() const { return components_.front()->model().tree(); }
  std::size_t component_count() const { return components_.size(); }
  const JointMap& component(std::size_t i) const { return *components_.at(i); }
  const std::vector<VarId>& weights() const { return weights_; }

 private:
  std::vector<std::unique_ptr<JointMap>> components_;
  std::vector<VarId> weights_;
  std::size_t count_;
  mutable std::unique_ptr<std::once_flag[]> once_;
  mutable std::vector<Poly> polys_;
};

// Throws ValidationError when leaf labels or k differ between components.
MixtureMap mixture_map(const std::vector<MixtureComponent>& components);
// m copies of one model.
MixtureMap mixture_map(const Tree& tree, ModelKind kind, RootMode root, std::size_t m,
                       const ModelOptions& options = {});

}  // namespace phyloag
