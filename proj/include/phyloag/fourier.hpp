#pragma once

#include <optional>
#include <unordered_map>
#include <string>
#include <vector>

#include "phyloag/group.hpp"
#include "phyloag/matrix.hpp"
#include "phyloag/paramap.hpp"

namespace phyloag {

// q_(g1..gn) = sum_sigma p_sigma prod_i chi_gi(sigma_i), same flat layout as
// p. Throws ValidationError when the length is not k^n.
std::vector<Rat> transform_tensor(const std::vector<Rat>& p, const GroupSpec& group);
std::vector<double> transform_tensor(const std::vector<double>& p, const GroupSpec& group);
// Adjoint transform scaled by 1/k^n.
std::vector<Rat> inverse_transform_tensor(const std::vector<Rat>& q, const GroupSpec& group);

// Per edge, u_e(g) = sum_h M_e(0,h) chi_g(h) as a linear form, and the
// symbol standing for it. Elements with equal forms share a symbol, named
// after the original symbol of the first such element with its first
// letter capitalized (a0 + 3a1 -> A0, a0 - a1 -> A1).
struct TransformedParams {
  std::vector<std::vector<Poly>> forms;       // [edge][element]
  std::vector<std::vector<VarId>> symbols;    // [edge][element]
  std::vector<VarId> parameters;              // distinct, edge order
  // Substitution taking each transformed symbol to its linear form.
  std::unordered_map<VarId, Poly> substitution() const;
  Assignment evaluate(const Assignment& params) const;
};
TransformedParams transform_params(const ModelSpec& model);

// Edge labels h_e (group elements). For Jukes-Cantor kinds the index is
// reduced to the indicator [h_e != 0].
struct FourierIndex {
  std::vector<unsigned> labels;
  std::string to_string() const;
  friend bool operator==(const FourierIndex&, const FourierIndex&) = default;
  friend auto operator<=>(const FourierIndex&, const FourierIndex&) = default;
};

// h_e = sum of the labels of the leaves below e; none when the leaf labels
// do not sum to the identity.
std::optional<FourierIndex> leaf_to_edge_labels(const Tree& tree, const GroupSpec& group,
                                                const std::vector<unsigned>& leaf_labels);
// True for kinds whose transformed parameters agree on all non-identity
// elements.
bool is_jukes_cantor(ModelKind kind);

// The toric parameterization q_index = prod_e u_e(h_e) in transformed
// parameters, one coordinate per distinct index in lexicographic order.
// Requires a group-based model with uniform root.
class MonomialMap : public PolynomialMap {
 public:
  explicit MonomialMap(const ModelSpec& model);

  std::size_t coordinate_count() const override { return indices_.size(); }
  const Poly& coordinate(std::size_t i) const override { return polys_.at(i); }
  std::string coordinate_name(std::size_t i) const override { return "q" + indices_.at(i).to_string(); }
  std::vector<VarId> parameters() const override { return params_.parameters; }

  const TransformedParams& transformed() const { return params_; }
  const std::vector<FourierIndex>& indices() const { return indices_; }
  const Mono& monomial(std::size_t i) const { return polys_.at(i).leading_term().mono; }
  VarId coordinate_var(std::size_t i) const { return vars_.at(i); }
  std::optional<std::size_t> find(const FourierIndex& index) const;
  std::optional<std::size_t> find(const std::string& name) const;
  // First leaf labeling (lexicographic) producing the index.
  const std::vector<unsigned>& representative_labels(std::size_t i) const { return reps_.at(i); }
  // Coordinate of a raw transformed-tensor position; none when q vanishes.
  std::optional<std::size_t> coordinate_of_raw(std::size_t flat) const;

  // Rows: transformed parameters; columns: coordinates.
  std::vector<std::vector<unsigned>> exponent_matrix() const;
  std::string exponent_matrix_csv() const;

 private:
  ModelSpec model_;
  GroupSpec group_;
  bool reduced_;
  TransformedParams params_;
  std::vector<FourierIndex> indices_;
  std::vector<std::vector<unsigned>> reps_;
  std::vector<Poly> polys_;
  std::vector<VarId> vars_;
  std::vector<long> raw_;
};

MonomialMap monomial_map(const ModelSpec& model);

// Indicator vectors realized by zero-sum leaf labelings.
std::vector<Subforest> support_classes(const Tree& tree, const GroupSpec& group);

// Fourier coordinates in the accumulated convention: q_index as a linear
// form in accumulated coordinates P..., the coefficient of a class being
// the mean of prod_i chi_{l_i}(sigma_i) over its patterns, where l is the
// representative labeling of the index.
std::vector<Poly> accumulated_fourier_forms(const JointMap& map, const MonomialMap& fourier,
                                            const std::vector<std::vector<std::size_t>>& classes);

// Linear dependencies among polynomials: rank of their span and a basis of
// coefficient vectors c with sum_i c_i polys[i] = 0.
RankNullspace linear_relations(const std::vector<Poly>& polys);

// Binomials q^alpha - q^beta of total degree <= d (1 <= d <= 3) with
// disjoint supports and equal images under the monomial map, normalized and
// de-duplicated up to sign; ordered by degree, then by enumeration order.
std::vector<Poly> binomials_up_to_degree(const MonomialMap& map, unsigned degree);

}  // namespace phyloag
