#pragma once

#include <cstddef>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "phyloag/circuit.hpp"
#include "phyloag/models.hpp"
#include "phyloag/poly.hpp"

namespace phyloag {

// Coordinates of a polynomial parameterization, evaluable and expandable.
class PolynomialMap {
 public:
  virtual ~PolynomialMap() = default;
  virtual std::size_t coordinate_count() const = 0;
  virtual const Poly& coordinate(std::size_t index) const = 0;
  virtual std::string coordinate_name(std::size_t index) const = 0;
  virtual std::vector<VarId> parameters() const = 0;
  virtual std::vector<Rat> evaluate(const Assignment& params) const;
  virtual std::vector<double> evaluate(const FloatAssignment& params) const;
};

// Observed states of the coordinate nodes; flat index sum_i s_i k^(n-1-i).
struct LeafPattern {
  std::vector<unsigned> states;
  std::size_t flat = 0;
};

// The map phi of a model: one coordinate per observed pattern. The factored
// circuit is built on construction; expanded polynomials are produced on
// demand by direct summation over hidden states and cached.
class JointMap : public PolynomialMap {
 public:
  explicit JointMap(ModelSpec model);

  const ModelSpec& model() const { return model_; }
  const Circuit& circuit() const { return circuit_; }

  std::size_t coordinate_count() const override { return count_; }
  const Poly& coordinate(std::size_t flat) const override;
  std::string coordinate_name(std::size_t flat) const override;
  std::vector<VarId> parameters() const override { return model_.parameters(); }
  std::vector<Rat> evaluate(const Assignment& params) const override;
  std::vector<double> evaluate(const FloatAssignment& params) const override;

  LeafPattern pattern(std::size_t flat) const;
  std::size_t flat_index(const std::vector<unsigned>& states) const;
  // Accepts digits ("012") or, for k = 4, nucleotides ("ACG").
  std::size_t parse_pattern(const std::string& text) const;

  Circuit::OpCount circuit_cost(std::size_t flat) const { return circuit_.count(circuit_.outputs().at(flat)); }

 private:
  Poly expand_coordinate(std::size_t flat) const;

  ModelSpec model_;
  std::size_t count_;
  Circuit circuit_;
  mutable std::unique_ptr<std::once_flag[]> once_;
  mutable std::vector<Poly> polys_;
};

// JointMap with every coordinate expanded.
JointMap expand_map(const ModelSpec& model);
Circuit build_circuit(const ModelSpec& model);

// Common total degree of the nonzero coordinates. Throws ValidationError if
// coordinates disagree.
int degree_profile(const JointMap& map);

enum class EvalMode { Exact, Float };
std::vector<Rat> eval_map(const JointMap& map, const Assignment& params);
std::vector<double> eval_map(const JointMap& map, const FloatAssignment& params);

// Coordinates with identical polynomials, classes ordered by smallest index.
std::vector<std::vector<std::size_t>> symmetry_classes(const PolynomialMap& map);
// Class size times the representative polynomial.
std::vector<Poly> accumulate_classes(const PolynomialMap& map,
                                     const std::vector<std::vector<std::size_t>>& classes);

// Name of the accumulated coordinate of a class, e.g. "P012".
std::string accumulated_name(const JointMap& map, const std::vector<std::size_t>& cls);

struct PolyHash {
  std::size_t operator()(const Poly& p) const;
};

}  // namespace phyloag
