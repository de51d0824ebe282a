#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "phyloag/matrix.hpp"
#include "phyloag/paramap.hpp"
#include "phyloag/random.hpp"

namespace phyloag {

// Explicit list of coordinate polynomials with names, e.g. accumulated
// coordinates or a chosen subset of a map's coordinates.
class PolyListMap : public PolynomialMap {
 public:
  PolyListMap(std::vector<Poly> polys, std::vector<std::string> names, std::vector<VarId> parameters);
  // Selected coordinates of another map.
  static PolyListMap subset(const PolynomialMap& map, const std::vector<std::size_t>& indices);
  // Accumulated coordinates of a joint map, named P<representative>.
  static PolyListMap accumulated(const JointMap& map);
  // Sum of m weighted Fourier monomial maps with disjoint parameters,
  // q = s0 q_m1 + ... ; requires a group-based model with uniform root.
  static PolyListMap fourier_mixture(const ModelSpec& model, std::size_t m);

  std::size_t coordinate_count() const override { return polys_.size(); }
  const Poly& coordinate(std::size_t i) const override { return polys_.at(i); }
  std::string coordinate_name(std::size_t i) const override { return names_.at(i); }
  std::vector<VarId> parameters() const override { return params_; }

 private:
  std::vector<Poly> polys_;
  std::vector<std::string> names_;
  std::vector<VarId> params_;
};

constexpr std::uint64_t kDefaultSeed = 20251;

enum class VanishMode { Symbolic, Randomized };

struct VanishResult {
  bool vanishes = false;
  std::size_t points = 0;  // evaluation points used (randomized mode)
  std::optional<Assignment> witness;
  Rat witness_value;
};

// Substitutes the map's coordinates (by name) into the form. Symbolic mode
// expands; randomized mode evaluates at `points` random exact points and
// stops at the first nonzero value. Throws ValidationError when the form
// uses a variable that is not a coordinate of the map.
VanishResult vanishing_check(const Poly& form, const PolynomialMap& map, VanishMode mode,
                             std::uint64_t seed = kDefaultSeed, std::size_t points = 25);

// Exact Jacobian (coordinates x parameters) at a point.
MatQ jacobian_at(const PolynomialMap& map, const Assignment& params);

struct JacobianDimension {
  std::size_t affine_rank = 0;
  long projective_dim = -1;
  std::vector<std::size_t> ranks;  // rank at each point
};
// Maximum exact Jacobian rank over random points.
JacobianDimension jacobian_dimension(const PolynomialMap& map, std::size_t points = 3,
                                     std::uint64_t seed = kDefaultSeed);

// Exponent vectors of all monomials of the given degree in `vars`
// variables, lexicographically decreasing (x0^d first).
std::vector<std::vector<unsigned>> monomial_exponents(std::size_t vars, unsigned degree);

struct InterpolationResult {
  std::vector<Poly> forms;  // normalized, in the coordinate names
  std::size_t monomials = 0;
  std::size_t points = 0;
  std::size_t attempts = 0;
  bool multimodular = false;
};

// Vanishing forms of the given degree in the chosen coordinates, found as
// the exact nullspace of the monomial evaluation matrix at (#monomials + 10)
// random points. Every form is re-checked at 10 fresh points; on failure
// the sample is redrawn. Throws DegeneracyError after repeated failures.
InterpolationResult interpolate_vanishing_forms(const PolynomialMap& map, unsigned degree,
                                                const std::vector<std::size_t>& basis,
                                                std::uint64_t seed = kDefaultSeed);

}  // namespace phyloag
