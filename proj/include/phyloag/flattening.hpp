#pragma once

#include <vector>

#include "phyloag/matrix.hpp"
#include "phyloag/paramap.hpp"

namespace phyloag {

// Flat coordinate index of every flattening entry. Rows run over the
// states of the below-set leaves, columns over the complement, both
// lexicographically. Throws ValidationError for a trivial split.
Matrix<std::size_t> flattening_layout(std::size_t leaves, unsigned k, const Split& split);

MatQ flatten(const std::vector<Rat>& tensor, unsigned k, const Split& split);
MatP flatten(const std::vector<Poly>& tensor, unsigned k, const Split& split);
Matrix<double> flatten(const std::vector<double>& tensor, unsigned k, const Split& split);

// The coordinates of a map as variables named by coordinate_name.
std::vector<Poly> coordinate_symbols(const PolynomialMap& map);

// Exact rank of the flattening of map(params).
std::size_t rank_at_point(const PolynomialMap& map, unsigned k, const Split& split, const Assignment& params);

// True iff the flattening along every internal edge of the tree has rank
// at most r.
bool variety_membership_minors(const std::vector<Rat>& tensor, const Tree& tree, unsigned k, std::size_t r);

// The three quartet splits (12)|(34), (13)|(24), (14)|(23).
enum class QuartetSplit { S12_34, S13_24, S14_23 };
Split quartet_split(const Tree& tree, QuartetSplit which);
std::string to_string(QuartetSplit which);
// True iff every 3x3 minor of the corresponding flattening of a 2x2x2x2
// tensor vanishes. Throws ValidationError on other shapes.
bool named_variety_check(const std::vector<Rat>& tensor, const Tree& tree, QuartetSplit which);

// p_sigma -> p<number of ones in sigma> for k = 2, the coordinates of the
// model with all leaf parameters equal.
std::unordered_map<VarId, Poly> diagonal_substitution(std::size_t leaves);
// Drops repeated rows and columns, keeping first occurrences.
MatP distinct_rows_cols(const MatP& m);
// [[p0,p1,p2],[p1,p2,p3],[p2,p3,p4]].
MatP hankel_matrix();

}  // namespace phyloag
