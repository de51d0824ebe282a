#include "phyloag/group.hpp"

namespace phyloag {

GroupSpec GroupSpec::of_order(unsigned k) {
  if (k == 2) return z2();
  if (k == 4) return z2xz2();
  throw ValidationError("no group of order " + std::to_string(k) + " is supported");
}

std::vector<std::vector<int>> GroupSpec::character_table() const {
  std::vector<std::vector<int>> table(order(), std::vector<int>(order()));
  for (unsigned g = 0; g < order(); ++g) {
    for (unsigned h = 0; h < order(); ++h) table[g][h] = character(g, h);
  }
  return table;
}

std::string GroupSpec::element_name(unsigned g) const {
  if (kind_ == GroupKind::Z2) return std::to_string(g);
  return "(" + std::to_string(g >> 1) + "," + std::to_string(g & 1) + ")";
}

GroupSpec group_of(const ModelSpec& model) {
  if (!model.is_group_based()) throw ValidationError(to_string(model.kind()) + " is not group-based");
  return GroupSpec::of_order(model.k());
}

}  // namespace phyloag
