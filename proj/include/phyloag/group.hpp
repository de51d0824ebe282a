#pragma once

#include <string>
#include <vector>

#include "phyloag/models.hpp"

namespace phyloag {

enum class GroupKind { Z2, Z2xZ2 };

// Z2 or Z2 x Z2 with elements encoded as bit vectors, identity 0. State s
// of a k-state model is the element with the same code (A=00, C=01, G=10,
// T=11 for DNA).
class GroupSpec {
 public:
  static GroupSpec z2() { return GroupSpec(GroupKind::Z2); }
  static GroupSpec z2xz2() { return GroupSpec(GroupKind::Z2xZ2); }
  // Group of order k; throws ValidationError for k other than 2 or 4.
  static GroupSpec of_order(unsigned k);

  GroupKind kind() const { return kind_; }
  unsigned order() const { return kind_ == GroupKind::Z2 ? 2 : 4; }
  static unsigned identity() { return 0; }
  static unsigned add(unsigned g, unsigned h) { return g ^ h; }
  // chi_g(h) = (-1)^(popcount(g & h)).
  static int character(unsigned g, unsigned h) { return (__builtin_popcount(g & h) & 1) ? -1 : 1; }
  std::vector<std::vector<int>> character_table() const;
  std::string element_name(unsigned g) const;

 private:
  explicit GroupSpec(GroupKind kind) : kind_(kind) {}
  GroupKind kind_;
};

// Group acting on a group-based model's states. Throws ValidationError.
GroupSpec group_of(const ModelSpec& model);

}  // namespace phyloag
