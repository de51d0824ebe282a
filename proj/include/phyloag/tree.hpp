#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace phyloag {

using NodeId = std::size_t;
using EdgeId = std::size_t;

struct Edge {
  NodeId parent;
  NodeId child;
};

// Rooted tree with labeled leaves. Immutable once built.
//
// Node ids follow creation order while reading the Newick text (pre-order).
// Leaves are ordered by first appearance in the text. Edges are grouped by
// parent: parents are visited in symmetric order (first child's subtree,
// then the parent, then the remaining subtrees) and each contributes its
// child edges in source order. For (1,(2,3)) this gives a=root->1,
// b=root->x, c=x->2, d=x->3; for ((1,2),(3,4)) it gives the edges to 1 and
// 2, the two root edges, then the edges to 3 and 4.
class Tree {
 public:
  struct Node {
    std::string label;
    std::optional<std::string> length;
    std::optional<NodeId> parent;
    std::vector<NodeId> children;
  };

  // Takes nodes in pre-order with node 0 as root. Throws ValidationError on
  // structural problems (duplicate or empty leaf labels, no edges, cycles).
  explicit Tree(std::vector<Node> nodes);

  std::size_t node_count() const { return nodes_.size(); }
  NodeId root() const { return 0; }
  const Node& node(NodeId id) const { return nodes_.at(id); }
  bool is_leaf(NodeId id) const { return nodes_.at(id).children.empty(); }
  const std::vector<NodeId>& children(NodeId id) const { return nodes_.at(id).children; }
  std::optional<NodeId> parent(NodeId id) const { return nodes_.at(id).parent; }

  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }
  const Edge& edge(EdgeId id) const;
  // Edge whose child endpoint is the node; none for the root.
  std::optional<EdgeId> parent_edge(NodeId id) const { return parent_edge_.at(id); }
  // Edges incident to a node: parent edge (if any) then child edges.
  std::vector<EdgeId> incident_edges(NodeId id) const;

  const std::vector<NodeId>& leaves() const { return leaves_; }
  std::size_t leaf_count() const { return leaves_.size(); }
  const std::string& leaf_label(std::size_t leaf_index) const { return nodes_.at(leaves_.at(leaf_index)).label; }
  std::optional<std::size_t> leaf_index(NodeId id) const { return leaf_index_.at(id); }
  std::optional<std::size_t> find_leaf(std::string_view label) const;

  std::vector<NodeId> internal_nodes() const;
  std::vector<NodeId> postorder() const;

  // Leaf indices (sorted) in the subtree under the edge's child.
  std::vector<std::size_t> leaves_below(EdgeId id) const;

  // Letter naming in edge order: a, b, ..., z, then e26, e27, ...
  static std::string edge_letter(EdgeId id);

 private:
  std::vector<Node> nodes_;
  std::vector<Edge> edges_;
  std::vector<std::optional<EdgeId>> parent_edge_;
  std::vector<NodeId> leaves_;
  std::vector<std::optional<std::size_t>> leaf_index_;
};

// Newick reader. Accepts labels [A-Za-z0-9_.-], optional internal labels and
// ":length" suffixes, whitespace between tokens, and a terminating ';'.
// Throws ParseError with the offending position.
Tree parse_newick(std::string_view text);
Tree read_newick_file(const std::string& path);
std::string to_newick(const Tree& tree);

// Bipartition of the leaf set; `below` is the row side of a flattening.
struct Split {
  std::optional<EdgeId> edge;
  std::vector<std::size_t> below;       // sorted leaf indices
  std::vector<std::size_t> complement;  // sorted leaf indices

  bool is_trivial() const { return below.empty() || complement.empty(); }
  friend bool operator==(const Split& a, const Split& b) {
    return a.below == b.below && a.complement == b.complement;
  }
};

// Throws ValidationError for an unknown edge id.
Split edge_split(const Tree& tree, EdgeId edge);
// Split from the labels of one side; the complement is everything else.
Split split_from_labels(const Tree& tree, const std::vector<std::string>& below_labels);
// Parses "12|34", "1,3|2,4" or "{1,3}|{2,4}" (single-character labels may
// be run together).
Split parse_split(const Tree& tree, std::string_view text);
std::string to_string(const Tree& tree, const Split& split);

// Edge indicator vector. A subforest is a set of edges in which every
// vertex of degree one is a leaf of the tree; the empty set qualifies.
struct Subforest {
  std::vector<std::uint8_t> edges;

  std::string to_string() const;
  friend bool operator==(const Subforest& a, const Subforest& b) { return a.edges == b.edges; }
  friend bool operator<(const Subforest& a, const Subforest& b) { return a.edges < b.edges; }
};

Subforest parse_indicator(std::string_view bits);
bool is_subforest(const Tree& tree, const Subforest& candidate);
// All subforests, lexicographic on the indicator string.
std::vector<Subforest> enumerate_subforests(const Tree& tree);

}  // namespace phyloag
