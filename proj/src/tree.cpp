#include "phyloag/tree.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "phyloag/error.hpp"

namespace phyloag {

Tree::Tree(std::vector<Node> nodes) : nodes_(std::move(nodes)) {
  if (nodes_.empty()) throw ValidationError("tree has no nodes");
  if (nodes_[0].parent) throw ValidationError("node 0 must be the root");
  // Parent links must agree with child lists and reach the root.
  for (NodeId id = 0; id < nodes_.size(); ++id) {
    for (NodeId c : nodes_[id].children) {
      if (c >= nodes_.size() || c == 0 || nodes_[c].parent != id) {
        throw ValidationError("inconsistent parent/child links");
      }
    }
    if (id != 0 && !nodes_[id].parent) throw ValidationError("non-root node without parent");
  }
  std::vector<bool> seen(nodes_.size(), false);
  std::vector<NodeId> stack{0};
  while (!stack.empty()) {
    NodeId v = stack.back();
    stack.pop_back();
    if (seen[v]) throw ValidationError("tree contains a cycle");
    seen[v] = true;
    for (NodeId c : nodes_[v].children) stack.push_back(c);
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
    throw ValidationError("tree is not connected");
  }
  if (nodes_[0].children.empty()) throw ValidationError("tree must contain at least one edge");

  leaf_index_.assign(nodes_.size(), std::nullopt);
  std::set<std::string> labels;
  for (NodeId id = 0; id < nodes_.size(); ++id) {
    if (!nodes_[id].children.empty()) continue;
    const auto& label = nodes_[id].label;
    if (label.empty()) throw ValidationError("leaf without label");
    if (!labels.insert(label).second) throw ValidationError("duplicate leaf label '" + label + "'");
    leaf_index_[id] = leaves_.size();
    leaves_.push_back(id);
  }

  // Symmetric-order grouping of child edges.
  parent_edge_.assign(nodes_.size(), std::nullopt);
  std::vector<std::pair<NodeId, std::size_t>> walk{{0, 0}};
  auto emit = [&](NodeId v) {
    for (NodeId c : nodes_[v].children) {
      parent_edge_[c] = edges_.size();
      edges_.push_back({v, c});
    }
  };
  // Iterative in-order: state = index of the next child subtree to visit.
  while (!walk.empty()) {
    auto& [v, next] = walk.back();
    const auto& kids = nodes_[v].children;
    if (kids.empty()) {
      walk.pop_back();
      continue;
    }
    if (next == 1) emit(v);
    if (next < kids.size()) {
      NodeId child = kids[next];
      ++next;
      walk.push_back({child, 0});
    } else {
      walk.pop_back();
    }
  }
}

const Edge& Tree::edge(EdgeId id) const {
  if (id >= edges_.size()) throw ValidationError("unknown edge id " + std::to_string(id));
  return edges_[id];
}

std::vector<EdgeId> Tree::incident_edges(NodeId id) const {
  std::vector<EdgeId> out;
  if (parent_edge_.at(id)) out.push_back(*parent_edge_[id]);
  for (NodeId c : nodes_.at(id).children) out.push_back(*parent_edge_[c]);
  return out;
}

std::optional<std::size_t> Tree::find_leaf(std::string_view label) const {
  for (std::size_t i = 0; i < leaves_.size(); ++i) {
    if (nodes_[leaves_[i]].label == label) return i;
  }
  return std::nullopt;
}

std::vector<NodeId> Tree::internal_nodes() const {
  std::vector<NodeId> out;
  for (NodeId id = 0; id < nodes_.size(); ++id) {
    if (!nodes_[id].children.empty()) out.push_back(id);
  }
  return out;
}

std::vector<NodeId> Tree::postorder() const {
  std::vector<NodeId> out;
  std::vector<std::pair<NodeId, bool>> stack{{0, false}};
  while (!stack.empty()) {
    auto [v, expanded] = stack.back();
    stack.pop_back();
    if (expanded) {
      out.push_back(v);
      continue;
    }
    stack.push_back({v, true});
    const auto& kids = nodes_[v].children;
    for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.push_back({*it, false});
  }
  return out;
}

std::vector<std::size_t> Tree::leaves_below(EdgeId id) const {
  std::vector<std::size_t> out;
  std::vector<NodeId> stack{edge(id).child};
  while (!stack.empty()) {
    NodeId v = stack.back();
    stack.pop_back();
    if (leaf_index_[v]) out.push_back(*leaf_index_[v]);
    for (NodeId c : nodes_[v].children) stack.push_back(c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string Tree::edge_letter(EdgeId id) {
  if (id < 26) return std::string(1, static_cast<char>('a' + id));
  return "e" + std::to_string(id);
}

Split edge_split(const Tree& tree, EdgeId edge) {
  Split s;
  s.edge = edge;
  s.below = tree.leaves_below(edge);
  for (std::size_t i = 0; i < tree.leaf_count(); ++i) {
    if (!std::binary_search(s.below.begin(), s.below.end(), i)) s.complement.push_back(i);
  }
  return s;
}

Split split_from_labels(const Tree& tree, const std::vector<std::string>& below_labels) {
  Split s;
  for (const auto& label : below_labels) {
    auto idx = tree.find_leaf(label);
    if (!idx) throw ValidationError("unknown leaf label '" + label + "'");
    s.below.push_back(*idx);
  }
  std::sort(s.below.begin(), s.below.end());
  if (std::adjacent_find(s.below.begin(), s.below.end()) != s.below.end()) {
    throw ValidationError("repeated leaf in split");
  }
  for (std::size_t i = 0; i < tree.leaf_count(); ++i) {
    if (!std::binary_search(s.below.begin(), s.below.end(), i)) s.complement.push_back(i);
  }
  for (EdgeId e = 0; e < tree.edge_count(); ++e) {
    auto below = tree.leaves_below(e);
    if (below == s.below) {
      s.edge = e;
      break;
    }
  }
  return s;
}

Split parse_split(const Tree& tree, std::string_view text) {
  auto bar = text.find('|');
  if (bar == std::string_view::npos) throw ParseError("split needs '|'", 0);
  auto side = text.substr(0, bar);
  std::vector<std::string> labels;
  std::string current;
  bool has_separator = side.find(',') != std::string_view::npos;
  for (char c : side) {
    if (c == '{' || c == '}' || c == '(' || c == ')' || std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == ',') {
      if (!current.empty()) labels.push_back(current);
      current.clear();
    } else if (has_separator) {
      current += c;
    } else {
      labels.emplace_back(1, c);
    }
  }
  if (!current.empty()) labels.push_back(current);
  Split s = split_from_labels(tree, labels);
  // The right side is only checked for consistency when given.
  auto rhs = text.substr(bar + 1);
  std::size_t rhs_count = 0;
  bool rhs_sep = rhs.find(',') != std::string_view::npos;
  std::string token;
  for (char c : rhs) {
    if (c == '{' || c == '}' || c == '(' || c == ')' || std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == ',') {
      if (!token.empty()) ++rhs_count;
      token.clear();
    } else if (rhs_sep) {
      token += c;
    } else {
      ++rhs_count;
    }
  }
  if (!token.empty()) ++rhs_count;
  if (rhs_count != 0 && rhs_count != s.complement.size()) {
    throw ValidationError("split sides do not partition the leaf set");
  }
  return s;
}

std::string to_string(const Tree& tree, const Split& split) {
  auto side = [&](const std::vector<std::size_t>& idx) {
    std::string out = "{";
    for (std::size_t i = 0; i < idx.size(); ++i) {
      if (i) out += ",";
      out += tree.leaf_label(idx[i]);
    }
    return out + "}";
  };
  return side(split.below) + "|" + side(split.complement);
}

}  // namespace phyloag
