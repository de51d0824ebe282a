#include <functional>

#include "phyloag/error.hpp"
#include "phyloag/tree.hpp"

namespace phyloag {

std::string Subforest::to_string() const {
  std::string out;
  out.reserve(edges.size());
  for (auto b : edges) out += b ? '1' : '0';
  return out;
}

Subforest parse_indicator(std::string_view bits) {
  Subforest s;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] != '0' && bits[i] != '1') throw ParseError("indicator must be 0/1", i);
    s.edges.push_back(bits[i] == '1');
  }
  return s;
}

bool is_subforest(const Tree& tree, const Subforest& candidate) {
  if (candidate.edges.size() != tree.edge_count()) {
    throw ValidationError("indicator length does not match edge count");
  }
  for (NodeId v : tree.internal_nodes()) {
    unsigned degree = 0;
    for (EdgeId e : tree.incident_edges(v)) degree += candidate.edges[e] ? 1 : 0;
    if (degree == 1) return false;
  }
  return true;
}

std::vector<Subforest> enumerate_subforests(const Tree& tree) {
  const std::size_t edge_count = tree.edge_count();
  // Internal vertices grouped by the last edge (in edge order) touching them;
  // the degree test runs as soon as that edge is decided.
  std::vector<std::vector<std::vector<EdgeId>>> checks(edge_count);
  for (NodeId v : tree.internal_nodes()) {
    auto inc = tree.incident_edges(v);
    EdgeId last = 0;
    for (EdgeId e : inc) last = std::max(last, e);
    checks[last].push_back(inc);
  }
  std::vector<Subforest> out;
  Subforest current{std::vector<std::uint8_t>(edge_count, 0)};
  std::function<void(std::size_t)> extend = [&](std::size_t e) {
    if (e == edge_count) {
      out.push_back(current);
      return;
    }
    for (std::uint8_t bit : {std::uint8_t{0}, std::uint8_t{1}}) {
      current.edges[e] = bit;
      bool ok = true;
      for (const auto& inc : checks[e]) {
        unsigned degree = 0;
        for (EdgeId x : inc) degree += current.edges[x];
        if (degree == 1) {
          ok = false;
          break;
        }
      }
      if (ok) extend(e + 1);
    }
    current.edges[e] = 0;
  };
  extend(0);
  return out;
}

}  // namespace phyloag
