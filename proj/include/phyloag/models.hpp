#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "phyloag/poly.hpp"
#include "phyloag/tree.hpp"

namespace phyloag {

enum class ModelKind { GeneralMarkov, JcBinary, JcDna, Kimura2, Kimura3, Reversible };
enum class RootMode { Uniform, Free };

ModelKind parse_model_kind(std::string_view name);
std::string to_string(ModelKind kind);
RootMode parse_root_mode(std::string_view name);
std::string to_string(RootMode mode);

// k x k transition-matrix template; equal symbols in different cells tie
// those entries.
struct EdgeTemplate {
  unsigned k = 0;
  std::vector<VarId> cells;  // row-major, k*k

  VarId cell(unsigned from, unsigned to) const { return cells[from * k + to]; }
  // Distinct symbols in row-major first-appearance order.
  std::vector<VarId> symbols() const;
};

struct RootSpec {
  RootMode mode = RootMode::Free;
  std::vector<VarId> symbols;  // k entries when free

  // pi_state, or the constant 1/k for a uniform root.
  Poly weight(unsigned state, unsigned k) const;
};

struct ModelOptions {
  std::optional<unsigned> k;
  bool homogeneous = false;
  // Expose internal nodes as observed (no hidden sums; monomial map).
  bool observe_internal = false;
  // Appended to every symbol name; keeps mixture components disjoint.
  std::string symbol_suffix;
};

class ModelSpec {
 public:
  ModelSpec(Tree tree, ModelKind kind, RootMode root, ModelOptions options = {});

  const Tree& tree() const { return tree_; }
  ModelKind kind() const { return kind_; }
  unsigned k() const { return k_; }
  bool homogeneous() const { return options_.homogeneous; }
  bool observe_internal() const { return options_.observe_internal; }
  const std::string& symbol_suffix() const { return options_.symbol_suffix; }
  const RootSpec& root() const { return root_; }
  const EdgeTemplate& edge_template(EdgeId e) const { return templates_.at(e); }
  Poly cell(EdgeId e, unsigned from, unsigned to) const;

  // Nodes whose states index the coordinates: the leaves, or every node
  // (leaves first, then internal nodes by id) when internal nodes are observed.
  const std::vector<NodeId>& observed_nodes() const { return observed_; }
  std::size_t coordinate_count() const;

  // Distinct symbols: edge templates in edge order, then the root.
  std::vector<VarId> parameters() const;
  std::vector<VarId> edge_symbols(EdgeId e) const { return templates_.at(e).symbols(); }

  // Z2 / Z2xZ2 translation-invariant templates.
  bool is_group_based() const;
  // For group-based kinds: symbol class of the group element g = from xor to.
  unsigned group_class(unsigned element) const;
  unsigned group_class_count() const;

 private:
  Tree tree_;
  ModelKind kind_;
  unsigned k_;
  ModelOptions options_;
  RootSpec root_;
  std::vector<EdgeTemplate> templates_;
  std::vector<NodeId> observed_;
};

// Throws ValidationError for unsupported kind/root combinations or a k
// that contradicts the kind.
ModelSpec make_model(const Tree& tree, ModelKind kind, RootMode root, ModelOptions options = {});
std::size_t parameter_count(const ModelSpec& model);

struct StochasticReport {
  struct Row {
    std::string owner;  // edge letter, or "root"
    unsigned row = 0;
    Rat sum;
    bool sums_to_one = false;
    bool entries_in_unit_interval = false;
  };
  std::vector<Row> rows;
  bool stochastic = false;
};

// Advisory check of row sums and entry ranges. Throws MissingVariable.
StochasticReport validate_stochastic(const ModelSpec& model, const Assignment& params);

}  // namespace phyloag
