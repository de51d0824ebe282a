#include "phyloag/models.hpp"

#include <algorithm>
#include <set>

namespace phyloag {

ModelKind parse_model_kind(std::string_view name) {
  if (name == "general-markov" || name == "gm") return ModelKind::GeneralMarkov;
  if (name == "jc-binary" || name == "jc2") return ModelKind::JcBinary;
  if (name == "jc-dna" || name == "jc" || name == "jc4") return ModelKind::JcDna;
  if (name == "kimura2" || name == "k2p") return ModelKind::Kimura2;
  if (name == "kimura3" || name == "k3p") return ModelKind::Kimura3;
  if (name == "reversible") return ModelKind::Reversible;
  throw ValidationError("unsupported model kind '" + std::string(name) + "'");
}

std::string to_string(ModelKind kind) {
  switch (kind) {
    case ModelKind::GeneralMarkov: return "general-markov";
    case ModelKind::JcBinary: return "jc-binary";
    case ModelKind::JcDna: return "jc-dna";
    case ModelKind::Kimura2: return "kimura2";
    case ModelKind::Kimura3: return "kimura3";
    case ModelKind::Reversible: return "reversible";
  }
  return "unknown";
}

RootMode parse_root_mode(std::string_view name) {
  if (name == "uniform") return RootMode::Uniform;
  if (name == "free") return RootMode::Free;
  throw ValidationError("unsupported root mode '" + std::string(name) + "'");
}

std::string to_string(RootMode mode) { return mode == RootMode::Uniform ? "uniform" : "free"; }

std::vector<VarId> EdgeTemplate::symbols() const {
  std::vector<VarId> out;
  for (VarId v : cells) {
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  }
  return out;
}

Poly RootSpec::weight(unsigned state, unsigned k) const {
  if (mode == RootMode::Uniform) return Poly(Rat(1, k));
  return Poly::variable(symbols.at(state));
}

namespace {

unsigned implied_k(ModelKind kind) {
  switch (kind) {
    case ModelKind::JcBinary: return 2;
    case ModelKind::JcDna:
    case ModelKind::Kimura2:
    case ModelKind::Kimura3: return 4;
    default: return 0;
  }
}

// Class of the group element (state xor state) for group-based kinds.
// Kimura 2-parameter ties the two transversion classes, (0,1) and (1,1),
// leaving the transition class (1,0) on its own.
constexpr unsigned kJcBinaryClass[2] = {0, 1};
constexpr unsigned kJcDnaClass[4] = {0, 1, 1, 1};
constexpr unsigned kKimura2Class[4] = {0, 1, 2, 1};
constexpr unsigned kKimura3Class[4] = {0, 1, 2, 3};

}  // namespace

ModelSpec::ModelSpec(Tree tree, ModelKind kind, RootMode root, ModelOptions options)
    : tree_(std::move(tree)), kind_(kind), options_(std::move(options)) {
  unsigned fixed = implied_k(kind);
  if (fixed != 0) {
    if (options_.k && *options_.k != fixed) {
      throw ValidationError(to_string(kind) + " requires k=" + std::to_string(fixed));
    }
    k_ = fixed;
  } else {
    k_ = options_.k.value_or(kind == ModelKind::GeneralMarkov ? 2 : 4);
  }
  if (k_ < 2 || k_ > 9) throw ValidationError("number of states must be between 2 and 9");
  if (kind == ModelKind::Reversible && root == RootMode::Free) {
    throw ValidationError("the reversible model uses a uniform root");
  }

  const std::string& sfx = options_.symbol_suffix;
  auto make_template = [&](const std::string& letter) {
    EdgeTemplate t;
    t.k = k_;
    for (unsigned i = 0; i < k_; ++i) {
      for (unsigned j = 0; j < k_; ++j) {
        std::string name;
        switch (kind_) {
          case ModelKind::GeneralMarkov:
            name = letter + std::to_string(i) + std::to_string(j);
            break;
          case ModelKind::Reversible:
            name = letter + std::to_string(std::min(i, j)) + std::to_string(std::max(i, j));
            break;
          default:
            name = letter + std::to_string(group_class(i ^ j));
            break;
        }
        t.cells.push_back(var(name + sfx));
      }
    }
    return t;
  };
  for (EdgeId e = 0; e < tree_.edge_count(); ++e) {
    templates_.push_back(make_template(options_.homogeneous ? std::string("a") : Tree::edge_letter(e)));
  }
  root_.mode = root;
  if (root == RootMode::Free) {
    for (unsigned s = 0; s < k_; ++s) root_.symbols.push_back(var("pi" + std::to_string(s) + sfx));
  }
  observed_ = tree_.leaves();
  if (options_.observe_internal) {
    for (NodeId v : tree_.internal_nodes()) observed_.push_back(v);
  }
}

Poly ModelSpec::cell(EdgeId e, unsigned from, unsigned to) const {
  return Poly::variable(templates_.at(e).cell(from, to));
}

std::size_t ModelSpec::coordinate_count() const {
  std::size_t n = 1;
  for (std::size_t i = 0; i < observed_.size(); ++i) n *= k_;
  return n;
}

std::vector<VarId> ModelSpec::parameters() const {
  std::vector<VarId> out;
  std::set<VarId> seen;
  for (const auto& t : templates_) {
    for (VarId v : t.symbols()) {
      if (seen.insert(v).second) out.push_back(v);
    }
  }
  for (VarId v : root_.symbols) {
    if (seen.insert(v).second) out.push_back(v);
  }
  return out;
}

bool ModelSpec::is_group_based() const {
  return kind_ == ModelKind::JcBinary || kind_ == ModelKind::JcDna || kind_ == ModelKind::Kimura2 ||
         kind_ == ModelKind::Kimura3;
}

unsigned ModelSpec::group_class(unsigned element) const {
  switch (kind_) {
    case ModelKind::JcBinary: return kJcBinaryClass[element];
    case ModelKind::JcDna: return kJcDnaClass[element];
    case ModelKind::Kimura2: return kKimura2Class[element];
    case ModelKind::Kimura3: return kKimura3Class[element];
    default: throw ValidationError(to_string(kind_) + " is not group-based");
  }
}

unsigned ModelSpec::group_class_count() const {
  switch (kind_) {
    case ModelKind::JcBinary:
    case ModelKind::JcDna: return 2;
    case ModelKind::Kimura2: return 3;
    case ModelKind::Kimura3: return 4;
    default: throw ValidationError(to_string(kind_) + " is not group-based");
  }
}

ModelSpec make_model(const Tree& tree, ModelKind kind, RootMode root, ModelOptions options) {
  return ModelSpec(tree, kind, root, std::move(options));
}

std::size_t parameter_count(const ModelSpec& model) { return model.parameters().size(); }

StochasticReport validate_stochastic(const ModelSpec& model, const Assignment& params) {
  auto value = [&](VarId v) {
    auto it = params.find(v);
    if (it == params.end()) throw MissingVariable(var_name(v));
    return it->second;
  };
  StochasticReport report;
  report.stochastic = true;
  auto add_row = [&](std::string owner, unsigned row, const std::vector<Rat>& entries) {
    StochasticReport::Row r;
    r.owner = std::move(owner);
    r.row = row;
    r.sum = 0;
    r.entries_in_unit_interval = true;
    for (const auto& x : entries) {
      r.sum += x;
      if (x < 0 || x > 1) r.entries_in_unit_interval = false;
    }
    r.sums_to_one = r.sum == 1;
    report.stochastic = report.stochastic && r.sums_to_one && r.entries_in_unit_interval;
    report.rows.push_back(std::move(r));
  };
  const unsigned k = model.k();
  std::size_t edge_total = model.homogeneous() ? std::min<std::size_t>(1, model.tree().edge_count())
                                               : model.tree().edge_count();
  for (EdgeId e = 0; e < edge_total; ++e) {
    const auto& t = model.edge_template(e);
    for (unsigned i = 0; i < k; ++i) {
      std::vector<Rat> entries;
      for (unsigned j = 0; j < k; ++j) entries.push_back(value(t.cell(i, j)));
      add_row(model.homogeneous() ? "shared" : Tree::edge_letter(e), i, entries);
    }
  }
  if (model.root().mode == RootMode::Free) {
    std::vector<Rat> entries;
    for (VarId v : model.root().symbols) entries.push_back(value(v));
    add_row("root", 0, entries);
  }
  return report;
}

}  // namespace phyloag
