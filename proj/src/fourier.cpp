#include "phyloag/fourier.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

namespace phyloag {

namespace {

std::size_t tensor_order(std::size_t size, unsigned k) {
  std::size_t n = 0;
  std::size_t total = 1;
  while (total < size) {
    total *= k;
    ++n;
  }
  if (total != size || size == 0) throw ValidationError("tensor length is not a power of " + std::to_string(k));
  return n;
}

template <class T>
std::vector<T> transform_axes(std::vector<T> p, const GroupSpec& group) {
  const unsigned k = group.order();
  const std::size_t n = tensor_order(p.size(), k);
  const auto table = group.character_table();
  std::vector<T> scratch(k);
  std::size_t stride = p.size();
  for (std::size_t axis = 0; axis < n; ++axis) {
    stride /= k;
    for (std::size_t block = 0; block < p.size(); block += stride * k) {
      for (std::size_t off = 0; off < stride; ++off) {
        std::size_t base = block + off;
        for (unsigned g = 0; g < k; ++g) {
          T acc = 0;
          for (unsigned h = 0; h < k; ++h) {
            const T& v = p[base + h * stride];
            if (table[g][h] > 0) {
              acc += v;
            } else {
              acc -= v;
            }
          }
          scratch[g] = acc;
        }
        for (unsigned g = 0; g < k; ++g) p[base + g * stride] = scratch[g];
      }
    }
  }
  return p;
}

std::vector<unsigned> digits(std::size_t flat, unsigned k, std::size_t n) {
  std::vector<unsigned> out(n);
  for (std::size_t i = n; i-- > 0;) {
    out[i] = static_cast<unsigned>(flat % k);
    flat /= k;
  }
  return out;
}

}  // namespace

std::vector<Rat> transform_tensor(const std::vector<Rat>& p, const GroupSpec& group) {
  return transform_axes(p, group);
}

std::vector<double> transform_tensor(const std::vector<double>& p, const GroupSpec& group) {
  return transform_axes(p, group);
}

std::vector<Rat> inverse_transform_tensor(const std::vector<Rat>& q, const GroupSpec& group) {
  std::vector<Rat> p = transform_axes(q, group);
  Rat scale(1);
  scale /= Rat(static_cast<long>(p.size()));
  for (auto& v : p) v *= scale;
  return p;
}

std::unordered_map<VarId, Poly> TransformedParams::substitution() const {
  std::unordered_map<VarId, Poly> out;
  for (std::size_t e = 0; e < forms.size(); ++e) {
    for (std::size_t g = 0; g < forms[e].size(); ++g) out.emplace(symbols[e][g], forms[e][g]);
  }
  return out;
}

Assignment TransformedParams::evaluate(const Assignment& params) const {
  Assignment out;
  for (std::size_t e = 0; e < forms.size(); ++e) {
    for (std::size_t g = 0; g < forms[e].size(); ++g) {
      if (!out.count(symbols[e][g])) out.emplace(symbols[e][g], poly_eval(forms[e][g], params));
    }
  }
  return out;
}

TransformedParams transform_params(const ModelSpec& model) {
  GroupSpec group = group_of(model);
  const unsigned k = group.order();
  TransformedParams out;
  for (EdgeId e = 0; e < model.tree().edge_count(); ++e) {
    const auto& t = model.edge_template(e);
    std::vector<Poly> forms;
    std::vector<VarId> symbols;
    for (unsigned g = 0; g < k; ++g) {
      Poly form;
      for (unsigned h = 0; h < k; ++h) form += Poly::variable(t.cell(0, h)) * Rat(GroupSpec::character(g, h));
      VarId sym = 0;
      bool found = false;
      for (unsigned prev = 0; prev < g; ++prev) {
        if (forms[prev] == form) {
          sym = symbols[prev];
          found = true;
          break;
        }
      }
      if (!found) {
        std::string name = var_name(t.cell(0, g));
        name[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(name[0])));
        sym = var(name);
      }
      forms.push_back(std::move(form));
      symbols.push_back(sym);
      if (std::find(out.parameters.begin(), out.parameters.end(), sym) == out.parameters.end()) {
        out.parameters.push_back(sym);
      }
    }
    out.forms.push_back(std::move(forms));
    out.symbols.push_back(std::move(symbols));
  }
  return out;
}

std::string FourierIndex::to_string() const {
  std::string s;
  for (unsigned l : labels) s += std::to_string(l);
  return s;
}

std::optional<FourierIndex> leaf_to_edge_labels(const Tree& tree, const GroupSpec& group,
                                                const std::vector<unsigned>& leaf_labels) {
  if (leaf_labels.size() != tree.leaf_count()) throw ValidationError("one label per leaf required");
  unsigned total = GroupSpec::identity();
  for (unsigned l : leaf_labels) {
    if (l >= group.order()) throw ValidationError("label outside the group");
    total = GroupSpec::add(total, l);
  }
  if (total != GroupSpec::identity()) return std::nullopt;
  FourierIndex index;
  for (EdgeId e = 0; e < tree.edge_count(); ++e) {
    unsigned h = GroupSpec::identity();
    for (std::size_t leaf : tree.leaves_below(e)) h = GroupSpec::add(h, leaf_labels[leaf]);
    index.labels.push_back(h);
  }
  return index;
}

bool is_jukes_cantor(ModelKind kind) { return kind == ModelKind::JcBinary || kind == ModelKind::JcDna; }

MonomialMap::MonomialMap(const ModelSpec& model)
    : model_(model), group_(group_of(model)), reduced_(is_jukes_cantor(model.kind())) {
  if (model.root().mode != RootMode::Uniform) throw ValidationError("the Fourier map requires a uniform root");
  if (model.observe_internal()) throw ValidationError("the Fourier map requires hidden internal nodes");
  params_ = transform_params(model);
  const Tree& tree = model.tree();
  const unsigned k = group_.order();
  const std::size_t n = tree.leaf_count();
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= k;

  std::map<FourierIndex, std::vector<unsigned>> found;
  std::vector<std::optional<FourierIndex>> raw(total);
  for (std::size_t flat = 0; flat < total; ++flat) {
    auto labels = digits(flat, k, n);
    auto index = leaf_to_edge_labels(tree, group_, labels);
    if (!index) continue;
    if (reduced_) {
      for (auto& l : index->labels) l = l != 0 ? 1 : 0;
    }
    found.try_emplace(*index, labels);
    raw[flat] = std::move(index);
  }
  for (auto& [index, labels] : found) {
    indices_.push_back(index);
    reps_.push_back(labels);
  }
  for (std::size_t i = 0; i < indices_.size(); ++i) {
    auto edge_labels = leaf_to_edge_labels(tree, group_, reps_[i]);
    std::vector<Mono::Factor> factors;
    for (EdgeId e = 0; e < tree.edge_count(); ++e) factors.emplace_back(params_.symbols[e][edge_labels->labels[e]], 1);
    polys_.push_back(Poly::monomial(Mono::from_factors(std::move(factors))));
    vars_.push_back(var(coordinate_name(i)));
  }
  raw_.assign(total, -1);
  for (std::size_t flat = 0; flat < total; ++flat) {
    if (raw[flat]) raw_[flat] = static_cast<long>(*find(*raw[flat]));
  }
}

std::optional<std::size_t> MonomialMap::find(const FourierIndex& index) const {
  auto it = std::lower_bound(indices_.begin(), indices_.end(), index);
  if (it == indices_.end() || !(*it == index)) return std::nullopt;
  return static_cast<std::size_t>(it - indices_.begin());
}

std::optional<std::size_t> MonomialMap::find(const std::string& name) const {
  if (name.empty() || name[0] != 'q') return std::nullopt;
  FourierIndex index;
  for (std::size_t i = 1; i < name.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(name[i]))) return std::nullopt;
    index.labels.push_back(static_cast<unsigned>(name[i] - '0'));
  }
  return find(index);
}

std::optional<std::size_t> MonomialMap::coordinate_of_raw(std::size_t flat) const {
  if (flat >= raw_.size()) throw ValidationError("raw index out of range");
  if (raw_[flat] < 0) return std::nullopt;
  return static_cast<std::size_t>(raw_[flat]);
}

std::vector<std::vector<unsigned>> MonomialMap::exponent_matrix() const {
  std::vector<std::vector<unsigned>> a(params_.parameters.size(), std::vector<unsigned>(polys_.size(), 0));
  for (std::size_t r = 0; r < params_.parameters.size(); ++r) {
    for (std::size_t c = 0; c < polys_.size(); ++c) a[r][c] = monomial(c).exponent(params_.parameters[r]);
  }
  return a;
}

std::string MonomialMap::exponent_matrix_csv() const {
  std::ostringstream out;
  out << "parameter";
  for (std::size_t c = 0; c < polys_.size(); ++c) out << ',' << coordinate_name(c);
  out << '\n';
  auto a = exponent_matrix();
  for (std::size_t r = 0; r < a.size(); ++r) {
    out << var_name(params_.parameters[r]);
    for (unsigned v : a[r]) out << ',' << v;
    out << '\n';
  }
  return out.str();
}

MonomialMap monomial_map(const ModelSpec& model) { return MonomialMap(model); }

std::vector<Subforest> support_classes(const Tree& tree, const GroupSpec& group) {
  const unsigned k = group.order();
  const std::size_t n = tree.leaf_count();
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= k;
  std::set<Subforest> found;
  for (std::size_t flat = 0; flat < total; ++flat) {
    auto index = leaf_to_edge_labels(tree, group, digits(flat, k, n));
    if (!index) continue;
    Subforest s;
    for (unsigned l : index->labels) s.edges.push_back(l != 0 ? 1 : 0);
    found.insert(std::move(s));
  }
  return {found.begin(), found.end()};
}

std::vector<Poly> accumulated_fourier_forms(const JointMap& map, const MonomialMap& fourier,
                                            const std::vector<std::vector<std::size_t>>& classes) {
  std::vector<Poly> out;
  for (std::size_t i = 0; i < fourier.coordinate_count(); ++i) {
    const auto& labels = fourier.representative_labels(i);
    Poly form;
    for (const auto& cls : classes) {
      long sum = 0;
      for (std::size_t flat : cls) {
        int sign = 1;
        auto states = map.pattern(flat).states;
        for (std::size_t j = 0; j < labels.size(); ++j) sign *= GroupSpec::character(labels[j], states[j]);
        sum += sign;
      }
      Rat coef(sum, static_cast<long>(cls.size()));
      coef.canonicalize();
      if (coef != 0) form += Poly::variable(var(accumulated_name(map, cls))) * coef;
    }
    out.push_back(std::move(form));
  }
  return out;
}

RankNullspace linear_relations(const std::vector<Poly>& polys) {
  std::unordered_map<Mono, std::size_t, MonoHash> row_of;
  std::vector<Mono> monos;
  for (const auto& p : polys) {
    for (const auto& t : p.terms()) {
      if (row_of.try_emplace(t.mono, monos.size()).second) monos.push_back(t.mono);
    }
  }
  MatQ m(monos.size(), polys.size());
  for (std::size_t c = 0; c < polys.size(); ++c) {
    for (const auto& t : polys[c].terms()) m(row_of.at(t.mono), c) = t.coef;
  }
  return mat_rank_nullspace(m);
}

}  // namespace phyloag
