#include "phyloag/circuit.hpp"

#include <algorithm>
#include <type_traits>

namespace phyloag {

Circuit::NodeRef Circuit::intern(Node n, const std::string& key) {
  auto it = index_.find(key);
  if (it != index_.end()) return it->second;
  auto ref = static_cast<NodeRef>(nodes_.size());
  nodes_.push_back(std::move(n));
  index_.emplace(key, ref);
  return ref;
}

Circuit::NodeRef Circuit::constant(const Rat& value) {
  Node n;
  n.op = Op::Const;
  n.value = value;
  return intern(std::move(n), "c" + to_string(value));
}

Circuit::NodeRef Circuit::symbol(VarId v) {
  Node n;
  n.op = Op::Symbol;
  n.var = v;
  return intern(std::move(n), "s" + std::to_string(v));
}

Circuit::NodeRef Circuit::add(NodeRef a, NodeRef b) {
  if (is_constant(a) && is_constant(b)) return constant(nodes_[a].value + nodes_[b].value);
  if (is_constant(a) && nodes_[a].value == 0) return b;
  if (is_constant(b) && nodes_[b].value == 0) return a;
  if (a > b) std::swap(a, b);
  Node n;
  n.op = Op::Add;
  n.lhs = a;
  n.rhs = b;
  return intern(std::move(n), "+" + std::to_string(a) + "," + std::to_string(b));
}

Circuit::NodeRef Circuit::mul(NodeRef a, NodeRef b) {
  if (is_constant(a) && is_constant(b)) return constant(nodes_[a].value * nodes_[b].value);
  if (is_constant(a) && nodes_[a].value == 1) return b;
  if (is_constant(b) && nodes_[b].value == 1) return a;
  if ((is_constant(a) && nodes_[a].value == 0) || (is_constant(b) && nodes_[b].value == 0)) {
    return constant(0);
  }
  if (a > b) std::swap(a, b);
  Node n;
  n.op = Op::Mul;
  n.lhs = a;
  n.rhs = b;
  return intern(std::move(n), "*" + std::to_string(a) + "," + std::to_string(b));
}

namespace {

void collect(const Circuit& c, Circuit::NodeRef r, std::vector<bool>& seen) {
  std::vector<Circuit::NodeRef> stack{r};
  while (!stack.empty()) {
    auto x = stack.back();
    stack.pop_back();
    if (seen[x]) continue;
    seen[x] = true;
    const auto& n = c.node(x);
    if (n.op == Circuit::Op::Add || n.op == Circuit::Op::Mul) {
      stack.push_back(n.lhs);
      stack.push_back(n.rhs);
    }
  }
}

Circuit::OpCount count_marked(const Circuit& c, const std::vector<bool>& seen) {
  Circuit::OpCount out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (!seen[i]) continue;
    const auto& n = c.node(static_cast<Circuit::NodeRef>(i));
    if (n.op == Circuit::Op::Add) ++out.additions;
    if (n.op == Circuit::Op::Mul && !c.is_constant(n.lhs) && !c.is_constant(n.rhs)) ++out.multiplications;
  }
  return out;
}

template <class T, class Lookup>
std::vector<T> evaluate_all(const Circuit& c, Lookup lookup) {
  std::vector<T> values(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    const auto& n = c.node(static_cast<Circuit::NodeRef>(i));
    switch (n.op) {
      case Circuit::Op::Const:
        if constexpr (std::is_same_v<T, double>) {
          values[i] = n.value.get_d();
        } else {
          values[i] = n.value;
        }
        break;
      case Circuit::Op::Symbol: values[i] = lookup(n.var); break;
      case Circuit::Op::Add: values[i] = values[n.lhs] + values[n.rhs]; break;
      case Circuit::Op::Mul: values[i] = values[n.lhs] * values[n.rhs]; break;
    }
  }
  std::vector<T> out;
  out.reserve(c.outputs().size());
  for (auto r : c.outputs()) out.push_back(values[r]);
  return out;
}

}  // namespace

Circuit::OpCount Circuit::count(NodeRef root) const {
  std::vector<bool> seen(nodes_.size(), false);
  collect(*this, root, seen);
  return count_marked(*this, seen);
}

Circuit::OpCount Circuit::count_all() const {
  std::vector<bool> seen(nodes_.size(), false);
  for (auto r : outputs_) collect(*this, r, seen);
  return count_marked(*this, seen);
}

std::vector<Rat> Circuit::evaluate(const Assignment& values) const {
  return evaluate_all<Rat>(*this, [&](VarId v) {
    auto it = values.find(v);
    if (it == values.end()) throw MissingVariable(var_name(v));
    return it->second;
  });
}

std::vector<double> Circuit::evaluate(const FloatAssignment& values) const {
  return evaluate_all<double>(*this, [&](VarId v) {
    auto it = values.find(v);
    if (it == values.end()) throw MissingVariable(var_name(v));
    return it->second;
  });
}

Poly Circuit::expand(NodeRef root) const {
  std::vector<bool> needed(nodes_.size(), false);
  collect(*this, root, needed);
  std::unordered_map<NodeRef, Poly> memo;
  for (std::size_t i = 0; i <= root; ++i) {
    if (!needed[i]) continue;
    const auto& n = nodes_[i];
    Poly value;
    switch (n.op) {
      case Op::Const: value = Poly(n.value); break;
      case Op::Symbol: value = Poly::variable(n.var); break;
      case Op::Add: value = memo.at(n.lhs) + memo.at(n.rhs); break;
      case Op::Mul: value = memo.at(n.lhs) * memo.at(n.rhs); break;
    }
    memo.emplace(static_cast<NodeRef>(i), std::move(value));
  }
  return memo.at(root);
}

Circuit::OpCount expanded_cost(const Poly& p) {
  Circuit::OpCount out;
  if (p.is_zero()) return out;
  out.additions = p.size() - 1;
  for (const auto& t : p.terms()) {
    if (t.mono.degree() > 0) out.multiplications += t.mono.degree() - 1;
  }
  return out;
}

}  // namespace phyloag
