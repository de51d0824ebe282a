#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "phyloag/poly.hpp"

namespace phyloag {

// Arithmetic DAG with binary + and x nodes. Identical subexpressions are
// stored once (structural hashing, commutative operands sorted).
class Circuit {
 public:
  using NodeRef = std::uint32_t;
  enum class Op : std::uint8_t { Const, Symbol, Add, Mul };

  struct Node {
    Op op = Op::Const;
    NodeRef lhs = 0;
    NodeRef rhs = 0;
    VarId var = 0;
    Rat value;
  };

  // Operations counted with shared nodes once; multiplications with a
  // constant operand are free.
  struct OpCount {
    std::size_t multiplications = 0;
    std::size_t additions = 0;
    friend bool operator==(const OpCount&, const OpCount&) = default;
  };

  NodeRef constant(const Rat& value);
  NodeRef symbol(VarId v);
  NodeRef add(NodeRef a, NodeRef b);
  NodeRef mul(NodeRef a, NodeRef b);

  const Node& node(NodeRef r) const { return nodes_.at(r); }
  std::size_t size() const { return nodes_.size(); }
  bool is_constant(NodeRef r) const { return nodes_.at(r).op == Op::Const; }

  void add_output(NodeRef r) { outputs_.push_back(r); }
  const std::vector<NodeRef>& outputs() const { return outputs_; }

  OpCount count(NodeRef root) const;
  OpCount count_all() const;

  // Values of every output, in output order. Throws MissingVariable.
  std::vector<Rat> evaluate(const Assignment& values) const;
  std::vector<double> evaluate(const FloatAssignment& values) const;
  Poly expand(NodeRef root) const;

 private:
  NodeRef intern(Node n, const std::string& key);

  std::vector<Node> nodes_;
  std::vector<NodeRef> outputs_;
  std::unordered_map<std::string, NodeRef> index_;
};

// Cost of evaluating an expanded polynomial term by term:
// sum of (degree - 1) multiplications and (terms - 1) additions.
Circuit::OpCount expanded_cost(const Poly& p);

}  // namespace phyloag
