#include <cctype>
#include <fstream>
#include <sstream>

#include "phyloag/error.hpp"
#include "phyloag/tree.hpp"

namespace phyloag {

namespace {

class NewickReader {
 public:
  explicit NewickReader(std::string_view text) : text_(text) {}

  Tree read() {
    skip_space();
    if (pos_ == text_.size()) throw ParseError("empty Newick text", pos_);
    read_subtree(std::nullopt);
    skip_space();
    if (pos_ == text_.size()) throw ParseError("missing terminating ';'", pos_);
    if (text_[pos_] == ')') throw ParseError("unbalanced parentheses", pos_);
    if (text_[pos_] != ';') throw ParseError("unexpected character", pos_);
    ++pos_;
    skip_space();
    if (pos_ != text_.size()) throw ParseError("trailing characters after ';'", pos_);
    try {
      return Tree(std::move(nodes_));
    } catch (const ValidationError& e) {
      throw ParseError(e.what(), start_of_error_);
    }
  }

 private:
  static bool label_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '-';
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  NodeId read_subtree(std::optional<NodeId> parent) {
    NodeId id = nodes_.size();
    nodes_.push_back({});
    nodes_[id].parent = parent;
    if (parent) nodes_[*parent].children.push_back(id);
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '(') {
      std::size_t open = pos_;
      ++pos_;
      while (true) {
        skip_space();
        if (pos_ == text_.size()) throw ParseError("unbalanced parentheses", open);
        read_subtree(id);
        skip_space();
        if (pos_ == text_.size()) throw ParseError("unbalanced parentheses", open);
        if (text_[pos_] == ',') {
          ++pos_;
          continue;
        }
        if (text_[pos_] == ')') {
          ++pos_;
          break;
        }
        if (text_[pos_] == ';') throw ParseError("unbalanced parentheses", pos_);
        throw ParseError("expected ',' or ')'", pos_);
      }
      skip_space();
      nodes_[id].label = read_label();
    } else {
      std::size_t at = pos_;
      nodes_[id].label = read_label();
      if (nodes_[id].label.empty()) {
        if (pos_ < text_.size() && text_[pos_] == ')' && !parent) {
          throw ParseError("unbalanced parentheses", at);
        }
        throw ParseError("empty subtree", at);
      }
      for (const auto& n : nodes_) {
        if (&n != &nodes_[id] && n.children.empty() && n.label == nodes_[id].label) {
          throw ParseError("duplicate leaf label '" + n.label + "'", at);
        }
      }
    }
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == ':') {
      ++pos_;
      skip_space();
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.' ||
              text_[pos_] == '-' || text_[pos_] == '+' || text_[pos_] == 'e' || text_[pos_] == 'E')) {
        ++pos_;
      }
      if (start == pos_) throw ParseError("expected branch length", pos_);
      nodes_[id].length = std::string(text_.substr(start, pos_ - start));
    }
    return id;
  }

  std::string read_label() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && label_char(text_[pos_])) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t start_of_error_ = 0;
  std::vector<Tree::Node> nodes_;
};

void write_node(const Tree& tree, NodeId id, std::string& out) {
  const auto& n = tree.node(id);
  if (!n.children.empty()) {
    out += "(";
    for (std::size_t i = 0; i < n.children.size(); ++i) {
      if (i) out += ",";
      write_node(tree, n.children[i], out);
    }
    out += ")";
  }
  out += n.label;
  if (n.length) out += ":" + *n.length;
}

}  // namespace

Tree parse_newick(std::string_view text) { return NewickReader(text).read(); }

Tree read_newick_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open Newick file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_newick(buf.str());
}

std::string to_newick(const Tree& tree) {
  std::string out;
  write_node(tree, tree.root(), out);
  return out + ";";
}

}  // namespace phyloag
