#include <cctype>

#include "phyloag/poly.hpp"

namespace phyloag {

std::string to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    Rat magnitude = abs(t.coef);
    if (first) {
      if (t.coef < 0) out += "-";
    } else {
      out += t.coef < 0 ? " - " : " + ";
    }
    first = false;
    bool need_star = false;
    if (t.mono.is_one() || magnitude != 1) {
      out += to_string(magnitude);
      need_star = true;
    }
    for (const auto& [v, e] : t.mono.factors()) {
      if (need_star) out += "*";
      out += var_name(v);
      if (e != 1) out += "^" + std::to_string(e);
      need_star = true;
    }
  }
  return out;
}

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  Poly parse() {
    std::vector<Term> terms;
    skip_space();
    if (pos_ == text_.size()) throw ParseError("empty polynomial", pos_);
    bool negative = false;
    if (peek() == '-' || peek() == '+') {
      negative = peek() == '-';
      ++pos_;
      skip_space();
    }
    terms.push_back(parse_term(negative));
    while (true) {
      skip_space();
      if (pos_ == text_.size()) break;
      char c = peek();
      if (c != '+' && c != '-') throw ParseError("expected '+' or '-'", pos_);
      ++pos_;
      skip_space();
      terms.push_back(parse_term(c == '-'));
    }
    return Poly::from_terms(std::move(terms));
  }

 private:
  char peek() const { return text_[pos_]; }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  Term parse_term(bool negative) {
    Rat coef = 1;
    std::vector<Mono::Factor> factors;
    bool first = true;
    while (true) {
      skip_space();
      if (pos_ == text_.size()) throw ParseError("expected factor", pos_);
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        coef *= parse_number();
      } else if (std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_') {
        factors.push_back(parse_power());
      } else {
        throw ParseError(first ? "expected term" : "expected factor", pos_);
      }
      first = false;
      skip_space();
      if (pos_ < text_.size() && peek() == '*') {
        ++pos_;
        continue;
      }
      break;
    }
    if (negative) coef = -coef;
    return {Mono::from_factors(std::move(factors)), coef};
  }

  Rat parse_number() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (pos_ < text_.size() && peek() == '/') {
      ++pos_;
      std::size_t den_start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      if (den_start == pos_) throw ParseError("expected denominator", pos_);
    }
    try {
      return parse_rat(text_.substr(start, pos_ - start));
    } catch (const ParseError&) {
      throw ParseError("invalid rational", start);
    }
  }

  Mono::Factor parse_power() {
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) {
      ++pos_;
    }
    VarId v = var(text_.substr(start, pos_ - start));
    unsigned e = 1;
    skip_space();
    if (pos_ < text_.size() && peek() == '^') {
      ++pos_;
      skip_space();
      std::size_t exp_start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      if (exp_start == pos_) throw ParseError("expected exponent", pos_);
      e = static_cast<unsigned>(std::stoul(std::string(text_.substr(exp_start, pos_ - exp_start))));
    }
    return {v, e};
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view text) { return PolyParser(text).parse(); }

}  // namespace phyloag
