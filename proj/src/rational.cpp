#include "phyloag/rational.hpp"

#include <cctype>

#include "phyloag/error.hpp"

namespace phyloag {

Rat make_rat(long num, long den) {
  if (den == 0) throw ValidationError("zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

namespace {

Int parse_int(std::string_view text, std::size_t offset) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    negative = text[i] == '-';
    ++i;
  }
  if (i == text.size()) throw ParseError("expected digits", offset + i);
  for (std::size_t j = i; j < text.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(text[j]))) {
      throw ParseError("unexpected character in number", offset + j);
    }
  }
  Int value(std::string(text.substr(i)), 10);
  return negative ? Int(-value) : value;
}

}  // namespace

Rat parse_rat(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rat(parse_int(text, 0));
  Int num = parse_int(text.substr(0, slash), 0);
  std::string_view den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+')) {
    throw ParseError("sign not allowed in denominator", slash + 1);
  }
  Int den = parse_int(den_text, slash + 1);
  if (den == 0) throw ParseError("zero denominator", slash + 1);
  Rat q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rat& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Int lcm(const Int& a, const Int& b) {
  Int l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

}  // namespace phyloag
