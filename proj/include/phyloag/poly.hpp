#pragma once

#include <cstddef>
#include <functional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "phyloag/error.hpp"
#include "phyloag/rational.hpp"
#include "phyloag/vars.hpp"

namespace phyloag {

// Monomial: sorted (variable, exponent) pairs, exponents strictly positive.
class Mono {
 public:
  using Factor = std::pair<VarId, unsigned>;

  Mono() = default;
  static Mono of(VarId v, unsigned exponent = 1);
  // Factors may be unsorted and repeat variables; zero exponents are dropped.
  static Mono from_factors(std::vector<Factor> factors);

  const std::vector<Factor>& factors() const { return factors_; }
  unsigned degree() const { return degree_; }
  unsigned exponent(VarId v) const;
  bool is_one() const { return factors_.empty(); }

  Mono operator*(const Mono& other) const;
  // Exponent-wise quotient; requires divides(other).
  Mono operator/(const Mono& other) const;
  bool divides(const Mono& other) const;

  friend bool operator==(const Mono& a, const Mono& b) { return a.factors_ == b.factors_; }
  friend bool operator!=(const Mono& a, const Mono& b) { return !(a == b); }

  std::size_t hash() const;

 private:
  std::vector<Factor> factors_;
  unsigned degree_ = 0;
};

struct MonoHash {
  std::size_t operator()(const Mono& m) const { return m.hash(); }
};

// Canonical term order: higher total degree first, ties broken
// lexicographically on exponents with smaller variable ids most significant.
bool grlex_before(const Mono& a, const Mono& b);

struct Term {
  Mono mono;
  Rat coef;
};

using Assignment = std::unordered_map<VarId, Rat>;
using FloatAssignment = std::unordered_map<VarId, double>;

// Sparse multivariate polynomial over Q. Terms are kept in canonical
// order with no zero coefficients, so structural equality is equality.
class Poly {
 public:
  Poly() = default;
  Poly(const Rat& constant);  // NOLINT(google-explicit-constructor)
  Poly(long constant) : Poly(Rat(constant)) {}  // NOLINT
  static Poly variable(VarId v);
  static Poly variable(std::string_view name);
  static Poly monomial(const Mono& m, const Rat& coef = 1);
  // Merges duplicates and drops zeros.
  static Poly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rat constant_value() const;
  int total_degree() const;  // -1 for the zero polynomial
  bool is_homogeneous() const;
  std::set<VarId> variables() const;
  // Range of the summed exponents of the given variables over all terms.
  std::pair<unsigned, unsigned> degree_range_in(const std::set<VarId>& vars) const;
  Rat coefficient(const Mono& m) const;
  const Term& leading_term() const { return terms_.front(); }

  Poly operator-() const;
  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Poly& other);
  Poly& operator*=(const Rat& scalar);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rat& s) { return a *= s; }
  friend Poly operator*(const Rat& s, Poly a) { return a *= s; }

  Poly pow(unsigned exponent) const;
  Poly derivative(VarId v) const;

  friend bool operator==(const Poly& a, const Poly& b);
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

 private:
  std::vector<Term> terms_;
};

// Throws MissingVariable when a variable of p has no value.
Rat poly_eval(const Poly& p, const Assignment& values);
double poly_eval(const Poly& p, const FloatAssignment& values);

// Replaces every variable of p by a polynomial and expands.
// Throws MissingVariable when a variable of p is not covered.
Poly poly_substitute(const Poly& p, const std::unordered_map<VarId, Poly>& subst);
// Same, but variables not in subst are left in place.
Poly poly_substitute_partial(const Poly& p, const std::unordered_map<VarId, Poly>& subst);

// Integer coefficients with gcd 1 and a positive first term. Zero stays zero.
Poly normalize(const Poly& p);

// Text format: terms in canonical order joined by " + " / " - ", each term
// `coeff*var^e*...`, unit coefficients omitted, e.g. "3/2*a0^2*b1 - c0 + 7".
std::string to_string(const Poly& p);
Poly parse_poly(std::string_view text);

}  // namespace phyloag
