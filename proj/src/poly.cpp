#include "phyloag/poly.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace phyloag {

Mono Mono::of(VarId v, unsigned exponent) {
  Mono m;
  if (exponent > 0) {
    m.factors_.emplace_back(v, exponent);
    m.degree_ = exponent;
  }
  return m;
}

Mono Mono::from_factors(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end());
  Mono m;
  for (const auto& [v, e] : factors) {
    if (e == 0) continue;
    if (!m.factors_.empty() && m.factors_.back().first == v) {
      m.factors_.back().second += e;
    } else {
      m.factors_.emplace_back(v, e);
    }
    m.degree_ += e;
  }
  return m;
}

unsigned Mono::exponent(VarId v) const {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), Factor{v, 0});
  return (it != factors_.end() && it->first == v) ? it->second : 0;
}

Mono Mono::operator*(const Mono& other) const {
  Mono out;
  out.factors_.reserve(factors_.size() + other.factors_.size());
  auto i = factors_.begin();
  auto j = other.factors_.begin();
  while (i != factors_.end() || j != other.factors_.end()) {
    if (j == other.factors_.end() || (i != factors_.end() && i->first < j->first)) {
      out.factors_.push_back(*i++);
    } else if (i == factors_.end() || j->first < i->first) {
      out.factors_.push_back(*j++);
    } else {
      out.factors_.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  out.degree_ = degree_ + other.degree_;
  return out;
}

bool Mono::divides(const Mono& other) const {
  for (const auto& [v, e] : factors_) {
    if (other.exponent(v) < e) return false;
  }
  return true;
}

Mono Mono::operator/(const Mono& other) const {
  std::vector<Factor> out;
  for (const auto& [v, e] : factors_) {
    unsigned d = other.exponent(v);
    if (d > e) throw ValidationError("monomial quotient is not a monomial");
    if (e > d) out.emplace_back(v, e - d);
  }
  for (const auto& [v, e] : other.factors_) {
    if (exponent(v) == 0) throw ValidationError("monomial quotient is not a monomial");
  }
  return from_factors(std::move(out));
}

std::size_t Mono::hash() const {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (const auto& [v, e] : factors_) {
    h ^= (static_cast<std::size_t>(v) * 0x100000001b3ULL + e) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

bool grlex_before(const Mono& a, const Mono& b) {
  if (a.degree() != b.degree()) return a.degree() > b.degree();
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  std::size_t n = std::min(fa.size(), fb.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (fa[i].first != fb[i].first) return fa[i].first < fb[i].first;
    if (fa[i].second != fb[i].second) return fa[i].second > fb[i].second;
  }
  return false;
}

Poly::Poly(const Rat& constant) {
  if (constant != 0) terms_.push_back({Mono{}, constant});
}

Poly Poly::variable(VarId v) { return monomial(Mono::of(v)); }

Poly Poly::variable(std::string_view name) { return variable(var(name)); }

Poly Poly::monomial(const Mono& m, const Rat& coef) {
  Poly p;
  if (coef != 0) p.terms_.push_back({m, coef});
  return p;
}

Poly Poly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return grlex_before(a.mono, b.mono); });
  Poly p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coef += t.coef;
    } else {
      if (!p.terms_.empty() && p.terms_.back().coef == 0) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().coef == 0) p.terms_.pop_back();
  return p;
}

bool Poly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

Rat Poly::constant_value() const {
  if (!is_constant()) throw ValidationError("polynomial is not constant");
  return terms_.empty() ? Rat(0) : terms_[0].coef;
}

int Poly::total_degree() const {
  if (terms_.empty()) return -1;
  return static_cast<int>(terms_.front().mono.degree());
}

bool Poly::is_homogeneous() const {
  for (const auto& t : terms_) {
    if (t.mono.degree() != terms_.front().mono.degree()) return false;
  }
  return true;
}

std::set<VarId> Poly::variables() const {
  std::set<VarId> out;
  for (const auto& t : terms_) {
    for (const auto& [v, e] : t.mono.factors()) out.insert(v);
  }
  return out;
}

std::pair<unsigned, unsigned> Poly::degree_range_in(const std::set<VarId>& vars) const {
  if (terms_.empty()) return {0, 0};
  unsigned lo = ~0u;
  unsigned hi = 0;
  for (const auto& t : terms_) {
    unsigned d = 0;
    for (const auto& [v, e] : t.mono.factors()) {
      if (vars.count(v)) d += e;
    }
    lo = std::min(lo, d);
    hi = std::max(hi, d);
  }
  return {lo, hi};
}

Rat Poly::coefficient(const Mono& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Mono& key) { return grlex_before(t.mono, key); });
  if (it != terms_.end() && it->mono == m) return it->coef;
  return 0;
}

Poly Poly::operator-() const {
  Poly p = *this;
  for (auto& t : p.terms_) t.coef = -t.coef;
  return p;
}

namespace {

// Merges two canonical term lists; sign = +1 or -1 applied to b.
std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b, int sign) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() || j != b.end()) {
    if (j == b.end() || (i != a.end() && grlex_before(i->mono, j->mono))) {
      out.push_back(*i++);
    } else if (i == a.end() || grlex_before(j->mono, i->mono)) {
      out.push_back({j->mono, sign > 0 ? j->coef : Rat(-j->coef)});
      ++j;
    } else {
      Rat c = sign > 0 ? Rat(i->coef + j->coef) : Rat(i->coef - j->coef);
      if (c != 0) out.push_back({i->mono, c});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Poly& Poly::operator+=(const Poly& other) {
  terms_ = merge_terms(terms_, other.terms_, +1);
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  terms_ = merge_terms(terms_, other.terms_, -1);
  return *this;
}

Poly& Poly::operator*=(const Poly& other) {
  *this = *this * other;
  return *this;
}

Poly& Poly::operator*=(const Rat& scalar) {
  if (scalar == 0) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.coef *= scalar;
  }
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly{};
  if (a.size() == 1 && a.terms_[0].mono.is_one()) return b * a.terms_[0].coef;
  if (b.size() == 1 && b.terms_[0].mono.is_one()) return a * b.terms_[0].coef;
  std::unordered_map<Mono, Rat, MonoHash> acc;
  acc.reserve(a.size() * b.size());
  for (const auto& ta : a.terms_) {
    for (const auto& tb : b.terms_) {
      auto [it, inserted] = acc.try_emplace(ta.mono * tb.mono, ta.coef * tb.coef);
      if (!inserted) it->second += ta.coef * tb.coef;
    }
  }
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (c != 0) terms.push_back({m, c});
  }
  return Poly::from_terms(std::move(terms));
}

Poly Poly::pow(unsigned exponent) const {
  Poly result(1);
  Poly base = *this;
  while (exponent > 0) {
    if (exponent & 1u) result *= base;
    exponent >>= 1;
    if (exponent > 0) base = base * base;
  }
  return result;
}

Poly Poly::derivative(VarId v) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    unsigned e = t.mono.exponent(v);
    if (e == 0) continue;
    std::vector<Mono::Factor> f = t.mono.factors();
    for (auto& factor : f) {
      if (factor.first == v) factor.second -= 1;
    }
    out.push_back({Mono::from_factors(std::move(f)), t.coef * e});
  }
  return from_terms(std::move(out));
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].mono != b.terms_[i].mono || a.terms_[i].coef != b.terms_[i].coef) return false;
  }
  return true;
}

namespace {

Rat rat_pow(const Rat& base, unsigned e) {
  Rat out;
  mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), e);
  return out;
}

}  // namespace

Rat poly_eval(const Poly& p, const Assignment& values) {
  Rat sum = 0;
  for (const auto& t : p.terms()) {
    Rat prod = t.coef;
    for (const auto& [v, e] : t.mono.factors()) {
      auto it = values.find(v);
      if (it == values.end()) throw MissingVariable(var_name(v));
      prod *= e == 1 ? it->second : rat_pow(it->second, e);
    }
    sum += prod;
  }
  return sum;
}

double poly_eval(const Poly& p, const FloatAssignment& values) {
  double sum = 0;
  for (const auto& t : p.terms()) {
    double prod = t.coef.get_d();
    for (const auto& [v, e] : t.mono.factors()) {
      auto it = values.find(v);
      if (it == values.end()) throw MissingVariable(var_name(v));
      prod *= std::pow(it->second, static_cast<int>(e));
    }
    sum += prod;
  }
  return sum;
}

namespace {

Poly substitute_impl(const Poly& p, const std::unordered_map<VarId, Poly>& subst, bool partial) {
  std::map<std::pair<VarId, unsigned>, Poly> powers;
  auto power_of = [&](VarId v, unsigned e) -> const Poly& {
    auto key = std::make_pair(v, e);
    auto it = powers.find(key);
    if (it != powers.end()) return it->second;
    auto s = subst.find(v);
    Poly value;
    if (s == subst.end()) {
      if (!partial) throw MissingVariable(var_name(v));
      value = Poly::monomial(Mono::of(v, e));
    } else {
      value = s->second.pow(e);
    }
    return powers.emplace(key, std::move(value)).first->second;
  };
  Poly out;
  for (const auto& t : p.terms()) {
    Poly prod(t.coef);
    for (const auto& [v, e] : t.mono.factors()) prod = prod * power_of(v, e);
    out += prod;
  }
  return out;
}

}  // namespace

Poly poly_substitute(const Poly& p, const std::unordered_map<VarId, Poly>& subst) {
  return substitute_impl(p, subst, false);
}

Poly poly_substitute_partial(const Poly& p, const std::unordered_map<VarId, Poly>& subst) {
  return substitute_impl(p, subst, true);
}

Poly normalize(const Poly& p) {
  if (p.is_zero()) return p;
  Int den_lcm = 1;
  for (const auto& t : p.terms()) den_lcm = lcm(den_lcm, t.coef.get_den());
  Int num_gcd = 0;
  for (const auto& t : p.terms()) {
    Rat scaled = t.coef * den_lcm;
    num_gcd = gcd(num_gcd, scaled.get_num());
  }
  Rat factor(den_lcm, num_gcd);
  factor.canonicalize();
  if (p.leading_term().coef < 0) factor = -factor;
  return p * factor;
}

}  // namespace phyloag
