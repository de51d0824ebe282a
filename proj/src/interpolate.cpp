#include "phyloag/invariants.hpp"
#include "phyloag/modular.hpp"

namespace phyloag {

namespace {

constexpr std::size_t kExactLimit = 300;
constexpr std::size_t kExtraPoints = 10;
constexpr std::size_t kFreshPoints = 10;
constexpr std::size_t kAttempts = 3;

void exponents_rec(std::size_t vars, unsigned left, std::vector<unsigned>& cur,
                   std::vector<std::vector<unsigned>>& out) {
  if (cur.size() + 1 == vars) {
    cur.push_back(left);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (unsigned e = left + 1; e-- > 0;) {
    cur.push_back(e);
    exponents_rec(vars, left - e, cur, out);
    cur.pop_back();
  }
}

// Powers x^0..x^d of every coordinate value at one point.
template <class T, class Mul>
std::vector<std::vector<T>> power_table(const std::vector<T>& values, unsigned degree, const T& one, Mul mul) {
  std::vector<std::vector<T>> table(values.size());
  for (std::size_t j = 0; j < values.size(); ++j) {
    table[j].push_back(one);
    for (unsigned e = 1; e <= degree; ++e) table[j].push_back(mul(table[j].back(), values[j]));
  }
  return table;
}

Rat monomial_value(const std::vector<std::vector<Rat>>& powers, const std::vector<unsigned>& exps) {
  Rat v(1);
  for (std::size_t j = 0; j < exps.size(); ++j) {
    if (exps[j] != 0) v *= powers[j][exps[j]];
  }
  return v;
}

}  // namespace

std::vector<std::vector<unsigned>> monomial_exponents(std::size_t vars, unsigned degree) {
  std::vector<std::vector<unsigned>> out;
  if (vars == 0) return out;
  std::vector<unsigned> cur;
  exponents_rec(vars, degree, cur, out);
  return out;
}

InterpolationResult interpolate_vanishing_forms(const PolynomialMap& map, unsigned degree,
                                                const std::vector<std::size_t>& basis, std::uint64_t seed) {
  if (basis.empty()) throw ValidationError("interpolation needs at least one coordinate");
  for (std::size_t i : basis) {
    if (i >= map.coordinate_count()) throw ValidationError("coordinate index out of range");
  }
  const auto exps = monomial_exponents(basis.size(), degree);
  std::vector<VarId> coord_vars;
  for (std::size_t i : basis) coord_vars.push_back(var(map.coordinate_name(i)));
  const auto params = map.parameters();

  InterpolationResult result;
  result.monomials = exps.size();
  result.points = exps.size() + kExtraPoints;
  result.multimodular = exps.size() > kExactLimit;

  for (std::size_t attempt = 0; attempt < kAttempts; ++attempt) {
    result.attempts = attempt + 1;
    CounterRng rng(seed, 2 * attempt);
    std::vector<std::vector<Rat>> values;
    values.reserve(result.points);
    for (std::size_t s = 0; s < result.points; ++s) {
      auto all = map.evaluate(random_point(params, rng));
      std::vector<Rat> picked;
      for (std::size_t i : basis) picked.push_back(all[i]);
      values.push_back(std::move(picked));
    }
    auto rat_mul = [](const Rat& a, const Rat& b) { return Rat(a * b); };

    std::vector<std::vector<Rat>> kernel;
    if (!result.multimodular) {
      MatQ m(result.points, exps.size());
      for (std::size_t s = 0; s < result.points; ++s) {
        auto powers = power_table(values[s], degree, Rat(1), rat_mul);
        for (std::size_t c = 0; c < exps.size(); ++c) m(s, c) = monomial_value(powers, exps[c]);
      }
      kernel = mat_rank_nullspace(m).nullspace;
    } else {
      auto fill = [&](const PrimeField& field, ModMatrix& m) {
        auto mod_mul = [&](std::uint64_t a, std::uint64_t b) { return field.mul(a, b); };
        for (std::size_t s = 0; s < result.points; ++s) {
          std::vector<std::uint64_t> residues;
          for (const Rat& v : values[s]) residues.push_back(field.from_rat(v));
          auto powers = power_table<std::uint64_t>(residues, degree, 1, mod_mul);
          for (std::size_t c = 0; c < exps.size(); ++c) {
            std::uint64_t v = 1;
            for (std::size_t j = 0; j < exps[c].size(); ++j) {
              if (exps[c][j] != 0) v = field.mul(v, powers[j][exps[c][j]]);
            }
            m.at(s, c) = v;
          }
        }
      };
      auto verify = [&](const std::vector<std::vector<Rat>>& candidate) {
        for (std::size_t s = 0; s < result.points; ++s) {
          auto powers = power_table(values[s], degree, Rat(1), rat_mul);
          std::vector<Rat> mono(exps.size());
          for (std::size_t c = 0; c < exps.size(); ++c) mono[c] = monomial_value(powers, exps[c]);
          for (const auto& vec : candidate) {
            Rat sum(0);
            for (std::size_t c = 0; c < exps.size(); ++c) {
              if (vec[c] != 0) sum += vec[c] * mono[c];
            }
            if (sum != 0) return false;
          }
        }
        return true;
      };
      auto found = kernel_multimodular(result.points, exps.size(), fill, verify);
      if (!found) continue;
      kernel = std::move(*found);
    }

    std::vector<Poly> forms;
    for (const auto& vec : kernel) {
      std::vector<Term> terms;
      for (std::size_t c = 0; c < exps.size(); ++c) {
        if (vec[c] == 0) continue;
        std::vector<Mono::Factor> factors;
        for (std::size_t j = 0; j < exps[c].size(); ++j) factors.emplace_back(coord_vars[j], exps[c][j]);
        terms.push_back({Mono::from_factors(std::move(factors)), vec[c]});
      }
      forms.push_back(Poly::from_terms(std::move(terms)));
    }
    bool sound = true;
    for (const auto& f : forms) {
      sound = sound && vanishing_check(f, map, VanishMode::Randomized, mix64(seed + 2 * attempt + 1), kFreshPoints).vanishes;
    }
    if (!sound) continue;
    for (auto& f : forms) f = normalize(f);
    result.forms = std::move(forms);
    return result;
  }
  throw DegeneracyError("interpolation did not stabilize; the sample points were degenerate");
}

}  // namespace phyloag
