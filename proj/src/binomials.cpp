#include <unordered_set>

#include "phyloag/fourier.hpp"

namespace phyloag {

namespace {

// Multisets of coordinate indices of a given size, as sorted index lists in
// lexicographic order.
void multisets(std::size_t n, std::size_t size, std::size_t start, std::vector<std::size_t>& cur,
               std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == size) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    multisets(n, size, i, cur, out);
    cur.pop_back();
  }
}

bool disjoint(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) return false;
    if (a[i] < b[j]) {
      ++i;
    } else {
      ++j;
    }
  }
  return true;
}

}  // namespace

std::vector<Poly> binomials_up_to_degree(const MonomialMap& map, unsigned degree) {
  if (degree < 1 || degree > 3) throw ValidationError("binomial search supports degrees 1 to 3");
  std::vector<Poly> out;
  std::unordered_set<Poly, PolyHash> seen;
  const std::size_t n = map.coordinate_count();
  for (unsigned d = 1; d <= degree; ++d) {
    std::vector<std::vector<std::size_t>> sets;
    std::vector<std::size_t> cur;
    multisets(n, d, 0, cur, sets);
    std::unordered_map<Mono, std::size_t, MonoHash> fiber_of;
    std::vector<std::vector<std::size_t>> fibers;
    for (std::size_t s = 0; s < sets.size(); ++s) {
      Mono image;
      for (std::size_t i : sets[s]) image = image * map.monomial(i);
      auto [it, inserted] = fiber_of.try_emplace(image, fibers.size());
      if (inserted) fibers.emplace_back();
      fibers[it->second].push_back(s);
    }
    for (const auto& fiber : fibers) {
      for (std::size_t x = 0; x < fiber.size(); ++x) {
        for (std::size_t y = x + 1; y < fiber.size(); ++y) {
          const auto& a = sets[fiber[x]];
          const auto& b = sets[fiber[y]];
          if (!disjoint(a, b)) continue;
          std::vector<Mono::Factor> fa;
          std::vector<Mono::Factor> fb;
          for (std::size_t i : a) fa.emplace_back(map.coordinate_var(i), 1);
          for (std::size_t i : b) fb.emplace_back(map.coordinate_var(i), 1);
          Poly binomial = normalize(Poly::monomial(Mono::from_factors(std::move(fa))) -
                                    Poly::monomial(Mono::from_factors(std::move(fb))));
          if (seen.insert(binomial).second) out.push_back(std::move(binomial));
        }
      }
    }
  }
  return out;
}

}  // namespace phyloag
