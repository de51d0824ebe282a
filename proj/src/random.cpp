#include "phyloag/random.hpp"

namespace phyloag {

namespace {
constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;
}

std::uint64_t mix64(std::uint64_t x) {
  x += kGolden;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

CounterRng::CounterRng(std::uint64_t seed, std::uint64_t stream) : key_(mix64(seed ^ mix64(stream))) {}

std::uint64_t CounterRng::next() { return mix64(key_ + (counter_++) * kGolden); }

std::uint64_t CounterRng::uniform(std::uint64_t lo, std::uint64_t hi) {
  std::uint64_t span = hi - lo + 1;
  if (span == 0) return next();
  std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % span);
  std::uint64_t x;
  do {
    x = next();
  } while (x >= limit);
  return lo + x % span;
}

double CounterRng::uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

Assignment random_point(const std::vector<VarId>& vars, CounterRng& rng) {
  Assignment out;
  for (VarId v : vars) {
    Rat q(static_cast<long>(rng.uniform(1, 97)), static_cast<long>(rng.uniform(1, 97)));
    q.canonicalize();
    out[v] = q;
  }
  return out;
}

}  // namespace phyloag
