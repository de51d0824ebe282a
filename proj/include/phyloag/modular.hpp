#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "phyloag/rational.hpp"

namespace phyloag {

// Arithmetic modulo a prime below 2^31 with Barrett reduction.
class PrimeField {
 public:
  explicit PrimeField(std::uint64_t p);
  std::uint64_t modulus() const { return p_; }
  std::uint64_t reduce(std::uint64_t x) const;  // x < 2^62
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return reduce(a * b); }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : p_ - a; }
  std::uint64_t inv(std::uint64_t a) const;
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;
  // Image of an exact rational; the denominator must be a unit.
  std::uint64_t from_rat(const Rat& q) const;

 private:
  std::uint64_t p_;
  unsigned __int128 barrett_;
};

// Descending primes just below 2^31, deterministic.
std::uint64_t nth_large_prime(std::size_t index);
bool is_prime_u64(std::uint64_t n);

// Smallest |num|/den congruent to a mod m with |num|, den <= sqrt(m/2).
std::optional<Rat> rational_reconstruct(const Int& a, const Int& m);

// Dense matrix over a prime field, row-major.
struct ModMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::uint64_t> data;
  std::uint64_t& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
};

struct ModKernel {
  std::vector<std::size_t> pivot_columns;
  std::vector<std::size_t> free_columns;
  // basis[j][c]: reduced kernel vector with 1 at free_columns[j].
  std::vector<std::vector<std::uint64_t>> basis;
};

// Row-echelon elimination followed by back substitution.
ModKernel mod_kernel(ModMatrix m, const PrimeField& field);

// Exact kernel of a rational matrix known only through its images modulo
// primes. `fill` writes the matrix image for the given field. Candidate
// kernels (reduced basis, CRT plus rational reconstruction) are handed to
// `verify`, which must check them exactly; more primes are added until a
// candidate verifies or max_primes is exhausted (returns nullopt).
std::optional<std::vector<std::vector<Rat>>> kernel_multimodular(
    std::size_t rows, std::size_t cols,
    const std::function<void(const PrimeField&, ModMatrix&)>& fill,
    const std::function<bool(const std::vector<std::vector<Rat>>&)>& verify,
    std::size_t max_primes = 24);

}  // namespace phyloag
