#include "phyloag/modular.hpp"

#include <mutex>

#include "phyloag/error.hpp"

namespace phyloag {

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
  if (p < 3 || p >= (std::uint64_t{1} << 31)) throw ValidationError("prime out of range");
  barrett_ = (~static_cast<unsigned __int128>(0) >> 64) / p;
}

std::uint64_t PrimeField::reduce(std::uint64_t x) const {
  auto q = static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * barrett_) >> 64);
  std::uint64_t r = x - q * p_;
  return r >= p_ ? r - p_ : r;
}

std::uint64_t PrimeField::pow(std::uint64_t a, std::uint64_t e) const {
  std::uint64_t result = 1;
  a %= p_;
  while (e > 0) {
    if (e & 1u) result = mul(result, a);
    a = mul(a, a);
    e >>= 1;
  }
  return result;
}

std::uint64_t PrimeField::inv(std::uint64_t a) const {
  if (a % p_ == 0) throw DegeneracyError("inverse of zero modulo p");
  return pow(a, p_ - 2);
}

std::uint64_t PrimeField::from_rat(const Rat& q) const {
  std::uint64_t num = mpz_fdiv_ui(q.get_num_mpz_t(), p_);
  std::uint64_t den = mpz_fdiv_ui(q.get_den_mpz_t(), p_);
  return mul(num, inv(den));
}

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1u) == 0) {
    d >>= 1;
    ++s;
  }
  auto mulmod = [n](std::uint64_t a, std::uint64_t b) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % n);
  };
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = 1;
    std::uint64_t base = a;
    for (std::uint64_t e = d; e > 0; e >>= 1) {
      if (e & 1u) x = mulmod(x, base);
      base = mulmod(base, base);
    }
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mulmod(x, x);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::uint64_t nth_large_prime(std::size_t index) {
  static std::mutex mutex;
  static std::vector<std::uint64_t> primes;
  std::lock_guard lock(mutex);
  std::uint64_t candidate = primes.empty() ? (std::uint64_t{1} << 31) - 1 : primes.back() - 2;
  while (primes.size() <= index) {
    if (is_prime_u64(candidate)) primes.push_back(candidate);
    candidate -= 2;
  }
  return primes[index];
}

std::optional<Rat> rational_reconstruct(const Int& a, const Int& m) {
  Int r0 = m;
  Int r1 = a % m;
  if (r1 < 0) r1 += m;
  Int s0 = 0;
  Int s1 = 1;
  Int bound;
  Int half = m / 2;
  mpz_sqrt(bound.get_mpz_t(), half.get_mpz_t());
  while (r1 > bound) {
    Int q = r0 / r1;
    Int r2 = r0 - q * r1;
    Int s2 = s0 - q * s1;
    r0 = r1;
    r1 = r2;
    s0 = s1;
    s1 = s2;
  }
  if (abs(s1) > bound || s1 == 0) return std::nullopt;
  if (gcd(r1, s1) != 1) return std::nullopt;
  Rat q(r1, s1);
  q.canonicalize();
  return q;
}

ModKernel mod_kernel(ModMatrix m, const PrimeField& field) {
  ModKernel out;
  const std::size_t rows = m.rows;
  const std::size_t cols = m.cols;
  std::vector<std::size_t> pivot_row_of;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m.at(p, c) == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      for (std::size_t j = c; j < cols; ++j) std::swap(m.at(p, j), m.at(r, j));
    }
    std::uint64_t inv = field.inv(m.at(r, c));
    std::uint64_t* pivot = &m.data[r * cols];
    for (std::size_t j = c; j < cols; ++j) pivot[j] = field.mul(pivot[j], inv);
    for (std::size_t i = r + 1; i < rows; ++i) {
      std::uint64_t* row = &m.data[i * cols];
      if (row[c] == 0) continue;
      std::uint64_t f = field.neg(row[c]);
      for (std::size_t j = c; j < cols; ++j) row[j] = field.reduce(row[j] + f * pivot[j]);
    }
    out.pivot_columns.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (auto c : out.pivot_columns) is_pivot[c] = true;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    out.free_columns.push_back(f);
    std::vector<std::uint64_t> x(cols, 0);
    x[f] = 1;
    for (std::size_t i = out.pivot_columns.size(); i-- > 0;) {
      std::size_t pc = out.pivot_columns[i];
      const std::uint64_t* row = &m.data[i * cols];
      std::uint64_t s = 0;
      for (std::size_t j = pc + 1; j < cols; ++j) {
        if (x[j] != 0 && row[j] != 0) s = field.add(s, field.mul(row[j], x[j]));
      }
      x[pc] = field.neg(s);
    }
    out.basis.push_back(std::move(x));
  }
  return out;
}

std::optional<std::vector<std::vector<Rat>>> kernel_multimodular(
    std::size_t rows, std::size_t cols,
    const std::function<void(const PrimeField&, ModMatrix&)>& fill,
    const std::function<bool(const std::vector<std::vector<Rat>>&)>& verify,
    std::size_t max_primes) {
  std::vector<std::size_t> pivots;
  std::vector<std::vector<Int>> residues;
  Int modulus = 0;
  std::optional<std::vector<std::vector<Rat>>> previous;

  for (std::size_t i = 0; i < max_primes; ++i) {
    PrimeField field(nth_large_prime(i));
    ModMatrix m{rows, cols, std::vector<std::uint64_t>(rows * cols, 0)};
    fill(field, m);
    ModKernel k = mod_kernel(std::move(m), field);

    // Unlucky primes can only push pivots right; the rational pivot set is
    // the lexicographically smallest one observed.
    bool reset = modulus == 0 || k.pivot_columns.size() > pivots.size() ||
                 (k.pivot_columns.size() == pivots.size() && k.pivot_columns < pivots);
    if (!reset && k.pivot_columns != pivots) continue;
    if (reset) {
      pivots = k.pivot_columns;
      residues.assign(k.basis.size(), std::vector<Int>(cols, 0));
      for (std::size_t b = 0; b < k.basis.size(); ++b) {
        for (std::size_t c = 0; c < cols; ++c) residues[b][c] = static_cast<unsigned long>(k.basis[b][c]);
      }
      modulus = static_cast<unsigned long>(field.modulus());
      previous.reset();
    } else {
      Int p = static_cast<unsigned long>(field.modulus());
      Int m_inv;
      mpz_invert(m_inv.get_mpz_t(), modulus.get_mpz_t(), p.get_mpz_t());
      for (std::size_t b = 0; b < k.basis.size(); ++b) {
        for (std::size_t c = 0; c < cols; ++c) {
          Int& x = residues[b][c];
          Int diff = Int(static_cast<unsigned long>(k.basis[b][c])) - x;
          Int t = (diff % p) * m_inv % p;
          if (t < 0) t += p;
          x += modulus * t;
        }
      }
      modulus *= p;
    }

    std::vector<std::vector<Rat>> candidate;
    bool ok = true;
    for (std::size_t b = 0; b < residues.size() && ok; ++b) {
      std::vector<Rat> v(cols);
      for (std::size_t c = 0; c < cols && ok; ++c) {
        if (residues[b][c] == 0) continue;
        auto q = rational_reconstruct(residues[b][c], modulus);
        if (!q) {
          ok = false;
        } else {
          v[c] = *q;
        }
      }
      candidate.push_back(std::move(v));
    }
    if (!ok) {
      previous.reset();
      continue;
    }
    if (previous && *previous == candidate && verify(candidate)) return candidate;
    previous = std::move(candidate);
  }
  return std::nullopt;
}

}  // namespace phyloag
