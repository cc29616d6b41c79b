#pragma once

// Generators and independent oracles shared by the test binaries.

#include "dchar/exactalg.hpp"

#include <algorithm>
#include <functional>
#include <random>

namespace testing_support {

using dchar::Int;
using dchar::IntMatrix;
using dchar::IntVec;
using dchar::Rat;
using dchar::RatMatrix;
using dchar::RatVec;

inline Int random_int(std::mt19937_64& rng, long lo, long hi) {
  return Int(std::uniform_int_distribution<long>(lo, hi)(rng));
}

inline Rat random_rat(std::mt19937_64& rng, long range = 5, long max_den = 6) {
  Rat r(random_int(rng, -range * max_den, range * max_den),
        random_int(rng, 1, max_den));
  r.canonicalize();
  return r;
}

inline IntMatrix random_int_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, long lo,
                                   long hi) {
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = random_int(rng, lo, hi);
  return m;
}

inline RatVec random_rat_vec(std::mt19937_64& rng, std::size_t n) {
  RatVec v(n);
  for (auto& x : v) x = random_rat(rng);
  return v;
}

inline RatVec random_int_vec(std::mt19937_64& rng, std::size_t n, long range = 4) {
  RatVec v(n);
  for (auto& x : v) x = Rat(random_int(rng, -range, range));
  return v;
}

/// Determinant by cofactor-free Bareiss elimination.
inline Int bareiss_det(IntMatrix m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Int t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        m(i, j) = t / prev;
      }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

inline void for_each_subset(std::size_t n, std::size_t k,
                            const std::function<void(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  if (k > n) return;
  while (true) {
    f(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

/// Rank over ℚ: the largest k with a non-zero k×k minor (small matrices only).
/// Invariant factors from determinantal divisors D_k = gcd of k×k minors.
struct MinorOracle {
  std::size_t rank = 0;
  IntVec invariants;  // d₁ | d₂ | … (all non-zero ones)
};

inline MinorOracle minor_oracle(const IntMatrix& m) {
  MinorOracle out;
  Int prev = 1;
  const std::size_t kmax = std::min(m.rows(), m.cols());
  for (std::size_t k = 1; k <= kmax; ++k) {
    Int g = 0;
    for_each_subset(m.rows(), k, [&](const std::vector<std::size_t>& rows) {
      if (g == 1) return;
      for_each_subset(m.cols(), k, [&](const std::vector<std::size_t>& cols) {
        if (g == 1) return;
        IntMatrix sub(k, k);
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) sub(i, j) = m(rows[i], cols[j]);
        Int d = bareiss_det(sub);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
      });
    });
    if (g == 0) break;
    out.rank = k;
    out.invariants.push_back(g / prev);
    prev = g;
  }
  return out;
}

/// Rank over the prime field F_p by Gaussian elimination on residues.
inline std::size_t rank_mod_p(const IntMatrix& m, long p) {
  std::vector<std::vector<long>> a(m.rows(), std::vector<long>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      Int r = m(i, j) % p;
      long v = r.get_si();
      a[i][j] = (v % p + p) % p;
    }
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
    std::size_t piv = rank;
    while (piv < m.rows() && a[piv][c] == 0) ++piv;
    if (piv == m.rows()) continue;
    std::swap(a[piv], a[rank]);
    long inv = 1;
    for (long e = p - 2, b = a[rank][c]; e > 0; e >>= 1, b = b * b % p)
      if (e & 1) inv = inv * b % p;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == rank || a[i][c] == 0) continue;
      long f = a[i][c] * inv % p;
      for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = ((a[i][j] - f * a[rank][j]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

}  // namespace testing_support
