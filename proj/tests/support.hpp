#pragma once

#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "gammalat/gammalat.hpp"

namespace testsupport {

using namespace gammalat;

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline IntMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, int lo, int hi) {
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = uniform(rng, lo, hi);
  return m;
}

/// Random unimodular matrix together with its inverse, built from elementary operations.
inline std::pair<IntMatrix, IntMatrix> random_unimodular(Rng& rng, std::size_t n, int steps) {
  IntMatrix v = IntMatrix::identity(n), inv = IntMatrix::identity(n);
  if (n < 2) return {v, inv};
  for (int s = 0; s < steps; ++s) {
    std::size_t i = static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(n) - 1));
    std::size_t j = static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(n) - 2));
    if (j >= i) ++j;
    int c = uniform(rng, -2, 2);
    if (c == 0) c = 1;
    // v <- v E with E = I + c e_ij; inv <- E^-1 inv
    for (std::size_t r = 0; r < n; ++r) v(r, j).addmul(Integer(c), v(r, i));
    for (std::size_t col = 0; col < n; ++col) inv(i, col).submul(Integer(c), inv(j, col));
  }
  return {v, inv};
}

/// The same module in a random basis: ρ'(s) = V^-1 ρ(s) V.
inline Lattice change_basis(Rng& rng, const Lattice& l, int steps = 6) {
  auto [v, inv] = random_unimodular(rng, l.rank(), steps);
  std::vector<IntMatrix> actions;
  for (const auto& a : l.actions()) actions.push_back(inv * a * v);
  return Lattice(l.group(), l.rank(), std::move(actions));
}

inline std::vector<GroupPtr> small_groups() {
  return {build_cyclic(2), build_cyclic(3), build_cyclic(4), build_dihedral(2), build_dihedral(3),
          build_dihedral(4), build_quaternion(2), build_cyclic(6)};
}

/// A random lattice of modest rank over `g` from the named modules and sums.
inline Lattice random_lattice(Rng& rng, const GroupPtr& g, int depth = 1) {
  int pick = uniform(rng, 0, depth > 0 ? 7 : 5);
  switch (pick) {
    case 0: return trivial_lattice(g, static_cast<std::size_t>(uniform(rng, 1, 2)));
    case 1: return augmentation_ideal(g).lattice;
    case 2: return ideal_i2(g).lattice;
    case 3: return norm_two(g).lattice;
    case 4: return zpi_mod_norm(g).lattice;
    case 5: return free_lattice(g, 1);
    case 6: return direct_sum(random_lattice(rng, g, depth - 1), random_lattice(rng, g, depth - 1));
    default: {
      Lattice a = random_lattice(rng, g, 0);
      return a.rank() <= 4 ? tensor_lattice(a, trivial_lattice(g, 2)) : dual_lattice(a);
    }
  }
}

// Independent oracle: Smith invariants from determinantal divisors.

inline int64_t bareiss_det(std::vector<std::vector<__int128>> a) {
  const std::size_t n = a.size();
  __int128 prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return static_cast<int64_t>(sign * a[n - 1][n - 1]);
}

inline void combinations(std::size_t n, std::size_t k, std::vector<std::vector<std::size_t>>& out) {
  std::vector<std::size_t> c(k);
  std::iota(c.begin(), c.end(), 0);
  while (true) {
    out.push_back(c);
    std::size_t i = k;
    while (i > 0 && c[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++c[i - 1];
    for (std::size_t j = i; j < k; ++j) c[j] = c[j - 1] + 1;
  }
}

/// Invariant factors d_k / d_(k-1), d_k the gcd of all k x k minors.
inline std::vector<int64_t> determinantal_invariants(const IntMatrix& m) {
  std::vector<int64_t> out;
  int64_t prev = 1;
  for (std::size_t k = 1; k <= std::min(m.rows(), m.cols()); ++k) {
    std::vector<std::vector<std::size_t>> rs, cs;
    combinations(m.rows(), k, rs);
    combinations(m.cols(), k, cs);
    int64_t g = 0;
    for (const auto& r : rs)
      for (const auto& c : cs) {
        std::vector<std::vector<__int128>> a(k, std::vector<__int128>(k));
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) a[i][j] = m(r[i], c[j]).to_int64();
        g = std::gcd(g, bareiss_det(a));
        if (g == 1) break;
      }
    if (g == 0) break;
    out.push_back(g / prev);
    prev = g;
  }
  return out;
}

inline AbGroup oracle_cokernel(const IntMatrix& m) {
  auto inv = determinantal_invariants(m);
  std::vector<Integer> orders;
  for (auto d : inv) orders.emplace_back(static_cast<long long>(d));
  return AbGroup::from_orders(m.rows() - inv.size(), orders);
}

/// Exact determinant by fraction-free elimination over GMP integers.
inline mpz_class det(const IntMatrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j).to_mpz();
  if (n == 0) return 1;
  mpz_class prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

/// Random word in the generators of `g`.
inline Word random_word(Rng& rng, const Group& g, int max_len) {
  Word w;
  int len = uniform(rng, 0, max_len);
  for (int k = 0; k < len; ++k) w.push_back({uniform(rng, 0, g.num_generators() - 1), uniform(rng, 0, 1) ? 1 : -1});
  return w;
}

inline RingElement random_ring_element(Rng& rng, const GroupPtr& g, int lo = -4, int hi = 4) {
  IntVector c;
  for (int k = 0; k < g->order(); ++k) c.emplace_back(uniform(rng, 0, 2) == 0 ? uniform(rng, lo, hi) : 0);
  return RingElement(g, c);
}

}  // namespace testsupport
