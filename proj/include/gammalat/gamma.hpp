#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "gammalat/lattice.hpp"

namespace gammalat {

/// Basis of Γ(Z^r): pairs (i, j) with i <= j in lexicographic order;
/// (i, i) is b_i (x) b_i and (i, j) is b_i ⊙ b_j = b_i (x) b_j + b_j (x) b_i.
struct GammaIndex {
  std::size_t r;

  std::size_t size() const noexcept { return r * (r + 1) / 2; }
  std::size_t operator()(std::size_t i, std::size_t j) const noexcept {
    if (i > j) std::swap(i, j);
    return i * r - i * (i - 1) / 2 + (j - i);
  }
  std::pair<std::size_t, std::size_t> pair(std::size_t k) const {
    std::size_t i = 0;
    while (k >= r - i) {
      k -= r - i;
      ++i;
    }
    return {i, i + k};
  }
};

namespace detail {

using SparseColumn = std::vector<std::pair<std::size_t, Integer>>;

inline std::vector<SparseColumn> sparse_columns(const IntMatrix& m) {
  std::vector<SparseColumn> cols(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) cols[j].emplace_back(i, m(i, j));
  return cols;
}

// Γ-coordinates of u (x) v + v (x) u (or u (x) u when `square`).
inline void add_symmetric_product(IntMatrix& out, std::size_t column, const GammaIndex& idx, const SparseColumn& u,
                                  const SparseColumn& v, bool square) {
  if (square) {
    for (std::size_t a = 0; a < u.size(); ++a) {
      out(idx(u[a].first, u[a].first), column).addmul(u[a].second, u[a].second);
      for (std::size_t b = a + 1; b < u.size(); ++b) out(idx(u[a].first, u[b].first), column).addmul(u[a].second, u[b].second);
    }
    return;
  }
  for (const auto& [k, uk] : u)
    for (const auto& [l, vl] : v) {
      Integer& e = out(idx(k, l), column);
      if (k == l)
        e.addmul(uk, vl * Integer(2));
      else
        e.addmul(uk, vl);
    }
}

}  // namespace detail

/// Γ of an integer matrix m: Z^c -> Z^r, i.e. the induced map Γ(Z^c) -> Γ(Z^r)
/// with u (x) u -> mu (x) mu and u ⊙ v -> mu ⊙ mv.
inline IntMatrix gamma_matrix(const IntMatrix& m) {
  GammaIndex src{m.cols()}, dst{m.rows()};
  IntMatrix out(dst.size(), src.size());
  auto cols = detail::sparse_columns(m);
  for (std::size_t i = 0; i < m.cols(); ++i)
    for (std::size_t j = i; j < m.cols(); ++j) detail::add_symmetric_product(out, src(i, j), dst, cols[i], cols[j], i == j);
  return out;
}

/// Matrix of Γ(Z^r) -> Z^r (x) Z^r (index a r + b for b_a (x) b_b).
inline IntMatrix symmetric_square_matrix(std::size_t r) {
  GammaIndex idx{r};
  IntMatrix e(r * r, idx.size());
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i; j < r; ++j) {
      e(i * r + j, idx(i, j)) += 1;
      if (i != j) e(j * r + i, idx(i, j)) += 1;
    }
  return e;
}

namespace detail {

// Checks E_target * gamma = (m (x) m) * E_source column by column, without
// materializing the Kronecker product.
inline bool embedding_identity_holds(const IntMatrix& m, const IntMatrix& gamma) {
  GammaIndex src{m.cols()}, dst{m.rows()};
  const std::size_t r = m.rows();
  auto cols = sparse_columns(m);
  for (std::size_t i = 0; i < m.cols(); ++i)
    for (std::size_t j = i; j < m.cols(); ++j) {
      std::map<std::size_t, Integer> lhs, rhs;
      const std::size_t c = src(i, j);
      for (std::size_t row = 0; row < gamma.rows(); ++row) {
        const Integer& v = gamma(row, c);
        if (v.is_zero()) continue;
        auto [k, l] = dst.pair(row);
        lhs[k * r + l] += v;
        if (k != l) lhs[l * r + k] += v;
      }
      for (const auto& [k, a] : cols[i])
        for (const auto& [l, b] : cols[j]) {
          rhs[k * r + l] += a * b;
          if (i != j) rhs[l * r + k] += a * b;
        }
      std::erase_if(lhs, [](const auto& kv) { return kv.second.is_zero(); });
      std::erase_if(rhs, [](const auto& kv) { return kv.second.is_zero(); });
      if (lhs != rhs) return false;
    }
  return true;
}

}  // namespace detail

/// Γ(L) with the diagonal action. Each action matrix is certified by the
/// identity E Γ(ρ(s)) = (ρ(s) (x) ρ(s)) E with E the injective symmetric-square
/// embedding, so Γ(L) is a sublattice of L (x) L.
inline Lattice gamma(const Lattice& l) {
  std::vector<IntMatrix> actions;
  for (const auto& a : l.actions()) {
    IntMatrix g = gamma_matrix(a);
    if (!detail::embedding_identity_holds(a, g)) throw InternalError("gamma: symmetric-square identity failed");
    actions.push_back(std::move(g));
  }
  return Lattice(l.group(), GammaIndex{l.rank()}.size(), std::move(actions), Lattice::Validation::Certified);
}

inline LatticeMap gamma_map(const LatticeMap& f, const Lattice& gamma_source, const Lattice& gamma_target) {
  IntMatrix g = gamma_matrix(f.matrix());
  if (!detail::embedding_identity_holds(f.matrix(), g)) throw InternalError("gamma_map: symmetric-square identity failed");
  return LatticeMap(gamma_source, gamma_target, std::move(g));
}

inline LatticeMap gamma_map(const LatticeMap& f) { return gamma_map(f, gamma(f.source()), gamma(f.target())); }

inline LatticeMap embed_symmetric_square(const Lattice& l, const Lattice& gamma_l) {
  return LatticeMap(gamma_l, tensor_lattice(l, l), symmetric_square_matrix(l.rank()));
}

inline LatticeMap embed_symmetric_square(const Lattice& l) { return embed_symmetric_square(l, gamma(l)); }

}  // namespace gammalat
