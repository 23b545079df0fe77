#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gammalat/int_matrix.hpp"

namespace gammalat {

/// Finitely generated abelian group Z^free_rank + Z/d1 + ... + Z/dk with
/// d1 | d2 | ... | dk and every di >= 2.
struct AbGroup {
  std::size_t free_rank = 0;
  std::vector<Integer> factors;

  static AbGroup trivial() { return {}; }
  static AbGroup free(std::size_t rank) { return {rank, {}}; }
  static AbGroup cyclic(const Integer& order) { return from_orders(0, {order}); }
  /// (Z/p)^k
  static AbGroup elementary(const Integer& p, std::size_t k) {
    return from_orders(0, std::vector<Integer>(k, p));
  }

  /// Canonical form of Z^free_rank + sum Z/orders[i]; orders need not form a
  /// divisibility chain and may contain units.
  static AbGroup from_orders(std::size_t free_rank, std::vector<Integer> orders) {
    for (auto& d : orders) {
      d = abs(d);
      if (d.is_zero()) throw InvalidParameter("torsion order 0; count it in free_rank");
    }
    for (std::size_t i = 0; i < orders.size(); ++i)
      for (std::size_t j = i + 1; j < orders.size(); ++j) {
        Integer g = gcd(orders[i], orders[j]);
        if (g == orders[i]) continue;
        Integer l = divexact(orders[i], g) * orders[j];
        orders[i] = std::move(g);
        orders[j] = std::move(l);
      }
    AbGroup a;
    a.free_rank = free_rank;
    for (auto& d : orders)
      if (!d.is_one()) a.factors.push_back(std::move(d));
    return a;
  }

  bool is_trivial() const { return free_rank == 0 && factors.empty(); }
  bool is_finite() const { return free_rank == 0; }
  AbGroup torsion() const { return {0, factors}; }

  Integer torsion_order() const {
    Integer n = 1;
    for (const auto& d : factors) n *= d;
    return n;
  }

  /// e.g. "Z^2 + Z/2 + Z/4"; the trivial group renders as "0".
  std::string str() const {
    std::string s;
    auto add = [&s](const std::string& term) { s += (s.empty() ? "" : " + ") + term; };
    if (free_rank == 1) add("Z");
    if (free_rank > 1) add("Z^" + std::to_string(free_rank));
    for (const auto& d : factors) add("Z/" + d.str());
    return s.empty() ? "0" : s;
  }

  friend bool operator==(const AbGroup&, const AbGroup&) = default;
};

namespace detail {

struct Echelon {
  IntMatrix form;       // row echelon form of the input
  IntMatrix transform;  // unimodular E with E * input = form (empty if untracked)
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

inline void row_submul(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& q,
                       std::size_t from) {
  auto d = m.row(dst);
  auto s = m.row(src);
  for (std::size_t k = from; k < s.size(); ++k)
    if (!s[k].is_zero()) d[k].submul(q, s[k]);
}

inline void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  auto ra = m.row(a);
  auto rb = m.row(b);
  for (std::size_t k = 0; k < ra.size(); ++k) std::swap(ra[k], rb[k]);
}

inline void negate_row(IntMatrix& m, std::size_t r) {
  for (auto& v : m.row(r)) v = -v;
}

/// Unimodular row reduction to canonical (Hermite) row echelon form: pivots
/// positive, entries above each pivot reduced into [0, pivot).
inline Echelon row_echelon(IntMatrix t, bool track) {
  const std::size_t m = t.rows(), n = t.cols();
  Echelon out;
  if (track) out.transform = IntMatrix::identity(m);
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    bool found = false;
    while (true) {
      std::size_t best = m;
      Integer best_abs;
      for (std::size_t i = r; i < m; ++i) {
        if (t(i, c).is_zero()) continue;
        Integer a = abs(t(i, c));
        if (best == m || a < best_abs) {
          best = i;
          best_abs = std::move(a);
          if (best_abs.is_one()) break;
        }
      }
      if (best == m) break;
      found = true;
      swap_rows(t, r, best);
      if (track) swap_rows(out.transform, r, best);
      bool cleared = true;
      for (std::size_t i = r + 1; i < m; ++i) {
        if (t(i, c).is_zero()) continue;
        Integer q = round_div(t(i, c), t(r, c));
        row_submul(t, i, r, q, c);
        if (track) row_submul(out.transform, i, r, q, 0);
        if (!t(i, c).is_zero()) cleared = false;
      }
      if (cleared) break;
    }
    if (!found) continue;
    if (t(r, c).sign() < 0) {
      negate_row(t, r);
      if (track) negate_row(out.transform, r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      if (t(i, c).is_zero()) continue;
      Integer q = floor_div(t(i, c), t(r, c));
      if (q.is_zero()) continue;
      row_submul(t, i, r, q, c);
      if (track) row_submul(out.transform, i, r, q, 0);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.form = std::move(t);
  return out;
}

}  // namespace detail

struct HermiteResult {
  IntMatrix h;  // column Hermite normal form, h = m * u
  IntMatrix u;  // unimodular
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_rows;  // pivot row of column j, j < rank
};

/// Column-style Hermite normal form: the first `rank` columns of H are in
/// column echelon form with positive pivots, entries to the left of each
/// pivot reduced into [0, pivot), and the remaining columns zero.
inline HermiteResult hnf(const IntMatrix& m) {
  auto e = detail::row_echelon(m.transpose(), true);
  HermiteResult r;
  r.rank = e.pivots.size();
  r.pivot_rows = std::move(e.pivots);
  r.h = e.form.transpose();
  r.u = e.transform.transpose();
  return r;
}

/// Canonical Z-basis (as columns) of the lattice spanned by m's columns.
inline IntMatrix image_basis(const IntMatrix& m) {
  auto e = detail::row_echelon(m.transpose(), false);
  return e.form.rows_range(0, e.pivots.size()).transpose();
}

inline std::size_t rank(const IntMatrix& m) {
  return detail::row_echelon(m.transpose(), false).pivots.size();
}

/// Canonical Z-basis (as columns) of {v : m v = 0}.
inline IntMatrix kernel_basis(const IntMatrix& m) {
  auto e = detail::row_echelon(m.transpose(), true);
  const std::size_t k = e.pivots.size();
  IntMatrix kernel = e.transform.rows_range(k, m.cols() - k).transpose();
  return image_basis(kernel);
}

/// Integral X with a X = b, or nullopt if none exists.
inline std::optional<IntMatrix> solve_integer(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows())
    throw DimensionMismatch("solve_integer: " + a.shape() + " vs rhs " + b.shape());
  auto e = detail::row_echelon(a.transpose(), true);
  const IntMatrix& ht = e.form;  // H^T, H = A U
  const std::size_t k = e.pivots.size();
  IntMatrix y(a.cols(), b.cols());
  for (std::size_t col = 0; col < b.cols(); ++col) {
    for (std::size_t j = 0; j < k; ++j) {
      const std::size_t p = e.pivots[j];
      Integer v = b(p, col);
      for (std::size_t l = 0; l < j; ++l)
        if (!ht(l, p).is_zero()) v.submul(ht(l, p), y(l, col));
      if (!divides(ht(j, p), v)) return std::nullopt;
      y(j, col) = divexact(v, ht(j, p));
    }
    // Non-pivot rows must already agree.
    for (std::size_t i = 0; i < a.rows(); ++i) {
      Integer v;
      for (std::size_t l = 0; l < k; ++l)
        if (!ht(l, i).is_zero()) v.addmul(ht(l, i), y(l, col));
      if (v != b(i, col)) return std::nullopt;
    }
  }
  // X = U Y with U = E^T.
  return e.transform.transpose() * y;
}

/// Canonical basis of the saturation (Q-span intersected with Z^n) of the
/// column span of b.
inline IntMatrix saturate(const IntMatrix& b) {
  IntMatrix w = kernel_basis(b.transpose());
  return kernel_basis(w.transpose());
}

inline bool same_span(const IntMatrix& a, const IntMatrix& b) {
  return a.rows() == b.rows() && image_basis(a) == image_basis(b);
}

struct SmithResult {
  AbGroup cokernel;                       // Z^rows / (column span)
  std::vector<Integer> invariant_factors;  // nonzero diagonal entries, units included
  std::size_t rank = 0;
};

/// Smith normal form invariants by alternating row and column Hermite
/// reductions until the matrix is a partial permutation, then the
/// divisibility fix-up.
inline SmithResult snf(const IntMatrix& m) {
  IntMatrix t = m;
  std::vector<Integer> diag;
  while (true) {
    auto e = detail::row_echelon(std::move(t), false);
    const std::size_t k = e.pivots.size();
    t = e.form.rows_range(0, k);
    bool monomial = true;
    for (std::size_t i = 0; i < k && monomial; ++i)
      for (std::size_t j = 0; j < t.cols(); ++j)
        if (j != e.pivots[i] && !t(i, j).is_zero()) {
          monomial = false;
          break;
        }
    if (monomial) {
      for (std::size_t i = 0; i < k; ++i) diag.push_back(t(i, e.pivots[i]));
      break;
    }
    t = t.transpose();
  }
  SmithResult r;
  r.rank = diag.size();
  AbGroup chain = AbGroup::from_orders(0, diag);
  r.invariant_factors.assign(r.rank - chain.factors.size(), Integer(1));
  for (const auto& d : chain.factors) r.invariant_factors.push_back(d);
  r.cokernel = AbGroup{m.rows() - r.rank, chain.factors};
  return r;
}

inline AbGroup cokernel(const IntMatrix& m) { return snf(m).cokernel; }

}  // namespace gammalat
