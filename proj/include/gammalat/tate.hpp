#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "gammalat/fox.hpp"
#include "gammalat/lattice.hpp"
#include "gammalat/local_snf.hpp"
#include "gammalat/normal_form.hpp"

namespace gammalat {

/// Columns (ρ(s) - 1) e_i for every generator s: the coinvariants are its cokernel.
inline IntMatrix coinvariant_relations(const Lattice& l) {
  const std::size_t r = l.rank();
  IntMatrix rel(r, r * l.actions().size());
  for (std::size_t s = 0; s < l.actions().size(); ++s) {
    const IntMatrix& a = l.actions()[s];
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t c = 0; c < r; ++c) {
        rel(i, s * r + c) = a(i, c);
        if (i == c) rel(i, s * r + c) -= 1;
      }
  }
  return rel;
}

/// Z (x)_ZG L, computed exactly.
inline AbGroup coinvariants(const Lattice& l) { return cokernel(coinvariant_relations(l)); }

/// Sum of ρ(g) over the group.
inline IntMatrix norm_matrix(const Lattice& l) {
  IntMatrix n(l.rank(), l.rank());
  for (const auto& a : l.all_element_actions()) n += a;
  return n;
}

/// Basis (columns) of the fixed sublattice L^G.
inline IntMatrix fixed_point_basis(const Lattice& l) {
  IntMatrix stacked(0, l.rank());
  for (const auto& a : l.actions()) stacked = vstack(stacked, a - IntMatrix::identity(l.rank()));
  return kernel_basis(stacked);
}

struct NormMapData {
  IntMatrix fixed_basis;  // columns span L^G
  IntMatrix relations;    // coinvariants = coker(relations)
  IntMatrix norm;         // Σ ρ(g) on L
};

inline NormMapData norm_map_data(const Lattice& l) {
  return {fixed_point_basis(l), coinvariant_relations(l), norm_matrix(l)};
}

/// Ĥ0 through the norm: ker(N: L_G -> L^G) = ker(Σρ(g)) / im(relations).
inline AbGroup tate_h0_norm_route(const Lattice& l) {
  IntMatrix kn = kernel_basis(norm_matrix(l));
  IntMatrix rel = coinvariant_relations(l);
  if (kn.cols() == 0) return AbGroup::trivial();
  auto x = solve_integer(kn, rel);
  if (!x) throw InternalError("norm route: relations do not lie in the kernel of the norm");
  AbGroup g = cokernel(*x);
  if (g.free_rank != 0) throw InternalError("norm route: kernel of the norm on coinvariants is not finite: " + g.str());
  return g;
}

struct TateOptions {
  bool check_norm_route = false;
};

/// Ĥ0(G; L) = Tors(Z (x)_ZG L). |G| annihilates it, so the coinvariant
/// cokernel is computed prime by prime over Z/p^(v_p|G|+1).
inline AbGroup tate_h0(const Lattice& l, TateOptions opts = {}) {
  const std::size_t r = l.rank();
  const auto& actions = l.actions();
  AbGroup full = cokernel_with_exponent(r, static_cast<uint64_t>(l.group()->order()), [&](uint32_t, uint32_t q) {
    ResidueMatrix m(r * actions.size(), r, q);
    for (std::size_t s = 0; s < actions.size(); ++s)
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t c = 0; c < r; ++c) {
          const Integer& v = actions[s](i, c);
          uint32_t x = v.is_zero() ? 0 : static_cast<uint32_t>(v.mod_u64(q));
          if (i == c) x = (x + q - 1) % q;
          m(s * r + c, i) = x;
        }
    return m;
  });
  AbGroup h0 = full.torsion();
  if (opts.check_norm_route) {
    AbGroup other = tate_h0_norm_route(l);
    if (!(other == h0))
      throw InternalError("Ĥ0 routes disagree: coinvariant torsion " + h0.str() + ", norm kernel " + other.str());
  }
  return h0;
}

/// Ĥ-1(G; L) = L^G / N L.
inline AbGroup tate_h_minus1(const Lattice& l) {
  IntMatrix f = fixed_point_basis(l);
  if (f.cols() == 0) return AbGroup::trivial();
  auto x = solve_integer(f, norm_matrix(l));
  if (!x) throw InternalError("norm image is not fixed");
  return cokernel(*x);
}

namespace detail {

// Block matrix of a Z[G]-matrix acting on C (x)_ZG L: block (j, i) is ρ(bar(a_ij)).
inline IntMatrix tensored_differential(const ZPiMatrix& a, const Lattice& l) {
  const std::size_t r = l.rank();
  auto all = l.all_element_actions();
  const Group& g = *l.group();
  IntMatrix m(a.cols() * r, a.rows() * r);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (int h = 0; h < g.order(); ++h) {
        const Integer& c = a(i, j).coeff(h);
        if (c.is_zero()) continue;
        const IntMatrix& rho = all[static_cast<std::size_t>(g.inv(h))];
        for (std::size_t u = 0; u < r; ++u)
          for (std::size_t v = 0; v < r; ++v)
            if (!rho(u, v).is_zero()) m(j * r + u, i * r + v).addmul(c, rho(u, v));
      }
  return m;
}

}  // namespace detail

/// Ĥ1(G; L) = H1(C2 (x) L -> C1 (x) L -> C0 (x) L) for a presentation complex C.
inline AbGroup tate_h1(const Lattice& l, const PresentationComplex& c) {
  if (c.group != l.group()) throw GroupMismatch();
  IntMatrix d2 = detail::tensored_differential(c.d2, l);
  IntMatrix d1 = detail::tensored_differential(c.d1, l);
  if (!(d1 * d2).is_zero()) throw InvalidPresentation("tensored complex is not a complex");
  IntMatrix k = kernel_basis(d1);
  if (k.cols() == 0) return AbGroup::trivial();
  auto x = solve_integer(k, d2);
  if (!x) throw InternalError("image of d2 not inside kernel of d1");
  return cokernel(*x);
}

}  // namespace gammalat
