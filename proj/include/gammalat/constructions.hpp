#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gammalat/fox.hpp"
#include "gammalat/gamma.hpp"
#include "gammalat/lattice.hpp"
#include "gammalat/normal_form.hpp"

namespace gammalat {

// Named modules over an arbitrary finite group G. All bases are in the
// group's element order, skipping the identity where noted.

/// I = ker(ε), basis {g - 1 : g != 1}.
inline Inclusion augmentation_ideal(const GroupPtr& g) {
  const auto n = static_cast<std::size_t>(g->order());
  IntMatrix b(n, n - 1);
  for (std::size_t k = 1; k < n; ++k) {
    b(k, k - 1) = 1;
    b(0, k - 1) = -1;
  }
  return sublattice(free_lattice(g, 1), b);
}

/// (I, 2) = ker(ZG -> Z/2), basis {2} ∪ {g - 1 : g != 1}.
inline Inclusion ideal_i2(const GroupPtr& g) {
  const auto n = static_cast<std::size_t>(g->order());
  IntMatrix b(n, n);
  b(0, 0) = 2;
  for (std::size_t k = 1; k < n; ++k) {
    b(k, k) = 1;
    b(0, k) = -1;
  }
  return sublattice(free_lattice(g, 1), b);
}

/// The ideal (N, 2) with basis {N} ∪ {2g : g != 1}; checked against the
/// Hermite basis of the ideal generated by N and 2.
inline Inclusion norm_two(const GroupPtr& g) {
  const auto n = static_cast<std::size_t>(g->order());
  IntMatrix b(n, n);
  for (std::size_t k = 0; k < n; ++k) b(k, 0) = 1;
  for (std::size_t k = 1; k < n; ++k) b(k, k) = 2;
  IntMatrix gens(n, n + 1);
  for (std::size_t k = 0; k < n; ++k) {
    gens(k, 0) = 1;
    gens(k, k + 1) = 2;
  }
  if (!same_span(b, gens)) throw InternalError("(N,2) basis does not span the ideal");
  return sublattice(free_lattice(g, 1), b);
}

/// ZG/N with basis the images of g != 1 (the identity maps to minus their sum).
inline Projection zpi_mod_norm(const GroupPtr& g) {
  const auto n = static_cast<std::size_t>(g->order());
  IntMatrix p(n - 1, n);
  for (std::size_t k = 1; k < n; ++k) {
    p(k - 1, 0) = -1;
    p(k - 1, k) = 1;
  }
  return lattice_from_projection(free_lattice(g, 1), p);
}

enum class NamedKind { AugmentationIdeal, IdealI2, ZpiModN, NormTwo, TrivialZ, Free };

/// Ranks: |G| - 1, |G|, |G| - 1, |G|, 1, k |G|.
inline Lattice build_named(const GroupPtr& g, NamedKind kind, std::size_t k = 1) {
  switch (kind) {
    case NamedKind::AugmentationIdeal: return augmentation_ideal(g).lattice;
    case NamedKind::IdealI2: return ideal_i2(g).lattice;
    case NamedKind::ZpiModN: return zpi_mod_norm(g).lattice;
    case NamedKind::NormTwo: return norm_two(g).lattice;
    case NamedKind::TrivialZ: return trivial_lattice(g);
    case NamedKind::Free: return free_lattice(g, k);
  }
  throw InvalidParameter("unknown module kind");
}

inline std::string kind_tag(NamedKind kind) {
  switch (kind) {
    case NamedKind::AugmentationIdeal: return "I";
    case NamedKind::IdealI2: return "I2";
    case NamedKind::ZpiModN: return "ZpiN";
    case NamedKind::NormTwo: return "N2";
    case NamedKind::TrivialZ: return "Z";
    case NamedKind::Free: return "Zpi";
  }
  return "?";
}

/// Exactness of 0 -> A -f-> B -g-> C -> 0 as lattice maps.
struct ExactnessReport {
  bool composite_zero = false;
  bool injective = false;
  bool middle_exact = false;  // im f = ker g
  bool surjective = false;
  bool ok() const { return composite_zero && injective && middle_exact && surjective; }
};

inline ExactnessReport check_short_exact(const LatticeMap& f, const LatticeMap& g) {
  ExactnessReport r;
  r.composite_zero = (g.matrix() * f.matrix()).is_zero();
  r.injective = f.is_injective();
  r.middle_exact = r.composite_zero && same_span(f.matrix(), kernel_basis(g.matrix()));
  r.surjective = g.is_surjective();
  return r;
}

/// Right multiplication by a row over ZG as a map ZG -> ZG^k.
inline ZPiMatrix ring_row(const GroupPtr& g, std::vector<RingElement> row) {
  const std::size_t k = row.size();
  return ZPiMatrix(g, 1, k, std::move(row));
}

/// Right multiplication by a column over ZG as a map ZG^k -> ZG.
inline ZPiMatrix ring_column(const GroupPtr& g, std::vector<RingElement> column) {
  const std::size_t k = column.size();
  return ZPiMatrix(g, k, 1, std::move(column));
}

/// n when `g` was built as the dihedral group of order 2n.
inline std::optional<int> dihedral_parameter(const Group& g) {
  const std::string& name = g.name();
  if (name.size() < 2 || name[0] != 'D' || g.num_generators() != 2) return std::nullopt;
  for (std::size_t i = 1; i < name.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(name[i]))) return std::nullopt;
  if (std::stoi(name.substr(1)) != g.order()) return std::nullopt;
  return g.order() / 2;
}

namespace detail {

inline void require_even(int n) {
  if (n < 2 || n % 2 != 0)
    throw InvalidParameter("n must be even and >= 2 (odd n has 4-periodic cohomology and is out of scope), got " +
                           std::to_string(n));
}

struct DihedralRing {
  GroupPtr g;
  RingElement one, x, y, xy, yx, nx, norm;

  explicit DihedralRing(GroupPtr group)
      : g(group),
        one(RingElement::one(g)),
        x(RingElement::element(g, g->generator(0))),
        y(RingElement::element(g, g->generator(1))),
        xy(x * y),
        yx(y * x),
        nx(partial_norm(g, g->generator(0))),
        norm(norm_element(g)) {}
};

// Columns = coordinate vectors of the given rows of ZG^k.
inline IntMatrix coordinate_columns(const std::vector<std::vector<RingElement>>& rows) {
  std::vector<IntVector> cols;
  for (const auto& r : rows) cols.push_back(to_free_coordinates(r));
  return IntMatrix::from_columns(cols.empty() ? 0 : cols[0].size(), cols);
}

}  // namespace detail

/// J = ker(d2) for the dihedral presentation, with
/// i: ZG/N -> J (right multiplication by (x-1, 1-xy, 0)) and
/// j: J -> (I,2) (third coordinate).
struct DihedralSyzygy {
  int n;
  GroupPtr group;
  PresentationComplex complex;
  LatticeMap d2;  // ZG^3 -> ZG^2
  Inclusion kernel;
  Projection zpi_mod_n;
  Inclusion i2;
  LatticeMap i;
  LatticeMap j;

  /// True when the row lies in ker(d2).
  bool in_kernel(const std::vector<RingElement>& row) const {
    IntVector v = to_free_coordinates(row);
    for (const auto& c : d2.matrix().apply(v))
      if (!c.is_zero()) return false;
    return true;
  }

  /// j of an element of ker(d2), returned as an element of ZG.
  RingElement j_value(const std::vector<RingElement>& row) const {
    IntVector v = to_free_coordinates(row);
    IntMatrix col = IntMatrix::from_columns(v.size(), {v});
    auto coords = solve_integer(kernel.inclusion.matrix(), col);
    if (!coords) throw InvalidParameter("element is not in ker(d2)");
    IntVector in_i2 = j.matrix().apply(coords->column(0));
    return RingElement(group, i2.inclusion.matrix().apply(in_i2));
  }

  ExactnessReport exactness() const { return check_short_exact(i, j); }
};

/// The dihedral d2 in the form used throughout: rows (N_x, -(1+y)), (1+xy, x-1), (0, 1+y).
inline ZPiMatrix dihedral_d2(const GroupPtr& g) {
  detail::DihedralRing r(g);
  RingElement zero(g);
  return ZPiMatrix(g, 3, 2, {r.nx, -(r.one + r.y), r.one + r.xy, r.x - r.one, zero, r.y + r.one});
}

inline DihedralSyzygy dihedral_syzygy(int n) {
  detail::require_even(n);
  GroupPtr g = build_dihedral(n);
  detail::DihedralRing r(g);
  PresentationComplex c = presentation_complex(default_presentation(*g), g);
  if (!(c.d2 == dihedral_d2(g))) throw InternalError("Fox matrix differs from the expected dihedral d2");
  LatticeMap d2 = zpi_matrix_to_map(c.d2);
  Inclusion k = kernel_lattice(d2);
  Projection q = zpi_mod_norm(g);
  Inclusion i2 = ideal_i2(g);

  // i on ZG, restricted to the section {g != 1} of ZG -> ZG/N, then into J.
  IntMatrix on_free = zpi_matrix_to_map(ring_row(g, {r.x - r.one, r.one - r.xy, RingElement(g)})).matrix();
  IntMatrix section = on_free.columns(1, on_free.cols() - 1);
  auto i_coords = solve_integer(k.inclusion.matrix(), section);
  if (!i_coords) throw InternalError("image of i is not in ker(d2)");
  LatticeMap i(q.lattice, k.lattice, std::move(*i_coords));

  const auto order = static_cast<std::size_t>(g->order());
  IntMatrix third = k.inclusion.matrix().rows_range(2 * order, order);
  auto j_coords = solve_integer(i2.inclusion.matrix(), third);
  if (!j_coords) throw InternalError("third coordinate of ker(d2) is not in (I,2)");
  LatticeMap j(k.lattice, i2.lattice, std::move(*j_coords));

  return {n, g, std::move(c), std::move(d2), std::move(k), std::move(q), std::move(i2), std::move(i), std::move(j)};
}

/// coker(d^2) for d^2 = rows (N_x, 1+yx, 0), (-(1+y), x-1, 1+y), with
/// i': (N,2) -> coker (2 -> (0,0,1), N -> (N_x,0,0)) and
/// j': coker -> I (v -> v . (x-1, 1-yx, 0)^T).
struct DihedralCosyzygy {
  int n;
  GroupPtr group;
  ZPiMatrix d2_dual;
  LatticeMap d2_dual_map;  // ZG^2 -> ZG^3
  Projection cokernel;
  Inclusion n2;
  Inclusion aug;
  LatticeMap i;
  LatticeMap j;

  /// Class of a row of ZG^3 in coker(d^2), in the cokernel basis.
  IntVector coker_class(const std::vector<RingElement>& row) const {
    return cokernel.projection.matrix().apply(to_free_coordinates(row));
  }

  RingElement j_value(const std::vector<RingElement>& row) const {
    IntVector in_aug = j.matrix().apply(coker_class(row));
    return RingElement(group, aug.inclusion.matrix().apply(in_aug));
  }

  ExactnessReport exactness() const { return check_short_exact(i, j); }
};

inline ZPiMatrix dihedral_d2_dual(const GroupPtr& g) {
  detail::DihedralRing r(g);
  return ZPiMatrix(g, 2, 3, {r.nx, r.one + r.yx, RingElement(g), -(r.one + r.y), r.x - r.one, r.one + r.y});
}

inline DihedralCosyzygy dihedral_cosyzygy(int n) {
  detail::require_even(n);
  GroupPtr g = build_dihedral(n);
  detail::DihedralRing r(g);
  ZPiMatrix dd = dihedral_d2_dual(g);
  LatticeMap dmap = zpi_matrix_to_map(dd);
  Projection coker = cokernel_lattice(dmap);
  Inclusion n2 = norm_two(g);
  Inclusion aug = augmentation_ideal(g);
  const IntMatrix& p = coker.projection.matrix();

  // i' on the basis {N} ∪ {2h : h != 1} of (N,2).
  RingElement zero(g);
  std::vector<std::vector<RingElement>> images{{r.nx, zero, zero}};
  for (int h = 1; h < g->order(); ++h) images.push_back({zero, zero, RingElement::element(g, h)});
  LatticeMap i(n2.lattice, coker.lattice, p * detail::coordinate_columns(images));

  IntMatrix on_free = zpi_matrix_to_map(ring_column(g, {r.x - r.one, r.one - r.yx, zero})).matrix();
  auto in_aug = solve_integer(aug.inclusion.matrix(), on_free);
  if (!in_aug) throw InternalError("j' does not land in I");
  auto induced = solve_integer(p.transpose(), in_aug->transpose());
  if (!induced) throw InternalError("j' does not factor through coker(d^2)");
  LatticeMap j(coker.lattice, aug.lattice, induced->transpose());

  return {n, g, std::move(dd), std::move(dmap), std::move(coker), std::move(n2), std::move(aug), std::move(i), std::move(j)};
}

/// Exactness of 0 -> Z -N-> ZG -(x-1, 1-xy)-> ZG^2 -B-> ZG^2 over the dihedral
/// group of order 2n, B = rows (N_x, -(1+y)), (1+xy, x-1). `mutate` flips the
/// sign of -(1+y) as a negative control.
struct SequenceExactness {
  bool norm_injective = false;
  bool exact_at_zpi = false;
  bool exact_at_zpi2 = false;
  bool exact() const { return norm_injective && exact_at_zpi && exact_at_zpi2; }
};

inline SequenceExactness quaternion_exactness(int n, bool mutate = false) {
  if (n < 2) throw InvalidParameter("n must be >= 2");
  GroupPtr g = build_dihedral(n);
  detail::DihedralRing r(g);
  IntMatrix a(static_cast<std::size_t>(g->order()), 1);
  for (std::size_t k = 0; k < a.rows(); ++k) a(k, 0) = 1;
  IntMatrix b = zpi_matrix_to_map(ring_row(g, {r.x - r.one, r.one - r.xy})).matrix();
  RingElement corner = -(r.one + r.y);
  if (mutate) corner = -corner;
  IntMatrix c = zpi_matrix_to_map(ZPiMatrix(g, 2, 2, {r.nx, corner, r.one + r.xy, r.x - r.one})).matrix();
  SequenceExactness s;
  s.norm_injective = rank(a) == 1;
  s.exact_at_zpi = (b * a).is_zero() && same_span(a, kernel_basis(b));
  s.exact_at_zpi2 = (c * b).is_zero() && same_span(b, kernel_basis(c));
  return s;
}

struct GammaQuotient {
  LatticeMap gamma_inclusion;  // Γ(A) -> Γ(B)
  Projection quotient;         // Γ(B) -> Γ(B)/Γ(A)
};

/// D = Γ(ker d2) / Γ(ZG/N) along Γ(i).
inline GammaQuotient quotient_D(const DihedralSyzygy& s) {
  LatticeMap gi = gamma_map(s.i);
  Projection q = quotient_lattice(gi);
  return {std::move(gi), std::move(q)};
}

inline GammaQuotient quotient_D(int n) { return quotient_D(dihedral_syzygy(n)); }

/// F = Γ((N,2)) / Γ(Z) along 1 -> N.
inline GammaQuotient quotient_F(int n) {
  detail::require_even(n);
  GroupPtr g = build_dihedral(n);
  Inclusion n2 = norm_two(g);
  IntMatrix m(n2.lattice.rank(), 1);
  m(0, 0) = 1;
  LatticeMap gi = gamma_map(LatticeMap(trivial_lattice(g), n2.lattice, std::move(m)));
  Projection q = quotient_lattice(gi);
  return {std::move(gi), std::move(q)};
}

/// ker(d2) of a presentation complex.
inline Inclusion syzygy_lattice(const PresentationComplex& c) { return kernel_lattice(zpi_matrix_to_map(c.d2)); }

/// coker of the dual of d2 (involution-transpose).
inline Projection cosyzygy_lattice(const PresentationComplex& c) {
  return cokernel_lattice(zpi_matrix_to_map(c.d2.dual()));
}

/// ker(d2) of the group's defining presentation.
inline Lattice kerd2(const GroupPtr& g) {
  return syzygy_lattice(presentation_complex(default_presentation(*g), g)).lattice;
}

/// coker(d^2). Dihedral groups use the d^2 matrix above (the dual of d2 with
/// x^-1 replaced by x); other groups use the involution-transpose of d2.
inline Lattice cokerd2(const GroupPtr& g) {
  if (auto n = dihedral_parameter(*g); n && *n % 2 == 0) {
    ZPiMatrix dd = dihedral_d2_dual(g);
    return cokernel_lattice(zpi_matrix_to_map(dd)).lattice;
  }
  return cosyzygy_lattice(presentation_complex(default_presentation(*g), g)).lattice;
}

inline constexpr std::string_view kCounterexamplePresentation =
    "<x, y, z | x^4*y^-2, x*y*x*y^-1, y^2, z^2, x*z*x^-1*z^-1, y*z*y^-1*z^-1>";

struct Counterexample {
  GroupPtr group;
  PresentationComplex complex;
  Inclusion j;       // ker d2
  Projection jstar;  // coker of the dual of d2
};

/// J and J* over D8 x Z/2 for the presentation above.
inline Counterexample counterexample_D8xZ2() {
  GroupPtr g = direct_product(build_dihedral(4), build_cyclic(2));
  PresentationComplex c = presentation_complex(parse_presentation(kCounterexamplePresentation), g);
  Inclusion j = syzygy_lattice(c);
  Projection js = cosyzygy_lattice(c);
  return {g, std::move(c), std::move(j), std::move(js)};
}

}  // namespace gammalat
