#pragma once

#include <cstddef>
#include <deque>
#include <istream>
#include <memory>
#include <optional>
#include <ostream>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gammalat/fox.hpp"
#include "gammalat/normal_form.hpp"

namespace gammalat {

/// A quotient would have torsion, so it is not a lattice.
class TorsionObstruction : public Error {
 public:
  TorsionObstruction(const std::string& what, AbGroup torsion)
      : Error(what + ": torsion " + torsion.str()), torsion_(std::move(torsion)) {}
  const AbGroup& torsion() const noexcept { return torsion_; }

 private:
  AbGroup torsion_;
};

namespace detail {

// Breadth-first spanning tree of left multiplication by generators:
// element e = generator[gen[e]] * parent[e].
struct LeftTree {
  std::vector<int> order;
  std::vector<int> parent;
  std::vector<int> gen;
};

inline LeftTree left_tree(const Group& g) {
  const auto n = static_cast<std::size_t>(g.order());
  LeftTree t{{0}, std::vector<int>(n, -1), std::vector<int>(n, -1)};
  std::vector<bool> seen(n, false);
  seen[0] = true;
  for (std::size_t k = 0; k < t.order.size(); ++k) {
    int h = t.order[k];
    for (int i = 0; i < g.num_generators(); ++i) {
      int e = g.mul(g.generator(i), h);
      if (seen[static_cast<std::size_t>(e)]) continue;
      seen[static_cast<std::size_t>(e)] = true;
      t.parent[static_cast<std::size_t>(e)] = h;
      t.gen[static_cast<std::size_t>(e)] = i;
      t.order.push_back(e);
    }
  }
  return t;
}

}  // namespace detail

/// A Z[G]-lattice: Z^rank with one integer action matrix per group generator.
/// Immutable; copies share the underlying data.
class Lattice {
 public:
  enum class Validation {
    Full,       // check the representation property
    Certified,  // caller verified an exact identity that implies it
  };

  /// Ranks up to this size are validated on the full basis; larger ones on
  /// seeded random vectors.
  static constexpr std::size_t kFullValidationRank = 96;

  Lattice(GroupPtr g, std::size_t rank, std::vector<IntMatrix> actions, Validation v = Validation::Full)
      : d_(std::make_shared<const Data>(Data{std::move(g), rank, std::move(actions)})) {
    if (static_cast<int>(d_->actions.size()) != d_->group->num_generators())
      throw InvalidLattice("need one action matrix per generator");
    for (const auto& a : d_->actions)
      if (a.rows() != rank || a.cols() != rank) throw InvalidLattice("action matrix has wrong shape " + a.shape());
    if (v == Validation::Full) validate();
  }

  const GroupPtr& group() const noexcept { return d_->group; }
  std::size_t rank() const noexcept { return d_->rank; }
  const IntMatrix& action(int generator) const { return d_->actions.at(static_cast<std::size_t>(generator)); }
  const std::vector<IntMatrix>& actions() const noexcept { return d_->actions; }

  IntVector act(int element, std::span<const Integer> v) const {
    const auto& t = tree();
    std::vector<int> path;
    for (int e = element; e != 0; e = t.parent[static_cast<std::size_t>(e)])
      path.push_back(t.gen[static_cast<std::size_t>(e)]);
    IntVector out(v.begin(), v.end());
    for (auto it = path.rbegin(); it != path.rend(); ++it) out = action(*it).apply(out);
    return out;
  }

  IntMatrix element_action(int element) const {
    const auto& t = tree();
    IntMatrix m = IntMatrix::identity(rank());
    for (int e = element; e != 0; e = t.parent[static_cast<std::size_t>(e)]) m = m * action(t.gen[static_cast<std::size_t>(e)]);
    return m;
  }

  /// Action matrices of every group element, indexed by element.
  std::vector<IntMatrix> all_element_actions() const {
    const auto& t = tree();
    std::vector<IntMatrix> out(static_cast<std::size_t>(group()->order()));
    out[0] = IntMatrix::identity(rank());
    for (std::size_t k = 1; k < t.order.size(); ++k) {
      int e = t.order[k];
      out[static_cast<std::size_t>(e)] =
          action(t.gen[static_cast<std::size_t>(e)]) * out[static_cast<std::size_t>(t.parent[static_cast<std::size_t>(e)])];
    }
    return out;
  }

  /// Matrix of multiplication by a group ring element.
  IntMatrix ring_action(const RingElement& r) const {
    if (r.group() != group()) throw GroupMismatch();
    auto all = all_element_actions();
    IntMatrix m(rank(), rank());
    for (int g = 0; g < group()->order(); ++g)
      if (!r.coeff(g).is_zero()) m += r.coeff(g) * all[static_cast<std::size_t>(g)];
    return m;
  }

  /// Checks rho(s) rho(h) = rho(s h) for every generator s and element h on
  /// test vectors, which makes the generator matrices a representation.
  void validate() const {
    const Group& g = *group();
    const auto& t = tree();
    IntMatrix probe;
    if (rank() <= kFullValidationRank) {
      probe = IntMatrix::identity(rank());
    } else {
      std::mt19937_64 rng(0x9e3779b97f4a7c15ULL ^ rank());
      std::uniform_int_distribution<int> dist(-3, 3);
      probe = IntMatrix(rank(), 1);
      for (std::size_t i = 0; i < rank(); ++i) probe(i, 0) = dist(rng);
    }
    std::vector<IntMatrix> images(static_cast<std::size_t>(g.order()));
    images[0] = probe;
    for (std::size_t k = 1; k < t.order.size(); ++k) {
      int e = t.order[k];
      images[static_cast<std::size_t>(e)] =
          action(t.gen[static_cast<std::size_t>(e)]) * images[static_cast<std::size_t>(t.parent[static_cast<std::size_t>(e)])];
    }
    for (int s = 0; s < g.num_generators(); ++s)
      for (int h = 0; h < g.order(); ++h)
        if (action(s) * images[static_cast<std::size_t>(h)] != images[static_cast<std::size_t>(g.mul(g.generator(s), h))])
          throw InvalidLattice("action matrices do not define a representation of " + g.name() + " (generator " +
                               g.generator_names()[static_cast<std::size_t>(s)] + ", element " + g.element_name(h) +
                               ")");
  }

  /// Same underlying data (not a module isomorphism test).
  friend bool operator==(const Lattice& a, const Lattice& b) {
    return a.d_ == b.d_ || (a.group() == b.group() && a.rank() == b.rank() && a.actions() == b.actions());
  }

 private:
  struct Data {
    GroupPtr group;
    std::size_t rank;
    std::vector<IntMatrix> actions;
  };

  const detail::LeftTree& tree() const {
    if (!d_tree_) d_tree_ = std::make_shared<const detail::LeftTree>(detail::left_tree(*group()));
    return *d_tree_;
  }

  std::shared_ptr<const Data> d_;
  mutable std::shared_ptr<const detail::LeftTree> d_tree_;
};

/// Equivariant integer matrix (target.rank x source.rank).
class LatticeMap {
 public:
  LatticeMap(Lattice source, Lattice target, IntMatrix matrix)
      : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
    if (source_.group() != target_.group()) throw GroupMismatch();
    if (matrix_.rows() != target_.rank() || matrix_.cols() != source_.rank())
      throw DimensionMismatch("lattice map matrix " + matrix_.shape() + " does not match ranks " +
                              std::to_string(target_.rank()) + "x" + std::to_string(source_.rank()));
    for (int s = 0; s < source_.group()->num_generators(); ++s)
      if (target_.action(s) * matrix_ != matrix_ * source_.action(s))
        throw InvalidLattice("map is not equivariant for generator " +
                             source_.group()->generator_names()[static_cast<std::size_t>(s)]);
  }

  const Lattice& source() const noexcept { return source_; }
  const Lattice& target() const noexcept { return target_; }
  const IntMatrix& matrix() const noexcept { return matrix_; }

  IntVector operator()(std::span<const Integer> v) const { return matrix_.apply(v); }

  bool is_injective() const { return rank(matrix_) == source_.rank(); }
  bool is_surjective() const { return cokernel(matrix_).is_trivial(); }

 private:
  Lattice source_;
  Lattice target_;
  IntMatrix matrix_;
};

/// `second` after `first`.
inline LatticeMap compose(const LatticeMap& second, const LatticeMap& first) {
  if (!(second.source() == first.target())) throw InvalidParameter("compose: target/source mismatch");
  return LatticeMap(first.source(), second.target(), second.matrix() * first.matrix());
}

inline LatticeMap identity_map(const Lattice& l) { return LatticeMap(l, l, IntMatrix::identity(l.rank())); }

inline Lattice trivial_lattice(const GroupPtr& g, std::size_t rank = 1) {
  return Lattice(g, rank, std::vector<IntMatrix>(static_cast<std::size_t>(g->num_generators()), IntMatrix::identity(rank)),
                 Lattice::Validation::Certified);
}

/// Z[G]^k with basis e_(i,g) at index i |G| + g; generators act by permutation.
inline Lattice free_lattice(const GroupPtr& g, std::size_t k) {
  const auto n = static_cast<std::size_t>(g->order());
  std::vector<IntMatrix> actions;
  for (int s : g->generators()) {
    IntMatrix m(k * n, k * n);
    for (std::size_t i = 0; i < k; ++i)
      for (int h = 0; h < g->order(); ++h) m(i * n + static_cast<std::size_t>(g->mul(s, h)), i * n + static_cast<std::size_t>(h)) = 1;
    actions.push_back(std::move(m));
  }
  return Lattice(g, k * n, std::move(actions), Lattice::Validation::Certified);
}

/// Coordinates of a row vector over Z[G] in free_lattice(G, k).
inline IntVector to_free_coordinates(const std::vector<RingElement>& row) {
  IntVector v;
  for (const auto& r : row) v.insert(v.end(), r.coeffs().begin(), r.coeffs().end());
  return v;
}

inline std::vector<RingElement> from_free_coordinates(const GroupPtr& g, std::span<const Integer> v) {
  const auto n = static_cast<std::size_t>(g->order());
  if (v.size() % n != 0) throw DimensionMismatch("coordinate vector length is not a multiple of |G|");
  std::vector<RingElement> row;
  for (std::size_t i = 0; i < v.size() / n; ++i)
    row.emplace_back(g, IntVector(v.begin() + static_cast<std::ptrdiff_t>(i * n), v.begin() + static_cast<std::ptrdiff_t>((i + 1) * n)));
  return row;
}

/// Right multiplication v -> v * A from Z[G]^rows to Z[G]^cols.
inline LatticeMap zpi_matrix_to_map(const ZPiMatrix& a) {
  const GroupPtr& g = a.group();
  const auto n = static_cast<std::size_t>(g->order());
  IntMatrix m(a.cols() * n, a.rows() * n);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const RingElement& e = a(i, j);
      for (int h = 0; h < g->order(); ++h) {
        const Integer& c = e.coeff(h);
        if (c.is_zero()) continue;
        for (int x = 0; x < g->order(); ++x)
          m(j * n + static_cast<std::size_t>(g->mul(x, h)), i * n + static_cast<std::size_t>(x)) += c;
      }
    }
  return LatticeMap(free_lattice(g, a.rows()), free_lattice(g, a.cols()), std::move(m));
}

struct Inclusion {
  Lattice lattice;
  LatticeMap inclusion;
};

struct Projection {
  Lattice lattice;
  LatticeMap projection;
};

/// Sublattice of `ambient` spanned by the (linearly independent) columns of
/// `basis`, which must be invariant under the action.
inline Inclusion sublattice(const Lattice& ambient, const IntMatrix& basis) {
  if (basis.rows() != ambient.rank()) throw DimensionMismatch("sublattice basis has wrong length");
  if (rank(basis) != basis.cols()) throw InvalidParameter("sublattice basis is not linearly independent");
  std::vector<IntMatrix> actions;
  for (const auto& a : ambient.actions()) {
    auto x = solve_integer(basis, a * basis);
    if (!x) throw InternalError("sublattice is not invariant: action does not restrict integrally");
    actions.push_back(std::move(*x));
  }
  // basis * rho_S(s) = rho(s) * basis with basis injective.
  Lattice s(ambient.group(), basis.cols(), std::move(actions), Lattice::Validation::Certified);
  return {s, LatticeMap(s, ambient, basis)};
}

/// Quotient through a surjection p: Z^rank -> Z^q whose kernel is invariant.
inline Projection lattice_from_projection(const Lattice& l, const IntMatrix& p) {
  if (p.cols() != l.rank()) throw DimensionMismatch("projection has wrong width");
  if (image_basis(p) != IntMatrix::identity(p.rows())) throw InvalidParameter("projection is not surjective");
  std::vector<IntMatrix> actions;
  IntMatrix pt = p.transpose();
  for (const auto& a : l.actions()) {
    auto x = solve_integer(pt, (p * a).transpose());
    if (!x) throw InternalError("kernel of projection is not invariant");
    actions.push_back(x->transpose());
  }
  // rho_Q(s) p = p rho(s) with p surjective.
  Lattice q(l.group(), p.rows(), std::move(actions), Lattice::Validation::Certified);
  return {q, LatticeMap(l, q, p)};
}

inline Inclusion kernel_lattice(const LatticeMap& f) { return sublattice(f.source(), kernel_basis(f.matrix())); }

/// Image of f with its canonical basis, included into f's target.
inline Inclusion image_sublattice(const LatticeMap& f) { return sublattice(f.target(), image_basis(f.matrix())); }

/// Quotient of f's target by the image of f; rejects torsion.
inline Projection cokernel_lattice(const LatticeMap& f) {
  AbGroup coker = cokernel(f.matrix());
  if (!coker.torsion().is_trivial()) throw TorsionObstruction("cokernel is not a lattice", coker.torsion());
  IntMatrix p = kernel_basis(f.matrix().transpose()).transpose();
  return lattice_from_projection(f.target(), p);
}

/// Quotient of incl's target by incl's image.
inline Projection quotient_lattice(const LatticeMap& incl) {
  if (!incl.is_injective()) throw InvalidParameter("quotient_lattice expects an injective map");
  return cokernel_lattice(incl);
}

/// Hom_Z(L, Z) with (g phi)(x) = phi(g^-1 x): g acts by the transpose of rho(g^-1).
inline Lattice dual_lattice(const Lattice& l) {
  std::vector<IntMatrix> actions;
  for (const auto& a : l.actions()) {
    auto inv = solve_integer(a, IntMatrix::identity(l.rank()));
    if (!inv) throw InvalidLattice("action matrix is not invertible over Z");
    actions.push_back(inv->transpose());
  }
  return Lattice(l.group(), l.rank(), std::move(actions), Lattice::Validation::Certified);
}

/// f*: target* -> source*.
inline LatticeMap dual_map(const LatticeMap& f, const Lattice& source_dual, const Lattice& target_dual) {
  return LatticeMap(target_dual, source_dual, f.matrix().transpose());
}

inline LatticeMap dual_map(const LatticeMap& f) {
  return dual_map(f, dual_lattice(f.source()), dual_lattice(f.target()));
}

/// Diagonal action on A (x) B; basis a_i (x) b_j at index i rank(B) + j.
inline Lattice tensor_lattice(const Lattice& a, const Lattice& b) {
  if (a.group() != b.group()) throw GroupMismatch();
  std::vector<IntMatrix> actions;
  for (int s = 0; s < a.group()->num_generators(); ++s) actions.push_back(kronecker(a.action(s), b.action(s)));
  return Lattice(a.group(), a.rank() * b.rank(), std::move(actions), Lattice::Validation::Certified);
}

inline Lattice direct_sum(const Lattice& a, const Lattice& b) {
  if (a.group() != b.group()) throw GroupMismatch();
  std::vector<IntMatrix> actions;
  for (int s = 0; s < a.group()->num_generators(); ++s) actions.push_back(block_diagonal(a.action(s), b.action(s)));
  return Lattice(a.group(), a.rank() + b.rank(), std::move(actions), Lattice::Validation::Certified);
}

inline LatticeMap tensor_map(const LatticeMap& f, const LatticeMap& g) {
  return LatticeMap(tensor_lattice(f.source(), g.source()), tensor_lattice(f.target(), g.target()),
                    kronecker(f.matrix(), g.matrix()));
}

/// Restriction of scalars along a subgroup embedding.
inline Lattice restrict(const Lattice& l, const SubgroupEmbedding& e) {
  if (e.ambient != l.group()) throw GroupMismatch("embedding ambient group differs from the lattice's group");
  std::vector<IntMatrix> actions;
  for (int s : e.subgroup->generators()) actions.push_back(l.element_action(e.image[static_cast<std::size_t>(s)]));
  return Lattice(e.subgroup, l.rank(), std::move(actions), Lattice::Validation::Certified);
}

// Serialization: "lattice <group> <rank> <generators>", an optional
// "kind <tag>" line, then "action <name>" and a matrix dump per generator.

inline void write_lattice(std::ostream& os, const Lattice& l, const std::string& kind = {}) {
  const Group& g = *l.group();
  os << "lattice " << g.name() << ' ' << l.rank() << ' ' << g.num_generators() << '\n';
  if (!kind.empty()) os << "kind " << kind << '\n';
  for (int s = 0; s < g.num_generators(); ++s) {
    os << "action " << g.generator_names()[static_cast<std::size_t>(s)] << '\n';
    write_matrix(os, l.action(s));
  }
}

struct SerializedLattice {
  Lattice lattice;
  std::string kind;
};

inline SerializedLattice read_lattice(std::istream& is) {
  std::string word, group_name;
  std::size_t rank = 0;
  int gens = 0;
  if (!(is >> word) || word != "lattice") throw Error("lattice dump: expected 'lattice' header");
  if (!(is >> group_name >> rank >> gens)) throw Error("lattice dump: malformed header");
  GroupPtr g = parse_group_spec(group_name);
  if (gens != g->num_generators()) throw Error("lattice dump: generator count does not match group " + group_name);
  std::string kind;
  if (!(is >> word)) throw Error("lattice dump: truncated");
  if (word == "kind") {
    if (!(is >> kind >> word)) throw Error("lattice dump: truncated after kind");
  }
  std::vector<IntMatrix> actions;
  for (int s = 0; s < gens; ++s) {
    if (s > 0 && !(is >> word)) throw Error("lattice dump: truncated");
    std::string name;
    if (word != "action" || !(is >> name)) throw Error("lattice dump: expected 'action <generator>'");
    if (name != g->generator_names()[static_cast<std::size_t>(s)])
      throw Error("lattice dump: expected action for generator " + g->generator_names()[static_cast<std::size_t>(s)]);
    actions.push_back(read_matrix(is));
  }
  return {Lattice(g, rank, std::move(actions)), kind};
}

}  // namespace gammalat
