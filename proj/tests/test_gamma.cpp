#include <gtest/gtest.h>

#include "support.hpp"

using namespace testsupport;

TEST(Gamma, IndexLayout) {
  GammaIndex idx{4};
  EXPECT_EQ(idx.size(), 10u);
  std::size_t k = 0;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i; j < 4; ++j) {
      EXPECT_EQ(idx(i, j), k);
      EXPECT_EQ(idx.pair(k), std::make_pair(i, j));
      ++k;
    }
}

// Γ(M) by the divided-power rules: γ2(Σ a_k e_k) = Σ a_k^2 γ2(e_k) + Σ_{k<l} a_k a_l e_k e_l
// and e_k e_k = 2 γ2(e_k).
IntMatrix gamma_oracle(const IntMatrix& m) {
  const std::size_t r = m.rows(), c = m.cols();
  GammaIndex src{c}, dst{r};
  IntMatrix out(dst.size(), src.size());
  for (std::size_t i = 0; i < c; ++i)
    for (std::size_t j = i; j < c; ++j)
      for (std::size_t k = 0; k < r; ++k)
        for (std::size_t l = 0; l < r; ++l) {
          Integer v = m(k, i) * m(l, j);
          if (i == j) {
            if (k <= l) out(dst(k, l), src(i, j)) += v;
          } else if (k == l) {
            out(dst(k, k), src(i, j)) += Integer(2) * v;
          } else {
            out(dst(std::min(k, l), std::max(k, l)), src(i, j)) += v;
          }
        }
  return out;
}

TEST(Gamma, MatrixMatchesExpansion) {
  Rng rng(11);
  for (int t = 0; t < 200; ++t) {
    std::size_t r = static_cast<std::size_t>(uniform(rng, 1, 5)), c = static_cast<std::size_t>(uniform(rng, 1, 5));
    IntMatrix m = random_matrix(rng, r, c, -3, 3);
    EXPECT_EQ(gamma_matrix(m), gamma_oracle(m));
  }
}

TEST(Gamma, Functorial) {
  Rng rng(12);
  for (int t = 0; t < 100; ++t) {
    IntMatrix a = random_matrix(rng, 3, 4, -3, 3), b = random_matrix(rng, 2, 3, -3, 3);
    EXPECT_EQ(gamma_matrix(b * a), gamma_matrix(b) * gamma_matrix(a));
  }
  EXPECT_EQ(gamma_matrix(IntMatrix::identity(5)), IntMatrix::identity(15));
}

TEST(Gamma, SwapIdentityOnRankTwo) {
  // swap of coordinates: e0^2 <-> e1^2, e0 e1 fixed
  IntMatrix s(2, 2);
  s(0, 1) = 1;
  s(1, 0) = 1;
  IntMatrix g = gamma_matrix(s);
  IntMatrix want(3, 3);
  want(2, 0) = 1;
  want(1, 1) = 1;
  want(0, 2) = 1;
  EXPECT_EQ(g, want);
}

TEST(Gamma, TrivialRankOne) {
  for (const auto& g : small_groups()) EXPECT_EQ(gamma(trivial_lattice(g)), trivial_lattice(g));
}

TEST(Gamma, LatticeMapAndEmbedding) {
  GroupPtr g = build_dihedral(4);
  Inclusion i = ideal_i2(g);
  LatticeMap gi = gamma_map(i.inclusion);
  EXPECT_TRUE(gi.is_injective());
  LatticeMap e = embed_symmetric_square(kerd2(g));
  EXPECT_TRUE(e.is_injective());
  EXPECT_EQ(e.source().rank(), 15u * 16u / 2u);
}

TEST(Gamma, StableUnderFreeSummands) {
  // Γ(L (+) ZG) = Γ(L) (+) (L (x) ZG) (+) Γ(ZG), the last two terms contributing
  // nothing to Ĥ0 since L (x) ZG is free and Γ(ZG) is a permutation module.
  GroupPtr g = build_dihedral(2);
  Lattice l = augmentation_ideal(g).lattice;
  AbGroup a = tate_h0(gamma(l));
  AbGroup b = tate_h0(gamma(direct_sum(l, free_lattice(g, 1))));
  AbGroup gzg = tate_h0(gamma(free_lattice(g, 1)));
  EXPECT_EQ(b, AbGroup::from_orders(0, [&] {
              std::vector<Integer> o = a.factors;
              o.insert(o.end(), gzg.factors.begin(), gzg.factors.end());
              return o;
            }()));
}

TEST(Gamma, PinnedValues) {
  for (int n : {2, 4, 6}) {
    GroupPtr g = build_dihedral(n);
    EXPECT_EQ(tate_h0(gamma(ideal_i2(g).lattice)).str(), "Z/2 + Z/2") << n;
    EXPECT_TRUE(tate_h0(gamma(kerd2(g))).is_trivial()) << n;
  }
}
