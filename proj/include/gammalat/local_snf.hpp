#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "gammalat/int_matrix.hpp"
#include "gammalat/normal_form.hpp"

namespace gammalat {

/// Dense matrix over Z/q with q = p^k < 2^16, stored as residues in [0, q).
class ResidueMatrix {
 public:
  ResidueMatrix(std::size_t rows, std::size_t cols, uint32_t modulus)
      : rows_(rows), cols_(cols), modulus_(modulus), data_(rows * cols) {
    if (modulus < 2 || modulus >= (1u << 16))
      throw InvalidParameter("residue modulus out of range: " + std::to_string(modulus));
  }

  static ResidueMatrix reduce(const IntMatrix& m, uint32_t modulus) {
    ResidueMatrix r(m.rows(), m.cols(), modulus);
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = static_cast<uint32_t>(m(i, j).mod_u64(modulus));
    return r;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  uint32_t modulus() const noexcept { return modulus_; }

  uint32_t& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  uint32_t operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  uint32_t* row(std::size_t i) { return data_.data() + i * cols_; }

 private:
  std::size_t rows_, cols_;
  uint32_t modulus_;
  std::vector<uint32_t> data_;
};

namespace detail {

struct MaskReducer {
  uint32_t mask;
  uint32_t operator()(uint32_t x) const { return x & mask; }
};

// Lemire's fastmod for 32-bit numerators.
struct FastModReducer {
  uint64_t magic;
  uint32_t d;
  explicit FastModReducer(uint32_t divisor) : magic(UINT64_C(0xFFFFFFFFFFFFFFFF) / divisor + 1), d(divisor) {}
  uint32_t operator()(uint32_t x) const {
    uint64_t low = magic * x;
    return static_cast<uint32_t>((static_cast<__uint128_t>(low) * d) >> 64);
  }
};

// dst = dst + factor * src (mod q); all operands reduced, so the sum is below q^2.
template <class Reduce>
void residue_axpy(uint32_t* __restrict dst, const uint32_t* __restrict src, uint32_t factor,
                  std::size_t n, Reduce reduce) {
  for (std::size_t k = 0; k < n; ++k) dst[k] = reduce(dst[k] + factor * src[k]);
}

inline unsigned valuation(uint32_t x, uint32_t p, unsigned cap) {
  if (x == 0) return cap;
  unsigned v = 0;
  while (x % p == 0) {
    x /= p;
    ++v;
  }
  return v;
}

inline uint32_t inverse_mod(uint32_t u, uint32_t q) {
  int64_t t = 0, new_t = 1, r = q, new_r = u;
  while (new_r != 0) {
    int64_t quot = r / new_r;
    t -= quot * new_t;
    std::swap(t, new_t);
    r -= quot * new_r;
    std::swap(r, new_r);
  }
  if (r != 1) throw InternalError("inverse_mod: unit expected");
  return static_cast<uint32_t>(t < 0 ? t + q : t);
}

template <class Reduce>
std::vector<std::size_t> local_elimination(ResidueMatrix& a, uint32_t p, unsigned precision,
                                           Reduce reduce) {
  const uint32_t q = a.modulus();
  const std::size_t width = a.cols();
  std::vector<std::size_t> counts(precision, 0);
  std::vector<std::size_t> active(a.rows());
  for (std::size_t i = 0; i < active.size(); ++i) active[i] = i;
  std::vector<bool> column_done(width, false);

  uint32_t pv = 1;
  for (unsigned v = 0; v < precision; ++v, pv *= p) {
    // Invariant: every active entry has valuation >= v. One sweep over the
    // columns finds every pivot of valuation exactly v.
    for (std::size_t c = 0; c < width && !active.empty(); ++c) {
      if (column_done[c]) continue;
      std::size_t slot = active.size();
      for (std::size_t s = 0; s < active.size(); ++s) {
        uint32_t x = a(active[s], c);
        if (x != 0 && (x / pv) % p != 0) {
          slot = s;
          break;
        }
      }
      if (slot == active.size()) continue;
      const std::size_t t = active[slot];
      active[slot] = active.back();
      active.pop_back();
      column_done[c] = true;
      ++counts[v];
      const uint32_t unit_inv = inverse_mod((a(t, c) / pv) % q, q);
      const uint32_t* pivot_row = a.row(t);
      for (std::size_t i : active) {
        uint32_t x = a(i, c);
        if (x == 0) continue;
        // x = b p^v; subtract b u^{-1} times the pivot row.
        uint32_t f = static_cast<uint32_t>((static_cast<uint64_t>(x / pv) * unit_inv) % q);
        residue_axpy(a.row(i), pivot_row, (q - f) % q, width, reduce);
      }
    }
  }
  return counts;
}

inline std::map<uint32_t, unsigned> factorize(uint64_t n) {
  std::map<uint32_t, unsigned> f;
  for (uint32_t p = 2; static_cast<uint64_t>(p) * p <= n; ++p)
    while (n % p == 0) {
      ++f[p];
      n /= p;
    }
  if (n > 1) ++f[static_cast<uint32_t>(n)];
  return f;
}

}  // namespace detail

/// Number of Smith invariant factors of each p-adic valuation v < precision,
/// computed by elimination over the local ring Z/p^precision. Destroys `a`.
inline std::vector<std::size_t> local_smith_counts(ResidueMatrix& a, uint32_t p, unsigned precision) {
  uint32_t q = 1;
  for (unsigned i = 0; i < precision; ++i) q *= p;
  if (q != a.modulus()) throw InvalidParameter("local_smith_counts: modulus is not p^precision");
  if ((q & (q - 1)) == 0) return detail::local_elimination(a, p, precision, detail::MaskReducer{q - 1});
  return detail::local_elimination(a, p, precision, detail::FastModReducer(q));
}

/// Cokernel of an integer matrix whose torsion is known to be annihilated by
/// `exponent`. For each prime p | exponent the matrix is reduced over
/// Z/p^(v_p(exponent)+1): torsion invariants have valuation at most
/// v_p(exponent), so they are recovered exactly, and zero invariants show as
/// the full precision. `fill(p, modulus)` must return the reduced matrix.
template <class Fill>
AbGroup cokernel_with_exponent(std::size_t rows, uint64_t exponent, Fill&& fill) {
  auto primes = detail::factorize(exponent);
  if (primes.empty()) primes[2] = 0;
  std::size_t rank = 0;
  bool first = true;
  std::vector<Integer> orders;
  for (const auto& [p, e] : primes) {
    const unsigned precision = e + 1;
    uint32_t q = 1;
    for (unsigned i = 0; i < precision; ++i) q *= p;
    ResidueMatrix a = fill(p, q);
    auto counts = local_smith_counts(a, p, precision);
    std::size_t local_rank = 0;
    for (auto c : counts) local_rank += c;
    if (first) {
      rank = local_rank;
      first = false;
    } else if (local_rank != rank) {
      throw InternalError("local ranks disagree across primes (" + std::to_string(rank) + " vs " +
                          std::to_string(local_rank) + "); exponent bound violated");
    }
    Integer pv = 1;
    for (unsigned v = 0; v < precision; ++v, pv *= Integer(static_cast<long>(p)))
      for (std::size_t c = 0; c < counts[v]; ++c)
        if (v > 0) orders.push_back(pv);
  }
  return AbGroup::from_orders(rows - rank, orders);
}

/// Cokernel of m (Z^rows / column span) given a torsion exponent bound.
inline AbGroup cokernel_with_exponent(const IntMatrix& m, uint64_t exponent) {
  return cokernel_with_exponent(m.rows(), exponent, [&m](uint32_t, uint32_t q) {
    return ResidueMatrix::reduce(m.transpose(), q);
  });
}

}  // namespace gammalat
