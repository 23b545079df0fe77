#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <limits>
#include <memory>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace gammalat {

/// Arbitrary-precision integer with an inline int64 fast path.
///
/// Values that fit in int64 are stored inline and never allocate. Every
/// operation checks for overflow, promotes to GMP when needed, and demotes
/// results that fit again, so the representation of a value is unique.
class Integer {
 public:
  Integer() noexcept = default;
  Integer(int v) noexcept : small_(v) {}
  Integer(long v) noexcept : small_(v) {}
  Integer(long long v) noexcept : small_(static_cast<int64_t>(v)) {}
  explicit Integer(const mpz_class& v) { assign(v); }
  explicit Integer(std::string_view decimal) {
    mpz_class v;
    if (decimal.empty() || v.set_str(std::string(decimal), 10) != 0)
      throw std::invalid_argument("not a decimal integer: '" + std::string(decimal) + "'");
    assign(v);
  }

  Integer(const Integer& o) : small_(o.small_) {
    if (o.big_) big_ = std::make_unique<mpz_class>(*o.big_);
  }
  Integer(Integer&&) noexcept = default;
  Integer& operator=(const Integer& o) {
    if (this != &o) {
      small_ = o.small_;
      big_ = o.big_ ? std::make_unique<mpz_class>(*o.big_) : nullptr;
    }
    return *this;
  }
  Integer& operator=(Integer&&) noexcept = default;

  bool is_small() const noexcept { return !big_; }
  bool is_zero() const noexcept { return !big_ && small_ == 0; }
  bool is_one() const noexcept { return !big_ && small_ == 1; }

  int sign() const noexcept {
    if (!big_) return (small_ > 0) - (small_ < 0);
    return sgn(*big_);
  }

  /// Only valid when is_small().
  int64_t small() const noexcept { return small_; }

  int64_t to_int64() const {
    if (big_) throw std::overflow_error("integer does not fit in int64: " + str());
    return small_;
  }

  mpz_class to_mpz() const { return big_ ? *big_ : mpz_class(static_cast<long>(small_)); }

  std::string str() const { return big_ ? big_->get_str() : std::to_string(small_); }

  /// Residue in [0, modulus).
  uint64_t mod_u64(uint64_t modulus) const {
    if (!big_) {
      int64_t r = small_ % static_cast<int64_t>(modulus);
      return static_cast<uint64_t>(r < 0 ? r + static_cast<int64_t>(modulus) : r);
    }
    return mpz_fdiv_ui(big_->get_mpz_t(), static_cast<unsigned long>(modulus));
  }

  Integer operator-() const {
    if (!big_ && small_ != std::numeric_limits<int64_t>::min()) return Integer(-small_);
    return Integer(mpz_class(-to_mpz()));
  }

  Integer& operator+=(const Integer& o) {
    int64_t r;
    if (!big_ && !o.big_ && !__builtin_add_overflow(small_, o.small_, &r)) {
      small_ = r;
      return *this;
    }
    assign(to_mpz() + o.to_mpz());
    return *this;
  }
  Integer& operator-=(const Integer& o) {
    int64_t r;
    if (!big_ && !o.big_ && !__builtin_sub_overflow(small_, o.small_, &r)) {
      small_ = r;
      return *this;
    }
    assign(to_mpz() - o.to_mpz());
    return *this;
  }
  Integer& operator*=(const Integer& o) {
    int64_t r;
    if (!big_ && !o.big_ && !__builtin_mul_overflow(small_, o.small_, &r)) {
      small_ = r;
      return *this;
    }
    assign(to_mpz() * o.to_mpz());
    return *this;
  }

  /// *this += a * b
  void addmul(const Integer& a, const Integer& b) {
    int64_t p, r;
    if (!big_ && !a.big_ && !b.big_ && !__builtin_mul_overflow(a.small_, b.small_, &p) &&
        !__builtin_add_overflow(small_, p, &r)) {
      small_ = r;
      return;
    }
    mpz_class v = to_mpz();
    mpz_class av = a.to_mpz(), bv = b.to_mpz();
    mpz_addmul(v.get_mpz_t(), av.get_mpz_t(), bv.get_mpz_t());
    assign(v);
  }

  /// *this -= a * b
  void submul(const Integer& a, const Integer& b) {
    int64_t p, r;
    if (!big_ && !a.big_ && !b.big_ && !__builtin_mul_overflow(a.small_, b.small_, &p) &&
        !__builtin_sub_overflow(small_, p, &r)) {
      small_ = r;
      return;
    }
    mpz_class v = to_mpz();
    mpz_class av = a.to_mpz(), bv = b.to_mpz();
    mpz_submul(v.get_mpz_t(), av.get_mpz_t(), bv.get_mpz_t());
    assign(v);
  }

  friend Integer operator+(Integer a, const Integer& b) { return a += b; }
  friend Integer operator-(Integer a, const Integer& b) { return a -= b; }
  friend Integer operator*(Integer a, const Integer& b) { return a *= b; }

  friend bool operator==(const Integer& a, const Integer& b) {
    if (!a.big_ && !b.big_) return a.small_ == b.small_;
    if (a.big_ && b.big_) return *a.big_ == *b.big_;
    return false;  // representation is canonical
  }
  friend std::strong_ordering operator<=>(const Integer& a, const Integer& b) {
    if (!a.big_ && !b.big_) return a.small_ <=> b.small_;
    int c = cmp(a.to_mpz(), b.to_mpz());
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend Integer abs(const Integer& a) { return a.sign() < 0 ? -a : a; }

  /// Quotient rounded toward negative infinity.
  friend Integer floor_div(const Integer& a, const Integer& b) {
    if (b.is_zero()) throw std::domain_error("division by zero");
    if (!a.big_ && !b.big_ && !(a.small_ == std::numeric_limits<int64_t>::min() && b.small_ == -1)) {
      int64_t q = a.small_ / b.small_;
      if ((a.small_ % b.small_ != 0) && ((a.small_ < 0) != (b.small_ < 0))) --q;
      return Integer(q);
    }
    mpz_class q;
    mpz_class av = a.to_mpz(), bv = b.to_mpz();
    mpz_fdiv_q(q.get_mpz_t(), av.get_mpz_t(), bv.get_mpz_t());
    return Integer(q);
  }

  /// Remainder with the sign of b (so in [0, b) for b > 0).
  friend Integer floor_mod(const Integer& a, const Integer& b) { return a - floor_div(a, b) * b; }

  /// Quotient rounded to the nearest integer (ties toward negative infinity).
  friend Integer round_div(const Integer& a, const Integer& b) {
    // ceil((2a - b) / 2b) for b > 0; symmetric for b < 0
    if (b.sign() < 0) return round_div(-a, -b);
    return -floor_div(b - a - a, b + b);
  }

  /// Exact quotient; throws if b does not divide a.
  friend Integer divexact(const Integer& a, const Integer& b) {
    if (b.is_zero()) throw std::domain_error("division by zero");
    if (!a.big_ && !b.big_ && !(a.small_ == std::numeric_limits<int64_t>::min() && b.small_ == -1)) {
      if (a.small_ % b.small_ != 0) throw std::domain_error("inexact division");
      return Integer(a.small_ / b.small_);
    }
    mpz_class av = a.to_mpz(), bv = b.to_mpz();
    if (!mpz_divisible_p(av.get_mpz_t(), bv.get_mpz_t())) throw std::domain_error("inexact division");
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), av.get_mpz_t(), bv.get_mpz_t());
    return Integer(q);
  }

  friend bool divides(const Integer& d, const Integer& a) {
    if (d.is_zero()) return a.is_zero();
    if (!a.big_ && !d.big_) return d.small_ == -1 || a.small_ % d.small_ == 0;
    mpz_class av = a.to_mpz(), dv = d.to_mpz();
    return mpz_divisible_p(av.get_mpz_t(), dv.get_mpz_t()) != 0;
  }

  /// Non-negative gcd.
  friend Integer gcd(const Integer& a, const Integer& b) {
    if (!a.big_ && !b.big_ && a.small_ != std::numeric_limits<int64_t>::min() &&
        b.small_ != std::numeric_limits<int64_t>::min()) {
      int64_t x = a.small_ < 0 ? -a.small_ : a.small_;
      int64_t y = b.small_ < 0 ? -b.small_ : b.small_;
      while (y != 0) {
        int64_t t = x % y;
        x = y;
        y = t;
      }
      return Integer(x);
    }
    mpz_class g;
    mpz_class av = a.to_mpz(), bv = b.to_mpz();
    mpz_gcd(g.get_mpz_t(), av.get_mpz_t(), bv.get_mpz_t());
    return Integer(g);
  }

  friend std::ostream& operator<<(std::ostream& os, const Integer& v) { return os << v.str(); }

 private:
  void assign(const mpz_class& v) {
    if (v.fits_slong_p()) {
      small_ = v.get_si();
      big_.reset();
    } else {
      small_ = 0;
      big_ = std::make_unique<mpz_class>(v);
    }
  }

  int64_t small_ = 0;
  std::unique_ptr<mpz_class> big_;
};

}  // namespace gammalat
