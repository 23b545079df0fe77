#pragma once

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gammalat/group.hpp"
#include "gammalat/int_matrix.hpp"

namespace gammalat {

/// Element of the integral group ring Z[G]: one coefficient per group element.
class RingElement {
 public:
  explicit RingElement(GroupPtr g) : group_(std::move(g)), coeffs_(static_cast<std::size_t>(group_->order())) {}
  RingElement(GroupPtr g, IntVector coeffs) : group_(std::move(g)), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != static_cast<std::size_t>(group_->order()))
      throw DimensionMismatch("ring element needs " + std::to_string(group_->order()) + " coefficients");
  }

  static RingElement zero(GroupPtr g) { return RingElement(std::move(g)); }
  static RingElement constant(GroupPtr g, const Integer& n) {
    RingElement r(std::move(g));
    r.coeffs_[0] = n;
    return r;
  }
  static RingElement one(GroupPtr g) { return constant(std::move(g), 1); }
  static RingElement element(GroupPtr g, int e, const Integer& c = 1) {
    RingElement r(std::move(g));
    r.coeffs_.at(static_cast<std::size_t>(e)) = c;
    return r;
  }

  const GroupPtr& group() const noexcept { return group_; }
  const IntVector& coeffs() const noexcept { return coeffs_; }
  const Integer& coeff(int g) const { return coeffs_.at(static_cast<std::size_t>(g)); }
  Integer& coeff(int g) { return coeffs_.at(static_cast<std::size_t>(g)); }

  bool is_zero() const {
    for (const auto& c : coeffs_)
      if (!c.is_zero()) return false;
    return true;
  }

  RingElement& operator+=(const RingElement& o) {
    check(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
  }
  RingElement& operator-=(const RingElement& o) {
    check(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
  }
  RingElement operator-() const {
    RingElement r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }
  friend RingElement operator+(RingElement a, const RingElement& b) { return a += b; }
  friend RingElement operator-(RingElement a, const RingElement& b) { return a -= b; }
  friend RingElement operator*(const Integer& s, RingElement a) {
    for (auto& c : a.coeffs_) c *= s;
    return a;
  }

  /// Convolution: coefficient of g is the sum of a_h b_k over hk = g.
  friend RingElement operator*(const RingElement& a, const RingElement& b) {
    a.check(b);
    const Group& g = *a.group_;
    RingElement r(a.group_);
    for (int h = 0; h < g.order(); ++h) {
      const Integer& ah = a.coeffs_[static_cast<std::size_t>(h)];
      if (ah.is_zero()) continue;
      for (int k = 0; k < g.order(); ++k) {
        const Integer& bk = b.coeffs_[static_cast<std::size_t>(k)];
        if (!bk.is_zero()) r.coeffs_[static_cast<std::size_t>(g.mul(h, k))].addmul(ah, bk);
      }
    }
    return r;
  }

  friend bool operator==(const RingElement& a, const RingElement& b) {
    return a.group_ == b.group_ && a.coeffs_ == b.coeffs_;
  }

  /// Signed monomial sum in enumeration order, e.g. "1 - x*y + 2x^3".
  std::string str() const {
    std::string s;
    for (int g = 0; g < group_->order(); ++g) {
      const Integer& c = coeffs_[static_cast<std::size_t>(g)];
      if (c.is_zero()) continue;
      bool negative = c.sign() < 0;
      Integer mag = abs(c);
      if (s.empty())
        s += negative ? "-" : "";
      else
        s += negative ? " - " : " + ";
      std::string mono = group_->element_name(g);
      if (g == 0)
        s += mag.str();
      else if (mag.is_one())
        s += mono;
      else
        s += mag.str() + mono;
    }
    return s.empty() ? "0" : s;
  }

 private:
  void check(const RingElement& o) const {
    if (group_ != o.group_) throw GroupMismatch();
  }

  GroupPtr group_;
  IntVector coeffs_;
};

inline RingElement multiply(const RingElement& a, const RingElement& b) { return a * b; }

/// The involution induced by g -> g^-1.
inline RingElement involution(const RingElement& a) {
  const Group& g = *a.group();
  RingElement r(a.group());
  for (int h = 0; h < g.order(); ++h) r.coeff(g.inv(h)) = a.coeff(h);
  return r;
}

inline Integer augmentation(const RingElement& a) {
  Integer s;
  for (const auto& c : a.coeffs()) s += c;
  return s;
}

inline RingElement norm_element(const GroupPtr& g) {
  return RingElement(g, IntVector(static_cast<std::size_t>(g->order()), Integer(1)));
}

/// 1 + g + ... + g^(k-1) with k the order of g.
inline RingElement partial_norm(const GroupPtr& g, int element) {
  RingElement r(g);
  int h = 0;
  do {
    r.coeff(h) += 1;
    h = g->mul(h, element);
  } while (h != 0);
  return r;
}

inline RingElement word_to_ring(const GroupPtr& g, const Word& w) { return RingElement::element(g, g->evaluate(w)); }

/// Word given by generator names and exponents +-1.
inline RingElement word_to_ring(const GroupPtr& g, const std::vector<std::pair<std::string, int>>& w) {
  Word word;
  for (const auto& [name, e] : w) word.push_back({g->generator_index(name), e < 0 ? -1 : 1});
  return word_to_ring(g, word);
}

namespace detail {

class RingParser {
 public:
  RingParser(GroupPtr g, std::string_view text) : g_(std::move(g)), s_(text) {}

  RingElement parse() {
    RingElement total(g_);
    skip();
    bool first = true;
    while (pos_ < s_.size()) {
      int sign = 1;
      if (s_[pos_] == '+' || s_[pos_] == '-') {
        sign = s_[pos_] == '-' ? -1 : 1;
        ++pos_;
        skip();
      } else if (!first) {
        throw ParseError("expected '+' or '-'", pos_);
      }
      first = false;
      total += term(sign);
      skip();
    }
    if (first) throw ParseError("empty ring element", pos_);
    return total;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  RingElement term(int sign) {
    Integer coeff = sign;
    bool have_number = false;
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      coeff *= Integer(s_.substr(start, pos_ - start));
      have_number = true;
      skip();
      if (pos_ < s_.size() && s_[pos_] == '*') {
        ++pos_;
        skip();
      } else if (pos_ >= s_.size() || s_[pos_] == '+' || s_[pos_] == '-') {
        return RingElement::constant(g_, coeff);
      }
    }
    if (pos_ >= s_.size()) throw ParseError(have_number ? "expected monomial" : "expected term", pos_);
    int element = monomial();
    return RingElement::element(g_, element, coeff);
  }

  int monomial() {
    int acc = factor();
    skip();
    while (pos_ < s_.size() && s_[pos_] == '*') {
      ++pos_;
      skip();
      acc = g_->mul(acc, factor());
      skip();
    }
    return acc;
  }

  int factor() {
    int base;
    if (pos_ < s_.size() && s_[pos_] == '(') {
      ++pos_;
      skip();
      base = monomial();
      if (pos_ >= s_.size() || s_[pos_] != ')') throw ParseError("expected ')'", pos_);
      ++pos_;
    } else if (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string_view name = s_.substr(start, pos_ - start);
      try {
        base = g_->generator(g_->generator_index(name));
      } catch (const UnknownGenerator&) {
        throw ParseError("unknown generator '" + std::string(name) + "'", start);
      }
    } else if (pos_ < s_.size() && s_[pos_] == '1') {
      ++pos_;
      base = 0;
    } else {
      throw ParseError("expected generator", pos_);
    }
    skip();
    if (pos_ < s_.size() && s_[pos_] == '^') {
      ++pos_;
      skip();
      bool negative = false;
      if (pos_ < s_.size() && s_[pos_] == '-') {
        negative = true;
        ++pos_;
      }
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) throw ParseError("expected exponent", pos_);
      long e = std::stol(std::string(s_.substr(start, pos_ - start)));
      int b = negative ? g_->inv(base) : base;
      int acc = 0;
      // b^|G| = 1, so the exponent may be reduced mod |G|
      for (long k = 0; k < e % g_->order(); ++k) acc = g_->mul(acc, b);
      base = acc;
    }
    return base;
  }

  GroupPtr g_;
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses the rendering produced by RingElement::str (and products/powers of
/// generators such as "2*(x*y)^2 - x^-1").
inline RingElement parse_ring_element(const GroupPtr& g, std::string_view text) {
  return detail::RingParser(g, text).parse();
}

}  // namespace gammalat
