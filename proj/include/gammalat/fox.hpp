#pragma once

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gammalat/group_ring.hpp"

namespace gammalat {

/// <x1, ..., xn | r1, ..., rm>; letters index into `generators`.
struct Presentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;

  std::string str() const {
    std::string s = "<";
    for (std::size_t i = 0; i < generators.size(); ++i) s += (i ? ", " : "") + generators[i];
    s += " | ";
    for (std::size_t i = 0; i < relators.size(); ++i) s += (i ? ", " : "") + render_word(relators[i], generators);
    return s + ">";
  }
};

namespace detail {

class PresentationParser {
 public:
  explicit PresentationParser(std::string_view text) : s_(text) {}

  Presentation parse() {
    Presentation p;
    skip();
    expect('<');
    while (true) {
      skip();
      std::size_t at = pos_;
      std::string name = identifier();
      for (const auto& g : p.generators)
        if (g == name) throw ParseError("duplicate generator '" + name + "'", at);
      p.generators.push_back(std::move(name));
      skip();
      if (peek() == ',') {
        ++pos_;
        continue;
      }
      break;
    }
    gens_ = &p.generators;
    expect('|');
    skip();
    if (peek() != '>') {
      while (true) {
        skip();
        p.relators.push_back(word());
        skip();
        if (peek() == ',') {
          ++pos_;
          continue;
        }
        break;
      }
    }
    expect('>');
    skip();
    if (pos_ != s_.size()) throw ParseError("trailing characters after '>'", pos_);
    return p;
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  void expect(char c) {
    skip();
    if (peek() != c) throw ParseError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }

  std::string identifier() {
    if (!std::isalpha(static_cast<unsigned char>(peek()))) throw ParseError("expected generator name", pos_);
    std::size_t start = pos_;
    while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  Word word() {
    Word w = factor();
    skip();
    while (peek() == '*') {
      ++pos_;
      skip();
      Word f = factor();
      w.insert(w.end(), f.begin(), f.end());
      skip();
    }
    return w;
  }

  Word factor() {
    Word base;
    if (peek() == '(') {
      ++pos_;
      skip();
      base = word();
      expect(')');
    } else if (peek() == '1') {
      ++pos_;
    } else {
      std::size_t at = pos_;
      std::string name = identifier();
      int index = -1;
      for (std::size_t i = 0; i < gens_->size(); ++i)
        if ((*gens_)[i] == name) index = static_cast<int>(i);
      if (index < 0) throw ParseError("unknown generator '" + name + "'", at);
      base.push_back({index, 1});
    }
    skip();
    if (peek() != '^') return base;
    ++pos_;
    skip();
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      ++pos_;
    }
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) throw ParseError("expected exponent", pos_);
    if (pos_ - start > 6) throw ParseError("exponent too large", start);
    int e = std::stoi(std::string(s_.substr(start, pos_ - start)));
    Word unit = negative ? inverse_word(base) : base;
    Word out;
    for (int k = 0; k < e; ++k) out.insert(out.end(), unit.begin(), unit.end());
    return out;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  const std::vector<std::string>* gens_ = nullptr;
};

}  // namespace detail

inline Presentation parse_presentation(std::string_view text) { return detail::PresentationParser(text).parse(); }

/// The group's own defining presentation.
inline Presentation default_presentation(const Group& g) {
  if (g.relators().empty()) throw InvalidPresentation("group " + g.name() + " has no defining relators");
  return {g.generator_names(), g.relators()};
}

/// Fox derivative of `w` with respect to generator `generator`, projected to
/// Z[G] with letters bound positionally to G's generators.
inline RingElement fox_derivative(const Word& w, int generator, const GroupPtr& g) {
  if (generator < 0 || generator >= g->num_generators())
    throw UnknownGenerator("generator index " + std::to_string(generator) + " out of range");
  RingElement d(g);
  int prefix = 0;
  for (const auto& l : w) {
    if (l.generator < 0 || l.generator >= g->num_generators())
      throw UnknownGenerator("generator index " + std::to_string(l.generator) + " out of range");
    int s = g->generator(l.generator);
    if (l.exponent > 0) {
      if (l.generator == generator) d.coeff(prefix) += 1;
      prefix = g->mul(prefix, s);
    } else {
      prefix = g->mul(prefix, g->inv(s));
      if (l.generator == generator) d.coeff(prefix) -= 1;
    }
  }
  return d;
}

/// Matrix over Z[G] acting by right multiplication on row vectors, so the
/// composite "first A then B" is the product A * B.
class ZPiMatrix {
 public:
  ZPiMatrix(GroupPtr g, std::size_t rows, std::size_t cols)
      : group_(std::move(g)), rows_(rows), cols_(cols), entries_(rows * cols, RingElement(group_)) {}

  /// Row-major list of entries.
  ZPiMatrix(GroupPtr g, std::size_t rows, std::size_t cols, std::vector<RingElement> entries)
      : group_(std::move(g)), rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows * cols) throw DimensionMismatch("ZPiMatrix entry count");
    for (const auto& e : entries_)
      if (e.group() != group_) throw GroupMismatch();
  }

  static ZPiMatrix identity(GroupPtr g, std::size_t n) {
    ZPiMatrix m(g, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = RingElement::one(g);
    return m;
  }

  const GroupPtr& group() const noexcept { return group_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  RingElement& operator()(std::size_t i, std::size_t j) { return entries_.at(i * cols_ + j); }
  const RingElement& operator()(std::size_t i, std::size_t j) const { return entries_.at(i * cols_ + j); }

  bool is_zero() const {
    for (const auto& e : entries_)
      if (!e.is_zero()) return false;
    return true;
  }

  friend ZPiMatrix operator*(const ZPiMatrix& a, const ZPiMatrix& b) {
    if (a.group_ != b.group_) throw GroupMismatch();
    if (a.cols_ != b.rows_) throw DimensionMismatch("ZPiMatrix product dimension mismatch");
    ZPiMatrix c(a.group_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < b.cols_; ++k)
        for (std::size_t j = 0; j < a.cols_; ++j) c(i, k) += a(i, j) * b(j, k);
    return c;
  }

  friend bool operator==(const ZPiMatrix& a, const ZPiMatrix& b) {
    return a.group_ == b.group_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

  /// Transpose with the involution applied entrywise: the matrix of the dual map.
  ZPiMatrix dual() const {
    ZPiMatrix t(group_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = involution((*this)(i, j));
    return t;
  }

  std::string str() const {
    std::string s;
    for (std::size_t i = 0; i < rows_; ++i) {
      s += "(";
      for (std::size_t j = 0; j < cols_; ++j) s += (j ? ", " : "") + (*this)(i, j).str();
      s += ")\n";
    }
    return s;
  }

 private:
  GroupPtr group_;
  std::size_t rows_, cols_;
  std::vector<RingElement> entries_;
};

/// The first two differentials of the free resolution built from a presentation:
/// d2 (relators x generators) of Fox derivatives, d1 (generators x 1) = (g_j - 1).
struct PresentationComplex {
  GroupPtr group;
  Presentation presentation;
  ZPiMatrix d2;
  ZPiMatrix d1;
};

inline PresentationComplex presentation_complex(const Presentation& p, const GroupPtr& g) {
  if (static_cast<int>(p.generators.size()) != g->num_generators())
    throw InvalidPresentation("presentation has " + std::to_string(p.generators.size()) + " generators, group " +
                              g->name() + " has " + std::to_string(g->num_generators()));
  for (std::size_t r = 0; r < p.relators.size(); ++r)
    if (g->evaluate(p.relators[r]) != 0)
      throw InvalidPresentation("relator " + render_word(p.relators[r], p.generators) + " is not trivial in " +
                                g->name());
  const std::size_t m = p.relators.size(), n = p.generators.size();
  ZPiMatrix d2(g, m, n), d1(g, n, 1);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) d2(i, j) = fox_derivative(p.relators[i], static_cast<int>(j), g);
  for (std::size_t j = 0; j < n; ++j)
    d1(j, 0) = RingElement::element(g, g->generator(static_cast<int>(j))) - RingElement::one(g);
  if (!(d2 * d1).is_zero()) throw InternalError("presentation complex: d2 * d1 != 0");
  for (std::size_t j = 0; j < n; ++j)
    if (!augmentation(d1(j, 0)).is_zero()) throw InternalError("presentation complex: augmentation of d1 != 0");
  return {g, p, std::move(d2), std::move(d1)};
}

}  // namespace gammalat
