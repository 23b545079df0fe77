#pragma once

#include <cctype>
#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "gammalat/constructions.hpp"
#include "gammalat/gamma.hpp"
#include "gammalat/lattice.hpp"

namespace gammalat {

/// Parsed module expression, e.g. "gamma(tensor(ZpiN, I2))".
struct ModuleExpr {
  std::string head;  // atom name or combinator
  std::size_t count = 1;  // k of Zpi(k)
  std::vector<ModuleExpr> args;
  std::size_t position = 0;

  std::string str() const {
    if (head == "Zpi") return count == 1 ? "Zpi" : "Zpi(" + std::to_string(count) + ")";
    if (args.empty()) return head;
    std::string s = head + "(";
    for (std::size_t i = 0; i < args.size(); ++i) s += (i ? ", " : "") + args[i].str();
    return s + ")";
  }
};

namespace detail {

inline const std::vector<std::string>& module_atoms() {
  static const std::vector<std::string> atoms{"I", "I2", "N2", "ZpiN", "Z", "Zpi", "kerd2", "cokerd2", "D", "F"};
  return atoms;
}

inline int combinator_arity(std::string_view name) {
  if (name == "gamma" || name == "dual") return 1;
  if (name == "tensor" || name == "sum") return 2;
  return -1;
}

class ModuleParser {
 public:
  explicit ModuleParser(std::string_view text) : s_(text) {}

  ModuleExpr parse() {
    ModuleExpr e = expr();
    skip();
    if (pos_ != s_.size()) throw ParseError("trailing characters in module expression", pos_);
    return e;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void expect(char c) {
    skip();
    if (peek() != c) throw ParseError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }

  ModuleExpr expr() {
    skip();
    ModuleExpr e;
    e.position = pos_;
    if (!std::isalpha(static_cast<unsigned char>(peek()))) throw ParseError("expected module name", pos_);
    std::size_t start = pos_;
    while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') ++pos_;
    e.head = std::string(s_.substr(start, pos_ - start));
    skip();
    if (e.head == "Zpi") {
      if (peek() == '(') {
        ++pos_;
        skip();
        std::size_t digits = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (digits == pos_ || pos_ - digits > 3) throw ParseError("expected rank in Zpi(k)", digits);
        e.count = std::stoul(std::string(s_.substr(digits, pos_ - digits)));
        if (e.count == 0) throw ParseError("Zpi(k) needs k >= 1", digits);
        expect(')');
      }
      return e;
    }
    int arity = combinator_arity(e.head);
    if (arity < 0) {
      for (const auto& a : module_atoms())
        if (a == e.head) return e;
      throw ParseError("unknown module '" + e.head + "'", start);
    }
    expect('(');
    for (int k = 0; k < arity; ++k) {
      if (k > 0) expect(',');
      e.args.push_back(expr());
    }
    expect(')');
    return e;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline ModuleExpr parse_module_expr(std::string_view text) { return detail::ModuleParser(text).parse(); }

namespace detail {

inline int require_dihedral(const GroupPtr& g, const ModuleExpr& e) {
  auto n = dihedral_parameter(*g);
  if (!n || *n % 2 != 0)
    throw InvalidParameter("module '" + e.head + "' is defined for dihedral groups D2n with n even, not " + g->name());
  return *n;
}

}  // namespace detail

inline Lattice evaluate_module(const ModuleExpr& e, const GroupPtr& g) {
  const std::string& h = e.head;
  if (h == "I") return augmentation_ideal(g).lattice;
  if (h == "I2") return ideal_i2(g).lattice;
  if (h == "N2") return norm_two(g).lattice;
  if (h == "ZpiN") return zpi_mod_norm(g).lattice;
  if (h == "Z") return trivial_lattice(g);
  if (h == "Zpi") return free_lattice(g, e.count);
  if (h == "kerd2") return kerd2(g);
  if (h == "cokerd2") return cokerd2(g);
  if (h == "D") return quotient_D(detail::require_dihedral(g, e)).quotient.lattice;
  if (h == "F") return quotient_F(detail::require_dihedral(g, e)).quotient.lattice;
  if (h == "gamma") return gamma(evaluate_module(e.args.at(0), g));
  if (h == "dual") return dual_lattice(evaluate_module(e.args.at(0), g));
  if (h == "tensor") return tensor_lattice(evaluate_module(e.args.at(0), g), evaluate_module(e.args.at(1), g));
  if (h == "sum") return direct_sum(evaluate_module(e.args.at(0), g), evaluate_module(e.args.at(1), g));
  throw ParseError("unknown module '" + h + "'", e.position);
}

inline Lattice evaluate_module(std::string_view text, const GroupPtr& g) { return evaluate_module(parse_module_expr(text), g); }

}  // namespace gammalat
