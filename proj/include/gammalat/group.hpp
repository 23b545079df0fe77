#pragma once

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <deque>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gammalat/errors.hpp"

namespace gammalat {

/// One letter of a word in the generators: generator index and exponent +-1.
struct Letter {
  int generator = 0;
  int exponent = 1;
  friend bool operator==(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

inline Word inverse_word(const Word& w) {
  Word r(w.rbegin(), w.rend());
  for (auto& l : r) l.exponent = -l.exponent;
  return r;
}

/// Collapses runs of equal letters into powers: "x^2*y", "x^-1"; empty is "1".
inline std::string render_word(const Word& w, const std::vector<std::string>& names) {
  if (w.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < w.size();) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    long power = static_cast<long>(j - i) * w[i].exponent;
    if (!s.empty()) s += '*';
    s += names.at(static_cast<std::size_t>(w[i].generator));
    if (power != 1) s += "^" + std::to_string(power);
    i = j;
  }
  return s;
}

class Group;
using GroupPtr = std::shared_ptr<const Group>;

/// Finite group given by its full multiplication table. Elements are the
/// indices 0..order-1 with 0 the identity. Immutable after construction.
class Group {
 public:
  static constexpr int kDefaultOrderCap = 128;

  /// Validates identity, inverses, associativity, generation and relators.
  /// `element_words` (normal forms used for naming) default to shortest words.
  Group(std::string name, int order, std::vector<int> table, std::vector<int> generators,
        std::vector<std::string> generator_names, std::vector<Word> relators = {},
        std::vector<Word> element_words = {}, int order_cap = kDefaultOrderCap)
      : name_(std::move(name)),
        order_(order),
        table_(std::move(table)),
        generators_(std::move(generators)),
        generator_names_(std::move(generator_names)),
        relators_(std::move(relators)),
        element_words_(std::move(element_words)) {
    validate(order_cap);
  }

  const std::string& name() const noexcept { return name_; }
  int order() const noexcept { return order_; }
  int mul(int a, int b) const { return table_[static_cast<std::size_t>(a * order_ + b)]; }
  int inv(int a) const { return inverse_[static_cast<std::size_t>(a)]; }

  int num_generators() const noexcept { return static_cast<int>(generators_.size()); }
  const std::vector<int>& generators() const noexcept { return generators_; }
  int generator(int i) const { return generators_.at(static_cast<std::size_t>(i)); }
  const std::vector<std::string>& generator_names() const noexcept { return generator_names_; }

  int generator_index(std::string_view name) const {
    for (std::size_t i = 0; i < generator_names_.size(); ++i)
      if (generator_names_[i] == name) return static_cast<int>(i);
    throw UnknownGenerator("unknown generator '" + std::string(name) + "' in group " + name_);
  }

  /// Defining relators (may be empty for groups built from a bare table).
  const std::vector<Word>& relators() const noexcept { return relators_; }

  int element_order(int g) const {
    int k = 1;
    for (int h = g; h != 0; h = mul(h, g)) ++k;
    return k;
  }

  /// Normal-form word of an element, in generator letters.
  const Word& word_for(int g) const { return element_words_.at(static_cast<std::size_t>(g)); }
  /// Shortest word (breadth-first in the Cayley graph) for an element.
  const Word& shortest_word(int g) const { return shortest_words_.at(static_cast<std::size_t>(g)); }

  std::string element_name(int g) const { return render_word(word_for(g), generator_names_); }

  int evaluate(const Word& w) const {
    int acc = 0;
    for (const auto& l : w) {
      if (l.generator < 0 || l.generator >= num_generators())
        throw UnknownGenerator("generator index " + std::to_string(l.generator) + " out of range");
      int g = generator(l.generator);
      acc = mul(acc, l.exponent > 0 ? g : inv(g));
    }
    return acc;
  }

 private:
  void validate(int order_cap) {
    if (order_ < 1) throw InvalidGroup("group order must be positive");
    if (order_ > order_cap)
      throw InvalidGroup("group order " + std::to_string(order_) + " exceeds cap " + std::to_string(order_cap));
    const auto n = static_cast<std::size_t>(order_);
    if (table_.size() != n * n) throw InvalidGroup("multiplication table has wrong size");
    for (int v : table_)
      if (v < 0 || v >= order_) throw InvalidGroup("table entry out of range");
    for (int a = 0; a < order_; ++a)
      if (mul(0, a) != a || mul(a, 0) != a) throw InvalidGroup("index 0 is not a two-sided identity");
    inverse_.assign(n, -1);
    for (int a = 0; a < order_; ++a)
      for (int b = 0; b < order_; ++b)
        if (mul(a, b) == 0) {
          if (mul(b, a) != 0) throw InvalidGroup("left and right inverses differ");
          inverse_[static_cast<std::size_t>(a)] = b;
        }
    for (int a = 0; a < order_; ++a)
      if (inverse_[static_cast<std::size_t>(a)] < 0) throw InvalidGroup("element without inverse");
    for (int a = 0; a < order_; ++a)
      for (int b = 0; b < order_; ++b)
        for (int c = 0; c < order_; ++c)
          if (mul(mul(a, b), c) != mul(a, mul(b, c))) throw InvalidGroup("multiplication is not associative");
    if (generator_names_.size() != generators_.size()) throw InvalidGroup("generator name count mismatch");
    for (int g : generators_)
      if (g < 0 || g >= order_) throw InvalidGroup("generator index out of range");

    // Breadth-first closure from the identity, recording shortest words.
    shortest_words_.assign(n, Word{});
    std::vector<bool> seen(n, false);
    seen[0] = true;
    std::deque<int> queue{0};
    std::size_t reached = 1;
    while (!queue.empty()) {
      int h = queue.front();
      queue.pop_front();
      for (int e : {1, -1})
        for (int i = 0; i < num_generators(); ++i) {
          int g = generator(i);
          int next = mul(h, e > 0 ? g : inv(g));
          if (seen[static_cast<std::size_t>(next)]) continue;
          seen[static_cast<std::size_t>(next)] = true;
          Word w = shortest_words_[static_cast<std::size_t>(h)];
          w.push_back({i, e});
          shortest_words_[static_cast<std::size_t>(next)] = std::move(w);
          queue.push_back(next);
          ++reached;
        }
    }
    if (reached != n) throw InvalidGroup("generators do not generate the group");
    if (element_words_.empty()) element_words_ = shortest_words_;
    if (element_words_.size() != n) throw InvalidGroup("element word count mismatch");
    for (int g = 0; g < order_; ++g)
      if (evaluate(element_words_[static_cast<std::size_t>(g)]) != g)
        throw InvalidGroup("element word does not evaluate to its element");
    for (const auto& r : relators_)
      if (evaluate(r) != 0) throw InvalidGroup("relator does not hold: " + render_word(r, generator_names_));
  }

  std::string name_;
  int order_;
  std::vector<int> table_;
  std::vector<int> inverse_;
  std::vector<int> generators_;
  std::vector<std::string> generator_names_;
  std::vector<Word> relators_;
  std::vector<Word> element_words_;
  std::vector<Word> shortest_words_;
};

namespace detail {

inline Word power_word(int generator, int power) {
  Word w;
  for (int k = 0; k < (power < 0 ? -power : power); ++k) w.push_back({generator, power < 0 ? -1 : 1});
  return w;
}

inline Word concat(Word a, const Word& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

// Metacyclic groups <x, y> with elements x^i y^j (i < x_order, j in {0,1}),
// y x y^-1 = x^-1 and y^2 = x^square_power.
inline GroupPtr build_xy_group(std::string name, int x_order, int square_power, std::vector<Word> relators) {
  const int order = 2 * x_order;
  std::vector<int> table(static_cast<std::size_t>(order * order));
  auto index = [x_order](int i, int j) { return ((i % x_order) + x_order) % x_order + x_order * j; };
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b) {
      int ai = a % x_order, aj = a / x_order, bi = b % x_order, bj = b / x_order;
      int i = ai + (aj ? -bi : bi);
      int j = aj + bj;
      if (j == 2) {
        j = 0;
        i += square_power;
      }
      table[static_cast<std::size_t>(a * order + b)] = index(i, j);
    }
  std::vector<Word> words;
  for (int j = 0; j < 2; ++j)
    for (int i = 0; i < x_order; ++i) words.push_back(concat(power_word(0, i), power_word(1, j)));
  return std::make_shared<const Group>(std::move(name), order, std::move(table), std::vector<int>{1, x_order},
                                       std::vector<std::string>{"x", "y"}, std::move(relators), std::move(words));
}

}  // namespace detail

/// Dihedral group of order 2n: elements x^i y^j at index i + n j; generators
/// x (index 1) and y (index n); relators x^n y^-2, x y x y^-1, y^2.
inline GroupPtr build_dihedral(int n) {
  if (n < 2) throw InvalidParameter("dihedral group needs n >= 2, got " + std::to_string(n));
  using detail::concat, detail::power_word;
  std::vector<Word> relators{concat(power_word(0, n), power_word(1, -2)),
                             Word{{0, 1}, {1, 1}, {0, 1}, {1, -1}}, power_word(1, 2)};
  return detail::build_xy_group("D" + std::to_string(2 * n), n, 0, std::move(relators));
}

/// Generalized quaternion group of order 4n: x of order 2n, y^2 = x^n,
/// elements x^i y^j at index i + 2n j; relators x^n y^-2, x y x y^-1.
inline GroupPtr build_quaternion(int n) {
  if (n < 2) throw InvalidParameter("quaternion group needs n >= 2, got " + std::to_string(n));
  using detail::concat, detail::power_word;
  std::vector<Word> relators{concat(power_word(0, n), power_word(1, -2)),
                             Word{{0, 1}, {1, 1}, {0, 1}, {1, -1}}};
  return detail::build_xy_group("Q" + std::to_string(4 * n), 2 * n, n, std::move(relators));
}

/// Cyclic group of order m with generator `name` at index 1 (relator x^m).
inline GroupPtr build_cyclic(int m, std::string name = "x") {
  if (m < 1) throw InvalidParameter("cyclic group needs m >= 1");
  std::vector<int> table(static_cast<std::size_t>(m * m));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) table[static_cast<std::size_t>(a * m + b)] = (a + b) % m;
  std::vector<Word> words;
  for (int i = 0; i < m; ++i) words.push_back(detail::power_word(0, i));
  return std::make_shared<const Group>("C" + std::to_string(m), m, std::move(table),
                                       std::vector<int>{m == 1 ? 0 : 1}, std::vector<std::string>{std::move(name)},
                                       std::vector<Word>{detail::power_word(0, m)}, std::move(words));
}

/// G x H with index g + |G| h. Generators are G's followed by H's (renamed
/// when a name clashes); relators are both sets plus commutators.
inline GroupPtr direct_product(const GroupPtr& g, const GroupPtr& h) {
  const int go = g->order(), ho = h->order(), order = go * ho;
  std::vector<int> table(static_cast<std::size_t>(order * order));
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b)
      table[static_cast<std::size_t>(a * order + b)] = g->mul(a % go, b % go) + go * h->mul(a / go, b / go);

  std::vector<int> gens;
  std::vector<std::string> names = g->generator_names();
  for (int x : g->generators()) gens.push_back(x);
  for (int x : h->generators()) gens.push_back(go * x);
  std::set<std::string> used(names.begin(), names.end());
  const std::vector<std::string> spare{"z", "w", "u", "v", "t", "s", "a", "b", "c", "d"};
  for (const auto& n : h->generator_names()) {
    std::string chosen = n;
    if (used.count(chosen)) {
      chosen.clear();
      for (const auto& s : spare)
        if (!used.count(s)) {
          chosen = s;
          break;
        }
      for (int k = 0; chosen.empty(); ++k)
        if (!used.count("g" + std::to_string(k))) chosen = "g" + std::to_string(k);
    }
    used.insert(chosen);
    names.push_back(chosen);
  }

  const int shift = g->num_generators();
  auto shifted = [shift](Word w) {
    for (auto& l : w) l.generator += shift;
    return w;
  };
  std::vector<Word> relators = g->relators();
  for (const auto& r : h->relators()) relators.push_back(shifted(r));
  for (int i = 0; i < g->num_generators(); ++i)
    for (int j = 0; j < h->num_generators(); ++j)
      relators.push_back(Word{{i, 1}, {shift + j, 1}, {i, -1}, {shift + j, -1}});

  std::vector<Word> words;
  for (int b = 0; b < ho; ++b)
    for (int a = 0; a < go; ++a) words.push_back(detail::concat(g->word_for(a), shifted(h->word_for(b))));

  return std::make_shared<const Group>(g->name() + "x" + h->name(), order, std::move(table), std::move(gens),
                                       std::move(names), std::move(relators), std::move(words),
                                       std::max(Group::kDefaultOrderCap, order));
}

/// All g != 1 with g^2 = 1, in enumeration order.
inline std::vector<int> involution_list(const Group& g) {
  std::vector<int> out;
  for (int a = 1; a < g.order(); ++a)
    if (g.mul(a, a) == 0) out.push_back(a);
  return out;
}

/// Injective homomorphism from `subgroup` into `ambient`.
struct SubgroupEmbedding {
  GroupPtr subgroup;
  GroupPtr ambient;
  std::vector<int> image;

  /// Extends images of the subgroup's generators along normal-form words and
  /// checks that the result is an injective homomorphism.
  static SubgroupEmbedding from_generator_images(GroupPtr sub, GroupPtr amb, const std::vector<int>& gen_images) {
    if (static_cast<int>(gen_images.size()) != sub->num_generators())
      throw InvalidParameter("one image per subgroup generator required");
    SubgroupEmbedding e{sub, amb, std::vector<int>(static_cast<std::size_t>(sub->order()))};
    for (int g = 0; g < sub->order(); ++g) {
      int acc = 0;
      for (const auto& l : sub->word_for(g)) {
        int x = gen_images.at(static_cast<std::size_t>(l.generator));
        acc = amb->mul(acc, l.exponent > 0 ? x : amb->inv(x));
      }
      e.image[static_cast<std::size_t>(g)] = acc;
    }
    e.validate();
    return e;
  }

  void validate() const {
    if (image.size() != static_cast<std::size_t>(subgroup->order())) throw InvalidParameter("embedding size mismatch");
    if (image[0] != 0) throw InvalidParameter("embedding does not fix the identity");
    std::set<int> seen(image.begin(), image.end());
    if (seen.size() != image.size()) throw InvalidParameter("embedding is not injective");
    for (int a = 0; a < subgroup->order(); ++a)
      for (int b = 0; b < subgroup->order(); ++b)
        if (image[static_cast<std::size_t>(subgroup->mul(a, b))] !=
            ambient->mul(image[static_cast<std::size_t>(a)], image[static_cast<std::size_t>(b)]))
          throw InvalidParameter("embedding does not respect multiplication");
  }
};

/// Parses group descriptors such as "D8", "Q12", "C3", "Z2" and products
/// "D8xC2". D<m> is dihedral of order m, Q<m> generalized quaternion of order m.
inline GroupPtr parse_group_spec(std::string_view spec) {
  GroupPtr result;
  std::size_t pos = 0;
  while (pos <= spec.size()) {
    std::size_t end = spec.find('x', pos);
    if (end == std::string_view::npos) end = spec.size();
    std::string_view atom = spec.substr(pos, end - pos);
    if (atom.size() < 2) throw ParseError("expected group atom like D8, Q8 or C2", pos);
    char kind = atom[0];
    std::string digits(atom.substr(1));
    if (!std::all_of(digits.begin(), digits.end(), [](unsigned char c) { return std::isdigit(c); }) ||
        digits.size() > 6)
      throw ParseError("expected group order digits", pos + 1);
    int order = std::stoi(digits);
    GroupPtr g;
    switch (kind) {
      case 'D':
        if (order < 4 || order % 2) throw ParseError("dihedral order must be even and >= 4", pos + 1);
        g = build_dihedral(order / 2);
        break;
      case 'Q':
        if (order < 8 || order % 4) throw ParseError("quaternion order must be a multiple of 4 and >= 8", pos + 1);
        g = build_quaternion(order / 4);
        break;
      case 'C':
      case 'Z':
        if (order < 1) throw ParseError("cyclic order must be positive", pos + 1);
        g = build_cyclic(order);
        break;
      default:
        throw ParseError(std::string("unknown group kind '") + kind + "'", pos);
    }
    result = result ? direct_product(result, g) : g;
    if (end == spec.size()) break;
    pos = end + 1;
  }
  return result;
}

}  // namespace gammalat
