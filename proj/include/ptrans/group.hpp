#ifndef PTRANS_GROUP_HPP
#define PTRANS_GROUP_HPP

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <memory>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace ptrans {

/// One syllable g^k of a free word, k != 0 in normal form.
struct Syllable {
  std::string gen;
  std::int64_t exp = 1;

  friend auto operator<=>(const Syllable&, const Syllable&) = default;
  friend bool operator==(const Syllable&, const Syllable&) = default;
};

/// Freely reduced word: no zero exponent, no two adjacent syllables on the same generator.
using FreeWord = std::vector<Syllable>;

/// Element of Z/n, value in [0, n).
struct Residue {
  std::int64_t value = 0;
  friend auto operator<=>(const Residue&, const Residue&) = default;
};

/// Permutation of {1..n} in one-line form: images[i-1] = sigma(i).
struct Permutation {
  std::vector<int> images;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;
};

/// r^rotation s^reflection in the dihedral group of order 2n, with s r = r^-1 s.
struct DihedralElem {
  std::int64_t rotation = 0;
  bool reflection = false;
  friend auto operator<=>(const DihedralElem&, const DihedralElem&) = default;
};

/// Backend-tagged group element. Equality is normal-form identity, so
/// elements must only be produced by a Group (or a matching parse).
struct Element {
  std::variant<FreeWord, Residue, Permutation, DihedralElem, std::vector<Element>> value;

  friend bool operator==(const Element& a, const Element& b) { return a.value == b.value; }
  friend bool operator<(const Element& a, const Element& b) { return a.value < b.value; }
  friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }
};

class GroupError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised by operations that need to enumerate an infinite group.
class InfiniteBackend : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Freely reduces a raw syllable sequence (stack-based, so one pass).
inline FreeWord free_reduce(const std::vector<Syllable>& raw)
{
  FreeWord out;
  for (const auto& s : raw) {
    if (s.exp == 0)
      continue;
    if (!out.empty() && out.back().gen == s.gen) {
      out.back().exp += s.exp;
      if (out.back().exp == 0)
        out.pop_back();
    } else {
      out.push_back(s);
    }
  }
  return out;
}

/// A concrete symmetry group. Operations take and return Elements in
/// normal form; elements of another backend are rejected.
///
/// Product convention: for permutations (a*b)(i) = a(b(i)), so that
/// (1 2)*(2 3) = (1 2 3). Every other backend is written multiplicatively
/// in the obvious way.
class Group {
 public:
  enum class Kind { free, cyclic, symmetric, dihedral, product };

  static Group free(std::vector<std::string> generators)
  {
    std::set<std::string> seen;
    for (const auto& g : generators) {
      if (!valid_identifier(g))
        throw GroupError("invalid generator name '" + g + "'");
      if (g == "e")
        throw GroupError("'e' is reserved for the identity");
      if (!seen.insert(g).second)
        throw GroupError("duplicate generator " + g);
    }
    Group out(Kind::free);
    out.generators_ = std::move(generators);
    return out;
  }
  static Group cyclic(std::int64_t n)
  {
    if (n < 1)
      throw GroupError("cyclic group order must be >= 1");
    Group out(Kind::cyclic);
    out.n_ = n;
    return out;
  }
  static Group symmetric(std::int64_t n)
  {
    if (n < 1)
      throw GroupError("symmetric group degree must be >= 1");
    Group out(Kind::symmetric);
    out.n_ = n;
    return out;
  }
  static Group dihedral(std::int64_t n)
  {
    if (n < 1)
      throw GroupError("dihedral group needs n >= 1");
    Group out(Kind::dihedral);
    out.n_ = n;
    return out;
  }
  static Group product(std::vector<Group> factors)
  {
    if (factors.empty())
      throw GroupError("product needs at least one factor");
    Group out(Kind::product);
    out.factors_ = std::make_shared<const std::vector<Group>>(std::move(factors));
    return out;
  }

  Kind kind() const { return kind_; }
  /// Modulus, degree or dihedral n.
  std::int64_t n() const { return n_; }
  const std::vector<std::string>& free_generators() const { return generators_; }
  const std::vector<Group>& factors() const { return *factors_; }

  /// Free group with the extra generator names appended (existing ones kept).
  Group with_generators(const std::vector<std::string>& extra) const
  {
    if (kind_ != Kind::free)
      throw GroupError("only free groups can gain generators");
    std::vector<std::string> gens = generators_;
    for (const auto& g : extra)
      if (std::find(gens.begin(), gens.end(), g) == gens.end())
        gens.push_back(g);
    return free(std::move(gens));
  }

  bool is_finite() const
  {
    switch (kind_) {
      case Kind::free: return generators_.empty();
      case Kind::product:
        return std::all_of(factors_->begin(), factors_->end(),
                           [](const Group& g) { return g.is_finite(); });
      default: return true;
    }
  }

  std::optional<std::uint64_t> order() const
  {
    switch (kind_) {
      case Kind::free:
        if (generators_.empty())
          return 1;
        return std::nullopt;
      case Kind::cyclic: return static_cast<std::uint64_t>(n_);
      case Kind::symmetric: {
        std::uint64_t f = 1;
        for (std::int64_t i = 2; i <= n_; ++i)
          f *= static_cast<std::uint64_t>(i);
        return f;
      }
      case Kind::dihedral: return static_cast<std::uint64_t>(2 * n_);
      case Kind::product: {
        std::uint64_t total = 1;
        for (const auto& g : *factors_) {
          auto o = g.order();
          if (!o)
            return std::nullopt;
          total *= *o;
        }
        return total;
      }
    }
    return std::nullopt;
  }

  Element identity() const
  {
    switch (kind_) {
      case Kind::free: return {FreeWord{}};
      case Kind::cyclic: return {Residue{0}};
      case Kind::symmetric: {
        Permutation p;
        p.images.resize(static_cast<std::size_t>(n_));
        std::iota(p.images.begin(), p.images.end(), 1);
        return {p};
      }
      case Kind::dihedral: return {DihedralElem{}};
      case Kind::product: {
        std::vector<Element> parts;
        for (const auto& g : *factors_)
          parts.push_back(g.identity());
        return {parts};
      }
    }
    return {};
  }

  /// Free generator as an element.
  Element generator(const std::string& name) const
  {
    if (kind_ != Kind::free)
      throw GroupError("generator() is only defined for free groups");
    if (std::find(generators_.begin(), generators_.end(), name) == generators_.end())
      throw GroupError("unknown generator " + name);
    return {FreeWord{{name, 1}}};
  }

  Element multiply(const Element& a, const Element& b) const
  {
    check(a);
    check(b);
    switch (kind_) {
      case Kind::free: {
        const auto& x = std::get<FreeWord>(a.value);
        const auto& y = std::get<FreeWord>(b.value);
        std::vector<Syllable> raw = x;
        raw.insert(raw.end(), y.begin(), y.end());
        return {free_reduce(raw)};
      }
      case Kind::cyclic:
        return {Residue{(std::get<Residue>(a.value).value + std::get<Residue>(b.value).value) % n_}};
      case Kind::symmetric: {
        const auto& p = std::get<Permutation>(a.value).images;
        const auto& q = std::get<Permutation>(b.value).images;
        Permutation r;
        r.images.resize(p.size());
        for (std::size_t i = 0; i < p.size(); ++i)
          r.images[i] = p[static_cast<std::size_t>(q[i] - 1)];
        return {r};
      }
      case Kind::dihedral: {
        const auto& x = std::get<DihedralElem>(a.value);
        const auto& y = std::get<DihedralElem>(b.value);
        std::int64_t rot = x.rotation + (x.reflection ? -y.rotation : y.rotation);
        return {DihedralElem{mod(rot), x.reflection != y.reflection}};
      }
      case Kind::product: {
        const auto& x = std::get<std::vector<Element>>(a.value);
        const auto& y = std::get<std::vector<Element>>(b.value);
        std::vector<Element> parts;
        for (std::size_t i = 0; i < factors_->size(); ++i)
          parts.push_back((*factors_)[i].multiply(x[i], y[i]));
        return {parts};
      }
    }
    return {};
  }

  Element inverse(const Element& a) const
  {
    check(a);
    switch (kind_) {
      case Kind::free: {
        const auto& x = std::get<FreeWord>(a.value);
        FreeWord out;
        for (auto it = x.rbegin(); it != x.rend(); ++it)
          out.push_back({it->gen, -it->exp});
        return {out};
      }
      case Kind::cyclic: return {Residue{mod(-std::get<Residue>(a.value).value)}};
      case Kind::symmetric: {
        const auto& p = std::get<Permutation>(a.value).images;
        Permutation r;
        r.images.resize(p.size());
        for (std::size_t i = 0; i < p.size(); ++i)
          r.images[static_cast<std::size_t>(p[i] - 1)] = static_cast<int>(i + 1);
        return {r};
      }
      case Kind::dihedral: {
        const auto& x = std::get<DihedralElem>(a.value);
        if (x.reflection)
          return a;
        return {DihedralElem{mod(-x.rotation), false}};
      }
      case Kind::product: {
        const auto& x = std::get<std::vector<Element>>(a.value);
        std::vector<Element> parts;
        for (std::size_t i = 0; i < factors_->size(); ++i)
          parts.push_back((*factors_)[i].inverse(x[i]));
        return {parts};
      }
    }
    return {};
  }

  /// Left-to-right product of a sequence; identity for an empty one.
  Element product_of(const std::vector<Element>& xs) const
  {
    Element acc = identity();
    for (const auto& x : xs)
      acc = multiply(acc, x);
    return acc;
  }

  Element power(const Element& a, std::int64_t k) const
  {
    if (auto ord = order(); ord && *ord > 0) {
      const auto m = static_cast<std::int64_t>(*ord);
      k = ((k % m) + m) % m;
    }
    Element base = k < 0 ? inverse(a) : a;
    Element acc = identity();
    for (std::int64_t i = 0; i < (k < 0 ? -k : k); ++i)
      acc = multiply(acc, base);
    return acc;
  }

  bool is_identity(const Element& a) const { return a == identity(); }

  /// True iff `a` is a well-formed normal-form element of this group.
  bool contains(const Element& a) const
  {
    switch (kind_) {
      case Kind::free: {
        const auto* w = std::get_if<FreeWord>(&a.value);
        if (!w)
          return false;
        for (std::size_t i = 0; i < w->size(); ++i) {
          const auto& s = (*w)[i];
          if (s.exp == 0 || (i > 0 && (*w)[i - 1].gen == s.gen))
            return false;
          if (std::find(generators_.begin(), generators_.end(), s.gen) == generators_.end())
            return false;
        }
        return true;
      }
      case Kind::cyclic: {
        const auto* r = std::get_if<Residue>(&a.value);
        return r && r->value >= 0 && r->value < n_;
      }
      case Kind::symmetric: {
        const auto* p = std::get_if<Permutation>(&a.value);
        if (!p || p->images.size() != static_cast<std::size_t>(n_))
          return false;
        std::vector<bool> hit(p->images.size(), false);
        for (int v : p->images) {
          if (v < 1 || v > n_ || hit[static_cast<std::size_t>(v - 1)])
            return false;
          hit[static_cast<std::size_t>(v - 1)] = true;
        }
        return true;
      }
      case Kind::dihedral: {
        const auto* d = std::get_if<DihedralElem>(&a.value);
        return d && d->rotation >= 0 && d->rotation < n_;
      }
      case Kind::product: {
        const auto* v = std::get_if<std::vector<Element>>(&a.value);
        if (!v || v->size() != factors_->size())
          return false;
        for (std::size_t i = 0; i < v->size(); ++i)
          if (!(*factors_)[i].contains((*v)[i]))
            return false;
        return true;
      }
    }
    return false;
  }

  /// All elements, identity first. Symmetric groups are capped at degree 8.
  std::vector<Element> elements() const
  {
    std::vector<Element> out;
    switch (kind_) {
      case Kind::free:
        if (!generators_.empty())
          throw InfiniteBackend("free group of rank " + std::to_string(generators_.size()) +
                                " is infinite");
        out.push_back(identity());
        break;
      case Kind::cyclic:
        for (std::int64_t i = 0; i < n_; ++i)
          out.push_back({Residue{i}});
        break;
      case Kind::symmetric: {
        if (n_ > 8)
          throw InfiniteBackend("refusing to enumerate S_" + std::to_string(n_));
        Permutation p = std::get<Permutation>(identity().value);
        do {
          out.push_back({p});
        } while (std::next_permutation(p.images.begin(), p.images.end()));
        break;
      }
      case Kind::dihedral:
        for (bool refl : {false, true})
          for (std::int64_t i = 0; i < n_; ++i)
            out.push_back({DihedralElem{i, refl}});
        break;
      case Kind::product: {
        std::vector<std::vector<Element>> per;
        for (const auto& g : *factors_)
          per.push_back(g.elements());
        std::vector<std::vector<Element>> acc{{}};
        for (const auto& choices : per) {
          std::vector<std::vector<Element>> grown;
          for (const auto& prefix : acc)
            for (const auto& c : choices) {
              auto next = prefix;
              next.push_back(c);
              grown.push_back(std::move(next));
            }
          acc = std::move(grown);
        }
        for (auto& parts : acc)
          out.push_back({std::move(parts)});
        break;
      }
    }
    return out;
  }

  /// A generating set. For free groups, the free generators.
  std::vector<Element> generating_set() const
  {
    std::vector<Element> out;
    switch (kind_) {
      case Kind::free:
        for (const auto& g : generators_)
          out.push_back(generator(g));
        break;
      case Kind::cyclic:
        if (n_ > 1)
          out.push_back({Residue{1}});
        break;
      case Kind::symmetric:
        if (n_ >= 2) {
          Permutation t = std::get<Permutation>(identity().value);
          std::swap(t.images[0], t.images[1]);
          out.push_back({t});
          Permutation c;
          for (std::int64_t i = 0; i < n_; ++i)
            c.images.push_back(static_cast<int>((i + 1) % n_ + 1));
          out.push_back({c});
        }
        break;
      case Kind::dihedral:
        out.push_back({DihedralElem{n_ > 1 ? 1 : 0, false}});
        out.push_back({DihedralElem{0, true}});
        break;
      case Kind::product:
        for (std::size_t i = 0; i < factors_->size(); ++i) {
          for (const auto& g : (*factors_)[i].generating_set()) {
            Element e = identity();
            std::get<std::vector<Element>>(e.value)[i] = g;
            out.push_back(e);
          }
        }
        break;
    }
    return out;
  }

  Element parse(std::string_view text) const;
  std::string format(const Element& a) const;

  friend bool operator==(const Group& a, const Group& b)
  {
    if (a.kind_ != b.kind_ || a.n_ != b.n_ || a.generators_ != b.generators_)
      return false;
    if (a.kind_ == Kind::product)
      return *a.factors_ == *b.factors_;
    return true;
  }

  static bool valid_identifier(std::string_view s)
  {
    if (s.empty())
      return false;
    auto head = static_cast<unsigned char>(s[0]);
    if (!(std::isalpha(head) || head == '_' || head >= 0x80))
      return false;
    return std::all_of(s.begin(), s.end(), [](char ch) {
      auto u = static_cast<unsigned char>(ch);
      return std::isalnum(u) || u == '_' || u >= 0x80;
    });
  }

 private:
  explicit Group(Kind k) : kind_(k) {}

  std::int64_t mod(std::int64_t v) const { return ((v % n_) + n_) % n_; }

  void check(const Element& a) const
  {
    bool ok = false;
    switch (kind_) {
      case Kind::free: ok = std::holds_alternative<FreeWord>(a.value); break;
      case Kind::cyclic: ok = std::holds_alternative<Residue>(a.value); break;
      case Kind::symmetric:
        ok = std::holds_alternative<Permutation>(a.value) &&
             std::get<Permutation>(a.value).images.size() == static_cast<std::size_t>(n_);
        break;
      case Kind::dihedral: ok = std::holds_alternative<DihedralElem>(a.value); break;
      case Kind::product:
        ok = std::holds_alternative<std::vector<Element>>(a.value) &&
             std::get<std::vector<Element>>(a.value).size() == factors_->size();
        break;
    }
    if (!ok)
      throw GroupError("element does not belong to this group's backend");
  }

  Kind kind_;
  std::int64_t n_ = 0;
  std::vector<std::string> generators_;
  std::shared_ptr<const std::vector<Group>> factors_;
};

namespace detail {

/// Minimal recursive-descent scanner over element text.
class ElementScanner {
 public:
  explicit ElementScanner(std::string_view text) : text_(text) {}

  void skip_ws()
  {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }
  bool at_end()
  {
    skip_ws();
    return pos_ >= text_.size();
  }
  char peek()
  {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char ch)
  {
    if (peek() == ch) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char ch)
  {
    if (!accept(ch))
      fail(std::string("expected '") + ch + "'");
  }
  std::string identifier()
  {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size()) {
      auto u = static_cast<unsigned char>(text_[pos_]);
      if (std::isalnum(u) || u == '_' || u >= 0x80)
        ++pos_;
      else
        break;
    }
    std::string id(text_.substr(start, pos_ - start));
    if (!Group::valid_identifier(id))
      fail("expected a generator name");
    return id;
  }
  std::int64_t integer()
  {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+'))
      ++pos_;
    std::size_t digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (pos_ == digits)
      fail("expected an integer");
    try {
      return std::stoll(std::string(text_.substr(start, pos_ - start)));
    } catch (const std::out_of_range&) {
      fail("integer out of range");
    }
    return 0;
  }
  /// Raw text up to the matching close bracket at depth 0, or a top-level ','.
  std::string_view balanced_until_separator()
  {
    skip_ws();
    std::size_t start = pos_;
    int depth = 0;
    while (pos_ < text_.size()) {
      char ch = text_[pos_];
      if (ch == '(' || ch == '[' || ch == '<')
        ++depth;
      else if (ch == ')' || ch == ']' || ch == '>') {
        if (depth == 0)
          break;
        --depth;
      } else if (ch == ',' && depth == 0)
        break;
      ++pos_;
    }
    return text_.substr(start, pos_ - start);
  }
  [[noreturn]] void fail(const std::string& what) const
  {
    throw GroupError("syntax error at column " + std::to_string(pos_ + 1) + " in '" +
                     std::string(text_) + "': " + what);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

/// gen ('^' int)? ('*' gen ('^' int)?)* with 'e' as an identity factor.
inline std::vector<Syllable> parse_word(ElementScanner& sc)
{
  std::vector<Syllable> raw;
  do {
    std::string gen = sc.identifier();
    std::int64_t exp = 1;
    if (sc.accept('^'))
      exp = sc.integer();
    if (gen != "e")
      raw.push_back({gen, exp});
  } while (sc.accept('*'));
  return raw;
}

}  // namespace detail

/// Element grammar per backend:
///   free       x*y^-1*x^2, or e
///   cyclic     an integer in [0, n), or e
///   symmetric  cycles "(1 2 3)(4 5)", one-line "[2,3,1]", or e
///   dihedral   a word in r and s, e.g. "r^2*s", or e
///   product    "<a, b, ...>" with one entry per factor
inline Element Group::parse(std::string_view text) const
{
  detail::ElementScanner sc(text);
  Element out;
  switch (kind_) {
    case Kind::free: {
      auto raw = detail::parse_word(sc);
      for (const auto& s : raw)
        if (std::find(generators_.begin(), generators_.end(), s.gen) == generators_.end())
          throw GroupError("unknown generator '" + s.gen + "'");
      out = {free_reduce(raw)};
      break;
    }
    case Kind::cyclic: {
      if (sc.peek() == 'e') {
        sc.identifier();
        out = identity();
        break;
      }
      std::int64_t v = sc.integer();
      if (v < 0 || v >= n_)
        throw GroupError("residue " + std::to_string(v) + " out of range [0, " + std::to_string(n_) +
                         ")");
      out = {Residue{v}};
      break;
    }
    case Kind::symmetric: {
      if (sc.peek() == 'e') {
        sc.identifier();
        out = identity();
        break;
      }
      if (sc.accept('[')) {
        Permutation p;
        if (!sc.accept(']')) {
          do {
            p.images.push_back(static_cast<int>(sc.integer()));
          } while (sc.accept(','));
          sc.expect(']');
        }
        out = {p};
        if (!contains(out))
          throw GroupError("'" + std::string(text) + "' is not a permutation of 1.." +
                           std::to_string(n_));
        break;
      }
      out = identity();
      while (sc.accept('(')) {
        std::vector<int> cycle;
        while (!sc.accept(')')) {
          if (sc.at_end())
            sc.fail("unterminated cycle");
          std::int64_t v = sc.integer();
          if (v < 1 || v > n_)
            throw GroupError("point " + std::to_string(v) + " out of range 1.." + std::to_string(n_));
          if (std::find(cycle.begin(), cycle.end(), v) != cycle.end())
            throw GroupError("point " + std::to_string(v) + " repeated in a cycle");
          cycle.push_back(static_cast<int>(v));
          sc.accept(',');
        }
        Permutation c = std::get<Permutation>(identity().value);
        for (std::size_t i = 0; i < cycle.size(); ++i)
          c.images[static_cast<std::size_t>(cycle[i] - 1)] = cycle[(i + 1) % cycle.size()];
        out = multiply(out, {c});
      }
      break;
    }
    case Kind::dihedral: {
      Element acc = identity();
      for (const auto& s : detail::parse_word(sc)) {
        Element base;
        if (s.gen == "r")
          base = {DihedralElem{n_ > 1 ? 1 : 0, false}};
        else if (s.gen == "s")
          base = {DihedralElem{0, true}};
        else
          throw GroupError("unknown dihedral generator '" + s.gen + "' (use r, s)");
        acc = multiply(acc, power(base, s.exp));
      }
      out = acc;
      break;
    }
    case Kind::product: {
      if (sc.peek() == 'e') {
        sc.identifier();
        out = identity();
        break;
      }
      sc.expect('<');
      std::vector<Element> parts;
      for (std::size_t i = 0; i < factors_->size(); ++i) {
        if (i)
          sc.expect(',');
        parts.push_back((*factors_)[i].parse(sc.balanced_until_separator()));
      }
      sc.expect('>');
      out = {parts};
      break;
    }
  }
  if (!sc.at_end())
    sc.fail("trailing characters");
  return out;
}

inline std::string Group::format(const Element& a) const
{
  check(a);
  if (kind_ != Kind::product && is_identity(a))
    return "e";
  switch (kind_) {
    case Kind::free: {
      std::string out;
      for (const auto& s : std::get<FreeWord>(a.value)) {
        if (!out.empty())
          out += '*';
        out += s.gen;
        if (s.exp != 1)
          out += '^' + std::to_string(s.exp);
      }
      return out;
    }
    case Kind::cyclic: return std::to_string(std::get<Residue>(a.value).value);
    case Kind::symmetric: {
      const auto& p = std::get<Permutation>(a.value).images;
      std::vector<bool> done(p.size(), false);
      std::string out;
      for (std::size_t i = 0; i < p.size(); ++i) {
        if (done[i] || p[i] == static_cast<int>(i + 1))
          continue;
        out += '(';
        std::size_t j = i;
        bool first = true;
        while (!done[j]) {
          done[j] = true;
          if (!first)
            out += ' ';
          out += std::to_string(j + 1);
          first = false;
          j = static_cast<std::size_t>(p[j] - 1);
        }
        out += ')';
      }
      return out;
    }
    case Kind::dihedral: {
      const auto& d = std::get<DihedralElem>(a.value);
      std::string out;
      if (d.rotation == 1)
        out = "r";
      else if (d.rotation != 0)
        out = "r^" + std::to_string(d.rotation);
      if (d.reflection)
        out += out.empty() ? "s" : "*s";
      return out;
    }
    case Kind::product: {
      const auto& parts = std::get<std::vector<Element>>(a.value);
      std::string out = "<";
      for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i)
          out += ", ";
        out += (*factors_)[i].format(parts[i]);
      }
      return out + ">";
    }
  }
  return {};
}

/// Exactly the elements commuting with a generating set.
inline std::vector<Element> center(const Group& g)
{
  if (!g.is_finite())
    throw InfiniteBackend("center: infinite backend");
  const auto gens = g.generating_set();
  std::vector<Element> out;
  for (const auto& z : g.elements()) {
    bool central = std::all_of(gens.begin(), gens.end(), [&](const Element& u) {
      return g.multiply(z, u) == g.multiply(u, z);
    });
    if (central)
      out.push_back(z);
  }
  return out;
}

/// Uniform element for finite groups; for free groups a random reduced word
/// built from at most max_free_length raw letters.
template <class Rng>
Element random_element(const Group& g, Rng& rng, std::size_t max_free_length = 16)
{
  switch (g.kind()) {
    case Group::Kind::free: {
      const auto& gens = g.free_generators();
      if (gens.empty())
        return g.identity();
      std::uniform_int_distribution<std::size_t> len(0, max_free_length);
      std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
      std::bernoulli_distribution sign(0.5);
      std::vector<Syllable> raw;
      for (std::size_t i = 0, n = len(rng); i < n; ++i)
        raw.push_back({gens[pick(rng)], sign(rng) ? 1 : -1});
      return {free_reduce(raw)};
    }
    case Group::Kind::cyclic: {
      std::uniform_int_distribution<std::int64_t> d(0, g.n() - 1);
      return {Residue{d(rng)}};
    }
    case Group::Kind::symmetric: {
      Permutation p = std::get<Permutation>(g.identity().value);
      std::shuffle(p.images.begin(), p.images.end(), rng);
      return {p};
    }
    case Group::Kind::dihedral: {
      std::uniform_int_distribution<std::int64_t> d(0, g.n() - 1);
      std::bernoulli_distribution refl(0.5);
      return {DihedralElem{d(rng), refl(rng)}};
    }
    case Group::Kind::product: {
      std::vector<Element> parts;
      for (const auto& f : g.factors())
        parts.push_back(random_element(f, rng, max_free_length));
      return {parts};
    }
  }
  return g.identity();
}

}  // namespace ptrans

#endif  // PTRANS_GROUP_HPP
