#ifndef PTRANS_SWEEP_HPP
#define PTRANS_SWEEP_HPP

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bundle.hpp"
#include "edge_path.hpp"
#include "group.hpp"
#include "scheme.hpp"
#include "simplicial.hpp"

namespace ptrans {

class MissingCell : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Identification between two cell symbols: lhs = rhs or lhs = rhs^-1.
struct CellRelation {
  enum class Kind { equal, inverse };
  std::string lhs;
  std::string rhs;
  Kind kind = Kind::equal;
};

/// Connection1 plus 2-cell data: φ_acb for alpha cells named "a.c.b" and,
/// optionally, independent beta values named "c.a.b.c". Starred cells are
/// never stored; their value is the inverse. Cells on the same face with
/// different markings are unrelated unless a relation says otherwise.
class Connection2 {
 public:
  Connection2(Connection1 base, const std::map<std::string, Element>& cells,
              std::vector<CellRelation> relations = {})
      : base_(std::move(base)), relations_(std::move(relations))
  {
    for (const auto& [name, value] : cells) {
      auto corners = checked_corners(name);
      if (!group().contains(value))
        throw std::invalid_argument("cell " + name + " value is not in the group");
      if (!cells_.emplace(join_cell_name(corners), value).second)
        throw std::invalid_argument("cell " + name + " given twice");
    }
    for (auto& r : relations_) {
      r.lhs = join_cell_name(checked_corners(r.lhs));
      r.rhs = join_cell_name(checked_corners(r.rhs));
      auto l = cells_.find(r.lhs);
      auto rr = cells_.find(r.rhs);
      if (l != cells_.end() && rr != cells_.end() && l->second != related(rr->second, r.kind))
        throw std::invalid_argument("cell relation " + r.lhs + " ~ " + r.rhs +
                                    " contradicts the given values");
    }
  }

  /// Every cell without a value reads as identity.
  static Connection2 flat(Connection1 base) { return Connection2(std::move(base), true); }

  const Connection1& base() const { return base_; }
  const Group& group() const { return base_.group(); }
  const SimplicialComplex& complex() const { return base_.complex(); }
  const std::map<std::string, Element>& cells() const { return cells_; }
  const std::vector<CellRelation>& relations() const { return relations_; }

  /// Stored value, else one derived through a single relation, else nullopt.
  std::optional<Element> cell_value(const std::string& dotted) const
  {
    if (auto it = cells_.find(dotted); it != cells_.end())
      return it->second;
    for (const auto& r : relations_) {
      if (r.lhs == dotted)
        if (auto it = cells_.find(r.rhs); it != cells_.end())
          return related(it->second, r.kind);
      if (r.rhs == dotted)
        if (auto it = cells_.find(r.lhs); it != cells_.end())
          return related(it->second, r.kind);
    }
    return std::nullopt;
  }

  /// φ_acb. Cells with no value are identity only in a flat connection.
  Element alpha_value(const VertexId& a, const VertexId& c, const VertexId& b) const
  {
    if (!complex().has_triangle(a, b, c))
      throw MoveError("cell not supported: {" + a + "," + b + "," + c + "} is not a 2-simplex");
    if (auto v = cell_value(join_cell_name({a, c, b})))
      return *v;
    if (flat_default_)
      return group().identity();
    throw MissingCell("no value for cell " + join_cell_name({a, c, b}));
  }

  struct BetaValue {
    Element value;
    bool independent;  // supplied directly rather than derived from the alpha cell
  };

  /// Value of the beta cell (cabc): a supplied "c.a.b.c", else φ_abc.
  BetaValue beta_value(const VertexId& c, const VertexId& a, const VertexId& b) const
  {
    if (auto v = cell_value(join_cell_name({c, a, b, c})))
      return {*v, true};
    return {alpha_value(a, b, c), false};
  }

  bool flat_default() const { return flat_default_; }

 private:
  Connection2(Connection1 base, bool flat) : base_(std::move(base)), flat_default_(flat) {}

  std::vector<VertexId> checked_corners(const std::string& name) const
  {
    auto corners = split_cell_name(name);
    if (corners.size() == 4 && corners[0] == corners[3]) {
      if (!complex().has_triangle(corners[0], corners[1], corners[2]))
        throw std::invalid_argument("beta cell " + name + " is not on a 2-simplex");
    } else if (corners.size() == 3) {
      if (!complex().has_triangle(corners[0], corners[1], corners[2]))
        throw std::invalid_argument("cell " + name + " is not on a 2-simplex");
    } else {
      throw std::invalid_argument("malformed cell name '" + name + "'");
    }
    return corners;
  }

  Element related(const Element& v, CellRelation::Kind k) const
  {
    return k == CellRelation::Kind::inverse ? group().inverse(v) : v;
  }

  Connection1 base_;
  std::map<std::string, Element> cells_;
  std::vector<CellRelation> relations_;
  bool flat_default_ = false;
};

/// A word of group elements over an edge-path, one letter per step.
struct Section {
  EdgePath path;
  std::vector<Element> letters;

  Section(EdgePath p, std::vector<Element> l) : path(std::move(p)), letters(std::move(l))
  {
    if (letters.size() != path.size())
      throw std::invalid_argument("section has " + std::to_string(letters.size()) +
                                  " letters for a path of " + std::to_string(path.size()) + " steps");
  }

  friend bool operator==(const Section&, const Section&) = default;
};

/// Letter placement for alpha_expand. word_calculus: w -> (w, φ), the form
/// of the worked tetrahedron sweeps. identity_first: w -> (e, w φ), the new
/// letter over (a,c) being an identity arrow. Both are exact right inverses
/// of alpha_merge and differ by a gauge at the apex.
enum class ExpandConvention { word_calculus, identity_first };

class SweepError : public std::runtime_error {
 public:
  SweepError(std::size_t step, const std::string& what)
      : std::runtime_error("step " + std::to_string(step) + ": " + what), step_(step)
  {
  }
  std::size_t step() const { return step_; }

 private:
  std::size_t step_;
};

/// Applies one move to a section. Letters outside the move's splice are untouched.
///
///   alpha_expand (acb)  w        -> (w, φ_acb)     [or (e, w φ_acb)]
///   alpha_merge  (acb)  (u, v)   -> u v φ_acb^-1
///   beta_expand  (cabc) w        -> (e, w, φ_β)
///   beta_merge   (cabc) (u,v,t)  -> u v t φ_β^-1
///   x1_insert / deg_insert       -> identity letters
///   x1_cancel / deg_drop         -> removed letters folded into a neighbour
inline Section apply_move(const Section& s, const HomotopyStep& m, const Connection2& C,
                          ExpandConvention conv = ExpandConvention::word_calculus)
{
  const Group& g = C.group();
  const Splice sp = plan_move(s.path, m, C.complex());
  const auto& L = s.letters;
  const std::size_t i = m.position;
  std::vector<Element> repl;

  switch (m.move) {
    case MoveKind::alpha_expand: {
      Element phi = C.alpha_value(m.cell[0], m.cell[1], m.cell[2]);
      if (conv == ExpandConvention::word_calculus)
        repl = {L[i], phi};
      else
        repl = {g.identity(), g.multiply(L[i], phi)};
      break;
    }
    case MoveKind::alpha_merge: {
      Element phi = C.alpha_value(m.cell[0], m.cell[1], m.cell[2]);
      repl = {g.multiply(g.multiply(L[i], L[i + 1]), g.inverse(phi))};
      break;
    }
    case MoveKind::beta_expand: {
      Element phi = C.beta_value(m.cell[0], m.cell[1], m.cell[2]).value;
      repl = {g.identity(), L[i], phi};
      break;
    }
    case MoveKind::beta_merge: {
      Element phi = C.beta_value(m.cell[0], m.cell[1], m.cell[2]).value;
      repl = {g.multiply(g.product_of({L[i], L[i + 1], L[i + 2]}), g.inverse(phi))};
      break;
    }
    case MoveKind::x1_insert: repl = {g.identity(), g.identity()}; break;
    case MoveKind::deg_insert: repl = {g.identity()}; break;
    case MoveKind::x1_cancel:
    case MoveKind::deg_drop:
      // the splice already spans the folded neighbour, if any
      repl = {g.product_of(std::vector<Element>(L.begin() + static_cast<std::ptrdiff_t>(sp.lo),
                                                L.begin() + static_cast<std::ptrdiff_t>(sp.hi)))};
      break;
  }

  std::vector<Element> letters(L.begin(), L.begin() + static_cast<std::ptrdiff_t>(sp.lo));
  letters.insert(letters.end(), repl.begin(), repl.end());
  letters.insert(letters.end(), L.begin() + static_cast<std::ptrdiff_t>(sp.hi), L.end());
  return Section(apply_splice(s.path, sp), std::move(letters));
}

inline Section alpha_expand(const Section& s, const VertexId& a, const VertexId& c, const VertexId& b,
                            std::size_t position, const Connection2& C,
                            ExpandConvention conv = ExpandConvention::word_calculus)
{
  return apply_move(s, {MoveKind::alpha_expand, {a, c, b}, position}, C, conv);
}

inline Section alpha_merge(const Section& s, const VertexId& a, const VertexId& c, const VertexId& b,
                           std::size_t position, const Connection2& C)
{
  return apply_move(s, {MoveKind::alpha_merge, {a, c, b}, position}, C);
}

inline Section beta_expand(const Section& s, const VertexId& c, const VertexId& a, const VertexId& b,
                           const Connection2& C, std::size_t position = 0)
{
  return apply_move(s, {MoveKind::beta_expand, {c, a, b, c}, position}, C);
}

inline Section beta_merge(const Section& s, const VertexId& c, const VertexId& a, const VertexId& b,
                          const Connection2& C, std::size_t position = 0)
{
  return apply_move(s, {MoveKind::beta_merge, {c, a, b, c}, position}, C);
}

struct SweepTrace {
  SweepScheme scheme;
  std::vector<Section> sections;  // s_0 .. s_n
  std::vector<std::string> notes;

  const Section& final_section() const { return sections.back(); }
};

/// The sweeping functor of a scheme applied to s0: each move in order.
inline SweepTrace run_scheme(const Section& s0, const SweepScheme& scheme, const Connection2& C,
                             ExpandConvention conv = ExpandConvention::word_calculus)
{
  if (s0.path != scheme.start)
    throw SweepError(0, "section path " + to_string(s0.path) + " differs from scheme start " +
                            to_string(scheme.start));
  if (!C.complex().supports(scheme.start))
    throw SweepError(0, "start path " + to_string(scheme.start) + " is not in the complex");
  SweepTrace trace{scheme, {s0}, {}};
  std::set<std::string> flagged;
  for (std::size_t n = 0; n < scheme.steps.size(); ++n) {
    const auto& m = scheme.steps[n];
    try {
      trace.sections.push_back(apply_move(trace.sections.back(), m, C, conv));
    } catch (const std::exception& e) {
      throw SweepError(n, e.what());
    }
    if ((m.move == MoveKind::beta_expand || m.move == MoveKind::beta_merge) &&
        C.beta_value(m.cell[0], m.cell[1], m.cell[2]).independent &&
        flagged.insert(join_cell_name(m.cell)).second)
      trace.notes.push_back("beta cell " + join_cell_name(m.cell) +
                            " uses an independently supplied value");
  }
  return trace;
}

/// Letter over (p,q) becomes n_p^-1 * letter * n_q; vertices outside n are fixed.
inline Section twist(const Section& s, const GaugeTransform& n, const Group& g)
{
  auto at = [&](const VertexId& v) {
    auto it = n.find(v);
    return it == n.end() ? g.identity() : it->second;
  };
  std::vector<Element> letters;
  for (std::size_t i = 0; i < s.path.size(); ++i)
    letters.push_back(g.multiply(g.multiply(g.inverse(at(s.path[i].from)), s.letters[i]),
                                 at(s.path[i].to)));
  return Section(s.path, std::move(letters));
}

/// Path vertices other than the two endpoints, sorted.
inline std::set<VertexId> interior_vertices(const EdgePath& p)
{
  std::set<VertexId> out;
  for (const auto& v : p.vertices())
    if (v != p.source() && v != p.target())
      out.insert(v);
  return out;
}

struct DefectReport {
  EdgePath path;
  std::vector<Element> defects;  // g_i = initial_i^-1 * final_i after the gauge
  GaugeTransform gauge_used;
};

/// Letterwise defects of `final` against `initial`. With no gauge given the
/// canonical one is used: identity on every interior vertex.
inline DefectReport two_holonomy(const Section& initial, const Section& final, const Group& g,
                                 std::optional<GaugeTransform> gauge = {})
{
  if (initial.path != final.path)
    throw std::invalid_argument("two_holonomy: sections over different paths " +
                                to_string(initial.path) + " and " + to_string(final.path));
  GaugeTransform n;
  if (gauge) {
    n = *gauge;
  } else {
    for (const auto& v : interior_vertices(final.path))
      n.emplace(v, g.identity());
  }
  Section twisted = twist(final, n, g);
  std::vector<Element> defects;
  for (std::size_t i = 0; i < initial.letters.size(); ++i)
    defects.push_back(g.multiply(g.inverse(initial.letters[i]), twisted.letters[i]));
  return {final.path, std::move(defects), std::move(n)};
}

namespace detail {

inline bool propagate_gauge(const Section& s, const Section& t, const std::set<VertexId>& movable,
                            const Group& g, GaugeTransform& known)
{
  auto get = [&](const VertexId& v) -> std::optional<Element> {
    if (!movable.count(v))
      return g.identity();
    if (auto it = known.find(v); it != known.end())
      return it->second;
    return std::nullopt;
  };
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < s.path.size(); ++i) {
      const auto& [p, q] = s.path[i];
      auto np = get(p);
      auto nq = get(q);
      const Element& a = s.letters[i];
      const Element& b = t.letters[i];
      if (np && nq) {
        if (g.multiply(g.multiply(g.inverse(*np), a), *nq) != b)
          return false;
      } else if (np) {
        known[q] = g.multiply(g.multiply(g.inverse(a), *np), b);
        changed = true;
      } else if (nq) {
        known[p] = g.multiply(g.multiply(a, *nq), g.inverse(b));
        changed = true;
      }
    }
  }
  return true;
}

inline std::optional<GaugeTransform> solve_gauge(const Section& s, const Section& t,
                                                 const std::set<VertexId>& movable, const Group& g,
                                                 GaugeTransform known)
{
  if (!propagate_gauge(s, t, movable, g, known))
    return std::nullopt;
  for (const auto& st : s.path.steps()) {
    for (const auto& v : {st.from, st.to}) {
      if (!movable.count(v) || known.count(v))
        continue;
      // unanchored: branch on finite groups, try identity on free ones
      std::vector<Element> choices = g.is_finite() ? g.elements() : std::vector<Element>{g.identity()};
      for (const auto& x : choices) {
        GaugeTransform trial = known;
        trial[v] = x;
        if (auto out = solve_gauge(s, t, movable, g, trial))
          return out;
      }
      return std::nullopt;
    }
  }
  return known;
}

}  // namespace detail

/// A gauge n supported on `movable` with twist(s, n) == t, or nullopt.
/// Vertices pinned by a fixed neighbour are solved exactly; unanchored
/// ones are searched over finite groups and set to e over free groups.
inline std::optional<GaugeTransform> sections_gauge_equivalent(const Section& s, const Section& t,
                                                               const std::set<VertexId>& movable,
                                                               const Group& g)
{
  if (s.path != t.path)
    throw std::invalid_argument("sections over different paths");
  auto solved = detail::solve_gauge(s, t, movable, g, {});
  if (!solved)
    return std::nullopt;
  GaugeTransform out;
  for (const auto& v : movable)
    out[v] = solved->count(v) ? solved->at(v) : g.identity();
  if (twist(s, out, g) != t)
    return std::nullopt;
  return out;
}

struct SchemeComparison {
  enum class Verdict { equal, gauge_equivalent, different };
  Verdict verdict;
  SweepTrace first;
  SweepTrace second;
  std::vector<Element> quotient;  // first_i^-1 * second_i
  std::optional<GaugeTransform> gauge;
};

inline const char* to_string(SchemeComparison::Verdict v)
{
  switch (v) {
    case SchemeComparison::Verdict::equal: return "equal";
    case SchemeComparison::Verdict::gauge_equivalent: return "gauge_equivalent";
    case SchemeComparison::Verdict::different: return "different";
  }
  return "?";
}

/// Runs both schemes from s0 and compares the final sections exactly, then
/// up to a gauge on the interior vertices of the common final path.
inline SchemeComparison compare_schemes(const SweepScheme& first, const SweepScheme& second,
                                        const Section& s0, const Connection2& C)
{
  if (first.start != second.start)
    throw std::invalid_argument("schemes start on different paths");
  SweepTrace t1 = run_scheme(s0, first, C);
  SweepTrace t2 = run_scheme(s0, second, C);
  const Section& f1 = t1.final_section();
  const Section& f2 = t2.final_section();
  if (f1.path != f2.path)
    throw std::invalid_argument("schemes end on different paths " + to_string(f1.path) + " and " +
                                to_string(f2.path));
  const Group& g = C.group();
  std::vector<Element> quotient;
  for (std::size_t i = 0; i < f1.letters.size(); ++i)
    quotient.push_back(g.multiply(g.inverse(f1.letters[i]), f2.letters[i]));

  SchemeComparison out{SchemeComparison::Verdict::different, std::move(t1), std::move(t2),
                       std::move(quotient), std::nullopt};
  if (f1 == f2) {
    out.verdict = SchemeComparison::Verdict::equal;
  } else if (auto n = sections_gauge_equivalent(f1, f2, interior_vertices(f1.path), g)) {
    out.verdict = SchemeComparison::Verdict::gauge_equivalent;
    out.gauge = std::move(n);
  }
  return out;
}

/// The four moves (ab,bd) -> (ac,cb,bd) -> (ac,cd) -> (ab,bc,cd) -> (ab,bd).
inline SweepScheme curvature_square_scheme(const VertexId& a, const VertexId& b, const VertexId& c,
                                           const VertexId& d)
{
  return SweepScheme{EdgePath::through({a, b, d}),
                     {{MoveKind::alpha_expand, {a, c, b}, 0},
                      {MoveKind::alpha_merge, {c, b, d}, 1},
                      {MoveKind::alpha_expand, {a, b, c}, 0},
                      {MoveKind::alpha_merge, {b, c, d}, 1}}};
}

/// Sweeps s0 over (ab,bd) around the square and reports the defects.
inline DefectReport curvature_square(const VertexId& a, const VertexId& b, const VertexId& c,
                                     const VertexId& d, const Section& s0, const Connection2& C)
{
  SweepTrace trace = run_scheme(s0, curvature_square_scheme(a, b, c, d), C);
  return two_holonomy(s0, trace.final_section(), C.group());
}

/// Admissible 2-cell values when the connective structure is trivial: all φ
/// with φ_ab(u) φ = φ φ_ac φ_cb(u) for every u, i.e. u φ = φ u. Brute force
/// over all pairs.
inline std::vector<Element> center_obstruction_check(const Group& g)
{
  if (!g.is_finite())
    throw InfiniteBackend("center_obstruction_check: infinite backend");
  const auto all = g.elements();
  std::vector<Element> out;
  for (const auto& phi : all) {
    bool ok = true;
    for (const auto& u : all) {
      if (g.multiply(u, phi) != g.multiply(phi, u)) {
        ok = false;
        break;
      }
    }
    if (ok)
      out.push_back(phi);
  }
  return out;
}

}  // namespace ptrans

#endif  // PTRANS_SWEEP_HPP
