#ifndef PTRANS_SIMPLICIAL_HPP
#define PTRANS_SIMPLICIAL_HPP

#include <algorithm>
#include <array>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "edge_path.hpp"

namespace ptrans {

/// Unordered 1-simplex, stored with first <= second.
using Edge = std::pair<VertexId, VertexId>;
/// Unordered 2-simplex, stored sorted.
using Triangle = std::array<VertexId, 3>;

inline Edge make_edge(VertexId a, VertexId b)
{
  if (b < a)
    std::swap(a, b);
  return {std::move(a), std::move(b)};
}

inline Triangle make_triangle(VertexId a, VertexId b, VertexId c)
{
  Triangle t{std::move(a), std::move(b), std::move(c)};
  std::sort(t.begin(), t.end());
  return t;
}

/// Polyhedron of dimension <= 2 given by named vertices, triangles and
/// optional extra edges. Construction only rejects malformed simplices;
/// closure and purity are reported by validate_complex().
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  SimplicialComplex(const std::vector<VertexId>& vertices, const std::vector<Triangle>& triangles,
                    const std::vector<Edge>& edges = {}, bool pure_dim2 = false)
      : pure_dim2_(pure_dim2)
  {
    for (const auto& v : vertices) {
      if (v.empty() || v.find_first_of(" \t\r\n") != std::string::npos)
        throw std::invalid_argument("invalid vertex name '" + v + "'");
      if (!vertices_.insert(v).second)
        throw std::invalid_argument("duplicate vertex " + v);
    }
    for (const auto& e : edges) {
      if (e.first == e.second)
        throw std::invalid_argument("degenerate edge {" + e.first + "," + e.second + "}");
      declared_edges_.insert(make_edge(e.first, e.second));
    }
    for (const auto& t : triangles) {
      Triangle s = make_triangle(t[0], t[1], t[2]);
      if (s[0] == s[1] || s[1] == s[2])
        throw std::invalid_argument("triangle with repeated vertex {" + s[0] + "," + s[1] + "," +
                                    s[2] + "}");
      triangles_.insert(s);
    }
    edges_ = declared_edges_;
    for (const auto& t : triangles_) {
      edges_.insert({t[0], t[1]});
      edges_.insert({t[0], t[2]});
      edges_.insert({t[1], t[2]});
    }
  }

  const std::set<VertexId>& vertices() const { return vertices_; }
  /// Declared edges together with every face of a triangle.
  const std::set<Edge>& edges() const { return edges_; }
  const std::set<Edge>& declared_edges() const { return declared_edges_; }
  const std::set<Triangle>& triangles() const { return triangles_; }
  bool pure_dim2() const { return pure_dim2_; }

  bool has_vertex(const VertexId& v) const { return vertices_.count(v) != 0; }
  bool has_edge(const VertexId& a, const VertexId& b) const
  {
    return a != b && edges_.count(make_edge(a, b)) != 0;
  }
  bool has_triangle(const VertexId& a, const VertexId& b, const VertexId& c) const
  {
    if (a == b || b == c || a == c)
      return false;
    return triangles_.count(make_triangle(a, b, c)) != 0;
  }

  /// Vertices joined to v by an edge, in lexicographic order.
  std::vector<VertexId> neighbours(const VertexId& v) const
  {
    std::vector<VertexId> out;
    for (const auto& [a, b] : edges_) {
      if (a == v)
        out.push_back(b);
      else if (b == v)
        out.push_back(a);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  /// Every step is a degenerate step at a vertex or an edge of the complex.
  bool supports(const EdgePath& p) const
  {
    for (const auto& s : p.steps()) {
      if (s.degenerate() ? !has_vertex(s.from) : !has_edge(s.from, s.to))
        return false;
    }
    return true;
  }

 private:
  std::set<VertexId> vertices_;
  std::set<Edge> declared_edges_;
  std::set<Edge> edges_;
  std::set<Triangle> triangles_;
  bool pure_dim2_ = false;
};

struct Diagnostic {
  std::string rule;     // "closure" or "pure_dim2"
  std::string simplex;  // e.g. "{a,b,c}"
  std::string message;
};

inline std::string simplex_label(std::initializer_list<VertexId> vs)
{
  std::string out = "{";
  bool first = true;
  for (const auto& v : vs) {
    if (!first)
      out += ',';
    out += v;
    first = false;
  }
  return out + "}";
}

/// Empty iff the complex is closed under faces (and pure of dimension 2 when requested).
inline std::vector<Diagnostic> validate_complex(const SimplicialComplex& k, bool require_pure_dim2)
{
  std::vector<Diagnostic> out;
  for (const auto& t : k.triangles()) {
    for (const auto& v : t) {
      if (!k.has_vertex(v))
        out.push_back({"closure", simplex_label({t[0], t[1], t[2]}),
                       "vertex " + v + " of triangle " + simplex_label({t[0], t[1], t[2]}) +
                           " is not declared"});
    }
  }
  for (const auto& [a, b] : k.declared_edges()) {
    for (const auto& v : {a, b}) {
      if (!k.has_vertex(v))
        out.push_back({"closure", simplex_label({a, b}),
                       "vertex " + v + " of edge " + simplex_label({a, b}) + " is not declared"});
    }
  }
  if (require_pure_dim2) {
    std::set<VertexId> covered;
    std::set<Edge> covered_edges;
    for (const auto& t : k.triangles()) {
      covered.insert(t.begin(), t.end());
      covered_edges.insert({t[0], t[1]});
      covered_edges.insert({t[0], t[2]});
      covered_edges.insert({t[1], t[2]});
    }
    for (const auto& v : k.vertices()) {
      if (!covered.count(v))
        out.push_back({"pure_dim2", simplex_label({v}), "vertex " + v + " not in any 2-simplex"});
    }
    for (const auto& e : k.declared_edges()) {
      if (!covered_edges.count(e))
        out.push_back({"pure_dim2", simplex_label({e.first, e.second}),
                       "edge " + simplex_label({e.first, e.second}) + " not in any 2-simplex"});
    }
  }
  return out;
}

enum class CellKind { alpha, alpha_star, beta, beta_star, identity_edge, identity_vertex };

inline const char* to_string(CellKind k)
{
  switch (k) {
    case CellKind::alpha: return "alpha";
    case CellKind::alpha_star: return "alpha_star";
    case CellKind::beta: return "beta";
    case CellKind::beta_star: return "beta_star";
    case CellKind::identity_edge: return "identity_edge";
    case CellKind::identity_vertex: return "identity_vertex";
  }
  return "?";
}

/// Traversal sense of a beta boundary loop relative to the sorted face
/// (p,q,r): forward runs p->q->r->p.
enum class Direction { forward, reverse };

/// Elementary 2-cell. `corners` are the name tokens: (a,c,b) for the alpha
/// cell (acb) from (ab) to (ac,cb); (c,a,b,c) for the beta cell (cabc) from
/// (cc) to (ca,ab,bc); (a,b) for an edge identity; (a) for a vertex identity.
/// Starred kinds keep the corners of the unstarred cell and swap the paths.
struct OrientedTriangle {
  CellKind kind;
  std::vector<VertexId> corners;
  EdgePath source_path;
  EdgePath target_path;
  Direction direction = Direction::forward;

  const VertexId& source() const { return source_path.source(); }
  const VertexId& target() const { return source_path.target(); }
  std::optional<VertexId> apex() const
  {
    if (kind == CellKind::alpha || kind == CellKind::alpha_star)
      return corners[1];
    return std::nullopt;
  }

  /// Dotted cell name, "a.c.b" or "c.a.b.c"; starred kinds get a trailing '*'.
  std::string name() const
  {
    std::string out;
    for (std::size_t i = 0; i < corners.size(); ++i) {
      if (i)
        out += '.';
      out += corners[i];
    }
    if (kind == CellKind::alpha_star || kind == CellKind::beta_star)
      out += '*';
    return out;
  }

  friend bool operator==(const OrientedTriangle&, const OrientedTriangle&) = default;
};

inline Direction beta_direction(const VertexId& c, const VertexId& a, const VertexId& b)
{
  // Forward iff (c,a,b) is a rotation of the sorted triple.
  Triangle s = make_triangle(c, a, b);
  auto rot = [&](const VertexId& x, const VertexId& y, const VertexId& z) {
    return c == x && a == y && b == z;
  };
  return rot(s[0], s[1], s[2]) || rot(s[1], s[2], s[0]) || rot(s[2], s[0], s[1])
             ? Direction::forward
             : Direction::reverse;
}

/// (acb): (ab) -> (ac,cb). Starred: the reverse arrow.
inline OrientedTriangle alpha_cell(const VertexId& a, const VertexId& c, const VertexId& b,
                                   bool starred = false)
{
  EdgePath base = EdgePath::through({a, b});
  EdgePath hull = EdgePath::through({a, c, b});
  if (starred)
    return {CellKind::alpha_star, {a, c, b}, hull, base, Direction::forward};
  return {CellKind::alpha, {a, c, b}, base, hull, Direction::forward};
}

/// (cabc): (cc) -> (ca,ab,bc). Starred: the reverse arrow.
inline OrientedTriangle beta_cell(const VertexId& c, const VertexId& a, const VertexId& b,
                                  bool starred = false)
{
  EdgePath loop = EdgePath::identity(c);
  EdgePath boundary = EdgePath::through({c, a, b, c});
  Direction dir = beta_direction(c, a, b);
  if (starred)
    return {CellKind::beta_star, {c, a, b, c}, boundary, loop, dir};
  return {CellKind::beta, {c, a, b, c}, loop, boundary, dir};
}

inline OrientedTriangle edge_identity_cell(const VertexId& a, const VertexId& b)
{
  EdgePath e = EdgePath::through({a, b});
  return {CellKind::identity_edge, {a, b}, e, e, Direction::forward};
}

inline OrientedTriangle vertex_identity_cell(const VertexId& a)
{
  EdgePath e = EdgePath::identity(a);
  return {CellKind::identity_vertex, {a}, e, e, Direction::forward};
}

/// Splits "a.c.b" on dots. Without dots, the name is read one character per
/// vertex ("acb"), which only makes sense for single-character vertex names.
inline std::vector<VertexId> split_cell_name(const std::string& name)
{
  std::vector<VertexId> out;
  if (name.find('.') == std::string::npos) {
    for (char ch : name)
      out.emplace_back(1, ch);
    return out;
  }
  std::size_t start = 0;
  while (true) {
    std::size_t dot = name.find('.', start);
    out.push_back(name.substr(start, dot - start));
    if (dot == std::string::npos)
      break;
    start = dot + 1;
  }
  for (const auto& t : out)
    if (t.empty())
      throw std::invalid_argument("empty vertex token in cell name '" + name + "'");
  return out;
}

inline std::string join_cell_name(const std::vector<VertexId>& corners)
{
  std::string out;
  for (std::size_t i = 0; i < corners.size(); ++i) {
    if (i)
      out += '.';
    out += corners[i];
  }
  return out;
}

/// All elementary cells of the complex, grouped by face in lexicographic order.
///
/// Per 2-simplex: 6 alpha and 6 alpha_star cells (3 apexes x 2 base
/// orientations); 3 beta and 3 beta_star cells, one per basepoint, in the
/// forward direction, plus 3 more of each in reverse when include_reverse_beta
/// is set. Identity cells: one per edge orientation and one per vertex.
inline std::vector<OrientedTriangle> oriented_triangles(const SimplicialComplex& k,
                                                        std::optional<CellKind> kind_filter = {},
                                                        bool include_reverse_beta = false)
{
  std::vector<OrientedTriangle> out;
  auto want = [&](CellKind kind) { return !kind_filter || *kind_filter == kind; };

  for (const auto& t : k.triangles()) {
    for (bool starred : {false, true}) {
      CellKind kind = starred ? CellKind::alpha_star : CellKind::alpha;
      if (!want(kind))
        continue;
      for (int apex = 0; apex < 3; ++apex) {
        const VertexId& c = t[apex];
        const VertexId& x = t[(apex + 1) % 3];
        const VertexId& y = t[(apex + 2) % 3];
        const VertexId& lo = std::min(x, y);
        const VertexId& hi = std::max(x, y);
        out.push_back(alpha_cell(lo, c, hi, starred));
        out.push_back(alpha_cell(hi, c, lo, starred));
      }
    }
    for (bool starred : {false, true}) {
      CellKind kind = starred ? CellKind::beta_star : CellKind::beta;
      if (!want(kind))
        continue;
      for (int base = 0; base < 3; ++base)
        out.push_back(beta_cell(t[base], t[(base + 1) % 3], t[(base + 2) % 3], starred));
      if (include_reverse_beta) {
        for (int base = 0; base < 3; ++base)
          out.push_back(beta_cell(t[base], t[(base + 2) % 3], t[(base + 1) % 3], starred));
      }
    }
  }
  if (want(CellKind::identity_edge)) {
    for (const auto& [a, b] : k.edges()) {
      out.push_back(edge_identity_cell(a, b));
      out.push_back(edge_identity_cell(b, a));
    }
  }
  if (want(CellKind::identity_vertex)) {
    for (const auto& v : k.vertices())
      out.push_back(vertex_identity_cell(v));
  }
  return out;
}

/// The elementary cell whose 1-source and 1-target are X1-homotopic to
/// (source, target), or nullopt when no single oriented triangle of the
/// complex realizes the pair.
inline std::optional<OrientedTriangle> classify_cell(const EdgePath& source, const EdgePath& target,
                                                     const SimplicialComplex& k)
{
  if (source.source() != target.source() || source.target() != target.target())
    return std::nullopt;
  if (!k.supports(source) || !k.supports(target))
    return std::nullopt;
  const EdgePath s = reduce_x1(source);
  const EdgePath t = reduce_x1(target);

  if (s == t) {
    if (s.is_identity())
      return vertex_identity_cell(s.source());
    if (s.size() == 1)
      return edge_identity_cell(s[0].from, s[0].to);
    return std::nullopt;
  }
  auto alpha_match = [&](const EdgePath& single, const EdgePath& pair) -> std::optional<VertexId> {
    if (single.size() != 1 || single.is_identity() || pair.size() != 2)
      return std::nullopt;
    const VertexId& a = single.source();
    const VertexId& b = single.target();
    const VertexId& c = pair[0].to;
    if (c == a || c == b || !k.has_triangle(a, b, c))
      return std::nullopt;
    return c;
  };
  if (auto c = alpha_match(s, t))
    return alpha_cell(s.source(), *c, s.target());
  if (auto c = alpha_match(t, s))
    return alpha_cell(t.source(), *c, t.target(), true);

  auto beta_match = [&](const EdgePath& loop, const EdgePath& boundary) {
    if (!loop.is_identity() || boundary.size() != 3)
      return false;
    const VertexId& c = boundary.source();
    const VertexId& a = boundary[1].from;
    const VertexId& b = boundary[2].from;
    return loop.source() == c && k.has_triangle(a, b, c);
  };
  if (beta_match(s, t))
    return beta_cell(t.source(), t[1].from, t[2].from);
  if (beta_match(t, s))
    return beta_cell(s.source(), s[1].from, s[2].from, true);
  return std::nullopt;
}

}  // namespace ptrans

#endif  // PTRANS_SIMPLICIAL_HPP
