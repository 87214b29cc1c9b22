#ifndef PTRANS_SCHEME_HPP
#define PTRANS_SCHEME_HPP

#include <cstddef>
#include <deque>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "edge_path.hpp"
#include "simplicial.hpp"

namespace ptrans {

enum class MoveKind {
  alpha_expand,  // (a,b) -> (a,c),(c,b) across the face {a,b,c}
  alpha_merge,   // (a,c),(c,b) -> (a,b)
  beta_expand,   // (c,c) -> (c,a),(a,b),(b,c)
  beta_merge,    // (c,a),(a,b),(b,c) -> (c,c)
  x1_insert,     // insert (x,y),(y,x) at a vertex boundary
  x1_cancel,     // remove an adjacent (x,y),(y,x) pair
  deg_insert,    // insert (x,x) at a vertex boundary
  deg_drop,      // remove a degenerate step
};

inline const char* to_string(MoveKind m)
{
  switch (m) {
    case MoveKind::alpha_expand: return "alpha_expand";
    case MoveKind::alpha_merge: return "alpha_merge";
    case MoveKind::beta_expand: return "beta_expand";
    case MoveKind::beta_merge: return "beta_merge";
    case MoveKind::x1_insert: return "x1_insert";
    case MoveKind::x1_cancel: return "x1_cancel";
    case MoveKind::deg_insert: return "deg_insert";
    case MoveKind::deg_drop: return "deg_drop";
  }
  return "?";
}

inline MoveKind parse_move_kind(const std::string& s)
{
  for (MoveKind m : {MoveKind::alpha_expand, MoveKind::alpha_merge, MoveKind::beta_expand,
                     MoveKind::beta_merge, MoveKind::x1_insert, MoveKind::x1_cancel,
                     MoveKind::deg_insert, MoveKind::deg_drop}) {
    if (s == to_string(m))
      return m;
  }
  throw std::invalid_argument("unknown move '" + s + "'");
}

/// One elementary move. `cell` holds the corner tokens of the 2-cell for
/// alpha moves (a,c,b) and beta moves (c,a,b,c), the excursion vertex for
/// x1_insert, and is empty otherwise. `position` indexes the path as it is
/// when the move is applied: a step index, or a vertex boundary for the
/// insert moves.
struct HomotopyStep {
  MoveKind move;
  std::vector<VertexId> cell;
  std::size_t position = 0;

  friend bool operator==(const HomotopyStep&, const HomotopyStep&) = default;
};

struct SweepScheme {
  EdgePath start;
  std::vector<HomotopyStep> steps;
};

class MoveError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Where a move rewrites the current path: steps [lo, hi) become
/// `replacement`. Moves that fold letters into a neighbour include that
/// neighbour in the range, so two moves commute whenever their ranges are
/// disjoint.
struct Splice {
  std::size_t lo = 0;
  std::size_t hi = 0;
  std::vector<Step> replacement;
};

/// How x1_cancel and deg_drop fold removed steps: into the left neighbour,
/// the right neighbour, or (no neighbours) into a degenerate step.
enum class Fold { left, right, alone };

inline Fold fold_side(const EdgePath& p, std::size_t lo, std::size_t hi)
{
  if (lo > 0)
    return Fold::left;
  if (hi < p.size())
    return Fold::right;
  return Fold::alone;
}

inline Splice plan_move(const EdgePath& p, const HomotopyStep& m, const SimplicialComplex& k)
{
  const std::size_t i = m.position;
  auto need_cell = [&](std::size_t n) {
    if (m.cell.size() != n)
      throw MoveError(std::string(to_string(m.move)) + " needs a cell of " + std::to_string(n) +
                      " vertices, got '" + join_cell_name(m.cell) + "'");
  };
  auto need_steps = [&](std::size_t n) {
    if (i + n > p.size())
      throw MoveError(std::string(to_string(m.move)) + ": position " + std::to_string(i) +
                      " out of range for path " + to_string(p));
  };
  auto need_face = [&](const VertexId& a, const VertexId& b, const VertexId& c) {
    if (!k.has_triangle(a, b, c))
      throw MoveError("cell not supported: {" + a + "," + b + "," + c + "} is not a 2-simplex");
  };
  auto mismatch = [&](const std::string& want) {
    return MoveError(std::string(to_string(m.move)) + " at " + std::to_string(i) + ": expected " +
                     want + " in path " + to_string(p));
  };

  switch (m.move) {
    case MoveKind::alpha_expand: {
      need_cell(3);
      need_steps(1);
      const auto& a = m.cell[0];
      const auto& c = m.cell[1];
      const auto& b = m.cell[2];
      need_face(a, b, c);
      if (p[i] != Step{a, b})
        throw mismatch("(" + a + "," + b + ")");
      return {i, i + 1, {{a, c}, {c, b}}};
    }
    case MoveKind::alpha_merge: {
      need_cell(3);
      need_steps(2);
      const auto& a = m.cell[0];
      const auto& c = m.cell[1];
      const auto& b = m.cell[2];
      need_face(a, b, c);
      if (p[i] != Step{a, c} || p[i + 1] != Step{c, b})
        throw mismatch("(" + a + "," + c + "),(" + c + "," + b + ")");
      return {i, i + 2, {{a, b}}};
    }
    case MoveKind::beta_expand: {
      need_cell(4);
      need_steps(1);
      const auto& c = m.cell[0];
      const auto& a = m.cell[1];
      const auto& b = m.cell[2];
      if (m.cell[3] != c)
        throw MoveError("beta cell must start and end at the same vertex: " + join_cell_name(m.cell));
      need_face(a, b, c);
      if (p[i] != Step{c, c})
        throw mismatch("(" + c + "," + c + ")");
      return {i, i + 1, {{c, a}, {a, b}, {b, c}}};
    }
    case MoveKind::beta_merge: {
      need_cell(4);
      need_steps(3);
      const auto& c = m.cell[0];
      const auto& a = m.cell[1];
      const auto& b = m.cell[2];
      if (m.cell[3] != c)
        throw MoveError("beta cell must start and end at the same vertex: " + join_cell_name(m.cell));
      need_face(a, b, c);
      if (p[i] != Step{c, a} || p[i + 1] != Step{a, b} || p[i + 2] != Step{b, c})
        throw mismatch("(" + c + "," + a + "),(" + a + "," + b + "),(" + b + "," + c + ")");
      return {i, i + 3, {{c, c}}};
    }
    case MoveKind::x1_insert: {
      need_cell(1);
      if (i > p.size())
        throw MoveError("x1_insert: boundary " + std::to_string(i) + " out of range");
      const VertexId& x = p.vertex_at(i);
      const VertexId& y = m.cell[0];
      if (!k.has_edge(x, y))
        throw MoveError("x1_insert: {" + x + "," + y + "} is not an edge");
      return {i, i, {{x, y}, {y, x}}};
    }
    case MoveKind::x1_cancel: {
      need_cell(0);
      need_steps(2);
      if (p[i].degenerate() || p[i + 1] != p[i].reversed())
        throw mismatch("an opposite pair");
      switch (fold_side(p, i, i + 2)) {
        case Fold::left: return {i - 1, i + 2, {p[i - 1]}};
        case Fold::right: return {i, i + 3, {p[i + 2]}};
        case Fold::alone: return {i, i + 2, {{p[i].from, p[i].from}}};
      }
      break;
    }
    case MoveKind::deg_insert: {
      need_cell(0);
      if (i > p.size())
        throw MoveError("deg_insert: boundary " + std::to_string(i) + " out of range");
      const VertexId& x = p.vertex_at(i);
      return {i, i, {{x, x}}};
    }
    case MoveKind::deg_drop: {
      need_cell(0);
      need_steps(1);
      if (!p[i].degenerate())
        throw mismatch("a degenerate step");
      if (p.size() < 2)
        throw MoveError("deg_drop: cannot drop the only step of a path");
      if (fold_side(p, i, i + 1) == Fold::left)
        return {i - 1, i + 1, {p[i - 1]}};
      return {i, i + 2, {p[i + 1]}};
    }
  }
  throw MoveError("unknown move");
}

inline EdgePath apply_splice(const EdgePath& p, const Splice& s)
{
  std::vector<Step> steps(p.steps().begin(), p.steps().begin() + static_cast<std::ptrdiff_t>(s.lo));
  steps.insert(steps.end(), s.replacement.begin(), s.replacement.end());
  steps.insert(steps.end(), p.steps().begin() + static_cast<std::ptrdiff_t>(s.hi), p.steps().end());
  return EdgePath(std::move(steps));
}

inline EdgePath apply_move(const EdgePath& p, const HomotopyStep& m, const SimplicialComplex& k)
{
  return apply_splice(p, plan_move(p, m, k));
}

struct SchemeValidation {
  std::vector<EdgePath> paths;  // gamma_0 .. gamma_n, up to the first failure
  std::vector<std::string> diagnostics;

  bool ok() const { return diagnostics.empty(); }
};

/// Replays a scheme move by move. Stops at the first invalid move.
inline SchemeValidation validate_scheme(const SweepScheme& scheme, const SimplicialComplex& k)
{
  SchemeValidation out;
  if (!k.supports(scheme.start)) {
    out.diagnostics.push_back("start path " + to_string(scheme.start) + " is not in the complex");
    return out;
  }
  out.paths.push_back(scheme.start);
  for (std::size_t n = 0; n < scheme.steps.size(); ++n) {
    const EdgePath& cur = out.paths.back();
    try {
      EdgePath next = apply_move(cur, scheme.steps[n], k);
      if (next.source() != scheme.start.source() || next.target() != scheme.start.target()) {
        out.diagnostics.push_back("step " + std::to_string(n) + ": endpoint drift");
        return out;
      }
      out.paths.push_back(std::move(next));
    } catch (const std::exception& e) {
      out.diagnostics.push_back("step " + std::to_string(n) + ": " + e.what());
      return out;
    }
  }
  return out;
}

/// Every move applicable to p, in a fixed order.
inline std::vector<HomotopyStep> applicable_moves(const EdgePath& p, const SimplicialComplex& k)
{
  std::vector<HomotopyStep> out;
  auto try_add = [&](HomotopyStep m) {
    try {
      plan_move(p, m, k);
      out.push_back(std::move(m));
    } catch (const MoveError&) {
    }
  };
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Step& s = p[i];
    if (!s.degenerate()) {
      for (const auto& c : k.neighbours(s.from))
        if (k.has_triangle(s.from, s.to, c))
          out.push_back({MoveKind::alpha_expand, {s.from, c, s.to}, i});
    }
    if (i + 1 < p.size())
      try_add({MoveKind::alpha_merge, {s.from, s.to, p[i + 1].to}, i});
    if (s.degenerate()) {
      for (const auto& t : k.triangles()) {
        for (int j = 0; j < 3; ++j) {
          if (t[j] != s.from)
            continue;
          const VertexId& x = t[(j + 1) % 3];
          const VertexId& y = t[(j + 2) % 3];
          out.push_back({MoveKind::beta_expand, {s.from, x, y, s.from}, i});
          out.push_back({MoveKind::beta_expand, {s.from, y, x, s.from}, i});
        }
      }
      try_add({MoveKind::deg_drop, {}, i});
    }
    if (i + 2 < p.size())
      try_add({MoveKind::beta_merge, {s.from, s.to, p[i + 1].to, s.from}, i});
    try_add({MoveKind::x1_cancel, {}, i});
  }
  for (std::size_t b = 0; b <= p.size(); ++b) {
    for (const auto& y : k.neighbours(p.vertex_at(b)))
      out.push_back({MoveKind::x1_insert, {y}, b});
    out.push_back({MoveKind::deg_insert, {}, b});
  }
  return out;
}

/// Breadth-first search for a scheme from p to q using at most depth_bound
/// moves. nullopt means "none found", which does not rule out a longer homotopy.
inline std::optional<SweepScheme> search_homotopy(const EdgePath& p, const EdgePath& q,
                                                  const SimplicialComplex& k, std::size_t depth_bound)
{
  if (p.source() != q.source() || p.target() != q.target())
    throw std::invalid_argument("search_homotopy: endpoints differ");
  if (p == q)
    return SweepScheme{p, {}};

  struct Parent {
    std::optional<EdgePath> prev;
    std::optional<HomotopyStep> move;
  };
  std::map<EdgePath, Parent> seen;
  seen.emplace(p, Parent{});
  std::vector<EdgePath> frontier{p};

  for (std::size_t depth = 0; depth < depth_bound && !frontier.empty(); ++depth) {
    std::vector<EdgePath> next;
    for (const auto& cur : frontier) {
      for (auto& m : applicable_moves(cur, k)) {
        EdgePath nb = apply_move(cur, m, k);
        if (seen.count(nb))
          continue;
        seen.emplace(nb, Parent{cur, m});
        if (nb == q) {
          std::vector<HomotopyStep> steps;
          EdgePath at = nb;
          while (seen.at(at).move) {
            steps.push_back(*seen.at(at).move);
            at = *seen.at(at).prev;
          }
          return SweepScheme{p, {steps.rbegin(), steps.rend()}};
        }
        next.push_back(std::move(nb));
      }
    }
    frontier = std::move(next);
  }
  return std::nullopt;
}

/// Exchanges moves n and n+1 when their splices are disjoint, re-indexing
/// positions so each move still acts on the same steps. nullopt when the
/// moves overlap or either is invalid.
inline std::optional<SweepScheme> swap_adjacent(const SweepScheme& scheme, std::size_t n,
                                                const SimplicialComplex& k)
{
  if (n + 1 >= scheme.steps.size())
    return std::nullopt;
  EdgePath cur = scheme.start;
  try {
    for (std::size_t j = 0; j < n; ++j)
      cur = apply_move(cur, scheme.steps[j], k);
    const HomotopyStep& first = scheme.steps[n];
    const HomotopyStep& second = scheme.steps[n + 1];
    Splice a = plan_move(cur, first, k);
    EdgePath mid = apply_splice(cur, a);
    Splice b = plan_move(mid, second, k);

    const auto a_new_hi = a.lo + a.replacement.size();
    const auto a_delta = static_cast<std::ptrdiff_t>(a.replacement.size()) -
                         static_cast<std::ptrdiff_t>(a.hi - a.lo);
    HomotopyStep second_first = second;
    HomotopyStep first_second = first;
    if (b.hi <= a.lo && !(b.lo == b.hi && b.lo == a.lo)) {
      // second acts left of first
      const auto b_delta = static_cast<std::ptrdiff_t>(b.replacement.size()) -
                           static_cast<std::ptrdiff_t>(b.hi - b.lo);
      first_second.position = static_cast<std::size_t>(static_cast<std::ptrdiff_t>(first.position) + b_delta);
    } else if (b.lo >= a_new_hi && !(b.lo == b.hi && b.lo == a_new_hi && a.lo == a.hi)) {
      // second acts right of first
      second_first.position = static_cast<std::size_t>(static_cast<std::ptrdiff_t>(second.position) - a_delta);
    } else {
      return std::nullopt;
    }
    SweepScheme out = scheme;
    out.steps[n] = second_first;
    out.steps[n + 1] = first_second;
    // Both orders must be valid and reach the same path.
    EdgePath x = apply_move(apply_move(cur, second_first, k), first_second, k);
    if (x != apply_move(mid, second, k))
      return std::nullopt;
    return out;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

}  // namespace ptrans

#endif  // PTRANS_SCHEME_HPP
