#ifndef PTRANS_RANDOM_HPP
#define PTRANS_RANDOM_HPP

#include <iterator>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include "bundle.hpp"
#include "edge_path.hpp"
#include "group.hpp"
#include "scheme.hpp"
#include "simplicial.hpp"
#include "sweep.hpp"

namespace ptrans {

template <class Rng, class Container>
const auto& pick(Rng& rng, const Container& c)
{
  if (c.empty())
    throw std::invalid_argument("pick from an empty container");
  std::uniform_int_distribution<std::size_t> d(0, c.size() - 1);
  auto it = c.begin();
  std::advance(it, static_cast<std::ptrdiff_t>(d(rng)));
  return *it;
}

/// Random walk of up to max_steps steps from `start` (random vertex if
/// unset), with an occasional degenerate step. Isolated vertices give the identity.
template <class Rng>
EdgePath random_path(const SimplicialComplex& k, Rng& rng, std::size_t max_steps,
                     std::optional<VertexId> start = {})
{
  VertexId at = start ? *start : pick(rng, k.vertices());
  std::uniform_int_distribution<std::size_t> len(1, std::max<std::size_t>(1, max_steps));
  std::bernoulli_distribution stay(0.1);
  std::vector<Step> steps;
  for (std::size_t i = 0, n = len(rng); i < n; ++i) {
    auto nb = k.neighbours(at);
    if (nb.empty() || stay(rng)) {
      steps.push_back({at, at});
      continue;
    }
    VertexId next = pick(rng, nb);
    steps.push_back({at, next});
    at = next;
  }
  return EdgePath(std::move(steps));
}

/// Random walk that ends at `target`: a walk out, then a walk back found by BFS.
template <class Rng>
EdgePath random_path_between(const SimplicialComplex& k, Rng& rng, std::size_t max_steps,
                             const VertexId& source, const VertexId& target)
{
  EdgePath out = random_path(k, rng, max_steps, source);
  // shortest return from out.target() to target
  std::map<VertexId, VertexId> parent{{out.target(), out.target()}};
  std::vector<VertexId> frontier{out.target()};
  while (!frontier.empty() && !parent.count(target)) {
    std::vector<VertexId> next;
    for (const auto& v : frontier)
      for (const auto& w : k.neighbours(v))
        if (parent.emplace(w, v).second)
          next.push_back(w);
    frontier = std::move(next);
  }
  if (!parent.count(target))
    throw std::invalid_argument("no path from " + source + " to " + target);
  std::vector<VertexId> back{target};
  while (back.back() != out.target())
    back.push_back(parent.at(back.back()));
  if (back.size() == 1)
    return out;
  std::vector<VertexId> forward(back.rbegin(), back.rend());
  std::vector<Step> steps = out.steps();
  for (std::size_t i = 0; i + 1 < forward.size(); ++i)
    steps.push_back({forward[i], forward[i + 1]});
  return EdgePath(std::move(steps));
}

template <class Rng>
Connection1 random_connection(const Group& g, std::shared_ptr<const SimplicialComplex> k, Rng& rng,
                              std::size_t max_free_length = 4)
{
  std::map<OrderedEdge, Element> values;
  std::bernoulli_distribution flip(0.5);
  for (const auto& [a, b] : k->edges()) {
    OrderedEdge e = flip(rng) ? OrderedEdge{a, b} : OrderedEdge{b, a};
    values.emplace(e, random_element(g, rng, max_free_length));
  }
  return Connection1(g, std::move(k), std::move(values));
}

template <class Rng>
GaugeTransform random_gauge(const Group& g, const SimplicialComplex& k, Rng& rng,
                            std::size_t max_free_length = 4)
{
  GaugeTransform n;
  for (const auto& v : k.vertices())
    n.emplace(v, random_element(g, rng, max_free_length));
  return n;
}

/// Random value for every alpha cell of the complex.
template <class Rng>
Connection2 random_connection2(const Connection1& base, Rng& rng, std::size_t max_free_length = 4)
{
  std::map<std::string, Element> cells;
  for (const auto& cell : oriented_triangles(base.complex(), CellKind::alpha))
    cells.emplace(join_cell_name(cell.corners), random_element(base.group(), rng, max_free_length));
  return Connection2(base, cells);
}

template <class Rng>
Section random_section(const EdgePath& p, const Group& g, Rng& rng, std::size_t max_free_length = 4)
{
  std::vector<Element> letters;
  for (std::size_t i = 0; i < p.size(); ++i)
    letters.push_back(random_element(g, rng, max_free_length));
  return Section(p, std::move(letters));
}

/// Random valid scheme of `length` moves from `start`. Insert moves are
/// down-weighted and paths are kept below max_path_length steps.
template <class Rng>
SweepScheme random_scheme(const EdgePath& start, const SimplicialComplex& k, Rng& rng,
                          std::size_t length, std::size_t max_path_length = 8)
{
  SweepScheme s{start, {}};
  EdgePath cur = start;
  std::bernoulli_distribution allow_insert(0.2);
  for (std::size_t n = 0; n < length; ++n) {
    std::vector<HomotopyStep> moves;
    const bool inserts = allow_insert(rng) && cur.size() + 3 <= max_path_length;
    for (auto& m : applicable_moves(cur, k)) {
      const bool growing = m.move == MoveKind::x1_insert || m.move == MoveKind::deg_insert ||
                           m.move == MoveKind::beta_expand;
      if (growing && !inserts)
        continue;
      if (m.move == MoveKind::alpha_expand && cur.size() + 1 > max_path_length)
        continue;
      moves.push_back(std::move(m));
    }
    if (moves.empty())
      break;
    const HomotopyStep& m = pick(rng, moves);
    cur = apply_move(cur, m, k);
    s.steps.push_back(m);
  }
  return s;
}

}  // namespace ptrans

#endif  // PTRANS_RANDOM_HPP
