#ifndef PTRANS_BUNDLE_HPP
#define PTRANS_BUNDLE_HPP

#include <deque>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

#include "edge_path.hpp"
#include "group.hpp"
#include "representation.hpp"
#include "simplicial.hpp"

namespace ptrans {

using OrderedEdge = std::pair<VertexId, VertexId>;

/// Gauge-fixed G-bundle with connection: one group element f_ab per edge,
/// stored in one orientation. f_ba = f_ab^-1 and f_aa = e are derived.
class Connection1 {
 public:
  /// `values` must name every edge of the complex exactly once, in either orientation.
  Connection1(Group group, std::shared_ptr<const SimplicialComplex> complex,
              std::map<OrderedEdge, Element> values)
      : group_(std::move(group)), complex_(std::move(complex)), values_(std::move(values))
  {
    if (!complex_)
      throw std::invalid_argument("connection needs a complex");
    std::set<Edge> covered;
    for (const auto& [e, v] : values_) {
      if (!complex_->has_edge(e.first, e.second))
        throw std::invalid_argument("connection value on non-edge (" + e.first + "," + e.second + ")");
      if (!covered.insert(make_edge(e.first, e.second)).second)
        throw std::invalid_argument("edge {" + e.first + "," + e.second + "} given twice");
      if (!group_.contains(v))
        throw std::invalid_argument("connection value on (" + e.first + "," + e.second +
                                    ") is not in the group");
    }
    for (const auto& e : complex_->edges())
      if (!covered.count(e))
        throw std::invalid_argument("connection missing edge {" + e.first + "," + e.second + "}");
  }

  /// Identity on every edge.
  static Connection1 trivial(Group group, std::shared_ptr<const SimplicialComplex> complex)
  {
    std::map<OrderedEdge, Element> values;
    for (const auto& e : complex->edges())
      values.emplace(e, group.identity());
    return Connection1(group, std::move(complex), std::move(values));
  }

  const Group& group() const { return group_; }
  const SimplicialComplex& complex() const { return *complex_; }
  const std::shared_ptr<const SimplicialComplex>& complex_ptr() const { return complex_; }
  const std::map<OrderedEdge, Element>& stored() const { return values_; }

  /// f_ab for an oriented edge or a degenerate step.
  Element value(const VertexId& a, const VertexId& b) const
  {
    if (a == b) {
      if (!complex_->has_vertex(a))
        throw std::out_of_range("vertex " + a + " not in the complex");
      return group_.identity();
    }
    if (auto it = values_.find({a, b}); it != values_.end())
      return it->second;
    if (auto it = values_.find({b, a}); it != values_.end())
      return group_.inverse(it->second);
    throw std::out_of_range("(" + a + "," + b + ") is not an edge of the complex");
  }

 private:
  Group group_;
  std::shared_ptr<const SimplicialComplex> complex_;
  std::map<OrderedEdge, Element> values_;
};

/// n_a for each vertex a.
using GaugeTransform = std::map<VertexId, Element>;

/// Left-to-right product of f over the steps of the path.
inline Element holonomy(const Connection1& f, const EdgePath& path)
{
  Element acc = f.group().identity();
  for (const auto& s : path.steps())
    acc = f.group().multiply(acc, f.value(s.from, s.to));
  return acc;
}

/// g_ab = n_a^-1 f_ab n_b, the solution of f_ab n_b = n_a g_ab.
inline Connection1 gauge_transform(const Connection1& f, const GaugeTransform& n)
{
  const Group& g = f.group();
  for (const auto& v : f.complex().vertices())
    if (!n.count(v))
      throw std::invalid_argument("gauge transform missing vertex " + v);
  std::map<OrderedEdge, Element> values;
  for (const auto& [e, v] : f.stored())
    values.emplace(e, g.multiply(g.multiply(g.inverse(n.at(e.first)), v), n.at(e.second)));
  return Connection1(g, f.complex_ptr(), std::move(values));
}

/// Pointwise product (n m)_a = n_a m_a.
inline GaugeTransform compose_gauges(const Group& g, const GaugeTransform& n, const GaugeTransform& m)
{
  GaugeTransform out;
  for (const auto& [v, x] : n)
    out.emplace(v, g.multiply(x, m.at(v)));
  return out;
}

/// A gauge n with gauge_transform(f, n) == g, or nullopt.
///
/// Tries each value of n at one root per connected component, propagates
/// n_b = f_ab^-1 n_a g_ab along a BFS spanning tree, then checks every edge.
/// Candidates are tried identity first.
inline std::optional<GaugeTransform> find_isomorphism(const Connection1& f, const Connection1& g)
{
  if (!(f.group() == g.group()))
    throw std::invalid_argument("connections over different groups");
  const Group& G = f.group();
  if (!G.is_finite())
    throw InfiniteBackend("find_isomorphism: infinite backend");
  const SimplicialComplex& k = f.complex();
  const auto candidates = G.elements();

  GaugeTransform n;
  std::set<VertexId> placed;
  for (const auto& root : k.vertices()) {
    if (placed.count(root))
      continue;
    // spanning tree of root's component
    std::vector<std::pair<VertexId, VertexId>> tree;  // (parent, child)
    std::vector<VertexId> component{root};
    std::set<VertexId> seen{root};
    std::deque<VertexId> queue{root};
    while (!queue.empty()) {
      VertexId a = queue.front();
      queue.pop_front();
      for (const auto& b : k.neighbours(a)) {
        if (seen.insert(b).second) {
          tree.emplace_back(a, b);
          component.push_back(b);
          queue.push_back(b);
        }
      }
    }
    bool found = false;
    for (const auto& x : candidates) {
      GaugeTransform local{{root, x}};
      for (const auto& [a, b] : tree)
        local[b] = G.multiply(G.multiply(G.inverse(f.value(a, b)), local.at(a)), g.value(a, b));
      bool ok = true;
      for (const auto& a : component) {
        for (const auto& b : k.neighbours(a)) {
          Element lhs = G.multiply(G.multiply(G.inverse(local.at(a)), f.value(a, b)), local.at(b));
          if (lhs != g.value(a, b)) {
            ok = false;
            break;
          }
        }
        if (!ok)
          break;
      }
      if (ok) {
        n.insert(local.begin(), local.end());
        found = true;
        break;
      }
    }
    if (!found)
      return std::nullopt;
    placed.insert(component.begin(), component.end());
  }
  return n;
}

/// Trace of the holonomy around a loop in the given representation.
inline double wilson_loop(const Connection1& f, const EdgePath& loop, const Representation& rho)
{
  if (!loop.is_loop())
    throw std::invalid_argument("wilson_loop needs a closed path, got " + to_string(loop));
  return represent(rho, holonomy(f, loop)).trace();
}

/// Linear parallel transport of the associated vector bundle along a path.
inline Matrix associated_transport(const Connection1& f, const EdgePath& path, const Representation& rho)
{
  return represent(rho, holonomy(f, path));
}

}  // namespace ptrans

#endif  // PTRANS_BUNDLE_HPP
