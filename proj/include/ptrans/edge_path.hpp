#ifndef PTRANS_EDGE_PATH_HPP
#define PTRANS_EDGE_PATH_HPP

#include <compare>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ptrans {

/// Opaque vertex name. Ordered lexicographically wherever output must be deterministic.
using VertexId = std::string;

/// One oriented step (from, to) of an edge-path. from == to is a degenerate step.
struct Step {
  VertexId from;
  VertexId to;

  bool degenerate() const { return from == to; }
  Step reversed() const { return {to, from}; }

  friend auto operator<=>(const Step&, const Step&) = default;
  friend bool operator==(const Step&, const Step&) = default;
};

/// A nonempty composable sequence of steps. The identity at x is ((x,x)).
///
/// Construction enforces composability only; membership of the steps in a
/// complex is checked by the operations that have one at hand.
class EdgePath {
 public:
  explicit EdgePath(std::vector<Step> steps) : steps_(std::move(steps))
  {
    if (steps_.empty())
      throw std::invalid_argument("edge-path must have at least one step");
    for (std::size_t i = 0; i + 1 < steps_.size(); ++i) {
      if (steps_[i].to != steps_[i + 1].from)
        throw std::invalid_argument("edge-path not composable at step " + std::to_string(i + 1) +
                                    ": " + steps_[i].to + " != " + steps_[i + 1].from);
    }
  }

  static EdgePath identity(const VertexId& x) { return EdgePath({{x, x}}); }

  /// (v0, v1, ..., vn) -> ((v0,v1), ..., (vn-1,vn)); a single vertex gives the identity.
  static EdgePath through(std::span<const VertexId> vertices)
  {
    if (vertices.empty())
      throw std::invalid_argument("edge-path needs at least one vertex");
    if (vertices.size() == 1)
      return identity(vertices.front());
    std::vector<Step> steps;
    steps.reserve(vertices.size() - 1);
    for (std::size_t i = 0; i + 1 < vertices.size(); ++i)
      steps.push_back({vertices[i], vertices[i + 1]});
    return EdgePath(std::move(steps));
  }

  static EdgePath through(std::initializer_list<VertexId> vertices)
  {
    return through(std::span<const VertexId>(vertices.begin(), vertices.size()));
  }

  const std::vector<Step>& steps() const { return steps_; }
  std::size_t size() const { return steps_.size(); }
  const Step& operator[](std::size_t i) const { return steps_[i]; }

  const VertexId& source() const { return steps_.front().from; }
  const VertexId& target() const { return steps_.back().to; }
  bool is_loop() const { return source() == target(); }
  bool is_identity() const { return steps_.size() == 1 && steps_.front().degenerate(); }

  /// Vertex at boundary k, 0 <= k <= size(): the source of step k, or the target for k == size().
  const VertexId& vertex_at(std::size_t k) const
  {
    if (k > steps_.size())
      throw std::out_of_range("boundary index " + std::to_string(k) + " out of range");
    return k == steps_.size() ? steps_.back().to : steps_[k].from;
  }

  /// v0, v1, ..., vn.
  std::vector<VertexId> vertices() const
  {
    std::vector<VertexId> out;
    out.reserve(steps_.size() + 1);
    out.push_back(source());
    for (const auto& s : steps_)
      out.push_back(s.to);
    return out;
  }

  friend bool operator==(const EdgePath&, const EdgePath&) = default;
  friend auto operator<=>(const EdgePath& a, const EdgePath& b) { return a.steps_ <=> b.steps_; }

 private:
  std::vector<Step> steps_;
};

/// Removes degenerate steps; an all-degenerate path becomes the identity at its source.
inline EdgePath strip_degenerate(const EdgePath& p)
{
  std::vector<Step> kept;
  for (const auto& s : p.steps())
    if (!s.degenerate())
      kept.push_back(s);
  if (kept.empty())
    return EdgePath::identity(p.source());
  return EdgePath(std::move(kept));
}

/// Concatenation in the groupoid of edge-paths. Degenerate steps are
/// identities there, so the result carries none unless it is an identity.
inline EdgePath compose(const EdgePath& p, const EdgePath& q)
{
  if (p.target() != q.source())
    throw std::invalid_argument("cannot compose: target " + p.target() + " != source " + q.source());
  std::vector<Step> steps = p.steps();
  steps.insert(steps.end(), q.steps().begin(), q.steps().end());
  return strip_degenerate(EdgePath(std::move(steps)));
}

inline EdgePath invert(const EdgePath& p)
{
  std::vector<Step> steps;
  steps.reserve(p.size());
  for (auto it = p.steps().rbegin(); it != p.steps().rend(); ++it)
    steps.push_back(it->reversed());
  return EdgePath(std::move(steps));
}

/// Normal form under insertion/cancellation of neighbouring opposite steps.
/// No adjacent (x,y),(y,x) pair and no degenerate step survive, except
/// the lone identity step of a fully cancelled path.
inline EdgePath reduce_x1(const EdgePath& p)
{
  std::vector<Step> stack;
  for (const auto& s : p.steps()) {
    if (s.degenerate())
      continue;
    if (!stack.empty() && stack.back() == s.reversed())
      stack.pop_back();
    else
      stack.push_back(s);
  }
  if (stack.empty())
    return EdgePath::identity(p.source());
  return EdgePath(std::move(stack));
}

inline bool x1_homotopic(const EdgePath& p, const EdgePath& q)
{
  return p.source() == q.source() && p.target() == q.target() && reduce_x1(p) == reduce_x1(q);
}

/// Inserts the degenerate step (x,x) at position k, x being the vertex at boundary k.
inline EdgePath insert_degenerate(const EdgePath& p, std::size_t k)
{
  if (k > p.size())
    throw std::out_of_range("insert position " + std::to_string(k) + " beyond path length " +
                            std::to_string(p.size()));
  const VertexId& x = p.vertex_at(k);
  std::vector<Step> steps = p.steps();
  steps.insert(steps.begin() + static_cast<std::ptrdiff_t>(k), Step{x, x});
  return EdgePath(std::move(steps));
}

/// Removes the degenerate step at position l. The path must keep at least one step.
inline EdgePath drop_degenerate(const EdgePath& p, std::size_t l)
{
  if (l >= p.size())
    throw std::out_of_range("drop position " + std::to_string(l) + " out of range");
  if (!p[l].degenerate())
    throw std::invalid_argument("step " + std::to_string(l) + " is not degenerate");
  if (p.size() < 2)
    throw std::invalid_argument("cannot drop the only step of a path");
  std::vector<Step> steps = p.steps();
  steps.erase(steps.begin() + static_cast<std::ptrdiff_t>(l));
  return EdgePath(std::move(steps));
}

/// "(ac,cb)" when every vertex name is a single character, "(a>c,c>b)" otherwise.
inline std::string to_string(const EdgePath& p)
{
  bool short_names = true;
  for (const auto& s : p.steps())
    short_names = short_names && s.from.size() == 1 && s.to.size() == 1;
  std::string out = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i)
      out += ',';
    out += p[i].from;
    if (!short_names)
      out += '>';
    out += p[i].to;
  }
  return out + ")";
}

}  // namespace ptrans

#endif  // PTRANS_EDGE_PATH_HPP
