#ifndef PTRANS_REPRESENTATION_HPP
#define PTRANS_REPRESENTATION_HPP

#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>

#include <Eigen/Dense>

#include "group.hpp"

namespace ptrans {

using Matrix = Eigen::MatrixXd;

/// Finite-dimensional real linear action of a group.
///
///  - permutation: S_n acting on R^n by permutation matrices (exact 0/1 entries)
///  - cyclic_character: Z_n element m acting on R^2 by rotation through
///    2*pi*k*m/n, the real form of the k-th power character (float entries)
///  - table: explicit matrices for every element of a small finite group
class Representation {
 public:
  enum class Kind { permutation, cyclic_character, table };

  static Representation permutation(const Group& g)
  {
    if (g.kind() != Group::Kind::symmetric)
      throw std::invalid_argument("permutation representation needs a symmetric group");
    return Representation(Kind::permutation, g, static_cast<int>(g.n()), 0, true);
  }

  static Representation cyclic_character(const Group& g, std::int64_t k)
  {
    if (g.kind() != Group::Kind::cyclic)
      throw std::invalid_argument("cyclic character needs a cyclic group");
    return Representation(Kind::cyclic_character, g, 2, k, false);
  }

  /// Every element must be tabulated; the table must be a homomorphism.
  static Representation table(const Group& g, std::map<Element, Matrix> matrices, bool exact)
  {
    if (matrices.empty())
      throw std::invalid_argument("empty representation table");
    const auto dim = static_cast<int>(matrices.begin()->second.rows());
    for (const auto& [elem, m] : matrices) {
      if (!g.contains(elem))
        throw std::invalid_argument("table entry is not an element of the group");
      if (m.rows() != dim || m.cols() != dim)
        throw std::invalid_argument("table matrices must be square of one dimension");
    }
    for (const auto& elem : g.elements())
      if (!matrices.count(elem))
        throw std::invalid_argument("table misses element " + g.format(elem));
    Representation rep(Kind::table, g, dim, 0, exact);
    rep.table_ = std::move(matrices);
    if (!rep.table_.at(g.identity()).isIdentity(1e-12))
      throw std::invalid_argument("table sends the identity to a non-identity matrix");
    for (const auto& [a, ma] : rep.table_)
      for (const auto& [b, mb] : rep.table_)
        if (!(ma * mb).isApprox(rep.table_.at(g.multiply(a, b)), 1e-9))
          throw std::invalid_argument("table is not a homomorphism at (" + g.format(a) + ", " +
                                      g.format(b) + ")");
    return rep;
  }

  Kind kind() const { return kind_; }
  const Group& group() const { return group_; }
  int dimension() const { return dim_; }
  /// Entries are exact (0/1 or tabulated exact values) rather than floats.
  bool exact() const { return exact_; }
  std::int64_t character_power() const { return k_; }

  friend Matrix represent(const Representation& rho, const Element& a);

 private:
  Representation(Kind kind, Group g, int dim, std::int64_t k, bool exact)
      : kind_(kind), group_(std::move(g)), dim_(dim), k_(k), exact_(exact)
  {
  }

  Kind kind_;
  Group group_;
  int dim_;
  std::int64_t k_;
  bool exact_;
  std::map<Element, Matrix> table_;
};

/// Matrix of a group element. Homomorphism: represent(ab) = represent(a) * represent(b).
inline Matrix represent(const Representation& rho, const Element& a)
{
  if (!rho.group_.contains(a))
    throw std::invalid_argument("element does not belong to the representation's group");
  switch (rho.kind_) {
    case Representation::Kind::permutation: {
      // (a*b)(i) = a(b(i)) makes e_i -> e_{sigma(i)} the homomorphic choice.
      const auto& images = std::get<Permutation>(a.value).images;
      Matrix m = Matrix::Zero(rho.dim_, rho.dim_);
      for (int i = 0; i < rho.dim_; ++i)
        m(images[static_cast<std::size_t>(i)] - 1, i) = 1.0;
      return m;
    }
    case Representation::Kind::cyclic_character: {
      const auto m = std::get<Residue>(a.value).value;
      const auto n = rho.group_.n();
      const auto turns = ((rho.k_ * m) % n + n) % n;
      const double angle = 2.0 * std::numbers::pi * static_cast<double>(turns) / static_cast<double>(n);
      Matrix r(2, 2);
      r << std::cos(angle), -std::sin(angle), std::sin(angle), std::cos(angle);
      return r;
    }
    case Representation::Kind::table: return rho.table_.at(a);
  }
  return {};
}

inline double character(const Representation& rho, const Element& a)
{
  return represent(rho, a).trace();
}

}  // namespace ptrans

#endif  // PTRANS_REPRESENTATION_HPP
