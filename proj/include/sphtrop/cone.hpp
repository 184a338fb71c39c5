#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "sphtrop/ratvec.hpp"

namespace sphtrop {

/// Exact rational polyhedral cone with both descriptions.
///
/// Rays are stored in canonical form: primitive integer vectors, sorted
/// lexicographically, no redundant generators. A line in the cone
/// contributes both +/- of a canonical basis vector. Halfspaces are
/// inner normals u with cone = {v : <u,v> >= 0 for all u}; an equation
/// appears as a +/- pair. Both lists are canonical, so cones are equal
/// as sets iff they are equal as values.
class RatCone {
public:
  static RatCone from_rays(std::size_t dim, std::vector<RatVec> generators);
  static RatCone from_halfspaces(std::size_t dim, std::vector<RatVec> halfspaces);
  static RatCone zero(std::size_t dim);
  static RatCone full(std::size_t dim);

  std::size_t dim() const { return dim_; }
  const std::vector<RatVec>& rays() const { return rays_; }
  const std::vector<RatVec>& halfspaces() const { return halfspaces_; }

  /// Canonical basis of the largest linear subspace contained in the cone.
  const std::vector<RatVec>& lineality() const { return lineality_; }
  /// Extreme rays modulo lineality (excludes the +/- line generators).
  const std::vector<RatVec>& extreme_rays() const { return extreme_rays_; }
  /// Inequality halfspaces only (facet normals; equations excluded).
  const std::vector<RatVec>& facets() const { return facets_; }
  /// Equations of the linear span, one representative per +/- pair.
  const std::vector<RatVec>& span_equations() const { return equations_; }

  std::size_t span_dim() const;
  bool is_strictly_convex() const { return lineality_.empty(); }
  bool is_zero() const { return rays_.empty(); }

  bool operator==(const RatCone& o) const {
    return dim_ == o.dim_ && rays_ == o.rays_;
  }
  bool operator!=(const RatCone& o) const { return !(*this == o); }

  /// Canonical key, usable for map lookups and as a gluing identity.
  std::string key() const;

private:
  RatCone() = default;

  std::size_t dim_ = 0;
  std::vector<RatVec> rays_;
  std::vector<RatVec> halfspaces_;
  std::vector<RatVec> lineality_;
  std::vector<RatVec> extreme_rays_;
  std::vector<RatVec> facets_;
  std::vector<RatVec> equations_;
};

enum class Membership { outside, boundary, relative_interior };

/// {u : <u,v> >= 0 for all v in c}. Involutive on closed rational cones.
RatCone dual_cone(const RatCone& c);

/// All faces including {0} (when pointed) and c itself, ordered by
/// dimension and then lexicographically by ray lists.
std::vector<RatCone> face_lattice(const RatCone& c);

Membership membership(const RatCone& c, const RatVec& v);

bool contains(const RatCone& c, const RatVec& v);

/// True iff f is a face of c (f arises as c intersected with a
/// supporting hyperplane; includes f == c).
bool is_face_of(const RatCone& f, const RatCone& c);

RatCone intersect(const RatCone& a, const RatCone& b);

/// Surjection N_R -> N_R / span(tau), canonicalized.
struct QuotientMap {
  std::size_t source_dim = 0;
  std::size_t target_dim = 0;
  std::vector<RatVec> matrix;  // rows; kernel = span(tau)

  RatVec apply(const RatVec& v) const { return apply_rows(matrix, v); }
};

RatCone project_cone(const RatCone& c, const QuotientMap& q);

QuotientMap quotient_by_span(const RatCone& tau);

/// Conical hull of a set of generators (convenience wrapper).
RatCone conical_hull(std::size_t dim, const std::vector<RatVec>& gens);

}  // namespace sphtrop
