#pragma once

#include <map>
#include <string>
#include <vector>

#include "sphtrop/colored.hpp"

namespace sphtrop {

/// Point of a stratified tropicalization space: a stratum (identified
/// by the canonical key of its colored cone or face) together with a
/// finite functional in the quotient space N(tau).
struct ExtendedPoint {
  std::string stratum;          // key of the face/colored cone tau
  RatCone tau = RatCone::zero(0);
  RatVec functional;            // coordinates in N(tau), via quotient_by_span(tau)
};

/// Evaluates the extension alpha~ at a lattice point u of sigma-dual:
/// alpha(u-bar) when u annihilates tau, infinity otherwise.
/// Throws when u lies outside sigma-dual.
ExtRat evaluate_extended(const RatCone& sigma, const ExtendedPoint& p, const RatVec& u);

/// Builds the extended point (tau, class of alpha) for a face tau of
/// sigma, with its evaluator semantics as above.
ExtendedPoint extend_functional(const RatCone& sigma, const RatCone& tau, RatVec alpha);

/// trop_G(X): one stratum V(tau) = projection of V per colored cone.
struct TropSpace {
  SphericalData base;
  ColoredFan fan;
  std::vector<std::pair<std::string, RatCone>> strata;  // colored-cone key -> V(tau)

  const RatCone& stratum(const std::string& key) const;
};

TropSpace build_trop_space(const SphericalData& sd, const ColoredFan& fan);

enum class CompactifyMode { toric, colored };

/// hom(sigma-dual, [0, inf]) by strata: one piece per face (toric mode)
/// or per face whose relative interior meets V (colored mode).
struct CompactifiedCone {
  RatCone sigma = RatCone::zero(0);
  /// face key -> (face, projected piece)
  std::vector<std::pair<RatCone, RatCone>> strata;

  const RatCone* piece_for(const RatCone& tau) const;
};

CompactifiedCone compactify_cone(const RatCone& sigma, CompactifyMode mode,
                                 const SphericalData* sd = nullptr);

/// Image of the retraction on X-beth, per maximal colored cone. Under
/// the star condition this is the canonical compactification of each
/// cone; otherwise each piece is the projection of sigma & V.
std::map<std::string, CompactifiedCone> p_image(const SphericalData& sd,
                                                const ColoredFan& fan);

/// Limit of v0 + s*w as s grows, as a point of the compactified cone:
/// the pair (tau, class of v0) for the face tau with w in its relative
/// interior. Throws when w lies in no stratum's relative interior.
ExtendedPoint limit_of_ray(const CompactifiedCone& space, const RatVec& v0, const RatVec& w);

}  // namespace sphtrop
