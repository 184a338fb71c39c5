#pragma once

#include <cstdint>

#include "sphtrop/compactify.hpp"
#include "sphtrop/puiseux.hpp"
#include "sphtrop/registry.hpp"

namespace sphtrop {

/// Coordinatewise additive valuation; all coordinates must be nonzero.
RatVec trp_torus(const PuiseuxPoint& x);

/// Tropicalization of a point of a toric variety given in the affine
/// chart of chart_cone (a cone of the fan whose rays form part of a
/// lattice basis; coordinate i corresponds to the i-th extreme ray in
/// descending lexicographic order, so the standard orthant reads
/// e1, ..., en). The zero pattern of x selects the face whose orbit the
/// point lies in.
ExtendedPoint trp_toric_extended(const SphericalData& sd, const ColoredFan& fan,
                                 const RatCone& chart_cone, const PuiseuxPoint& x);

/// Overload usable when the fan has a unique maximal cone.
ExtendedPoint trp_toric_extended(const SphericalData& sd, const ColoredFan& fan,
                                 const PuiseuxPoint& x);

struct SamplingParams {
  unsigned samples = 8;
  std::uint64_t seed = 0;
};

/// Generic-position spherical tropicalization: per basis character, the
/// minimum over sampled group translates of the valuation of the
/// translated semi-invariant at x; reported in the coordinates of the
/// entry's spherical data.
RatVec trp_generic(const RegistryEntry& entry, const PuiseuxPoint& x,
                   const SamplingParams& params = {});

/// Runs trp_generic with params.samples and 2*params.samples and throws
/// when the two disagree (sampling instability), otherwise returns the
/// common value.
RatVec trp_generic_stable(const RegistryEntry& entry, const PuiseuxPoint& x,
                          const SamplingParams& params = {});

}  // namespace sphtrop
