#pragma once

#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "sphtrop/colored.hpp"
#include "sphtrop/puiseux.hpp"

namespace sphtrop {

/// Element of G(k) with rational entries, flattened. Layout:
///   torus(n): n nonzero scalars
///   sl2_h:    2x2 matrix, row-major, det != 0
///   gl2:      pair of 2x2 matrices (g, h), row-major, both invertible
using GroupElem = std::vector<Rat>;

/// Evaluator for the semi-invariant of one character: (g . f)(x).
using SemiInvariant =
    std::function<PuiseuxSeries(const GroupElem&, const PuiseuxPoint&)>;

struct RegistryEntry {
  std::string name;
  SphericalData sd;
  std::vector<std::pair<std::string, ColoredFan>> fans;
  /// One evaluator per character_basis entry, same order.
  std::vector<std::pair<std::string, SemiInvariant>> semiinvariants;
  /// Change of basis from character-valuation coordinates to the
  /// coordinates of sd (rows act on the character-coordinate vector).
  std::vector<RatVec> basis_transform;
  std::size_t point_dim = 0;  // coordinates of a PuiseuxPoint for this entry

  std::function<GroupElem(std::mt19937_64&)> group_sampler;

  const ColoredFan& fan(const std::string& fan_name) const;
};

/// name in {"torus(n)" for n >= 1, "sl2_h", "gl2"}.
RegistryEntry registry_get(const std::string& name);

std::vector<std::string> registry_names();

PuiseuxSeries semiinvariant_eval(const RegistryEntry& entry, const std::string& character,
                                 const GroupElem& g, const PuiseuxPoint& x);

}  // namespace sphtrop
