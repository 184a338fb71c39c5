#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "sphtrop/cone.hpp"

namespace sphtrop {

/// A color of G/H with its image in N_R.
struct Color {
  std::string name;
  RatVec rho;

  bool operator==(const Color& o) const { return name == o.name && rho == o.rho; }
};

/// The data associated to a spherical homogeneous space: the rank of N,
/// the valuation cone (spanning and cosimplicial), the colors, and the
/// names of the semi-invariant characters giving the coordinates.
struct SphericalData {
  std::size_t dim = 0;
  RatCone vcone = RatCone::full(0);
  std::vector<Color> colors;
  std::vector<std::string> character_basis;

  const Color& color(const std::string& name) const;
  bool has_color(const std::string& name) const;

  /// Checks the structural invariants: vcone spans N_R and its facet
  /// normals are linearly independent (cosimplicial).
  bool well_formed(std::string* why = nullptr) const;
};

struct ColoredCone {
  RatCone cone = RatCone::zero(0);
  std::set<std::string> colors;

  bool operator==(const ColoredCone& o) const {
    return cone == o.cone && colors == o.colors;
  }
  std::string key() const;
};

struct ColoredFan {
  std::vector<ColoredCone> cones;

  bool contains(const ColoredCone& cc) const;
};

struct ColoredConeReport {
  bool cc1 = false;  // cone generated by rho(F) and rays of cone & V
  bool cc2 = false;  // relint(cone) meets V
  bool cc3 = false;  // 0 not in rho(F)
  bool strictly_convex = false;
  bool valid() const { return cc1 && cc2 && cc3 && strictly_convex; }
};

ColoredConeReport validate_colored_cone(const SphericalData& sd, const ColoredCone& cc);

/// Faces of cc.cone whose relative interior meets V, with the colors
/// landing in the face.
std::vector<ColoredCone> colored_faces(const SphericalData& sd, const ColoredCone& cc);

struct ColoredFanReport {
  bool face_closed = false;
  bool interiors_disjoint = false;  // relint(s1) & relint(s2) & V empty for s1 != s2
  std::vector<ColoredConeReport> cone_reports;
  std::string detail;
  bool valid() const {
    if (!face_closed || !interiors_disjoint) return false;
    for (const auto& r : cone_reports) {
      if (!r.valid()) return false;
    }
    return true;
  }
};

ColoredFanReport validate_colored_fan(const SphericalData& sd, const ColoredFan& fan);

/// True iff every cone of the fan lies inside the valuation cone.
bool check_star(const SphericalData& sd, const ColoredFan& fan);

struct StarResult {
  SphericalData sd;
  ColoredFan fan;
  QuotientMap map;
};

/// The quotient fan describing the orbit closure attached to tau.
/// dominant_color_complement, when given, is the explicit set of colors
/// that do not map dominantly to the orbit; the default takes every
/// color appearing on a member cone having tau as a colored face.
StarResult star_fan(const SphericalData& sd, const ColoredFan& fan, const ColoredCone& tau,
                    const std::optional<std::set<std::string>>& dominant_color_complement =
                        std::nullopt);

}  // namespace sphtrop
