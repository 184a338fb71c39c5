#pragma once

#include <string>

#include <json.hpp>

#include "sphtrop/colored.hpp"
#include "sphtrop/compactify.hpp"
#include "sphtrop/puiseux.hpp"
#include "sphtrop/registry.hpp"

namespace sphtrop::io {

using json = nlohmann::json;

// Rationals cross the boundary as {"num": int, "den": positive int} in
// lowest terms; Puiseux terms as arrays [exp_num, exp_den, coeff_num,
// coeff_den]. Field order is canonical (alphabetical) so serialization
// round-trips byte-identically.

json rat_to_json(const Rat& q);
Rat rat_from_json(const json& j);

json vec_to_json(const RatVec& v);
RatVec vec_from_json(const json& j);

json cone_to_json(const RatCone& c);

json series_to_json(const PuiseuxSeries& s);
PuiseuxSeries series_from_json(const json& j);

json point_to_json(const PuiseuxPoint& p);
PuiseuxPoint point_from_json(const json& j);

json spherical_data_to_json(const SphericalData& sd);
SphericalData spherical_data_from_json(const json& j);

json fan_to_json(const ColoredFan& fan);
ColoredFan fan_from_json(const json& j, std::size_t dim);

json points_to_json(const std::vector<PuiseuxPoint>& pts);
std::vector<PuiseuxPoint> points_from_json(const json& j);

json entry_to_json(const RegistryEntry& e);

json colored_cone_report_to_json(const ColoredConeReport& r);
json colored_fan_report_to_json(const ColoredFanReport& r);

json compactified_cone_to_json(const CompactifiedCone& c);

/// SVG of a 2-dimensional fan: the valuation cone, colors, cones, and
/// optionally the p-image piece of each maximal cone.
std::string plot_fan_svg(const SphericalData& sd, const ColoredFan& fan, bool with_p_image);

}  // namespace sphtrop::io
