#include "sphtrop/trop.hpp"

#include <algorithm>
#include <stdexcept>

namespace sphtrop {

RatVec trp_torus(const PuiseuxPoint& x) {
  RatVec v;
  for (const auto& c : x.coords) {
    if (c.is_zero())
      throw std::domain_error(
          "trp_torus: zero coordinate (point lies on a boundary stratum)");
    v.push_back(c.val().finite());
  }
  return v;
}

ExtendedPoint trp_toric_extended(const SphericalData& sd, const ColoredFan& fan,
                                 const RatCone& chart_cone, const PuiseuxPoint& x) {
  bool in_fan = std::any_of(fan.cones.begin(), fan.cones.end(),
                            [&](const ColoredCone& cc) { return cc.cone == chart_cone; });
  if (!in_fan) throw std::invalid_argument("trp_toric_extended: chart cone is not in the fan");
  // Chart coordinates follow the extreme rays in descending lexicographic
  // order, which for the standard orthant is e1, e2, ..., en.
  std::vector<RatVec> rays = chart_cone.extreme_rays();
  std::reverse(rays.begin(), rays.end());
  if (x.coords.size() != rays.size())
    throw std::invalid_argument("trp_toric_extended: point arity != number of chart rays");
  if (rank(rays) != rays.size())
    throw std::invalid_argument("trp_toric_extended: chart rays must be independent");

  std::vector<RatVec> tau_gens;
  RatVec v(sd.dim, Rat(0));
  for (std::size_t i = 0; i < rays.size(); ++i) {
    if (x.coords[i].is_zero()) {
      tau_gens.push_back(rays[i]);
    } else {
      v = add(v, scale(x.coords[i].val().finite(), rays[i]));
    }
  }
  RatCone tau = RatCone::from_rays(sd.dim, tau_gens);
  const ColoredCone* member = nullptr;
  for (const auto& cc : fan.cones) {
    if (cc.cone == tau) member = &cc;
  }
  if (!member)
    throw std::invalid_argument("trp_toric_extended: zero pattern matches no cone of the fan");
  QuotientMap q = quotient_by_span(tau);
  ExtendedPoint p;
  p.stratum = member->key();
  p.tau = tau;
  p.functional = q.apply(v);
  return p;
}

ExtendedPoint trp_toric_extended(const SphericalData& sd, const ColoredFan& fan,
                                 const PuiseuxPoint& x) {
  const RatCone* chart = nullptr;
  for (const auto& cc : fan.cones) {
    bool maximal = true;
    for (const auto& other : fan.cones) {
      if (other.cone != cc.cone && is_face_of(cc.cone, other.cone)) maximal = false;
    }
    if (!maximal) continue;
    if (chart && *chart != cc.cone)
      throw std::invalid_argument(
          "trp_toric_extended: fan has several maximal cones, pass a chart cone");
    chart = &cc.cone;
  }
  if (!chart) throw std::invalid_argument("trp_toric_extended: empty fan");
  return trp_toric_extended(sd, fan, *chart, x);
}

RatVec trp_generic(const RegistryEntry& entry, const PuiseuxPoint& x,
                   const SamplingParams& params) {
  if (params.samples == 0) throw std::invalid_argument("trp_generic: samples must be positive");
  std::mt19937_64 rng(params.seed);
  std::vector<GroupElem> gs;
  for (unsigned i = 0; i < params.samples; ++i) gs.push_back(entry.group_sampler(rng));

  RatVec char_coords;
  for (const auto& name : entry.sd.character_basis) {
    ExtRat best = ExtRat::infinity();
    for (const auto& g : gs) best = min(best, semiinvariant_eval(entry, name, g, x).val());
    if (best.is_infinity())
      throw std::domain_error("trp_generic: " + name + " vanished on every sampled translate");
    char_coords.push_back(best.finite());
  }
  return apply_rows(entry.basis_transform, char_coords);
}

RatVec trp_generic_stable(const RegistryEntry& entry, const PuiseuxPoint& x,
                          const SamplingParams& params) {
  RatVec a = trp_generic(entry, x, params);
  SamplingParams doubled = params;
  doubled.samples = params.samples * 2;
  RatVec b = trp_generic(entry, x, doubled);
  if (a != b)
    throw std::runtime_error("trp_generic: unstable at the given sampling parameters");
  return a;
}

}  // namespace sphtrop
