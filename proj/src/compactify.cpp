#include "sphtrop/compactify.hpp"

#include <algorithm>
#include <stdexcept>

namespace sphtrop {

namespace {

bool relint_meets_vcone(const RatCone& f, const RatCone& vcone) {
  RatVec w(f.dim(), Rat(0));
  RatCone meet = intersect(f, vcone);
  for (const auto& r : meet.extreme_rays()) w = add(w, r);
  return membership(f, w) == Membership::relative_interior;
}

}  // namespace

ExtRat evaluate_extended(const RatCone& sigma, const ExtendedPoint& p, const RatVec& u) {
  bool in_dual = true;
  for (const auto& r : sigma.rays()) {
    if (dot(u, r) < 0) in_dual = false;
  }
  if (!in_dual) throw std::invalid_argument("evaluate_extended: u is outside sigma-dual");
  for (const auto& r : p.tau.rays()) {
    if (dot(u, r) != 0) return ExtRat::infinity();
  }
  QuotientMap q = quotient_by_span(p.tau);
  auto coeffs = solve_in_row_span(q.matrix, u);
  if (!coeffs) throw std::logic_error("evaluate_extended: u not in the annihilator span");
  Rat value = 0;
  for (std::size_t i = 0; i < coeffs->size(); ++i) value += (*coeffs)[i] * p.functional[i];
  return ExtRat(value);
}

ExtendedPoint extend_functional(const RatCone& sigma, const RatCone& tau, RatVec alpha) {
  if (!is_face_of(tau, sigma))
    throw std::invalid_argument("extend_functional: tau is not a face of sigma");
  QuotientMap q = quotient_by_span(tau);
  if (alpha.size() != q.target_dim)
    throw std::invalid_argument("extend_functional: functional has wrong dimension");
  ExtendedPoint p;
  p.stratum = tau.key();
  p.tau = tau;
  p.functional = std::move(alpha);
  return p;
}

const RatCone& TropSpace::stratum(const std::string& key) const {
  for (const auto& [k, c] : strata) {
    if (k == key) return c;
  }
  throw std::invalid_argument("unknown stratum: " + key);
}

TropSpace build_trop_space(const SphericalData& sd, const ColoredFan& fan) {
  auto rep = validate_colored_fan(sd, fan);
  if (!rep.valid())
    throw std::invalid_argument("build_trop_space: invalid colored fan: " + rep.detail);
  TropSpace ts;
  ts.base = sd;
  ts.fan = fan;
  for (const auto& cc : fan.cones) {
    QuotientMap q = quotient_by_span(cc.cone);
    ts.strata.emplace_back(cc.key(), project_cone(sd.vcone, q));
  }
  return ts;
}

const RatCone* CompactifiedCone::piece_for(const RatCone& tau) const {
  for (const auto& [f, piece] : strata) {
    if (f == tau) return &piece;
  }
  return nullptr;
}

CompactifiedCone compactify_cone(const RatCone& sigma, CompactifyMode mode,
                                 const SphericalData* sd) {
  if (!sigma.is_strictly_convex())
    throw std::invalid_argument("compactify_cone: sigma must be strictly convex");
  if (mode == CompactifyMode::colored && sd == nullptr)
    throw std::invalid_argument("compactify_cone: colored mode needs spherical data");
  CompactifiedCone out;
  out.sigma = sigma;
  for (const auto& tau : face_lattice(sigma)) {
    if (mode == CompactifyMode::colored && !relint_meets_vcone(tau, sd->vcone)) continue;
    QuotientMap q = quotient_by_span(tau);
    out.strata.emplace_back(tau, project_cone(sigma, q));
  }
  return out;
}

std::map<std::string, CompactifiedCone> p_image(const SphericalData& sd,
                                                const ColoredFan& fan) {
  auto rep = validate_colored_fan(sd, fan);
  if (!rep.valid()) throw std::invalid_argument("p_image: invalid colored fan: " + rep.detail);
  bool star = check_star(sd, fan);

  std::map<std::string, CompactifiedCone> out;
  for (const auto& cc : fan.cones) {
    // Maximal members only: not a proper face of another member.
    bool maximal = true;
    for (const auto& other : fan.cones) {
      if (&other != &cc && other.cone != cc.cone && is_face_of(cc.cone, other.cone))
        maximal = false;
    }
    if (!maximal) continue;

    CompactifiedCone piece;
    piece.sigma = cc.cone;
    if (star) {
      piece = compactify_cone(cc.cone, CompactifyMode::colored, &sd);
    } else {
      RatCone meet = intersect(cc.cone, sd.vcone);
      for (const auto& tau : face_lattice(cc.cone)) {
        if (!relint_meets_vcone(tau, sd.vcone)) continue;
        QuotientMap q = quotient_by_span(tau);
        piece.strata.emplace_back(tau, project_cone(meet, q));
      }
    }
    out.emplace(cc.key(), std::move(piece));
  }
  return out;
}

ExtendedPoint limit_of_ray(const CompactifiedCone& space, const RatVec& v0, const RatVec& w) {
  if (!contains(space.sigma, v0))
    throw std::invalid_argument("limit_of_ray: v0 is outside sigma");
  if (is_zero(w)) throw std::invalid_argument("limit_of_ray: w is zero (no stratum)");
  for (const auto& [tau, piece] : space.strata) {
    if (membership(tau, w) == Membership::relative_interior) {
      QuotientMap q = quotient_by_span(tau);
      ExtendedPoint p;
      p.stratum = tau.key();
      p.tau = tau;
      p.functional = q.apply(v0);
      return p;
    }
  }
  throw std::invalid_argument("limit_of_ray: w is in no stratum's relative interior");
}

}  // namespace sphtrop
