#include "sphtrop/colored.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace sphtrop {

namespace {

// Sum of the extreme rays of c; lies in relint(c) modulo lineality and
// is the witness point used for relative-interior intersection tests.
RatVec interior_witness(const RatCone& c) {
  RatVec v(c.dim(), Rat(0));
  for (const auto& r : c.extreme_rays()) v = add(v, r);
  return v;
}

// Decides relint(sigma) & V != empty. The witness is the sum of the
// extreme rays of sigma & V: if any point of sigma & V is strict on all
// facets of sigma then so is the witness.
bool relint_meets(const RatCone& sigma, const RatCone& vcone) {
  RatVec w = interior_witness(intersect(sigma, vcone));
  return membership(sigma, w) == Membership::relative_interior;
}

}  // namespace

const Color& SphericalData::color(const std::string& name) const {
  for (const auto& c : colors) {
    if (c.name == name) return c;
  }
  throw std::invalid_argument("unknown color: " + name);
}

bool SphericalData::has_color(const std::string& name) const {
  return std::any_of(colors.begin(), colors.end(),
                     [&](const Color& c) { return c.name == name; });
}

bool SphericalData::well_formed(std::string* why) const {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (vcone.dim() != dim) return fail("valuation cone has wrong ambient dimension");
  if (vcone.span_dim() != dim) return fail("valuation cone does not span N_R");
  if (rank(vcone.facets()) != vcone.facets().size())
    return fail("valuation cone is not cosimplicial");
  for (const auto& c : colors) {
    if (c.rho.size() != dim) return fail("color " + c.name + " has wrong dimension");
  }
  return true;
}

std::string ColoredCone::key() const {
  std::ostringstream os;
  os << cone.key() << "|";
  for (const auto& c : colors) os << c << ";";
  return os.str();
}

bool ColoredFan::contains(const ColoredCone& cc) const {
  return std::any_of(cones.begin(), cones.end(),
                     [&](const ColoredCone& c) { return c == cc; });
}

ColoredConeReport validate_colored_cone(const SphericalData& sd, const ColoredCone& cc) {
  if (cc.cone.dim() != sd.dim)
    throw std::invalid_argument("colored cone has wrong ambient dimension");
  std::vector<RatVec> gens;
  ColoredConeReport rep;
  rep.cc3 = true;
  for (const auto& name : cc.colors) {
    const Color& c = sd.color(name);
    if (is_zero(c.rho)) rep.cc3 = false;
    gens.push_back(c.rho);
  }
  RatCone meet = intersect(cc.cone, sd.vcone);
  for (const auto& r : meet.rays()) gens.push_back(r);
  rep.cc1 = (conical_hull(sd.dim, gens) == cc.cone);
  rep.cc2 = relint_meets(cc.cone, sd.vcone);
  rep.strictly_convex = cc.cone.is_strictly_convex();
  return rep;
}

std::vector<ColoredCone> colored_faces(const SphericalData& sd, const ColoredCone& cc) {
  std::vector<ColoredCone> out;
  for (const auto& f : face_lattice(cc.cone)) {
    if (!relint_meets(f, sd.vcone)) continue;
    ColoredCone face;
    face.cone = f;
    for (const auto& name : cc.colors) {
      if (contains(f, sd.color(name).rho)) face.colors.insert(name);
    }
    out.push_back(std::move(face));
  }
  return out;
}

ColoredFanReport validate_colored_fan(const SphericalData& sd, const ColoredFan& fan) {
  ColoredFanReport rep;
  std::ostringstream detail;
  rep.face_closed = true;
  rep.interiors_disjoint = true;
  for (const auto& cc : fan.cones) {
    rep.cone_reports.push_back(validate_colored_cone(sd, cc));
    for (const auto& f : colored_faces(sd, cc)) {
      if (!fan.contains(f)) {
        rep.face_closed = false;
        detail << "missing colored face " << f.key() << " of " << cc.key() << "; ";
      }
    }
  }
  for (std::size_t i = 0; i < fan.cones.size(); ++i) {
    for (std::size_t j = i + 1; j < fan.cones.size(); ++j) {
      const auto& a = fan.cones[i];
      const auto& b = fan.cones[j];
      if (a == b) {
        rep.interiors_disjoint = false;
        detail << "duplicate colored cone " << a.key() << "; ";
        continue;
      }
      RatVec w = interior_witness(intersect(intersect(a.cone, b.cone), sd.vcone));
      if (membership(a.cone, w) == Membership::relative_interior &&
          membership(b.cone, w) == Membership::relative_interior) {
        rep.interiors_disjoint = false;
        detail << "relative interiors of " << a.key() << " and " << b.key()
               << " share the valuation " << to_string(w) << "; ";
      }
    }
  }
  rep.detail = detail.str();
  return rep;
}

bool check_star(const SphericalData& sd, const ColoredFan& fan) {
  for (const auto& cc : fan.cones) {
    for (const auto& r : cc.cone.rays()) {
      if (!contains(sd.vcone, r)) return false;
    }
  }
  return true;
}

StarResult star_fan(const SphericalData& sd, const ColoredFan& fan, const ColoredCone& tau,
                    const std::optional<std::set<std::string>>& dominant_color_complement) {
  if (!fan.contains(tau)) throw std::invalid_argument("star_fan: tau is not in the fan");
  QuotientMap q = quotient_by_span(tau.cone);

  // Members having (tau, F_tau) as a colored face.
  std::vector<const ColoredCone*> members;
  for (const auto& cc : fan.cones) {
    if (!is_face_of(tau.cone, cc.cone)) continue;
    std::set<std::string> face_colors;
    for (const auto& name : cc.colors) {
      if (contains(tau.cone, sd.color(name).rho)) face_colors.insert(name);
    }
    if (face_colors == tau.colors && relint_meets(tau.cone, sd.vcone))
      members.push_back(&cc);
  }

  std::set<std::string> complement;
  if (dominant_color_complement) {
    complement = *dominant_color_complement;
  } else if (tau.cone.is_zero()) {
    // Star at the trivial face is the identity; no color dominates the
    // open orbit, so the complement is everything.
    for (const auto& c : sd.colors) complement.insert(c.name);
  } else {
    for (const auto* cc : members) {
      complement.insert(cc->colors.begin(), cc->colors.end());
    }
  }

  StarResult res;
  res.map = q;
  res.sd.dim = q.target_dim;
  res.sd.vcone = project_cone(sd.vcone, q);
  for (const auto& name : complement) {
    res.sd.colors.push_back(Color{name, q.apply(sd.color(name).rho)});
  }
  if (q.target_dim == sd.dim) res.sd.character_basis = sd.character_basis;

  for (const auto* cc : members) {
    ColoredCone image;
    image.cone = project_cone(cc->cone, q);
    for (const auto& name : cc->colors) {
      if (complement.count(name)) image.colors.insert(name);
    }
    if (!res.fan.contains(image)) res.fan.cones.push_back(std::move(image));
  }
  return res;
}

}  // namespace sphtrop
