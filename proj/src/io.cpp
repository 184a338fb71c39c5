#include "sphtrop/io.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace sphtrop::io {

namespace {

long long to_ll(const Int& i) { return i.convert_to<long long>(); }

}  // namespace

json rat_to_json(const Rat& q) {
  return json{{"den", to_ll(den(q))}, {"num", to_ll(num(q))}};
}

Rat rat_from_json(const json& j) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den"))
    throw std::invalid_argument("rational must be {\"num\":..,\"den\":..}");
  long long n = j.at("num").get<long long>();
  long long d = j.at("den").get<long long>();
  if (d <= 0) throw std::invalid_argument("rational denominator must be positive");
  return Rat(Int(n), Int(d));
}

json vec_to_json(const RatVec& v) {
  json out = json::array();
  for (const auto& q : v) out.push_back(rat_to_json(q));
  return out;
}

RatVec vec_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("vector must be an array");
  RatVec v;
  for (const auto& e : j) v.push_back(rat_from_json(e));
  return v;
}

json cone_to_json(const RatCone& c) {
  json rays = json::array();
  for (const auto& r : c.rays()) rays.push_back(vec_to_json(r));
  json hs = json::array();
  for (const auto& h : c.halfspaces()) hs.push_back(vec_to_json(h));
  return json{{"dim", c.dim()}, {"halfspaces", hs}, {"rays", rays}};
}

json series_to_json(const PuiseuxSeries& s) {
  json out = json::array();
  for (const auto& [e, c] : s.terms()) {
    out.push_back(json::array({to_ll(num(e)), to_ll(den(e)), to_ll(num(c)), to_ll(den(c))}));
  }
  return out;
}

PuiseuxSeries series_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("series must be an array of terms");
  PuiseuxSeries s;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 4)
      throw std::invalid_argument("series term must be [exp_num,exp_den,coeff_num,coeff_den]");
    Rat e(Int(t[0].get<long long>()), Int(t[1].get<long long>()));
    Rat c(Int(t[2].get<long long>()), Int(t[3].get<long long>()));
    s = s + PuiseuxSeries::monomial(e, c);
  }
  return s;
}

json point_to_json(const PuiseuxPoint& p) {
  json out = json::array();
  for (const auto& s : p.coords) out.push_back(series_to_json(s));
  return out;
}

PuiseuxPoint point_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("point must be an array of series");
  PuiseuxPoint p;
  for (const auto& s : j) p.coords.push_back(series_from_json(s));
  return p;
}

json spherical_data_to_json(const SphericalData& sd) {
  json colors = json::array();
  for (const auto& c : sd.colors) {
    colors.push_back(json{{"name", c.name}, {"rho", vec_to_json(c.rho)}});
  }
  json hs = json::array();
  for (const auto& h : sd.vcone.halfspaces()) hs.push_back(vec_to_json(h));
  return json{{"basis_names", sd.character_basis},
              {"colors", colors},
              {"dim", sd.dim},
              {"vcone_halfspaces", hs}};
}

SphericalData spherical_data_from_json(const json& j) {
  SphericalData sd;
  sd.dim = j.at("dim").get<std::size_t>();
  std::vector<RatVec> hs;
  for (const auto& h : j.at("vcone_halfspaces")) hs.push_back(vec_from_json(h));
  sd.vcone = RatCone::from_halfspaces(sd.dim, hs);
  for (const auto& c : j.at("colors")) {
    sd.colors.push_back(Color{c.at("name").get<std::string>(), vec_from_json(c.at("rho"))});
  }
  if (j.contains("basis_names"))
    sd.character_basis = j.at("basis_names").get<std::vector<std::string>>();
  return sd;
}

json fan_to_json(const ColoredFan& fan) {
  json cones = json::array();
  for (const auto& cc : fan.cones) {
    json rays = json::array();
    for (const auto& r : cc.cone.rays()) rays.push_back(vec_to_json(r));
    cones.push_back(json{{"colors", cc.colors}, {"rays", rays}});
  }
  return json{{"cones", cones}};
}

ColoredFan fan_from_json(const json& j, std::size_t dim) {
  ColoredFan fan;
  for (const auto& c : j.at("cones")) {
    ColoredCone cc;
    std::vector<RatVec> rays;
    for (const auto& r : c.at("rays")) rays.push_back(vec_from_json(r));
    cc.cone = RatCone::from_rays(dim, rays);
    if (c.contains("colors")) {
      for (const auto& name : c.at("colors")) cc.colors.insert(name.get<std::string>());
    }
    fan.cones.push_back(std::move(cc));
  }
  return fan;
}

json points_to_json(const std::vector<PuiseuxPoint>& pts) {
  json entries = json::array();
  for (const auto& p : pts) entries.push_back(point_to_json(p));
  return json{{"entries", entries}};
}

std::vector<PuiseuxPoint> points_from_json(const json& j) {
  std::vector<PuiseuxPoint> pts;
  for (const auto& e : j.at("entries")) pts.push_back(point_from_json(e));
  return pts;
}

json entry_to_json(const RegistryEntry& e) {
  json fans = json::object();
  for (const auto& [name, fan] : e.fans) fans[name] = fan_to_json(fan);
  return json{{"fans", fans},
              {"name", e.name},
              {"point_dim", e.point_dim},
              {"spherical_data", spherical_data_to_json(e.sd)}};
}

json colored_cone_report_to_json(const ColoredConeReport& r) {
  return json{{"cc1", r.cc1},
              {"cc2", r.cc2},
              {"cc3", r.cc3},
              {"strictly_convex", r.strictly_convex},
              {"valid", r.valid()}};
}

json colored_fan_report_to_json(const ColoredFanReport& r) {
  json cones = json::array();
  for (const auto& c : r.cone_reports) cones.push_back(colored_cone_report_to_json(c));
  return json{{"cone_reports", cones},
              {"detail", r.detail},
              {"face_closed", r.face_closed},
              {"interiors_disjoint", r.interiors_disjoint},
              {"valid", r.valid()}};
}

json compactified_cone_to_json(const CompactifiedCone& c) {
  json strata = json::array();
  for (const auto& [tau, piece] : c.strata) {
    strata.push_back(json{{"face", cone_to_json(tau)}, {"piece", cone_to_json(piece)}});
  }
  return json{{"sigma", cone_to_json(c.sigma)}, {"strata", strata}};
}

namespace {

struct P2 {
  double x, y;
};

// Clips the viewport square against the halfspaces of a 2-dim cone.
std::vector<P2> clip_cone(const RatCone& c, double R) {
  std::vector<std::pair<Rat, Rat>> poly = {
      {Rat(-10), Rat(-10)}, {Rat(10), Rat(-10)}, {Rat(10), Rat(10)}, {Rat(-10), Rat(10)}};
  for (const auto& h : c.halfspaces()) {
    std::vector<std::pair<Rat, Rat>> next;
    auto val = [&](const std::pair<Rat, Rat>& p) { return h[0] * p.first + h[1] * p.second; };
    for (std::size_t i = 0; i < poly.size(); ++i) {
      auto a = poly[i];
      auto b = poly[(i + 1) % poly.size()];
      Rat va = val(a), vb = val(b);
      if (va >= 0) next.push_back(a);
      if ((va > 0 && vb < 0) || (va < 0 && vb > 0)) {
        Rat t = va / (va - vb);
        next.push_back({a.first + t * (b.first - a.first), a.second + t * (b.second - a.second)});
      }
    }
    poly = std::move(next);
    if (poly.empty()) break;
  }
  std::vector<P2> out;
  for (const auto& [x, y] : poly) {
    out.push_back(P2{x.convert_to<double>() * R / 10.0, y.convert_to<double>() * R / 10.0});
  }
  return out;
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(3);
  os << std::fixed << v;
  return os.str();
}

}  // namespace

std::string plot_fan_svg(const SphericalData& sd, const ColoredFan& fan, bool with_p_image) {
  if (sd.dim != 2) throw std::invalid_argument("plot: only 2-dimensional data is supported");
  const double R = 100.0;  // world units per lattice step of 10
  const double W = 360.0;
  auto X = [&](double x) { return W / 2 + x; };
  auto Y = [&](double y) { return W / 2 - y; };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << W
      << "\" viewBox=\"0 0 " << W << " " << W << "\">\n";
  auto polygon = [&](const RatCone& c, const std::string& style) {
    auto poly = clip_cone(c, R);
    if (poly.size() < 3) return;
    svg << "  <polygon points=\"";
    for (const auto& p : poly) svg << fmt(X(p.x)) << "," << fmt(Y(p.y)) << " ";
    svg << "\" style=\"" << style << "\"/>\n";
  };
  auto ray_line = [&](const RatVec& r, const std::string& style) {
    double nx = r[0].convert_to<double>();
    double ny = r[1].convert_to<double>();
    double n = std::max(std::abs(nx), std::abs(ny));
    if (n == 0) return;
    svg << "  <line x1=\"" << fmt(X(0)) << "\" y1=\"" << fmt(Y(0)) << "\" x2=\""
        << fmt(X(nx / n * R)) << "\" y2=\"" << fmt(Y(ny / n * R)) << "\" style=\"" << style
        << "\"/>\n";
  };

  polygon(sd.vcone, "fill:pink;stroke:none");
  // axes
  svg << "  <line x1=\"0\" y1=\"" << fmt(W / 2) << "\" x2=\"" << W << "\" y2=\"" << fmt(W / 2)
      << "\" style=\"stroke:gray;stroke-dasharray:4\"/>\n";
  svg << "  <line x1=\"" << fmt(W / 2) << "\" y1=\"0\" x2=\"" << fmt(W / 2) << "\" y2=\"" << W
      << "\" style=\"stroke:gray;stroke-dasharray:4\"/>\n";

  for (const auto& cc : fan.cones) {
    polygon(cc.cone, "fill:lightgray;fill-opacity:0.5;stroke:none");
    for (const auto& r : cc.cone.extreme_rays()) ray_line(r, "stroke:black;stroke-width:2");
  }
  if (with_p_image) {
    for (const auto& [key, piece] : p_image(sd, fan)) {
      for (const auto& [tau, part] : piece.strata) {
        if (tau.is_zero()) polygon(part, "fill:deeppink;fill-opacity:0.45;stroke:deeppink");
      }
    }
  }
  for (const auto& c : sd.colors) {
    double nx = c.rho[0].convert_to<double>();
    double ny = c.rho[1].convert_to<double>();
    svg << "  <circle cx=\"" << fmt(X(nx * R / 10 * 5)) << "\" cy=\"" << fmt(Y(ny * R / 10 * 5))
        << "\" r=\"4\" style=\"fill:blueviolet\"/>\n";
    svg << "  <text x=\"" << fmt(X(nx * R / 10 * 5) + 6) << "\" y=\""
        << fmt(Y(ny * R / 10 * 5) - 6) << "\" font-size=\"10\">" << c.name << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace sphtrop::io
