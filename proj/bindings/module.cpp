#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sphtrop/io.hpp"
#include "sphtrop/trop.hpp"

namespace py = pybind11;
using namespace sphtrop;

namespace {

std::vector<std::string> vec_strs(const RatVec& v) {
  std::vector<std::string> out;
  for (const auto& q : v) out.push_back(q.str());
  return out;
}

RegistryEntry entry_of(const std::string& name) { return registry_get(name); }

}  // namespace

PYBIND11_MODULE(_sphtrop, m) {
  m.doc() = "spherical tropicalization toolkit";

  m.def("registry", &registry_names, "names of the built-in examples");

  m.def(
      "entry_json",
      [](const std::string& name) { return io::entry_to_json(entry_of(name)).dump(); },
      py::arg("name"), "registry entry as a JSON document");

  m.def(
      "validate",
      [](const std::string& entry, const std::string& fan) {
        RegistryEntry e = entry_of(entry);
        return io::colored_fan_report_to_json(validate_colored_fan(e.sd, e.fan(fan))).dump();
      },
      py::arg("entry"), py::arg("fan"), "per-axiom validation report as JSON");

  m.def(
      "validate_fan_json",
      [](const std::string& data_json, const std::string& fan_json) {
        SphericalData sd = io::spherical_data_from_json(io::json::parse(data_json));
        ColoredFan fan = io::fan_from_json(io::json::parse(fan_json), sd.dim);
        return io::colored_fan_report_to_json(validate_colored_fan(sd, fan)).dump();
      },
      py::arg("spherical_data"), py::arg("fan"),
      "validate a fan given as JSON documents");

  m.def(
      "check_star",
      [](const std::string& entry, const std::string& fan) {
        RegistryEntry e = entry_of(entry);
        return check_star(e.sd, e.fan(fan));
      },
      py::arg("entry"), py::arg("fan"));

  m.def(
      "trop_torus",
      [](const std::string& point) { return vec_strs(trp_torus(parse_puiseux_point(point))); },
      py::arg("point"), "coordinatewise valuation, e.g. trop_torus('(u^2,u^3)')");

  m.def(
      "trop",
      [](const std::string& entry, const std::string& point, unsigned samples,
         std::uint64_t seed) {
        SamplingParams p{samples, seed};
        return vec_strs(trp_generic(entry_of(entry), parse_puiseux_point(point), p));
      },
      py::arg("entry"), py::arg("point"), py::arg("samples") = 8, py::arg("seed") = 0,
      "generic-position tropicalization of a point of the entry's variety");

  m.def(
      "retract",
      [](const std::string& family, const std::string& mu, const std::string& poly,
         const std::string& point) {
        SeminormSample s;
        s.mu = parse_ext_rat(mu);
        s.point = parse_puiseux_point(point);
        s.family = family == "homotopy" ? SeminormFamily::homotopy : SeminormFamily::monomial;
        LaurentPoly f = parse_laurent(poly, s.point.coords.size());
        return retraction_value(s, f).str();
      },
      py::arg("family"), py::arg("mu"), py::arg("poly"), py::arg("point"),
      "value of a seminorm-family member on a Laurent polynomial");

  m.def(
      "p_image",
      [](const std::string& entry, const std::string& fan) {
        RegistryEntry e = entry_of(entry);
        auto img = p_image(e.sd, e.fan(fan));
        io::json out = io::json::object();
        for (const auto& [key, comp] : img) out[key] = io::compactified_cone_to_json(comp);
        return out.dump();
      },
      py::arg("entry"), py::arg("fan"),
      "retraction image per maximal cone, as JSON");

  m.def(
      "plot_svg",
      [](const std::string& entry, const std::string& fan, bool with_p_image) {
        RegistryEntry e = entry_of(entry);
        return io::plot_fan_svg(e.sd, e.fan(fan), with_p_image);
      },
      py::arg("entry"), py::arg("fan"), py::arg("with_p_image") = false);
}
