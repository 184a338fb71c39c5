#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "sphtrop/io.hpp"
#include "sphtrop/trop.hpp"

namespace {

using nlohmann::json;
using namespace sphtrop;

struct Common {
  std::string format = "text";
  std::string out;
  std::string entry_name;
  std::string fan_name;
  std::string data_file;
  std::string fan_file;
};

void add_common(CLI::App* cmd, Common& c, bool with_fan = true) {
  cmd->add_option("--format", c.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--out", c.out, "output file (default stdout)");
  cmd->add_option("--entry", c.entry_name, "registry entry (torus(n), sl2_h, gl2)");
  cmd->add_option("--data", c.data_file, "spherical data JSON file");
  if (with_fan) {
    cmd->add_option("--fan-name", c.fan_name, "fan name within the registry entry");
    cmd->add_option("--fan", c.fan_file, "fan JSON file");
  }
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
  return j;
}

json read_stdin_json() {
  json j;
  try {
    j = json::parse(std::cin);
  } catch (const json::parse_error& e) {
    throw std::runtime_error(std::string("stdin: ") + e.what());
  }
  return j;
}

struct Inputs {
  SphericalData sd;
  std::optional<ColoredFan> fan;
};

// Resolution order: --entry / --data file / a document on stdin (either
// a registry dump or a bare spherical-data object).
Inputs resolve(const Common& c, bool need_fan) {
  Inputs in;
  std::optional<json> piped;
  if (!c.entry_name.empty()) {
    RegistryEntry e = registry_get(c.entry_name);
    in.sd = e.sd;
    if (!c.fan_name.empty()) in.fan = e.fan(c.fan_name);
  } else if (!c.data_file.empty()) {
    in.sd = io::spherical_data_from_json(read_json_file(c.data_file));
  } else {
    piped = read_stdin_json();
    const json& j = *piped;
    if (j.contains("spherical_data")) {
      in.sd = io::spherical_data_from_json(j.at("spherical_data"));
      if (!c.fan_name.empty()) in.fan = io::fan_from_json(j.at("fans").at(c.fan_name), in.sd.dim);
    } else {
      in.sd = io::spherical_data_from_json(j);
    }
  }
  if (!in.fan && !c.fan_file.empty()) {
    in.fan = io::fan_from_json(read_json_file(c.fan_file), in.sd.dim);
  }
  if (need_fan && !in.fan) {
    if (piped && piped->contains("fan")) {
      in.fan = io::fan_from_json(piped->at("fan"), in.sd.dim);
    } else {
      throw std::runtime_error("a fan is required (--fan, --fan-name, or piped document)");
    }
  }
  return in;
}

void emit(const Common& c, const json& doc, const std::string& text) {
  std::ostream* os = &std::cout;
  std::ofstream file;
  if (!c.out.empty()) {
    file.open(c.out);
    if (!file) throw std::runtime_error("cannot write " + c.out);
    os = &file;
  }
  if (c.format == "json") *os << doc.dump(2) << "\n";
  else *os << text;
}

std::string cone_text(const RatCone& c) {
  std::ostringstream os;
  os << "rays{";
  for (std::size_t i = 0; i < c.rays().size(); ++i) {
    if (i) os << ", ";
    os << to_string(c.rays()[i]);
  }
  os << "}";
  return os.str();
}

std::string colored_cone_text(const ColoredCone& cc) {
  std::ostringstream os;
  os << cone_text(cc.cone) << " colors{";
  bool first = true;
  for (const auto& n : cc.colors) {
    if (!first) os << ",";
    os << n;
    first = false;
  }
  os << "}";
  return os.str();
}

int cmd_examples(const Common& c, const std::string& name) {
  if (name.empty()) {
    json doc = registry_names();
    std::ostringstream text;
    for (const auto& n : registry_names()) text << n << "\n";
    emit(c, doc, text.str());
    return 0;
  }
  RegistryEntry e = registry_get(name);
  std::ostringstream text;
  text << "entry " << e.name << ": dim " << e.sd.dim << ", " << e.sd.colors.size()
       << " colors, vcone " << cone_text(e.sd.vcone) << "\n";
  for (const auto& [fname, fan] : e.fans) {
    text << "  fan " << fname << ": " << fan.cones.size() << " cones\n";
  }
  emit(c, io::entry_to_json(e), text.str());
  return 0;
}

int cmd_validate(const Common& c) {
  Inputs in = resolve(c, true);
  auto rep = validate_colored_fan(in.sd, *in.fan);
  std::ostringstream text;
  text << "fan: face_closed=" << (rep.face_closed ? "yes" : "no")
       << " interiors_disjoint=" << (rep.interiors_disjoint ? "yes" : "no") << "\n";
  for (std::size_t i = 0; i < rep.cone_reports.size(); ++i) {
    const auto& r = rep.cone_reports[i];
    text << "cone " << i << " " << colored_cone_text(in.fan->cones[i]) << ": CC1="
         << (r.cc1 ? "ok" : "FAIL") << " CC2=" << (r.cc2 ? "ok" : "FAIL")
         << " CC3=" << (r.cc3 ? "ok" : "FAIL")
         << " strictly_convex=" << (r.strictly_convex ? "ok" : "FAIL") << "\n";
  }
  if (!rep.detail.empty()) text << "detail: " << rep.detail << "\n";
  text << (rep.valid() ? "VALID" : "INVALID") << "\n";
  emit(c, io::colored_fan_report_to_json(rep), text.str());
  return 0;
}

int cmd_faces(const Common& c, int index) {
  Inputs in = resolve(c, true);
  std::ostringstream text;
  json doc = json::array();
  for (std::size_t i = 0; i < in.fan->cones.size(); ++i) {
    if (index >= 0 && static_cast<std::size_t>(index) != i) continue;
    auto faces = colored_faces(in.sd, in.fan->cones[i]);
    text << "cone " << i << " " << colored_cone_text(in.fan->cones[i]) << ": "
         << faces.size() << " colored faces\n";
    json jf = json::array();
    for (const auto& f : faces) {
      text << "  " << colored_cone_text(f) << "\n";
      ColoredFan one;
      one.cones.push_back(f);
      jf.push_back(io::fan_to_json(one).at("cones").at(0));
    }
    doc.push_back(json{{"cone", i}, {"faces", jf}});
  }
  emit(c, doc, text.str());
  return 0;
}

int cmd_check_star(const Common& c) {
  Inputs in = resolve(c, true);
  bool ok = check_star(in.sd, *in.fan);
  emit(c, json{{"star", ok}}, std::string(ok ? "true" : "false") + "\n");
  return 0;
}

int cmd_star(const Common& c, int tau_index, const std::vector<std::string>& complement,
             bool have_complement) {
  Inputs in = resolve(c, true);
  if (tau_index < 0 || static_cast<std::size_t>(tau_index) >= in.fan->cones.size())
    throw std::runtime_error("--tau-index out of range");
  std::optional<std::set<std::string>> comp;
  if (have_complement) comp = std::set<std::string>(complement.begin(), complement.end());
  StarResult res = star_fan(in.sd, *in.fan, in.fan->cones[tau_index], comp);
  json mat = json::array();
  for (const auto& row : res.map.matrix) mat.push_back(io::vec_to_json(row));
  json doc{{"fan", io::fan_to_json(res.fan)},
           {"quotient_matrix", mat},
           {"spherical_data", io::spherical_data_to_json(res.sd)}};
  std::ostringstream text;
  text << "star: dim " << res.sd.dim << ", vcone " << cone_text(res.sd.vcone) << "\n";
  for (const auto& cc : res.fan.cones) text << "  " << colored_cone_text(cc) << "\n";
  emit(c, doc, text.str());
  return 0;
}

int cmd_trop(const Common& c, const std::string& mode, const std::string& point,
             const std::string& points_file, unsigned samples, std::uint64_t seed,
             int chart_index) {
  std::vector<PuiseuxPoint> pts;
  if (!points_file.empty()) {
    pts = io::points_from_json(read_json_file(points_file));
  }
  if (!point.empty()) pts.push_back(parse_puiseux_point(point));
  if (pts.empty()) throw std::runtime_error("trop: no points given (--point or --points)");

  json doc = json::array();
  std::ostringstream text;
  if (mode == "torus") {
    for (const auto& p : pts) {
      RatVec v = trp_torus(p);
      doc.push_back(io::vec_to_json(v));
      text << to_string(v) << "\n";
    }
  } else if (mode == "generic") {
    if (c.entry_name.empty()) throw std::runtime_error("trop --mode generic needs --entry");
    RegistryEntry e = registry_get(c.entry_name);
    for (const auto& p : pts) {
      RatVec v = trp_generic(e, p, SamplingParams{samples, seed});
      doc.push_back(io::vec_to_json(v));
      text << to_string(v) << "\n";
    }
  } else {  // extended
    Inputs in = resolve(c, true);
    for (const auto& p : pts) {
      ExtendedPoint ep =
          chart_index >= 0
              ? trp_toric_extended(in.sd, *in.fan,
                                   in.fan->cones.at(chart_index).cone, p)
              : trp_toric_extended(in.sd, *in.fan, p);
      doc.push_back(json{{"functional", io::vec_to_json(ep.functional)},
                         {"stratum", io::cone_to_json(ep.tau)}});
      text << "stratum " << cone_text(ep.tau) << " functional " << to_string(ep.functional)
           << "\n";
    }
  }
  emit(c, doc, text.str());
  return 0;
}

int cmd_retract(const Common& c, const std::string& family, const std::string& mu,
                const std::string& poly, const std::string& point) {
  PuiseuxPoint x = parse_puiseux_point(point);
  LaurentPoly f = parse_laurent(poly, x.coords.size());
  SeminormSample s;
  s.mu = parse_ext_rat(mu);
  s.point = x;
  s.family = (family == "homotopy") ? SeminormFamily::homotopy : SeminormFamily::monomial;
  ExtRat v = retraction_value(s, f);
  json jv = v.is_infinity() ? json("inf") : io::rat_to_json(v.finite());
  emit(c, json{{"value", jv}}, v.str() + "\n");
  return 0;
}

int cmd_compactify(const Common& c, const std::string& mode, int index) {
  Inputs in = resolve(c, true);
  json doc = json::array();
  std::ostringstream text;
  for (std::size_t i = 0; i < in.fan->cones.size(); ++i) {
    if (index >= 0 && static_cast<std::size_t>(index) != i) continue;
    const auto& cc = in.fan->cones[i];
    CompactifiedCone comp =
        mode == "toric" ? compactify_cone(cc.cone, CompactifyMode::toric)
                        : compactify_cone(cc.cone, CompactifyMode::colored, &in.sd);
    doc.push_back(json{{"cone", i}, {"compactification", io::compactified_cone_to_json(comp)}});
    text << "cone " << i << " " << cone_text(cc.cone) << ": " << comp.strata.size()
         << " strata\n";
    for (const auto& [tau, piece] : comp.strata) {
      text << "  face " << cone_text(tau) << " -> piece " << cone_text(piece) << "\n";
    }
  }
  emit(c, doc, text.str());
  return 0;
}

int cmd_p_image(const Common& c) {
  Inputs in = resolve(c, true);
  auto img = p_image(in.sd, *in.fan);
  json doc = json::object();
  std::ostringstream text;
  for (const auto& [key, comp] : img) {
    doc[key] = io::compactified_cone_to_json(comp);
    text << "maximal cone " << cone_text(comp.sigma) << ": " << comp.strata.size()
         << " strata\n";
    for (const auto& [tau, piece] : comp.strata) {
      text << "  face " << cone_text(tau) << " -> piece " << cone_text(piece) << "\n";
    }
  }
  emit(c, doc, text.str());
  return 0;
}

int cmd_limits(const Common& c, const std::string& mode, int index, const std::string& v0s,
               const std::string& ws) {
  Inputs in = resolve(c, true);
  if (index < 0 || static_cast<std::size_t>(index) >= in.fan->cones.size())
    throw std::runtime_error("--index out of range");
  const auto& cc = in.fan->cones[index];
  CompactifiedCone comp = mode == "toric"
                              ? compactify_cone(cc.cone, CompactifyMode::toric)
                              : compactify_cone(cc.cone, CompactifyMode::colored, &in.sd);
  auto parse_vec = [&](const std::string& s) {
    PuiseuxPoint p = parse_puiseux_point(s);
    RatVec v;
    for (const auto& coord : p.coords) {
      if (coord.is_zero()) v.push_back(Rat(0));
      else if (coord.terms().size() == 1 && coord.terms()[0].first == 0)
        v.push_back(coord.terms()[0].second);
      else throw std::runtime_error("expected a rational vector, got a series");
    }
    return v;
  };
  ExtendedPoint p = limit_of_ray(comp, parse_vec(v0s), parse_vec(ws));
  json doc{{"functional", io::vec_to_json(p.functional)}, {"stratum", io::cone_to_json(p.tau)}};
  std::ostringstream text;
  text << "stratum " << cone_text(p.tau) << " functional " << to_string(p.functional) << "\n";
  emit(c, doc, text.str());
  return 0;
}

int cmd_plot(const Common& c, bool with_p_image) {
  Inputs in = resolve(c, true);
  std::string svg = io::plot_fan_svg(in.sd, *in.fan, with_p_image);
  if (c.out.empty()) {
    std::cout << svg;
  } else {
    std::ofstream f(c.out);
    if (!f) throw std::runtime_error("cannot write " + c.out);
    f << svg;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spherical tropicalization toolkit"};
  app.require_subcommand(1);

  Common c_examples, c_validate, c_faces, c_star, c_check, c_trop, c_retract, c_comp, c_pimg,
      c_lim, c_plot;
  std::string examples_name;
  int faces_index = -1, tau_index = 0, chart_index = -1, comp_index = -1, lim_index = 0;
  std::vector<std::string> star_complement;
  bool have_complement = false, plot_pimage = false;
  std::string trop_mode = "torus", trop_point, trop_points_file;
  unsigned samples = 8;
  std::uint64_t seed = 0;
  std::string family = "monomial", mu = "0", poly, retract_point_s;
  std::string comp_mode = "toric", lim_mode = "toric", lim_v0, lim_w;

  auto* examples = app.add_subcommand("examples", "dump the registry");
  examples->add_option("name", examples_name, "entry name");
  add_common(examples, c_examples, false);

  auto* validate = app.add_subcommand("validate", "validate a colored fan");
  add_common(validate, c_validate);
  validate->add_option("fanname", c_validate.fan_name, "fan name (positional)");

  auto* faces = app.add_subcommand("faces", "colored faces of fan cones");
  add_common(faces, c_faces);
  faces->add_option("--index", faces_index, "restrict to one cone");

  auto* star = app.add_subcommand("star", "quotient fan Star(tau)");
  add_common(star, c_star);
  star->add_option("--tau-index", tau_index, "index of tau in the fan")->required();
  star->add_option("--dominant-complement", star_complement,
                   "explicit color complement set")
      ->delimiter(',');
  star->callback([&] { have_complement = star->count("--dominant-complement") > 0; });

  auto* check = app.add_subcommand("check-star", "star condition for a fan");
  add_common(check, c_check);
  check->add_option("fanname", c_check.fan_name, "fan name (positional)");

  auto* trop = app.add_subcommand("trop", "tropicalize points");
  add_common(trop, c_trop);
  trop->add_option("--mode", trop_mode, "torus | extended | generic")
      ->check(CLI::IsMember({"torus", "extended", "generic"}));
  trop->add_option("--point", trop_point, "point literal, e.g. \"(u^2,u^3)\"");
  trop->add_option("--points", trop_points_file, "points JSON file");
  trop->add_option("--samples", samples, "group samples for generic mode");
  trop->add_option("--seed", seed, "sampler seed");
  trop->add_option("--chart-index", chart_index, "chart cone index for extended mode");

  auto* retract = app.add_subcommand("retract", "seminorm family evaluation");
  add_common(retract, c_retract, false);
  retract->add_option("--family", family, "monomial | homotopy")
      ->check(CLI::IsMember({"monomial", "homotopy"}));
  retract->add_option("--mu", mu, "rational or \"inf\" (mu = -log lambda)");
  retract->add_option("--poly", poly, "Laurent polynomial, e.g. \"t1+t2\"")->required();
  retract->add_option("--point", retract_point_s, "point literal")->required();

  auto* compactify = app.add_subcommand("compactify", "canonical compactification of cones");
  add_common(compactify, c_comp);
  compactify->add_option("--mode", comp_mode, "toric | colored")
      ->check(CLI::IsMember({"toric", "colored"}));
  compactify->add_option("--index", comp_index, "restrict to one cone");

  auto* pimg = app.add_subcommand("p-image", "retraction image per maximal cone");
  add_common(pimg, c_pimg);
  pimg->add_option("fanname", c_pimg.fan_name, "fan name (positional)");

  auto* limits = app.add_subcommand("limits", "limit of a ray in a compactified cone");
  add_common(limits, c_lim);
  limits->add_option("--mode", lim_mode, "toric | colored")
      ->check(CLI::IsMember({"toric", "colored"}));
  limits->add_option("--index", lim_index, "cone index in the fan");
  limits->add_option("--v0", lim_v0, "base point, e.g. \"(0,1)\"")->required();
  limits->add_option("--w", lim_w, "direction, e.g. \"(1,0)\"")->required();

  auto* plot = app.add_subcommand("plot", "SVG of a 2-dim fan");
  add_common(plot, c_plot);
  plot->add_option("fanname", c_plot.fan_name, "fan name (positional)");
  plot->add_flag("--p-image", plot_pimage, "overlay the retraction image");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*examples) return cmd_examples(c_examples, examples_name);
    if (*validate) return cmd_validate(c_validate);
    if (*faces) return cmd_faces(c_faces, faces_index);
    if (*star) return cmd_star(c_star, tau_index, star_complement, have_complement);
    if (*check) return cmd_check_star(c_check);
    if (*trop)
      return cmd_trop(c_trop, trop_mode, trop_point, trop_points_file, samples, seed,
                      chart_index);
    if (*retract) return cmd_retract(c_retract, family, mu, poly, retract_point_s);
    if (*compactify) return cmd_compactify(c_comp, comp_mode, comp_index);
    if (*pimg) return cmd_p_image(c_pimg);
    if (*limits) return cmd_limits(c_lim, lim_mode, lim_index, lim_v0, lim_w);
    if (*plot) return cmd_plot(c_plot, plot_pimage);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
