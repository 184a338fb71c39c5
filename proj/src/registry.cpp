#include "sphtrop/registry.hpp"

#include <array>
#include <stdexcept>

namespace sphtrop {

namespace {

RatVec vec(std::initializer_list<long> xs) {
  RatVec v;
  for (long x : xs) v.push_back(Rat(x));
  return v;
}

ColoredCone cc(std::size_t dim, std::vector<RatVec> rays, std::set<std::string> colors = {}) {
  ColoredCone c;
  c.cone = RatCone::from_rays(dim, std::move(rays));
  c.colors = std::move(colors);
  return c;
}

Rat det2(const Rat& a, const Rat& b, const Rat& c, const Rat& d) { return a * d - b * c; }

// 2x2 rational inverse, row-major.
std::array<Rat, 4> inv2(const Rat* m) {
  Rat d = det2(m[0], m[1], m[2], m[3]);
  if (d == 0) throw std::domain_error("group element is not invertible");
  return {m[3] / d, -m[1] / d, -m[2] / d, m[0] / d};
}

// product of a rational 2x2 and a Puiseux 2x2, row-major
std::array<PuiseuxSeries, 4> mul_rat_series(const std::array<Rat, 4>& a,
                                            const std::array<PuiseuxSeries, 4>& b) {
  auto c = [](const Rat& r, const PuiseuxSeries& s) { return PuiseuxSeries(r) * s; };
  return {c(a[0], b[0]) + c(a[1], b[2]), c(a[0], b[1]) + c(a[1], b[3]),
          c(a[2], b[0]) + c(a[3], b[2]), c(a[2], b[1]) + c(a[3], b[3])};
}

std::array<PuiseuxSeries, 4> mul_series_rat(const std::array<PuiseuxSeries, 4>& a,
                                            const Rat* b) {
  auto c = [](const PuiseuxSeries& s, const Rat& r) { return s * PuiseuxSeries(r); };
  return {c(a[0], b[0]) + c(a[1], b[2]), c(a[0], b[1]) + c(a[1], b[3]),
          c(a[2], b[0]) + c(a[3], b[2]), c(a[2], b[1]) + c(a[3], b[3])};
}

std::array<PuiseuxSeries, 4> as_matrix(const PuiseuxPoint& x) {
  if (x.coords.size() != 4) throw std::invalid_argument("gl2 point needs 4 coordinates");
  return {x.coords[0], x.coords[1], x.coords[2], x.coords[3]};
}

PuiseuxSeries series_det(const std::array<PuiseuxSeries, 4>& m) {
  return m[0] * m[3] - m[1] * m[2];
}

// g = (g, h) pair acting by x -> g^-1 x h; returns the transformed matrix.
std::array<PuiseuxSeries, 4> gl2_translate(const GroupElem& g, const PuiseuxPoint& x) {
  if (g.size() != 8) throw std::invalid_argument("gl2 group element needs 8 entries");
  auto m = as_matrix(x);
  if (series_det(m).is_zero())
    throw std::domain_error("gl2 point is outside the open orbit (det = 0)");
  auto gi = inv2(g.data());
  return mul_series_rat(mul_rat_series(gi, m), g.data() + 4);
}

long rand_entry(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> d(-9, 9);
  return d(rng);
}

RegistryEntry make_torus(std::size_t n) {
  RegistryEntry e;
  e.name = "torus(" + std::to_string(n) + ")";
  e.sd.dim = n;
  e.sd.vcone = RatCone::full(n);
  e.point_dim = n;
  for (std::size_t i = 0; i < n; ++i) {
    std::string name = "t" + std::to_string(i + 1);
    e.sd.character_basis.push_back(name);
    RatVec row(n, Rat(0));
    row[i] = 1;
    e.basis_transform.push_back(row);
    e.semiinvariants.emplace_back(name, [i, n](const GroupElem& g, const PuiseuxPoint& x) {
      if (g.size() != n || x.coords.size() != n)
        throw std::invalid_argument("torus: dimension mismatch");
      if (g[i] == 0) throw std::domain_error("torus element has a zero coordinate");
      return PuiseuxSeries(Rat(1) / g[i]) * x.coords[i];
    });
  }
  e.group_sampler = [n](std::mt19937_64& rng) {
    GroupElem g(n);
    for (std::size_t i = 0; i < n; ++i) {
      long v = 0;
      while (v == 0) v = rand_entry(rng);
      g[i] = v;
    }
    return g;
  };
  return e;
}

RegistryEntry make_sl2() {
  RegistryEntry e;
  e.name = "sl2_h";
  e.sd.dim = 1;
  e.sd.vcone = RatCone::full(1);
  e.sd.colors = {Color{"D", vec({1})}};
  e.sd.character_basis = {"chi_y"};
  e.basis_transform = {vec({1})};
  e.point_dim = 2;

  ColoredCone origin = cc(1, {});
  ColoredCone ray_pos = cc(1, {vec({1})});
  ColoredCone ray_neg = cc(1, {vec({-1})});
  ColoredCone ray_pos_d = cc(1, {vec({1})}, {"D"});
  e.fans = {
      {"A2_minus_O", {{origin}}},
      {"Bl_O_A2", {{origin, ray_pos}}},
      {"P2_minus_O", {{origin, ray_neg}}},
      {"Bl_O_P2", {{origin, ray_pos, ray_neg}}},
      {"A2", {{origin, ray_pos_d}}},
      {"P2", {{origin, ray_pos_d, ray_neg}}},
  };

  // y(g^-1 . (a, c)); the open orbit is A^2 minus the origin.
  e.semiinvariants.emplace_back("chi_y", [](const GroupElem& g, const PuiseuxPoint& x) {
    if (g.size() != 4) throw std::invalid_argument("sl2 group element needs 4 entries");
    if (x.coords.size() != 2) throw std::invalid_argument("sl2 point needs 2 coordinates");
    if (x.coords[0].is_zero() && x.coords[1].is_zero())
      throw std::domain_error("sl2_h point is outside the open orbit (origin)");
    auto gi = inv2(g.data());
    return PuiseuxSeries(gi[2]) * x.coords[0] + PuiseuxSeries(gi[3]) * x.coords[1];
  });
  e.group_sampler = [](std::mt19937_64& rng) {
    while (true) {
      GroupElem g(4);
      for (auto& v : g) v = rand_entry(rng);
      if (det2(g[0], g[1], g[2], g[3]) != 0) return g;
    }
  };
  return e;
}

RegistryEntry make_gl2() {
  RegistryEntry e;
  e.name = "gl2";
  e.sd.dim = 2;
  // Figure basis: V = {v1 >= v2}, one color at (-1, 1).
  e.sd.vcone = RatCone::from_halfspaces(2, {vec({1, -1})});
  e.sd.colors = {Color{"D", vec({-1, 1})}};
  e.sd.character_basis = {"chi_x22", "chi_det"};
  // (m, d) -> (d - m, m): character-valuation coordinates to figure basis.
  e.basis_transform = {vec({-1, 1}), vec({1, 0})};
  e.point_dim = 4;

  ColoredCone origin = cc(2, {});
  ColoredCone ray_e1 = cc(2, {vec({1, 0})});
  ColoredCone x_cone = cc(2, {vec({-1, 1}), vec({1, 0})}, {"D"});
  e.fans = {
      {"X", {{origin, ray_e1, x_cone}}},
      {"Xprime", {{origin, ray_e1}}},
  };

  e.semiinvariants.emplace_back("chi_x22", [](const GroupElem& g, const PuiseuxPoint& x) {
    return gl2_translate(g, x)[3];
  });
  e.semiinvariants.emplace_back("chi_det", [](const GroupElem& g, const PuiseuxPoint& x) {
    if (g.size() != 8) throw std::invalid_argument("gl2 group element needs 8 entries");
    auto m = as_matrix(x);
    PuiseuxSeries d = series_det(m);
    if (d.is_zero())
      throw std::domain_error("gl2 point is outside the open orbit (det = 0)");
    Rat dg = det2(g[0], g[1], g[2], g[3]);
    Rat dh = det2(g[4], g[5], g[6], g[7]);
    if (dg == 0 || dh == 0) throw std::domain_error("group element is not invertible");
    return PuiseuxSeries(dh / dg) * d;
  });
  // Product character along the fully expanded route; used to exercise
  // multiplicativity against the two evaluators above.
  e.semiinvariants.emplace_back("chi_x22*chi_det",
                                [](const GroupElem& g, const PuiseuxPoint& x) {
                                  auto y = gl2_translate(g, x);
                                  return y[3] * series_det(y);
                                });
  e.group_sampler = [](std::mt19937_64& rng) {
    GroupElem g;
    for (int half = 0; half < 2; ++half) {
      while (true) {
        std::array<Rat, 4> m;
        for (auto& v : m) v = rand_entry(rng);
        if (det2(m[0], m[1], m[2], m[3]) != 0) {
          g.insert(g.end(), m.begin(), m.end());
          break;
        }
      }
    }
    return g;
  };
  return e;
}

}  // namespace

const ColoredFan& RegistryEntry::fan(const std::string& fan_name) const {
  for (const auto& [n, f] : fans) {
    if (n == fan_name) return f;
  }
  throw std::invalid_argument("unknown fan: " + fan_name + " in entry " + name);
}

RegistryEntry registry_get(const std::string& name) {
  if (name == "sl2_h") return make_sl2();
  if (name == "gl2") return make_gl2();
  if (name.rfind("torus(", 0) == 0 && name.back() == ')') {
    std::size_t n = std::stoul(name.substr(6, name.size() - 7));
    if (n == 0) throw std::invalid_argument("torus rank must be positive");
    return make_torus(n);
  }
  throw std::invalid_argument("unknown registry entry: " + name);
}

std::vector<std::string> registry_names() { return {"torus(n)", "sl2_h", "gl2"}; }

PuiseuxSeries semiinvariant_eval(const RegistryEntry& entry, const std::string& character,
                                 const GroupElem& g, const PuiseuxPoint& x) {
  for (const auto& [n, f] : entry.semiinvariants) {
    if (n == character) return f(g, x);
  }
  throw std::invalid_argument("unknown character: " + character);
}

}  // namespace sphtrop
