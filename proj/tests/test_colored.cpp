#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sphtrop/registry.hpp"

using namespace sphtrop;

namespace {

RatVec v(std::vector<long> a) {
  RatVec out;
  for (long x : a) out.push_back(Rat(x));
  return out;
}

ColoredCone cc(std::size_t dim, std::vector<RatVec> rays, std::set<std::string> colors = {}) {
  ColoredCone out;
  out.cone = RatCone::from_rays(dim, std::move(rays));
  out.colors = std::move(colors);
  return out;
}

// P^2 as a toric surface: rays e1, e2, -e1-e2 and all their cones.
ColoredFan p2_fan() {
  ColoredFan fan;
  fan.cones.push_back(cc(2, {}));
  fan.cones.push_back(cc(2, {v({1, 0})}));
  fan.cones.push_back(cc(2, {v({0, 1})}));
  fan.cones.push_back(cc(2, {v({-1, -1})}));
  fan.cones.push_back(cc(2, {v({1, 0}), v({0, 1})}));
  fan.cones.push_back(cc(2, {v({1, 0}), v({-1, -1})}));
  fan.cones.push_back(cc(2, {v({0, 1}), v({-1, -1})}));
  return fan;
}

}  // namespace

TEST_CASE("spherical data well-formedness") {
  CHECK(registry_get("gl2").sd.well_formed());
  CHECK(registry_get("sl2_h").sd.well_formed());
  CHECK(registry_get("torus(3)").sd.well_formed());

  SphericalData bad;
  bad.dim = 2;
  bad.vcone = RatCone::from_rays(2, {v({1, 0})});  // does not span
  std::string why;
  CHECK(!bad.well_formed(&why));
  CHECK(!why.empty());
}

TEST_CASE("colored cone validation on fixed inputs") {
  auto gl2 = registry_get("gl2");
  auto sl2 = registry_get("sl2_h");

  auto good = validate_colored_cone(gl2.sd, cc(2, {v({-1, 1}), v({1, 0})}, {"D"}));
  CHECK(good.cc1);
  CHECK(good.cc2);
  CHECK(good.cc3);
  CHECK(good.strictly_convex);
  CHECK(good.valid());

  CHECK(validate_colored_cone(sl2.sd, cc(1, {v({1})}, {"D"})).valid());

  auto miss = validate_colored_cone(gl2.sd, cc(2, {v({-1, 1})}));
  CHECK(!miss.cc2);  // relint misses V = {v1 >= v2}
  CHECK(!miss.valid());

  // a cone not generated by its colors plus rays inside V
  auto hollow = validate_colored_cone(gl2.sd, cc(2, {v({-1, 1}), v({-1, 2})}));
  CHECK(!hollow.valid());

  CHECK_THROWS(validate_colored_cone(gl2.sd, cc(2, {v({1, 0})}, {"nope"})));
}

TEST_CASE("colored faces") {
  auto gl2 = registry_get("gl2");
  auto sl2 = registry_get("sl2_h");

  auto x_faces = colored_faces(gl2.sd, cc(2, {v({-1, 1}), v({1, 0})}, {"D"}));
  REQUIRE(x_faces.size() == 3);  // ray(-1,1) excluded: relint misses V
  ColoredFan wrap;
  wrap.cones = x_faces;
  CHECK(wrap.contains(cc(2, {})));
  CHECK(wrap.contains(cc(2, {v({1, 0})})));
  CHECK(wrap.contains(cc(2, {v({-1, 1}), v({1, 0})}, {"D"})));

  auto ray_faces = colored_faces(sl2.sd, cc(1, {v({1})}, {"D"}));
  REQUIRE(ray_faces.size() == 2);
  CHECK(ray_faces[0] == cc(1, {}));
  CHECK(ray_faces[1] == cc(1, {v({1})}, {"D"}));

  CHECK(colored_faces(gl2.sd, cc(2, {})).size() == 1);
}

TEST_CASE("colored faces are closed under taking faces again") {
  auto gl2 = registry_get("gl2");
  auto outer = colored_faces(gl2.sd, cc(2, {v({-1, 1}), v({1, 0})}, {"D"}));
  for (const auto& f : outer) {
    for (const auto& g : colored_faces(gl2.sd, f)) {
      bool found = false;
      for (const auto& h : outer) {
        if (h == g) found = true;
      }
      CHECK(found);
    }
  }
}

TEST_CASE("fan validation") {
  auto sl2 = registry_get("sl2_h");
  CHECK(validate_colored_fan(sl2.sd, sl2.fan("Bl_O_P2")).valid());

  ColoredFan overlap;
  overlap.cones.push_back(cc(1, {}));
  overlap.cones.push_back(cc(1, {v({1})}, {"D"}));
  overlap.cones.push_back(cc(1, {v({1})}));
  auto rep = validate_colored_fan(sl2.sd, overlap);
  CHECK(!rep.interiors_disjoint);
  CHECK(!rep.valid());

  ColoredFan not_closed;
  not_closed.cones.push_back(cc(1, {v({1})}, {"D"}));
  auto rep2 = validate_colored_fan(sl2.sd, not_closed);
  CHECK(!rep2.face_closed);

  auto torus2 = registry_get("torus(2)");
  CHECK(validate_colored_fan(torus2.sd, p2_fan()).valid());
}

TEST_CASE("star condition") {
  auto gl2 = registry_get("gl2");
  CHECK(!check_star(gl2.sd, gl2.fan("X")));
  CHECK(check_star(gl2.sd, gl2.fan("Xprime")));
  auto torus2 = registry_get("torus(2)");
  CHECK(check_star(torus2.sd, p2_fan()));
}

TEST_CASE("star condition is hereditary for colored faces") {
  auto gl2 = registry_get("gl2");
  auto sl2 = registry_get("sl2_h");
  auto check_fan = [](const SphericalData& sd, const ColoredFan& fan) {
    if (!check_star(sd, fan)) return;
    for (const auto& mem : fan.cones) {
      for (const auto& f : colored_faces(sd, mem)) {
        for (const auto& r : f.cone.rays()) CHECK(contains(sd.vcone, r));
      }
    }
  };
  check_fan(gl2.sd, gl2.fan("Xprime"));
  for (const auto& [name, fan] : sl2.fans) check_fan(sl2.sd, fan);
}

TEST_CASE("star fan of the trivial face is the identity") {
  auto gl2 = registry_get("gl2");
  auto fan = gl2.fan("X");
  StarResult res = star_fan(gl2.sd, fan, cc(2, {}));
  CHECK(res.sd.dim == 2);
  CHECK(res.sd.vcone == gl2.sd.vcone);
  REQUIRE(res.fan.cones.size() == fan.cones.size());
  for (const auto& mem : fan.cones) CHECK(res.fan.contains(mem));
  REQUIRE(res.sd.colors.size() == 1);
  CHECK(res.sd.colors[0].rho == v({-1, 1}));
}

TEST_CASE("star fan of a toric ray gives the fan of P^1") {
  auto torus2 = registry_get("torus(2)");
  StarResult res = star_fan(torus2.sd, p2_fan(), cc(2, {v({1, 0})}));
  CHECK(res.sd.dim == 1);
  CHECK(res.sd.vcone == RatCone::full(1));
  REQUIRE(res.fan.cones.size() == 3);
  CHECK(res.fan.contains(cc(1, {})));
  CHECK(res.fan.contains(cc(1, {v({1})})));
  CHECK(res.fan.contains(cc(1, {v({-1})})));
  CHECK(check_star(res.sd, res.fan));
}

TEST_CASE("star fan of the gl2 ray with explicit dominant complement") {
  auto gl2 = registry_get("gl2");
  StarResult res =
      star_fan(gl2.sd, gl2.fan("X"), cc(2, {v({1, 0})}), std::set<std::string>{"D"});
  CHECK(res.sd.dim == 1);
  CHECK(res.sd.vcone == RatCone::full(1));
  REQUIRE(res.fan.cones.size() == 2);
  CHECK(res.fan.contains(cc(1, {})));
  CHECK(res.fan.contains(cc(1, {v({1})}, {"D"})));
  // project_cone oracle: the X cone maps onto the nonnegative ray
  QuotientMap q = quotient_by_span(RatCone::from_rays(2, {v({1, 0})}));
  CHECK(project_cone(RatCone::from_rays(2, {v({-1, 1}), v({1, 0})}), q) ==
        RatCone::from_rays(1, {v({1})}));

  CHECK_THROWS(star_fan(gl2.sd, gl2.fan("X"), cc(2, {v({0, 1})})));
}

TEST_CASE("star fan preserves the star condition") {
  auto torus2 = registry_get("torus(2)");
  auto fan = p2_fan();
  REQUIRE(check_star(torus2.sd, fan));
  for (const auto& tau : fan.cones) {
    StarResult res = star_fan(torus2.sd, fan, tau);
    CHECK(check_star(res.sd, res.fan));
  }
}

TEST_CASE("fan validation accepts the face closure of its members") {
  auto gl2 = registry_get("gl2");
  for (const auto& [name, fan] : gl2.fans) {
    ColoredFan closure = fan;
    for (const auto& mem : fan.cones) {
      for (const auto& f : colored_faces(gl2.sd, mem)) {
        if (!closure.contains(f)) closure.cones.push_back(f);
      }
    }
    CHECK(closure.cones.size() == fan.cones.size());  // already face-closed
    CHECK(validate_colored_fan(gl2.sd, closure).valid());
  }
}
