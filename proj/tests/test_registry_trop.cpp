#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "sphtrop/trop.hpp"

using namespace sphtrop;

namespace {

RatVec v(std::vector<long> a) {
  RatVec out;
  for (long x : a) out.push_back(Rat(x));
  return out;
}

PuiseuxSeries random_series(std::mt19937_64& rng, bool allow_zero) {
  std::uniform_int_distribution<int> nterms(allow_zero ? 0 : 1, 2);
  std::uniform_int_distribution<long> expo(-3, 5);
  std::uniform_int_distribution<long> den(1, 2);
  std::uniform_int_distribution<long> coeff(1, 7);
  std::uniform_int_distribution<int> sign(0, 1);
  PuiseuxSeries s;
  int n = nterms(rng);
  for (int i = 0; i < n; ++i) {
    Rat c(coeff(rng) * (sign(rng) ? 1 : -1));
    s = s + PuiseuxSeries::monomial(Rat(expo(rng), den(rng)), c);
  }
  return s;
}

// Independent oracle for sl2_h: the invariant valuation of a nonzero
// column vector (a, c) is min(val a, val c).
ExtRat sl2_oracle(const PuiseuxPoint& x) { return min(x.coords[0].val(), x.coords[1].val()); }

// Independent oracle for gl2 via the Smith normal form of a 2x2 matrix
// over the valuation ring: d1 = min entry valuation, d1 + d2 = val(det);
// reported in the figure basis as (d2, d1).
RatVec gl2_smith_oracle(const PuiseuxPoint& x) {
  ExtRat d1 = ExtRat::infinity();
  for (const auto& c : x.coords) d1 = min(d1, c.val());
  PuiseuxSeries det = x.coords[0] * x.coords[3] - x.coords[1] * x.coords[2];
  Rat vdet = det.val().finite();
  Rat m = d1.finite();
  return {vdet - m, m};  // (d2, d1) with d2 = vdet - d1
}

PuiseuxPoint random_sl2_point(std::mt19937_64& rng) {
  while (true) {
    PuiseuxPoint p;
    p.coords = {random_series(rng, true), random_series(rng, true)};
    if (!p.coords[0].is_zero() || !p.coords[1].is_zero()) return p;
  }
}

PuiseuxPoint random_gl2_point(std::mt19937_64& rng) {
  while (true) {
    PuiseuxPoint p;
    for (int i = 0; i < 4; ++i) p.coords.push_back(random_series(rng, true));
    PuiseuxSeries det = p.coords[0] * p.coords[3] - p.coords[1] * p.coords[2];
    if (!det.is_zero()) return p;
  }
}

// Same coordinatewise valuations, different leading units.
PuiseuxPoint twist_units(const PuiseuxPoint& x) {
  PuiseuxPoint out;
  for (const auto& c : x.coords) {
    if (c.is_zero()) {
      out.coords.push_back(c);
    } else {
      Rat e = c.val().finite();
      out.coords.push_back(PuiseuxSeries::monomial(e, Rat(5)) +
                           PuiseuxSeries::monomial(e + 1, Rat(3)));
    }
  }
  return out;
}

}  // namespace

TEST_CASE("registry entries and their fans validate") {
  auto sl2 = registry_get("sl2_h");
  CHECK(sl2.sd.dim == 1);
  CHECK(sl2.sd.vcone == RatCone::full(1));
  REQUIRE(sl2.sd.colors.size() == 1);
  CHECK(sl2.sd.colors[0].rho == v({1}));
  REQUIRE(sl2.fans.size() == 6);
  std::set<std::string> keys;
  for (const auto& [name, fan] : sl2.fans) {
    CHECK(validate_colored_fan(sl2.sd, fan).valid());
    std::string key;
    for (const auto& cc : fan.cones) key += cc.key() + ";";
    keys.insert(key);
  }
  CHECK(keys.size() == 6);  // pairwise distinct embeddings

  auto gl2 = registry_get("gl2");
  CHECK(gl2.sd.colors[0].rho == v({-1, 1}));
  for (const auto& [name, fan] : gl2.fans) {
    CHECK(validate_colored_fan(gl2.sd, fan).valid());
  }

  auto t1 = registry_get("torus(1)");
  CHECK(t1.sd.vcone == RatCone::full(1));
  CHECK(t1.sd.colors.empty());

  CHECK_THROWS(registry_get("e8"));
  CHECK_THROWS(registry_get("torus(0)"));
  CHECK_THROWS(gl2.fan("Y"));
}

TEST_CASE("gl2 bridge matrix is consistent with the figure basis") {
  auto gl2 = registry_get("gl2");
  auto apply = [&](const RatVec& md) { return apply_rows(gl2.basis_transform, md); };
  // (m, d) with d >= 2m spans the valuation side; check cone images
  RatCone md_cone = RatCone::from_halfspaces(2, {v({-2, 1})});  // d >= 2m
  std::vector<RatVec> images;
  for (const auto& r : md_cone.rays()) images.push_back(apply(r));
  CHECK(RatCone::from_rays(2, images) == gl2.sd.vcone);
  CHECK(apply(v({1, 0})) == v({-1, 1}));  // the color
}

TEST_CASE("semi-invariant evaluators on fixed inputs") {
  auto sl2 = registry_get("sl2_h");
  GroupElem id = {Rat(1), Rat(0), Rat(0), Rat(1)};
  auto x = parse_puiseux_point("(u^2, u^3)");
  CHECK(semiinvariant_eval(sl2, "chi_y", id, x) == parse_puiseux("u^3"));
  GroupElem generic = {Rat(2), Rat(3), Rat(5), Rat(7)};
  CHECK(semiinvariant_eval(sl2, "chi_y", generic, x).val() == ExtRat(Rat(2)));
  CHECK_THROWS(semiinvariant_eval(sl2, "chi_y", id, parse_puiseux_point("(0, 0)")));

  auto gl2 = registry_get("gl2");
  GroupElem g = {Rat(1), Rat(2), Rat(3), Rat(5), Rat(2), Rat(0), Rat(1), Rat(3)};
  auto diag_u_1 = parse_puiseux_point("(u, 0, 0, 1)");
  CHECK(semiinvariant_eval(gl2, "chi_det", g, diag_u_1).val() == ExtRat(Rat(1)));
  CHECK_THROWS(semiinvariant_eval(gl2, "chi_det", g, parse_puiseux_point("(u, 0, 0, 0)")));
}

TEST_CASE("evaluators are multiplicative on the character lattice") {
  auto gl2 = registry_get("gl2");
  std::mt19937_64 rng(3);
  for (int i = 0; i < 25; ++i) {
    PuiseuxPoint x = random_gl2_point(rng);
    GroupElem g = gl2.group_sampler(rng);
    PuiseuxSeries lhs = semiinvariant_eval(gl2, "chi_x22*chi_det", g, x);
    PuiseuxSeries rhs =
        semiinvariant_eval(gl2, "chi_x22", g, x) * semiinvariant_eval(gl2, "chi_det", g, x);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("generic tropicalization on fixed inputs") {
  auto sl2 = registry_get("sl2_h");
  SamplingParams p{8, 1};
  CHECK(trp_generic(sl2, parse_puiseux_point("(u^2, u^3)"), p) == v({2}));
  CHECK(trp_generic(sl2, parse_puiseux_point("(1, u)"), p) == v({0}));

  auto gl2 = registry_get("gl2");
  CHECK(trp_generic(gl2, parse_puiseux_point("(u, 0, 0, 1)"), p) == v({1, 0}));
}

TEST_CASE("generic tropicalization matches the sl2 oracle") {
  auto sl2 = registry_get("sl2_h");
  std::mt19937_64 rng(101);
  for (int i = 0; i < 120; ++i) {
    PuiseuxPoint x = random_sl2_point(rng);
    RatVec got = trp_generic(sl2, x, SamplingParams{8, 7});
    CHECK(got == RatVec{sl2_oracle(x).finite()});
  }
}

TEST_CASE("generic tropicalization matches the gl2 Smith oracle") {
  auto gl2 = registry_get("gl2");
  std::mt19937_64 rng(102);
  for (int i = 0; i < 120; ++i) {
    PuiseuxPoint x = random_gl2_point(rng);
    RatVec got = trp_generic(gl2, x, SamplingParams{8, 7});
    RatVec want = gl2_smith_oracle(x);
    CHECK(got == want);
    CHECK(contains(gl2.sd.vcone, got));
  }
}

TEST_CASE("generic tropicalization on torus data equals trp_torus") {
  auto t3 = registry_get("torus(3)");
  std::mt19937_64 rng(103);
  for (int i = 0; i < 60; ++i) {
    PuiseuxPoint x;
    for (int j = 0; j < 3; ++j) x.coords.push_back(random_series(rng, false));
    CHECK(trp_generic(t3, x, SamplingParams{4, 5}) == trp_torus(x));
  }
}

TEST_CASE("sampling stability") {
  auto sl2 = registry_get("sl2_h");
  std::mt19937_64 rng(104);
  for (int i = 0; i < 40; ++i) {
    PuiseuxPoint x = random_sl2_point(rng);
    CHECK(trp_generic_stable(sl2, x, SamplingParams{6, 11}) == RatVec{sl2_oracle(x).finite()});
  }
  CHECK_THROWS(trp_generic(sl2, random_sl2_point(rng), SamplingParams{0, 0}));
}

TEST_CASE("tropicalization only depends on coordinatewise valuations of units") {
  auto gl2 = registry_get("gl2");
  auto sl2 = registry_get("sl2_h");
  std::mt19937_64 rng(105);
  SamplingParams p{8, 13};
  for (int i = 0; i < 40; ++i) {
    PuiseuxPoint x = random_sl2_point(rng);
    CHECK(trp_generic(sl2, x, p) == trp_generic(sl2, twist_units(x), p));
  }
  for (int i = 0; i < 40; ++i) {
    PuiseuxPoint x = random_gl2_point(rng);
    PuiseuxPoint y = twist_units(x);
    PuiseuxSeries det = y.coords[0] * y.coords[3] - y.coords[1] * y.coords[2];
    if (det.is_zero()) continue;  // twist may degenerate the matrix
    if (gl2_smith_oracle(x) != gl2_smith_oracle(y)) continue;  // and its invariant factors
    CHECK(trp_generic(gl2, x, p) == trp_generic(gl2, y, p));
  }
}

TEST_CASE("sl2 color is the vanishing order of y along its divisor") {
  // rho(D) is the order of the semi-invariant y along {y = 0}: evaluate
  // chi_y at (a, c) = (1, u^k); the valuation grows linearly with slope 1.
  auto sl2 = registry_get("sl2_h");
  GroupElem id = {Rat(1), Rat(0), Rat(0), Rat(1)};
  for (long k = 1; k <= 4; ++k) {
    auto x = parse_puiseux_point("(1, u^" + std::to_string(k) + ")");
    CHECK(semiinvariant_eval(sl2, "chi_y", id, x).val() == ExtRat(Rat(k)));
  }
  CHECK(sl2.sd.colors[0].rho == v({1}));
}
