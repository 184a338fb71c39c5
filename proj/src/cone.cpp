#include "sphtrop/cone.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

namespace sphtrop {

namespace {

struct GenDesc {
  std::vector<RatVec> lines;
  std::vector<RatVec> rays;
};

// Double description with explicit lineality handling. Computes a
// generator description of {v : <a,v> >= 0 for all a in constraints},
// starting from the full space. Rays stay extreme modulo the lines;
// adjacency is decided by the combinatorial zero-set test.
GenDesc dd(std::size_t dim, const std::vector<RatVec>& constraints_in) {
  std::vector<RatVec> constraints;
  for (const auto& a : constraints_in) {
    if (a.size() != dim) throw std::invalid_argument("dd: dimension mismatch");
    if (!is_zero(a)) constraints.push_back(a);
  }
  // Deterministic processing order.
  std::sort(constraints.begin(), constraints.end(), lex_less);
  constraints.erase(std::unique(constraints.begin(), constraints.end()), constraints.end());

  GenDesc g;
  for (std::size_t i = 0; i < dim; ++i) {
    RatVec e(dim, Rat(0));
    e[i] = 1;
    g.lines.push_back(e);
  }
  // zero[i][k] == true iff ray i satisfies constraint k with equality.
  std::vector<std::vector<bool>> zero;

  for (std::size_t k = 0; k < constraints.size(); ++k) {
    const RatVec& a = constraints[k];
    // Try to pivot on a line not annihilated by a.
    std::size_t li = g.lines.size();
    for (std::size_t i = 0; i < g.lines.size(); ++i) {
      if (dot(a, g.lines[i]) != 0) {
        li = i;
        break;
      }
    }
    if (li < g.lines.size()) {
      RatVec l = g.lines[li];
      Rat s = dot(a, l);
      if (s < 0) {
        l = neg(l);
        s = -s;
      }
      g.lines.erase(g.lines.begin() + li);
      for (auto& l2 : g.lines) {
        Rat t = dot(a, l2);
        if (t != 0) l2 = sub(l2, scale(t / s, l));
      }
      for (std::size_t i = 0; i < g.rays.size(); ++i) {
        Rat t = dot(a, g.rays[i]);
        if (t != 0) g.rays[i] = sub(g.rays[i], scale(t / s, l));
        zero[i].push_back(true);
      }
      // The pivot line survives as a single ray; it meets all earlier
      // constraints with equality but not this one.
      g.rays.push_back(l);
      zero.push_back(std::vector<bool>(k, true));
      zero.back().push_back(false);
      continue;
    }
    // All lines are in the hyperplane of a; split the rays.
    std::vector<std::size_t> pos, zer, negs;
    std::vector<Rat> vals(g.rays.size());
    for (std::size_t i = 0; i < g.rays.size(); ++i) {
      vals[i] = dot(a, g.rays[i]);
      if (vals[i] > 0)
        pos.push_back(i);
      else if (vals[i] == 0)
        zer.push_back(i);
      else
        negs.push_back(i);
    }
    if (negs.empty()) {
      for (std::size_t i = 0; i < g.rays.size(); ++i) zero[i].push_back(vals[i] == 0);
      continue;
    }
    std::vector<RatVec> new_rays;
    std::vector<std::vector<bool>> new_zero;
    for (auto i : pos) {
      new_rays.push_back(g.rays[i]);
      auto z = zero[i];
      z.push_back(false);
      new_zero.push_back(std::move(z));
    }
    for (auto i : zer) {
      new_rays.push_back(g.rays[i]);
      auto z = zero[i];
      z.push_back(true);
      new_zero.push_back(std::move(z));
    }
    for (auto p : pos) {
      for (auto n : negs) {
        // Combinatorial adjacency: no third ray's zero set contains
        // the common zero set of p and n.
        std::vector<bool> common(k);
        for (std::size_t j = 0; j < k; ++j) common[j] = zero[p][j] && zero[n][j];
        bool adjacent = true;
        for (std::size_t r = 0; r < g.rays.size() && adjacent; ++r) {
          if (r == p || r == n) continue;
          bool superset = true;
          for (std::size_t j = 0; j < k && superset; ++j) {
            if (common[j] && !zero[r][j]) superset = false;
          }
          if (superset) adjacent = false;
        }
        if (!adjacent) continue;
        RatVec w = sub(scale(vals[p], g.rays[n]), scale(vals[n], g.rays[p]));
        if (is_zero(w)) continue;
        new_rays.push_back(primitive(w));
        common.push_back(true);
        new_zero.push_back(std::move(common));
      }
    }
    g.rays = std::move(new_rays);
    zero = std::move(new_zero);
  }
  return g;
}

// Canonicalizes a generator description: RREF line basis (primitive,
// positive leading entry), rays reduced modulo the lines, primitive,
// deduplicated, lexicographically sorted.
GenDesc canon(GenDesc g) {
  g.lines = row_space_basis(std::move(g.lines));
  std::vector<std::size_t> pivots;
  for (const auto& l : g.lines) {
    std::size_t j = 0;
    while (j < l.size() && l[j] == 0) ++j;
    pivots.push_back(j);
  }
  std::vector<RatVec> rays;
  for (auto r : g.rays) {
    for (std::size_t i = 0; i < g.lines.size(); ++i) {
      std::size_t j = pivots[i];
      if (r[j] != 0) r = sub(r, scale(r[j] / g.lines[i][j], g.lines[i]));
    }
    if (!is_zero(r)) rays.push_back(primitive(r));
  }
  std::sort(rays.begin(), rays.end(), lex_less);
  rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
  g.rays = std::move(rays);
  return g;
}

std::vector<RatVec> generator_list(const GenDesc& g) {
  std::vector<RatVec> out = g.rays;
  for (const auto& l : g.lines) {
    out.push_back(l);
    out.push_back(neg(l));
  }
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

}  // namespace

RatCone RatCone::from_rays(std::size_t dim, std::vector<RatVec> generators) {
  for (const auto& r : generators) {
    if (r.size() != dim) throw std::invalid_argument("from_rays: dimension mismatch");
  }
  GenDesc dual = canon(dd(dim, generators));
  std::vector<RatVec> hs = generator_list(dual);
  GenDesc primal = canon(dd(dim, hs));

  RatCone c;
  c.dim_ = dim;
  c.lineality_ = primal.lines;
  c.extreme_rays_ = primal.rays;
  c.rays_ = generator_list(primal);
  c.equations_ = dual.lines;
  c.facets_ = dual.rays;
  c.halfspaces_ = hs;
  return c;
}

RatCone RatCone::from_halfspaces(std::size_t dim, std::vector<RatVec> halfspaces) {
  for (const auto& h : halfspaces) {
    if (h.size() != dim) throw std::invalid_argument("from_halfspaces: dimension mismatch");
  }
  GenDesc primal = canon(dd(dim, halfspaces));
  return from_rays(dim, generator_list(primal));
}

RatCone RatCone::zero(std::size_t dim) { return from_rays(dim, {}); }

RatCone RatCone::full(std::size_t dim) { return from_halfspaces(dim, {}); }

std::size_t RatCone::span_dim() const {
  return dim_ - equations_.size();
}

std::string RatCone::key() const {
  std::ostringstream os;
  os << dim_ << ":";
  for (const auto& r : rays_) os << to_string(r);
  return os.str();
}

RatCone dual_cone(const RatCone& c) {
  return RatCone::from_rays(c.dim(), c.halfspaces());
}

std::vector<RatCone> face_lattice(const RatCone& c) {
  const auto& rays = c.extreme_rays();
  const auto& facets = c.facets();
  const std::size_t n = rays.size();
  if (n > 63) throw std::invalid_argument("face_lattice: too many rays");
  // incidence[f] = bitmask of extreme rays on facet f.
  std::vector<std::uint64_t> incidence(facets.size(), 0);
  for (std::size_t f = 0; f < facets.size(); ++f) {
    for (std::size_t r = 0; r < n; ++r) {
      if (dot(facets[f], rays[r]) == 0) incidence[f] |= (std::uint64_t(1) << r);
    }
  }
  // Faces are closed under intersection with a single facet; BFS on
  // extreme-ray masks starting from the cone itself.
  std::uint64_t all = (n == 0) ? 0 : (~std::uint64_t(0) >> (64 - n));
  std::set<std::uint64_t> seen{all};
  std::queue<std::uint64_t> work;
  work.push(all);
  while (!work.empty()) {
    std::uint64_t m = work.front();
    work.pop();
    for (auto inc : incidence) {
      std::uint64_t m2 = m & inc;
      if (seen.insert(m2).second) work.push(m2);
    }
  }
  std::vector<RatCone> faces;
  for (auto m : seen) {
    std::vector<RatVec> gens;
    for (std::size_t r = 0; r < n; ++r) {
      if (m & (std::uint64_t(1) << r)) gens.push_back(rays[r]);
    }
    for (const auto& l : c.lineality()) {
      gens.push_back(l);
      gens.push_back(neg(l));
    }
    faces.push_back(RatCone::from_rays(c.dim(), gens));
  }
  std::sort(faces.begin(), faces.end(), [](const RatCone& a, const RatCone& b) {
    if (a.span_dim() != b.span_dim()) return a.span_dim() < b.span_dim();
    return std::lexicographical_compare(a.rays().begin(), a.rays().end(),
                                        b.rays().begin(), b.rays().end(), lex_less);
  });
  return faces;
}

Membership membership(const RatCone& c, const RatVec& v) {
  if (v.size() != c.dim()) throw std::invalid_argument("membership: dimension mismatch");
  for (const auto& u : c.span_equations()) {
    if (dot(u, v) != 0) return Membership::outside;
  }
  bool strict = true;
  for (const auto& u : c.facets()) {
    Rat d = dot(u, v);
    if (d < 0) return Membership::outside;
    if (d == 0) strict = false;
  }
  if (c.is_zero()) return is_zero(v) ? Membership::relative_interior : Membership::outside;
  return strict ? Membership::relative_interior : Membership::boundary;
}

bool contains(const RatCone& c, const RatVec& v) {
  return membership(c, v) != Membership::outside;
}

bool is_face_of(const RatCone& f, const RatCone& c) {
  if (f.dim() != c.dim()) return false;
  for (const auto& face : face_lattice(c)) {
    if (face == f) return true;
  }
  return false;
}

RatCone intersect(const RatCone& a, const RatCone& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("intersect: dimension mismatch");
  std::vector<RatVec> hs = a.halfspaces();
  hs.insert(hs.end(), b.halfspaces().begin(), b.halfspaces().end());
  return RatCone::from_halfspaces(a.dim(), hs);
}

RatCone project_cone(const RatCone& c, const QuotientMap& q) {
  if (q.source_dim != c.dim()) throw std::invalid_argument("project_cone: dimension mismatch");
  std::vector<RatVec> images;
  for (const auto& r : c.rays()) images.push_back(q.apply(r));
  return RatCone::from_rays(q.target_dim, images);
}

QuotientMap quotient_by_span(const RatCone& tau) {
  QuotientMap q;
  q.source_dim = tau.dim();
  q.matrix = null_space(tau.rays(), tau.dim());
  q.target_dim = q.matrix.size();
  return q;
}

RatCone conical_hull(std::size_t dim, const std::vector<RatVec>& gens) {
  return RatCone::from_rays(dim, gens);
}

}  // namespace sphtrop
