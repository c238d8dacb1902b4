#include "tropmod/fan.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace tropmod {

std::vector<IntVec> WeightedFan::generators(int cone_index) const {
  std::vector<IntVec> out;
  for (int r : cones[cone_index].ray_ids) out.push_back(rays[r]);
  return out;
}

int WeightedFan::max_dim() const {
  int d = 0;
  for (const FanCone& c : cones) d = std::max(d, c.dim);
  return d;
}

int WeightedFan::find_containing_cone(const RatVec& point) const {
  for (size_t i = 0; i < cones.size(); ++i)
    if (in_cone(point, generators((int)i))) return (int)i;
  return -1;
}

WeightedFan build_trop_fan(const StabilityGraph& g) {
  WeightedFan fan;
  fan.graph = g;
  fan.complex = enumerate_complex(g);
  fan.ambient_dim = CoordinateFrame::for_graph(g).dim();

  // rays: distinct valuation vectors over the stable divisors
  std::vector<IntVec> divisor_vec;
  for (MarkSet I : fan.complex.divisors) divisor_vec.push_back(pi_gamma(I, g));
  auto ray_id = [&](const IntVec& v) {
    for (size_t i = 0; i < fan.rays.size(); ++i)
      if (fan.rays[i] == v) return (int)i;
    fan.rays.push_back(v);
    return (int)fan.rays.size() - 1;
  };

  // image cone of every cell, reduced to extreme generators, merged by geometry
  std::map<std::vector<int>, FanCone> by_rays;
  for (size_t ci = 0; ci < fan.complex.cells.size(); ++ci) {
    const NestedFamily& cell = fan.complex.cells[ci];
    std::vector<IntVec> gens;
    for (MarkSet I : cell.members()) {
      IntVec v = divisor_vec[fan.complex.divisor_index(I)];
      if (std::find(gens.begin(), gens.end(), v) == gens.end()) gens.push_back(v);
    }
    if (!cone_pointed(gens)) fail(Errc::Internal, "image cone is not pointed");
    std::vector<int> ids;
    for (int e : extreme_generators(gens)) ids.push_back(ray_id(gens[e]));
    std::sort(ids.begin(), ids.end());
    auto it = by_rays.find(ids);
    if (it == by_rays.end()) {
      FanCone cone;
      cone.ray_ids = ids;
      std::vector<IntVec> rv;
      for (int r : ids) rv.push_back(fan.rays[r]);
      cone.dim = rank(rv);
      cone.provenance = {(int)ci};
      by_rays.emplace(std::move(ids), std::move(cone));
    } else {
      it->second.provenance.push_back((int)ci);
    }
  }
  for (auto& [ids, cone] : by_rays) {
    if (cone.provenance.size() > 1) fan.merged = true;
    fan.cones.push_back(cone);
  }
  std::sort(fan.cones.begin(), fan.cones.end(), [](const FanCone& a, const FanCone& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.ray_ids < b.ray_ids;
  });

  // geometric maximality; weight 1 on maximal cones
  for (size_t i = 0; i < fan.cones.size(); ++i) {
    bool maximal = true;
    std::vector<IntVec> gi = fan.generators((int)i);
    for (size_t j = 0; j < fan.cones.size() && maximal; ++j) {
      if (i == j || fan.cones[j].dim < fan.cones[i].dim) continue;
      if (fan.cones[i].ray_ids == fan.cones[j].ray_ids) continue;
      std::vector<IntVec> gj = fan.generators((int)j);
      bool contained = true;
      for (const IntVec& v : gi)
        if (!in_cone(v, gj)) {
          contained = false;
          break;
        }
      // geometric equality is impossible here: pointed cones share extreme
      // rays, and equal ray sets were merged during deduplication
      if (contained) maximal = false;
    }
    fan.cones[i].maximal = maximal;
    fan.cones[i].weight = maximal ? 1 : 0;
  }
  return fan;
}

namespace {

// Coordinates of v in the row basis (solves exactly; v must lie in the span).
RatVec coords_in_basis(const IntVec& v, const std::vector<IntVec>& basis) {
  auto sol = solve_columns(basis, to_rat(v));
  if (!sol) fail(Errc::Internal, "vector not in claimed span");
  return *sol;
}

// x in Z^d with x . f = 1 for primitive f (iterated extended gcd).
IntVec unit_functional_solution(const IntVec& f) {
  const int d = (int)f.size();
  IntVec x(d, 0);
  long long g = 0;
  for (int i = 0; i < d; ++i) {
    if (f[i] == 0) continue;
    if (g == 0) {
      g = std::abs(f[i]);
      x[i] = f[i] > 0 ? 1 : -1;
      continue;
    }
    // extended gcd: a = x0 * g + y0 * f[i]
    long long a = g, b = f[i], x0 = 1, y0 = 0, x1 = 0, y1 = 1;
    while (b != 0) {
      long long q = a / b;
      std::tie(a, b) = std::make_pair(b, a - q * b);
      std::tie(x0, x1) = std::make_pair(x1, x0 - q * x1);
      std::tie(y0, y1) = std::make_pair(y1, y0 - q * y1);
    }
    if (a < 0) {
      a = -a;
      x0 = -x0;
      y0 = -y0;
    }
    for (int k = 0; k < i; ++k) x[k] *= x0;
    x[i] = y0;
    g = a;
  }
  if (g != 1) fail(Errc::Internal, "functional is not primitive");
  return x;
}

struct FacetFrame {
  std::vector<IntVec> sigma_basis;  // saturated lattice basis of span(sigma)
  IntVec functional;                // primitive f in Z^d vanishing on tau, >= 0 on sigma
  bool straddles = false;           // span(tau) meets the interior of sigma
};

FacetFrame facet_frame(const std::vector<IntVec>& sigma_gens,
                       const std::vector<IntVec>& tau_gens, int r) {
  FacetFrame out;
  out.sigma_basis = saturation_basis(sigma_gens, r);
  const int d = (int)out.sigma_basis.size();
  std::vector<IntVec> tau_basis = saturation_basis(tau_gens, r);
  if ((int)tau_basis.size() != d - 1)
    fail(Errc::NotAFacet, "cone dimensions do not differ by one");

  // tau basis in sigma coordinates; saturated, so the quotient is Z
  std::vector<IntVec> C;
  for (const IntVec& t : tau_basis) {
    RatVec c = coords_in_basis(t, out.sigma_basis);
    IntVec ci(d, 0);
    for (int k = 0; k < d; ++k) {
      if (!c[k].is_integer()) fail(Errc::Internal, "saturated basis produced fractional coords");
      ci[k] = c[k].num();
    }
    C.push_back(ci);
  }
  std::vector<IntVec> ker = rational_kernel(C, d);
  if (ker.size() != 1) fail(Errc::Internal, "facet functional is not unique");
  out.functional = ker[0];

  // orientation and side analysis on the sigma generators
  bool pos = false, neg = false;
  for (const IntVec& gen : sigma_gens) {
    RatVec c = coords_in_basis(gen, out.sigma_basis);
    Rat val(0);
    for (int k = 0; k < d; ++k) val += c[k] * Rat(out.functional[k]);
    if (val > Rat(0)) pos = true;
    if (val < Rat(0)) neg = true;
  }
  if (pos && neg) {
    out.straddles = true;
    return out;
  }
  if (neg) out.functional = negate(out.functional);
  if (!pos && !neg) fail(Errc::NotAFacet, "cone does not leave the facet hyperplane");
  return out;
}

IntVec normal_from_frame(const FacetFrame& fr, int r) {
  IntVec x = unit_functional_solution(fr.functional);
  IntVec u(r, 0);
  const int d = (int)fr.sigma_basis.size();
  for (int k = 0; k < d; ++k)
    for (int e = 0; e < r; ++e) u[e] += x[k] * fr.sigma_basis[k][e];
  return u;
}

}  // namespace

IntVec primitive_normal(const std::vector<IntVec>& sigma_gens,
                        const std::vector<IntVec>& tau_gens) {
  if (sigma_gens.empty()) fail(Errc::NotAFacet, "empty cone");
  const int r = (int)sigma_gens[0].size();
  for (const IntVec& t : tau_gens)
    if (!in_cone(t, sigma_gens)) fail(Errc::NotAFacet, "facet candidate is not inside the cone");
  FacetFrame fr = facet_frame(sigma_gens, tau_gens, r);
  if (fr.straddles) fail(Errc::NotAFacet, "hyperplane of the candidate crosses the cone interior");
  return normal_from_frame(fr, r);
}

BalancingCertificate check_balanced(const WeightedFan& f) {
  const int r = f.ambient_dim;
  const int d = f.max_dim();
  // purity: every geometrically maximal cone has top dimension
  for (size_t i = 0; i < f.cones.size(); ++i)
    if (f.cones[i].maximal && f.cones[i].dim != d)
      fail(Errc::NotPure, "maximal cone of dimension " + std::to_string(f.cones[i].dim) +
                              " in a fan of dimension " + std::to_string(d));

  BalancingCertificate cert;
  cert.pass = true;
  for (size_t ti = 0; ti < f.cones.size(); ++ti) {
    if (f.cones[ti].dim != d - 1) continue;
    std::vector<IntVec> tau_gens = f.generators((int)ti);
    BalancingEntry entry;
    entry.tau_index = (int)ti;
    IntVec residual(r, 0);
    for (size_t si = 0; si < f.cones.size(); ++si) {
      if (!f.cones[si].maximal) continue;
      std::vector<IntVec> sigma_gens = f.generators((int)si);
      bool contains = true;
      for (const IntVec& t : tau_gens)
        if (!in_cone(t, sigma_gens)) {
          contains = false;
          break;
        }
      if (!contains) continue;
      FacetFrame fr = facet_frame(sigma_gens, tau_gens, r);
      if (fr.straddles) continue;  // both sides covered, net contribution zero
      IntVec u = normal_from_frame(fr, r);
      for (int e = 0; e < r; ++e) residual[e] += f.cones[si].weight * u[e];
      entry.contributions.emplace_back((int)si, f.cones[si].weight, std::move(u));
    }
    entry.residual = residual;
    entry.pass = in_span(to_rat(residual), tau_gens);
    cert.pass = cert.pass && entry.pass;
    cert.entries.push_back(std::move(entry));
  }
  return cert;
}

EmbeddingReport embedding_report(const StabilityGraph& g, VerifyLevel level) {
  if (g.n() > 7) fail(Errc::DimensionTooLarge, "embedding report limited to n <= 7");
  EmbeddingReport rep;
  rep.vertex_injective = injectivity_report(g).injective;

  BoundaryComplex complex = enumerate_complex(g);
  std::map<uint32_t, IntVec> vec_of;
  for (MarkSet I : complex.divisors) vec_of[I.bits()] = pi_gamma(I, g);
  auto cell_gens = [&](const NestedFamily& cell) {
    std::vector<IntVec> gens;
    for (MarkSet I : cell.members()) gens.push_back(vec_of.at(I.bits()));
    return gens;
  };

  rep.dim_preserving = true;
  for (const NestedFamily& cell : complex.cells)
    if (rank(cell_gens(cell)) != cell.size()) {
      rep.dim_preserving = false;
      break;
    }

  if (level == VerifyLevel::Full) {
    bool compatible = true;
    for (size_t a = 0; a < complex.cells.size() && compatible; ++a)
      for (size_t b = a + 1; b < complex.cells.size() && compatible; ++b) {
        const NestedFamily& fa = complex.cells[a];
        const NestedFamily& fb = complex.cells[b];
        std::vector<IntVec> shared_gens = cell_gens(fa.intersect(fb));
        for (const IntVec& ray : cone_intersection(cell_gens(fa), cell_gens(fb)))
          if (!in_cone(ray, shared_gens)) {
            compatible = false;
            break;
          }
      }
    rep.face_compatible = compatible;
  }

  rep.is_embedding = rep.vertex_injective && rep.dim_preserving &&
                     (!rep.face_compatible.has_value() || *rep.face_compatible);
  return rep;
}

RatVec trop_embed(const MetricTree& m, const StabilityGraph& g) {
  if (!is_gamma_stable_tree(m.tree, g))
    fail(Errc::UnstableTree, "metric tree is not stable for the given graph");
  const int dim = CoordinateFrame::for_graph(g).dim();
  RatVec out(dim, Rat(0));
  for (size_t k = 0; k < m.tree.edges.size(); ++k) {
    IntVec v = pi_gamma(m.tree.cut((int)k), g);
    for (int e = 0; e < dim; ++e) out[e] += m.lengths[k] * Rat(v[e]);
  }
  return out;
}

}  // namespace tropmod
