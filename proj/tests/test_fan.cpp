#include <algorithm>
#include <map>
#include <set>

#include "doctest.h"
#include "tropmod/fan.hpp"

using namespace tropmod;

namespace {

StabilityGraph gamma_tilde() {
  return StabilityGraph::validate(5, {{2, 3}, {2, 4}, {2, 5}, {3, 4}});
}

StabilityGraph k22() {
  return StabilityGraph::validate(5, {{2, 3}, {2, 4}, {3, 5}, {4, 5}});
}

int count_maximal(const WeightedFan& f) {
  int m = 0;
  for (const FanCone& c : f.cones) m += c.maximal;
  return m;
}

}  // namespace

TEST_SUITE_BEGIN("fan");

TEST_CASE("triangle graph at n=4: three rays around the origin") {
  StabilityGraph k3 = StabilityGraph::complete(4);
  WeightedFan f = build_trop_fan(k3);
  CHECK(f.ambient_dim == 2);
  REQUIRE(f.rays.size() == 3);
  std::set<IntVec> rays(f.rays.begin(), f.rays.end());
  CHECK(rays.count(IntVec{1, 0}) == 1);
  CHECK(rays.count(IntVec{0, 1}) == 1);
  CHECK(rays.count(IntVec{-1, -1}) == 1);
  CHECK(count_maximal(f) == 3);
  CHECK(f.max_dim() == 1);
  CHECK_FALSE(f.merged);
  // the zero cone is stored and is not maximal
  CHECK(f.cones[0].ray_ids.empty());
  CHECK_FALSE(f.cones[0].maximal);

  BalancingCertificate cert = check_balanced(f);
  CHECK(cert.pass);
  REQUIRE(cert.entries.size() == 1);  // only the origin has codimension one
  CHECK(cert.entries[0].residual == IntVec{0, 0});
}

TEST_CASE("fan counts of the obstruction example") {
  WeightedFan f = build_trop_fan(gamma_tilde());
  CHECK(f.rays.size() == 7);
  CHECK(count_maximal(f) == 8);
  CHECK(f.max_dim() == 2);
  CHECK(f.merged);
  CHECK(f.complex.f_vector == std::vector<long long>{1, 8, 9});

  // the collision ray carries the three merged strata
  int ray_001 = -1;
  for (size_t r = 0; r < f.rays.size(); ++r)
    if (f.rays[r] == IntVec{0, 0, 1}) ray_001 = (int)r;
  REQUIRE(ray_001 >= 0);
  int hits = 0;
  for (const FanCone& c : f.cones) {
    if (c.ray_ids == std::vector<int>{ray_001}) {
      REQUIRE(c.provenance.size() == 3);
      std::vector<std::string> prov;
      for (int cell : c.provenance) prov.push_back(f.complex.cells[cell].serialize());
      std::sort(prov.begin(), prov.end());
      CHECK(prov == std::vector<std::string>{"{3,4,5}", "{3,4}", "{3,4};{3,4,5}"});
      ++hits;
    }
  }
  CHECK(hits == 1);
  CHECK(check_balanced(f).pass);
}

TEST_CASE("fan of the complete bipartite example is the cone complex") {
  WeightedFan f = build_trop_fan(k22());
  CHECK(f.rays.size() == f.complex.divisors.size());
  CHECK(count_maximal(f) == (int)f.complex.maximal_cells().size());
  CHECK(f.rays.size() == 8);
  CHECK(count_maximal(f) == 10);
  CHECK_FALSE(f.merged);
  for (const FanCone& c : f.cones) CHECK(c.provenance.size() == 1);
  CHECK(check_balanced(f).pass);
}

TEST_CASE("full moduli fan at n=5") {
  WeightedFan f = build_trop_fan(StabilityGraph::complete(5));
  CHECK(f.rays.size() == 10);
  CHECK(count_maximal(f) == 15);
  CHECK(check_balanced(f).pass);
  for (const FanCone& c : f.cones)
    if (c.maximal) CHECK(c.weight == 1);
}

TEST_CASE("primitive normals") {
  // unimodular quadrant: normal of the x-axis inside it is e2 mod the axis
  IntVec u = primitive_normal({{1, 0}, {0, 1}}, {{1, 0}});
  CHECK(u[1] == 1);

  // saturation case: normal class generates the rank-one quotient
  IntVec v = primitive_normal({{1, 1, 0}, {0, 0, 1}}, {{0, 0, 1}});
  // v = +-(1,1,0) + c(0,0,1) with the sign pointing into the cone
  CHECK(v[0] == v[1]);
  CHECK(v[0] == 1);

  // not a facet: interior hyperplane
  CHECK_THROWS_AS(primitive_normal({{1, 0}, {0, 1}}, {{1, 1}}), Error);
  // dimension gap of two
  CHECK_THROWS_AS(primitive_normal({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, {{1, 0, 0}}), Error);

  // every stored facet pair of the full n=5 fan gives an integral normal in the span
  WeightedFan f = build_trop_fan(StabilityGraph::complete(5));
  for (const FanCone& sigma : f.cones) {
    if (!sigma.maximal) continue;
    for (const FanCone& tau : f.cones) {
      if (tau.dim != sigma.dim - 1) continue;
      bool face = std::includes(sigma.ray_ids.begin(), sigma.ray_ids.end(), tau.ray_ids.begin(),
                                tau.ray_ids.end());
      if (!face) continue;
      std::vector<IntVec> sg, tg;
      for (int r : sigma.ray_ids) sg.push_back(f.rays[r]);
      for (int r : tau.ray_ids) tg.push_back(f.rays[r]);
      IntVec n = primitive_normal(sg, tg);
      CHECK(in_span(to_rat(n), sg));
      CHECK_FALSE(in_span(to_rat(n), tg));
    }
  }
}

TEST_CASE("balancing fails after a weight mutation") {
  WeightedFan f = build_trop_fan(k22());
  // bump one maximal cone's weight
  int mutated = -1;
  for (size_t i = 0; i < f.cones.size(); ++i)
    if (f.cones[i].maximal) {
      f.cones[i].weight = 2;
      mutated = (int)i;
      break;
    }
  REQUIRE(mutated >= 0);
  BalancingCertificate cert = check_balanced(f);
  CHECK_FALSE(cert.pass);
  // some facet of the mutated cone must witness the failure
  bool witnessed = false;
  for (const BalancingEntry& e : cert.entries) {
    if (e.pass) continue;
    bool face = std::includes(f.cones[mutated].ray_ids.begin(), f.cones[mutated].ray_ids.end(),
                              f.cones[e.tau_index].ray_ids.begin(),
                              f.cones[e.tau_index].ray_ids.end());
    if (face) witnessed = true;
  }
  CHECK(witnessed);
}

TEST_CASE("a fan with a stranded low-dimensional cone is not pure") {
  WeightedFan f;
  f.ambient_dim = 2;
  f.rays = {{1, 0}, {0, 1}, {-1, 0}};
  FanCone zero;
  zero.dim = 0;
  FanCone ray;
  ray.ray_ids = {2};
  ray.dim = 1;
  ray.maximal = true;  // stranded: no 2D cone contains it
  ray.weight = 1;
  FanCone quad;
  quad.ray_ids = {0, 1};
  quad.dim = 2;
  quad.maximal = true;
  quad.weight = 1;
  f.cones = {zero, ray, quad};
  CHECK_THROWS_AS(check_balanced(f), Error);
}

TEST_CASE("embedding reports follow the classification") {
  EmbeddingReport gt = embedding_report(gamma_tilde(), VerifyLevel::Full);
  CHECK_FALSE(gt.vertex_injective);
  CHECK_FALSE(gt.dim_preserving);  // the cell {{3,4},{3,4,5}} drops dimension
  CHECK_FALSE(gt.is_embedding);

  EmbeddingReport kb = embedding_report(k22(), VerifyLevel::Full);
  CHECK(kb.vertex_injective);
  CHECK(kb.dim_preserving);
  REQUIRE(kb.face_compatible.has_value());
  CHECK(*kb.face_compatible);
  CHECK(kb.is_embedding);

  CHECK(embedding_report(StabilityGraph::complete(5), VerifyLevel::Full).is_embedding);
  CHECK(embedding_report(StabilityGraph::complete(6), VerifyLevel::Quick).is_embedding);
  CHECK_THROWS_AS(embedding_report(StabilityGraph::complete(8), VerifyLevel::Quick), Error);
}

TEST_CASE("metric trees embed linearly") {
  StabilityGraph gt = gamma_tilde();
  MetricTree single =
      MetricTree::make(tree_from_nested_family(NestedFamily::parse("{3,4}", 5), 5), {Rat(2)});
  CHECK(trop_embed(single, gt) == RatVec{Rat(0), Rat(0), Rat(2)});

  // the collision made quantitative: lengths a, b land on (0,0,a+b)
  MetricTree chain = MetricTree::make(
      tree_from_nested_family(NestedFamily::parse("{3,4};{3,4,5}", 5), 5), {Rat(3), Rat(5, 2)});
  CHECK(trop_embed(chain, gt) == RatVec{Rat(0), Rat(0), Rat(11, 2)});

  MetricTree kchain = MetricTree::make(
      tree_from_nested_family(NestedFamily::parse("{4,5};{3,4,5}", 5), 5), {Rat(3), Rat(5)});
  // a*(0,0,1) + b*(0,1,1)
  CHECK(trop_embed(kchain, k22()) == RatVec{Rat(0), Rat(5), Rat(8)});

  MetricTree unstable =
      MetricTree::make(tree_from_nested_family(NestedFamily::parse("{4,5}", 5), 5), {Rat(1)});
  CHECK_THROWS_AS(trop_embed(unstable, gt), Error);
}

TEST_CASE("ray and cone counts match the complex exactly when multipartite") {
  for (const StabilityGraph& g : enumerate_stability_graphs(5)) {
    WeightedFan f = build_trop_fan(g);
    bool mp = is_complete_multipartite(g).has_value();
    bool counts_match = f.rays.size() == f.complex.divisors.size() &&
                        count_maximal(f) == (int)f.complex.maximal_cells().size();
    CHECK(counts_match == mp);
  }
}

TEST_CASE("embedding verdict decides injectivity of the metric embedding") {
  // sample metric trees on every cell; distinct trees hit distinct vectors
  // exactly in the embedding case
  for (const StabilityGraph& g : enumerate_stability_graphs(5)) {
    bool emb = embedding_report(g, VerifyLevel::Full).is_embedding;
    BoundaryComplex c = enumerate_complex(g);
    std::map<std::string, std::string> seen;  // vector -> family+lengths key
    bool collision = false;
    for (const NestedFamily& cell : c.cells) {
      if (cell.empty()) continue;
      MarkedTree t = tree_from_nested_family(cell, g.n());
      for (int variant = 0; variant < 3; ++variant) {
        std::vector<Rat> lengths;
        for (int e = 0; e < cell.size(); ++e)
          lengths.push_back(Rat(1 + ((e + variant) % 3), 1 + (variant % 2)));
        RatVec v = trop_embed(MetricTree::make(t, lengths), g);
        std::string vkey;
        for (const Rat& x : v) vkey += x.str() + ",";
        std::string tkey = cell.serialize() + "|";
        for (const Rat& l : lengths) tkey += l.str() + ",";
        auto [it, inserted] = seen.emplace(vkey, tkey);
        if (!inserted && it->second != tkey) collision = true;
      }
    }
    CHECK(collision == !emb);
  }
}

TEST_CASE("support of the projected full fan matches the graph fan") {
  for (int n = 4; n <= 5; ++n) {
    WeightedFan full = build_trop_fan(StabilityGraph::complete(n));
    for (const StabilityGraph& g : enumerate_stability_graphs(n)) {
      WeightedFan fan = build_trop_fan(g);
      for (const FanCone& c : full.cones) {
        if (!c.maximal) continue;
        // sample: generators, pairwise sums, and a lopsided interior point
        std::vector<IntVec> gens;
        for (int r : c.ray_ids) gens.push_back(full.rays[r]);
        std::vector<IntVec> samples = gens;
        IntVec total((size_t)full.ambient_dim, 0);
        for (const IntVec& v : gens) total = add(total, v);
        samples.push_back(total);
        for (size_t i = 0; i + 1 < gens.size(); ++i) samples.push_back(add(gens[i], add(gens[i + 1], gens[i + 1])));
        for (const IntVec& s : samples) {
          IntVec projected = proj_gamma(s, g);
          CHECK(fan.find_containing_cone(to_rat(projected)) >= 0);
        }
      }
    }
  }
}

TEST_SUITE_END();
