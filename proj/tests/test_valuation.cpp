#include <algorithm>
#include <map>
#include <set>

#include "doctest.h"
#include "tropmod/complexes.hpp"
#include "tropmod/valuation.hpp"

using namespace tropmod;

namespace {

StabilityGraph gamma_tilde() {
  return StabilityGraph::validate(5, {{2, 3}, {2, 4}, {2, 5}, {3, 4}});
}

StabilityGraph k22() {
  return StabilityGraph::validate(5, {{2, 3}, {2, 4}, {3, 5}, {4, 5}});
}

// the other reading of the valuation formula, with the summation subscripts
// taken element-wise ("no endpoint in I"); kept here to pin down which
// reading reproduces the published vectors
IntVec pi_literal(MarkSet I, const StabilityGraph& g) {
  CoordinateFrame frame = CoordinateFrame::for_graph(g);
  IntVec v(frame.dim(), 0);
  bool has23 = I.contains(2) && I.contains(3);
  for (int k = 0; k < frame.dim(); ++k) {
    auto [i, j] = frame.pairs()[k];
    if (!has23 && I.contains(i) && I.contains(j)) v[k] = 1;
    if (has23 && !I.contains(i) && !I.contains(j)) v[k] = -1;
  }
  return v;
}

}  // namespace

TEST_SUITE_BEGIN("valuation");

TEST_CASE("coordinate frames") {
  CoordinateFrame f = CoordinateFrame::for_graph(gamma_tilde());
  CHECK(f.dim() == 3);
  CHECK(f.pairs() == std::vector<std::pair<int, int>>{{2, 4}, {2, 5}, {3, 4}});
  CHECK(f.index_of(4, 2) == 0);
  CHECK(f.index_of(2, 3) == -1);

  CoordinateFrame fk = CoordinateFrame::for_complete(5);
  CHECK(fk.dim() == 5);
  CHECK(fk.pairs() == std::vector<std::pair<int, int>>{{2, 4}, {2, 5}, {3, 4}, {3, 5}, {4, 5}});

  // dim = C(n,2) - n - N
  for (const StabilityGraph& g : enumerate_stability_graphs(5)) {
    int n = g.n();
    CHECK(CoordinateFrame::for_graph(g).dim() ==
          n * (n - 1) / 2 - n - g.removed_edge_count());
  }
}

TEST_CASE("vanishing orders") {
  StabilityGraph gt = gamma_tilde();
  CHECK(ord(MarkSet{2, 3}, 2, 4, gt) == -1);
  CHECK(ord(MarkSet{2, 3, 4}, 2, 5, gt) == -1);
  CHECK(ord(MarkSet{2, 3, 4}, 2, 4, gt) == 0);
  CHECK(ord(MarkSet{2, 3, 4}, 3, 4, gt) == 0);
  CHECK(ord(MarkSet{2, 4, 5}, 4, 5, k22()) == 1);
  CHECK_THROWS_AS(ord(MarkSet{2, 3}, 3, 5, gt), Error);  // {3,5} is not an edge
  CHECK_THROWS_AS(ord(MarkSet{2, 4}, 2, 3, gt), Error);  // {2,3} is not a frame pair
}

TEST_CASE("published valuation table for the non-multipartite example") {
  StabilityGraph gt = gamma_tilde();
  std::map<std::string, IntVec> expect{
      {"{2,4}", {1, 0, 0}},     {"{2,5}", {0, 1, 0}},     {"{3,4}", {0, 0, 1}},
      {"{2,3}", {-1, -1, -1}},  {"{2,3,4}", {0, -1, 0}},  {"{2,3,5}", {-1, 0, -1}},
      {"{2,4,5}", {1, 1, 0}},   {"{3,4,5}", {0, 0, 1}},
  };
  for (MarkSet I : enumerate_divisors(gt)) CHECK(pi_gamma(I, gt) == expect.at(I.str()));
}

TEST_CASE("published valuation table for the complete bipartite example") {
  StabilityGraph kb = k22();
  std::map<std::string, IntVec> expect{
      {"{2,4}", {1, 0, 0}},     {"{3,5}", {0, 1, 0}},      {"{4,5}", {0, 0, 1}},
      {"{2,3}", {-1, -1, -1}},  {"{2,3,4}", {0, -1, -1}},  {"{2,3,5}", {-1, 0, -1}},
      {"{2,4,5}", {1, 0, 1}},   {"{3,4,5}", {0, 1, 1}},
  };
  for (MarkSet I : enumerate_divisors(kb)) CHECK(pi_gamma(I, kb) == expect.at(I.str()));
}

TEST_CASE("the order table reading matches the published vectors, the literal one does not") {
  StabilityGraph gt = gamma_tilde();
  CHECK(pi_gamma(MarkSet{2, 3}, gt) == IntVec{-1, -1, -1});
  CHECK(pi_literal(MarkSet{2, 3}, gt) == IntVec{0, 0, 0});  // misses every mixed pair
  for (MarkSet I : enumerate_divisors(gt)) {
    if (I.contains(2) && I.contains(3) && I != MarkSet{2, 3}) continue;
    if (!(I.contains(2) && I.contains(3))) CHECK(pi_gamma(I, gt) == pi_literal(I, gt));
  }
}

TEST_CASE("basis property of the two-element divisors") {
  for (const StabilityGraph& g : enumerate_stability_graphs(5)) {
    CoordinateFrame frame = CoordinateFrame::for_graph(g);
    CHECK(pi_gamma(MarkSet{2, 3}, g) == IntVec(frame.dim(), -1));
    for (int k = 0; k < frame.dim(); ++k) {
      auto [i, j] = frame.pairs()[k];
      IntVec e(frame.dim(), 0);
      e[k] = 1;
      CHECK(pi_gamma(MarkSet::pair(i, j), g) == e);
    }
  }
}

TEST_CASE("divisor vectors decompose into their edge pairs") {
  StabilityGraph gt = gamma_tilde();
  CHECK(pi_gamma(MarkSet{2, 4, 5}, gt) == IntVec{1, 1, 0});
  CHECK(decompose_check(MarkSet{2, 4, 5}, gt));
  // (-1,0,-1) = (-1,-1,-1) + (0,1,0)
  CHECK(pi_gamma(MarkSet{2, 3, 5}, k22()) == IntVec{-1, 0, -1});
  CHECK(decompose_check(MarkSet{2, 3, 5}, k22()));

  for (int n = 4; n <= 5; ++n)
    for (const StabilityGraph& g : enumerate_stability_graphs(n))
      for (MarkSet I : enumerate_divisors(g))
        if (I.size() >= 3) CHECK(decompose_check(I, g));
}

TEST_CASE("projection forgets non-edge coordinates and commutes") {
  StabilityGraph gt = gamma_tilde();
  CHECK(pi_complete(MarkSet{2, 4, 5}, 5) == IntVec{1, 1, 0, 0, 1});
  CHECK(proj_gamma(pi_complete(MarkSet{2, 4, 5}, 5), gt) == IntVec{1, 1, 0});
  CHECK(pi_complete(MarkSet{3, 4, 5}, 5) == IntVec{0, 0, 1, 1, 1});
  CHECK(proj_gamma(pi_complete(MarkSet{3, 4, 5}, 5), gt) == IntVec{0, 0, 1});

  // identity on the complete graph
  StabilityGraph k = StabilityGraph::complete(5);
  for (MarkSet I : enumerate_divisors(k)) CHECK(proj_gamma(pi_complete(I, 5), k) == pi_gamma(I, k));

  // functoriality on stable divisors, exhaustively at n <= 5
  for (int n = 4; n <= 5; ++n)
    for (const StabilityGraph& g : enumerate_stability_graphs(n))
      for (MarkSet I : enumerate_divisors(g))
        CHECK(proj_gamma(pi_complete(I, n), g) == pi_gamma(I, g));

  // unstable divisors of the full space project to zero
  for (const StabilityGraph& g : enumerate_stability_graphs(5))
    for (MarkSet I : enumerate_divisors(StabilityGraph::complete(5)))
      if (!g.spans_edge(I)) CHECK(is_zero(proj_gamma(pi_complete(I, 5), g)));
}

TEST_CASE("injectivity groups collisions") {
  InjectivityReport gt = injectivity_report(gamma_tilde());
  CHECK_FALSE(gt.injective);
  REQUIRE(gt.collisions.size() == 1);
  CHECK(gt.collisions[0].first == IntVec{0, 0, 1});
  CHECK(gt.collisions[0].second == std::vector<MarkSet>{MarkSet{3, 4}, MarkSet{3, 4, 5}});

  InjectivityReport kb = injectivity_report(k22());
  CHECK(kb.injective);
  CHECK(kb.collisions.empty());
  std::set<IntVec> distinct;
  for (MarkSet I : enumerate_divisors(k22())) distinct.insert(pi_gamma(I, k22()));
  CHECK(distinct.size() == 8);
}

TEST_CASE("injectivity characterizes multipartite graphs, with pair collisions") {
  for (int n = 4; n <= 5; ++n) {
    for (const StabilityGraph& g : enumerate_stability_graphs(n)) {
      InjectivityReport rep = injectivity_report(g);
      bool mp = is_complete_multipartite(g).has_value();
      CHECK(rep.injective == mp);
      if (mp) continue;
      // the witness triple carries the canonical collision shape
      auto w = multipartite_witness(g);
      REQUIRE(w.has_value());
      auto [i, j, k] = *w;
      int a = 0, b = 0, c = 0;
      if (g.has_edge(i, j)) a = i, b = j, c = k;
      else if (g.has_edge(i, k)) a = i, b = k, c = j;
      else a = j, b = k, c = i;
      MarkSet pair = MarkSet::pair(a, b);
      MarkSet triple = pair.with(c);
      CHECK(pi_gamma(triple, g) == pi_gamma(pair, g));
      bool found = false;
      for (const auto& [vec, divs] : rep.collisions) {
        bool has_pair = std::find(divs.begin(), divs.end(), pair) != divs.end();
        bool has_triple = std::find(divs.begin(), divs.end(), triple) != divs.end();
        if (has_pair && has_triple) found = true;
      }
      CHECK(found);
    }
  }
}

TEST_CASE("unstable index sets are rejected") {
  CHECK_THROWS_AS(pi_gamma(MarkSet{4, 5}, gamma_tilde()), Error);   // spans no edge
  CHECK_THROWS_AS(pi_gamma(MarkSet{2}, gamma_tilde()), Error);      // too small
  CHECK_THROWS_AS(pi_gamma(MarkSet{2, 3, 4, 5}, gamma_tilde()), Error);  // too large
}

TEST_SUITE_END();
