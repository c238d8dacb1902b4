#include "tropmod/valuation.hpp"

#include <algorithm>
#include <map>

#include "tropmod/complexes.hpp"

namespace tropmod {

CoordinateFrame CoordinateFrame::for_graph(const StabilityGraph& g) {
  CoordinateFrame f;
  for (auto [i, j] : g.edges())
    if (!(i == 2 && j == 3)) f.pairs_.emplace_back(i, j);
  return f;
}

CoordinateFrame CoordinateFrame::for_complete(int n) {
  return for_graph(StabilityGraph::complete(n));
}

int CoordinateFrame::index_of(int i, int j) const {
  if (i > j) std::swap(i, j);
  for (size_t k = 0; k < pairs_.size(); ++k)
    if (pairs_[k] == std::make_pair(i, j)) return (int)k;
  return -1;
}

int ord(MarkSet I, int i, int j, const StabilityGraph& g) {
  if (i > j) std::swap(i, j);
  if (!g.has_edge(i, j) || (i == 2 && j == 3))
    fail(Errc::PairNotInFrame,
         "pair {" + std::to_string(i) + "," + std::to_string(j) + "} is not a frame coordinate");
  const bool has23 = I.contains(2) && I.contains(3);
  const bool has_pair = I.contains(i) && I.contains(j);
  if (!has23 && has_pair) return 1;
  if (has23 && !has_pair) return -1;
  return 0;
}

namespace {

void check_divisor(MarkSet I, const StabilityGraph& g) {
  if (!I.subset_of(g.vertex_set()) || I.size() < 2 || I.size() > g.n() - 2)
    fail(Errc::UnstableDivisor, "index set " + I.str() + " is not a divisor for n=" +
                                    std::to_string(g.n()));
  if (!g.spans_edge(I))
    fail(Errc::UnstableDivisor, "index set " + I.str() + " spans no graph edge");
}

}  // namespace

IntVec pi_gamma(MarkSet I, const StabilityGraph& g) {
  check_divisor(I, g);
  CoordinateFrame frame = CoordinateFrame::for_graph(g);
  IntVec v(frame.dim(), 0);
  for (int k = 0; k < frame.dim(); ++k) {
    auto [i, j] = frame.pairs()[k];
    v[k] = ord(I, i, j, g);
  }
  return v;
}

IntVec pi_complete(MarkSet I, int n) { return pi_gamma(I, StabilityGraph::complete(n)); }

IntVec proj_gamma(const IntVec& full, const StabilityGraph& g) {
  CoordinateFrame complete = CoordinateFrame::for_complete(g.n());
  if ((int)full.size() != complete.dim())
    fail(Errc::Internal, "projection input does not match the complete frame");
  IntVec out;
  for (int k = 0; k < complete.dim(); ++k) {
    auto [i, j] = complete.pairs()[k];
    if (g.has_edge(i, j)) out.push_back(full[k]);
  }
  return out;
}

bool decompose_check(MarkSet I, const StabilityGraph& g) {
  check_divisor(I, g);
  IntVec direct = pi_gamma(I, g);
  IntVec sum(direct.size(), 0);
  auto elems = I.elements();
  for (size_t a = 0; a < elems.size(); ++a)
    for (size_t b = a + 1; b < elems.size(); ++b) {
      if (!g.has_edge(elems[a], elems[b])) continue;
      sum = add(sum, pi_gamma(MarkSet::pair(elems[a], elems[b]), g));
    }
  return direct == sum;
}

InjectivityReport injectivity_report(const StabilityGraph& g) {
  std::map<IntVec, std::vector<MarkSet>> groups;
  for (MarkSet I : enumerate_divisors(g)) groups[pi_gamma(I, g)].push_back(I);
  InjectivityReport rep;
  for (auto& [vec, divs] : groups) {
    if (divs.size() < 2) continue;
    rep.injective = false;
    std::sort(divs.begin(), divs.end(), size_lex_less);
    rep.collisions.emplace_back(vec, divs);
  }
  return rep;
}

}  // namespace tropmod
