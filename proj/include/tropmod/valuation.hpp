#pragma once

#include <utility>
#include <vector>

#include "tropmod/graphs.hpp"
#include "tropmod/lattice.hpp"
#include "tropmod/markset.hpp"

namespace tropmod {

// Torus coordinates x_ij/x_23: one slot per graph edge other than {2,3},
// in lexicographic pair order. dim = |E| - 1 = C(n,2) - n - N.
class CoordinateFrame {
 public:
  static CoordinateFrame for_graph(const StabilityGraph& g);
  static CoordinateFrame for_complete(int n);  // frame of K_{n-1}

  int dim() const { return (int)pairs_.size(); }
  const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }
  int index_of(int i, int j) const;  // -1 if absent

 private:
  std::vector<std::pair<int, int>> pairs_;
};

// Vanishing order of x_ij/x_23 along the divisor D_I:
//   +1 if {2,3} not within I and {i,j} within I,
//   -1 if {2,3} within I and {i,j} not within I,
//    0 otherwise.
int ord(MarkSet I, int i, int j, const StabilityGraph& g);

// The divisorial valuation vector of D_I over the frame of g.
// I must be a stable divisor of g (spans an edge, 2 <= |I| <= n-2).
IntVec pi_gamma(MarkSet I, const StabilityGraph& g);

// Valuation over the full frame of K_{n-1}.
IntVec pi_complete(MarkSet I, int n);

// Forgets coordinates whose pair is not an edge of g; input is indexed by
// the K_{n-1} frame. Commutes with the valuation maps on stable divisors.
IntVec proj_gamma(const IntVec& full, const StabilityGraph& g);

// v_{D_I} equals the sum of the valuation vectors of its 2-element edge
// subsets (including {2,3} when present).
bool decompose_check(MarkSet I, const StabilityGraph& g);

struct InjectivityReport {
  bool injective = true;
  // groups of >= 2 divisors sharing one valuation vector, with that vector
  std::vector<std::pair<IntVec, std::vector<MarkSet>>> collisions;
};

InjectivityReport injectivity_report(const StabilityGraph& g);

}  // namespace tropmod
