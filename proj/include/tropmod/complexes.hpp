#pragma once

#include <string>
#include <vector>

#include "tropmod/graphs.hpp"
#include "tropmod/trees.hpp"

namespace tropmod {

// The boundary complex: vertices are the stable boundary divisors, cells the
// stable nested families (downward closed, includes the empty family).
struct BoundaryComplex {
  int n = 0;
  int dimension = 0;                 // n - 3
  std::vector<MarkSet> divisors;     // by size then lex
  std::vector<NestedFamily> cells;   // all cells incl. empty, sorted
  std::vector<long long> f_vector;   // index k = number of cells with k members

  // Indices of cells not contained in a larger cell.
  std::vector<int> maximal_cells() const;
  long long cell_count(int cardinality) const;
  int divisor_index(MarkSet I) const;  // -1 if absent
};

// All I within {2..n}, 2 <= |I| <= n-2, spanning at least one edge of g.
std::vector<MarkSet> enumerate_divisors(const StabilityGraph& g);

BoundaryComplex enumerate_complex(const StabilityGraph& g);

// The member sets of a cell: the divisors whose intersection is the stratum.
std::vector<MarkSet> stratum_divisors(const NestedFamily& f);

// DOT rendering of the 1-skeleton (vertices = divisors, edges = 2-cells).
std::string skeleton_dot(const BoundaryComplex& c);

}  // namespace tropmod
