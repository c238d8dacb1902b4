#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tropmod/graphs.hpp"
#include "tropmod/markset.hpp"
#include "tropmod/rational.hpp"

namespace tropmod {

// A boundary stratum's combinatorial type, encoded as the index sets cut out
// by the bounded edges of its dual tree (the side not containing marking 1).
// Canonical storage: members sorted by cardinality then lexicographically.
class NestedFamily {
 public:
  NestedFamily() = default;

  // Checks 2 <= |I| <= n-2, I within {2..n}, pairwise nested-or-disjoint,
  // at most n-3 members, no duplicates.
  static NestedFamily validate(std::vector<MarkSet> sets, int n);

  // Text format: {3,4};{3,4,5}   (empty string = interior stratum)
  static NestedFamily parse(std::string_view text, int n);
  std::string serialize() const;

  int n() const { return n_; }
  int size() const { return (int)sets_.size(); }
  bool empty() const { return sets_.empty(); }
  const std::vector<MarkSet>& members() const { return sets_; }
  bool contains(MarkSet I) const;

  // Members with no other member strictly inside them.
  std::vector<MarkSet> minimal_members() const;

  // Every member spans a graph edge (equivalently: every minimal member does).
  bool gamma_stable(const StabilityGraph& g) const;

  NestedFamily with(MarkSet I) const;
  NestedFamily intersect(const NestedFamily& o) const;

  friend bool operator==(const NestedFamily& a, const NestedFamily& b) {
    return a.n_ == b.n_ && a.sets_ == b.sets_;
  }
  friend bool operator!=(const NestedFamily& a, const NestedFamily& b) { return !(a == b); }
  friend bool operator<(const NestedFamily& a, const NestedFamily& b);

 private:
  int n_ = 0;
  std::vector<MarkSet> sets_;
};

// Dual graph of a stable curve: a tree, one leg per marking, every vertex of
// valence >= 3. The root vertex carries leg 1.
struct MarkedTree {
  int n = 0;
  int num_vertices = 0;
  std::vector<std::pair<int, int>> edges;  // bounded edges between vertex ids
  std::vector<int> leg_vertex;             // [1..n] -> vertex id; slot 0 unused

  int root() const { return leg_vertex[1]; }
  MarkSet legs_at(int v) const;
  int valence(int v) const;
  bool is_stable() const;

  // Markings on the side of edge k away from the root.
  MarkSet cut(int edge_index) const;

  friend bool operator==(const MarkedTree& a, const MarkedTree& b);
};

// The unique stable tree whose non-root edge cuts are exactly the members of F.
MarkedTree tree_from_nested_family(const NestedFamily& f, int n);
// Inverse: one index set per bounded edge.
NestedFamily nested_family_from_tree(const MarkedTree& t);

// Every non-root vertex with exactly one bounded edge carries two legs joined
// by a graph edge.
bool is_gamma_stable_tree(const MarkedTree& t, const StabilityGraph& g);

// All tails (edge cuts away from the root) whose marking set spans no graph
// edge; sorted by size then lex.
std::vector<MarkSet> extremal_assignment(const MarkedTree& t, const StabilityGraph& g);

// Contract one assigned tail, reattaching its legs to the attachment vertex.
MarkedTree contract_tail(const MarkedTree& t, MarkSet tail);

// Contract all maximal assigned tails; idempotent, order-independent.
MarkedTree stabilize(const MarkedTree& t, const StabilityGraph& g);

struct MetricTree {
  MarkedTree tree;
  std::vector<Rat> lengths;  // per edge index of tree.edges, all > 0

  static MetricTree make(MarkedTree t, std::vector<Rat> lengths);
};

// Pairwise leg distances through the tree, as a representative of the class
// modulo the image of x -> (x_i + x_j).
struct DistanceVector {
  int n = 0;
  std::vector<Rat> entries;  // indexed by pair_index over 1 <= i < j <= n

  static int pair_index(int i, int j, int n);
  Rat at(int i, int j) const;
};

DistanceVector distance_vector(const MetricTree& m);

// Exact test for equality of classes modulo the image of x -> (x_i + x_j):
// solves for the correction vector and verifies every pair equation.
bool quotient_equal(const DistanceVector& a, const DistanceVector& b);

}  // namespace tropmod
