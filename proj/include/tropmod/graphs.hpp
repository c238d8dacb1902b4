#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tropmod/errors.hpp"
#include "tropmod/markset.hpp"

namespace tropmod {

// The stability datum: a simple connected graph on vertex labels {2..n}
// containing the edge {2,3}. Immutable after validation.
class StabilityGraph {
 public:
  StabilityGraph() = default;  // empty sentinel; build real graphs via validate/parse

  // Validates n >= 4, label range, simplicity, connectivity and the fixed
  // edge {2,3}; edges are stored sorted lexicographically.
  static StabilityGraph validate(int n, std::vector<std::pair<int, int>> edges);

  // Text format: n=<int>;edges=<i>-<j>,<i>-<j>,...  (whitespace tolerant)
  static StabilityGraph parse(std::string_view text);
  std::string serialize() const;  // canonical: lexicographic edge order

  static StabilityGraph complete(int n);  // K_{n-1} on {2..n}

  int n() const { return n_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  int edge_count() const { return (int)edges_.size(); }
  // Number of edges removed from K_{n-1}: N = C(n-1,2) - |E|.
  int removed_edge_count() const;

  bool has_edge(int i, int j) const {
    return i != j && i >= 2 && j >= 2 && i <= n_ && j <= n_ && adj_[i].contains(j);
  }
  MarkSet neighbors(int v) const { return adj_[v]; }
  MarkSet vertex_set() const { return MarkSet::range(2, n_); }

  // Some edge has both endpoints inside I.
  bool spans_edge(MarkSet I) const;

  friend bool operator==(const StabilityGraph& a, const StabilityGraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::array<MarkSet, 32> adj_{};
};

// Parts of a complete multipartite decomposition: the connected components of
// the complement graph, each an independent set of the graph itself.
struct MultipartitePartition {
  std::vector<MarkSet> parts;  // sorted by minimum element
};

// Lemma characterization (1): complement is a disjoint union of cliques.
// Returns the partition when it is, nothing otherwise.
std::optional<MultipartitePartition> is_complete_multipartite(const StabilityGraph& g);

// Lemma characterization (3): a vertex triple inducing exactly one edge is a
// witness against completeness; first such triple in lexicographic order.
std::optional<std::array<int, 3>> multipartite_witness(const StabilityGraph& g);

// Lemma characterization (2): for every edge {i,j} and vertex k, one of
// {i,k}, {j,k} is an edge.
bool neighbor_cover_check(const StabilityGraph& g);

// Every simple connected graph on {2..n} containing {2,3}, deterministic
// order (by subset mask over the non-fixed edge slots). 4 <= n <= 7.
std::vector<StabilityGraph> enumerate_stability_graphs(int n);

}  // namespace tropmod
