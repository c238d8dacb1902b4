#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tropmod/complexes.hpp"
#include "tropmod/lattice.hpp"
#include "tropmod/trees.hpp"
#include "tropmod/valuation.hpp"

namespace tropmod {

struct FanCone {
  std::vector<int> ray_ids;       // extreme rays (indices into WeightedFan::rays), sorted
  int dim = 0;                    // rank of the generator set
  std::vector<int> provenance;    // indices of source cells in the boundary complex
  bool maximal = false;
  int weight = 0;                 // positive exactly on maximal cones
};

// Image of the boundary cone complex under the divisorial valuation map.
// For non-multipartite graphs distinct cells can land on one cone; their
// provenance lists are merged and `merged` is set.
struct WeightedFan {
  int ambient_dim = 0;
  StabilityGraph graph;
  BoundaryComplex complex;
  std::vector<IntVec> rays;       // primitive, pairwise distinct
  std::vector<FanCone> cones;     // includes the zero cone; sorted by (dim, rays)
  bool merged = false;

  std::vector<IntVec> generators(int cone_index) const;
  int max_dim() const;
  // Minimal-dimension stored cone containing the point; -1 if outside the support.
  int find_containing_cone(const RatVec& point) const;
};

WeightedFan build_trop_fan(const StabilityGraph& g);

// Lattice normal of the facet tau inside sigma: an integer vector in
// span(sigma) generating (span(sigma) cap Z^r)/(span(tau) cap Z^r), pointing
// into sigma. Well defined modulo span(tau).
IntVec primitive_normal(const std::vector<IntVec>& sigma_gens,
                        const std::vector<IntVec>& tau_gens);

struct BalancingEntry {
  int tau_index = 0;
  // (maximal cone index, weight, primitive normal); cones crossed by
  // span(tau) through their interior contribute both sides and are skipped.
  std::vector<std::tuple<int, int, IntVec>> contributions;
  IntVec residual;
  bool pass = false;
};

struct BalancingCertificate {
  bool pass = false;
  std::vector<BalancingEntry> entries;  // one per codimension-1 cone
};

// Exact balancing check at every codimension-1 cone: the weighted sum of
// primitive normals must lie in the rational span of the cone.
BalancingCertificate check_balanced(const WeightedFan& f);

enum class VerifyLevel { Quick, Full };

struct EmbeddingReport {
  bool vertex_injective = false;
  bool dim_preserving = false;
  std::optional<bool> face_compatible;  // absent at quick level
  bool is_embedding = false;
};

// The three-part embedding test of the cone complex into the lattice.
// Full level adds exact pairwise cone-intersection face compatibility.
EmbeddingReport embedding_report(const StabilityGraph& g, VerifyLevel level = VerifyLevel::Full);

// Sum over bounded edges of length * valuation vector of the edge cut.
RatVec trop_embed(const MetricTree& m, const StabilityGraph& g);

}  // namespace tropmod
