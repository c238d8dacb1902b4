#pragma once

#include <optional>
#include <vector>

#include "tropmod/errors.hpp"
#include "tropmod/rational.hpp"

namespace tropmod {

using IntVec = std::vector<long long>;
using RatVec = std::vector<Rat>;

bool is_zero(const IntVec& v);
IntVec add(const IntVec& a, const IntVec& b);
IntVec negate(const IntVec& v);
RatVec to_rat(const IntVec& v);
RatVec scale(const RatVec& v, const Rat& c);
RatVec add(const RatVec& a, const RatVec& b);
bool is_zero(const RatVec& v);

// v / gcd(entries), direction preserved.
IntVec primitive(const IntVec& v);

// Clears denominators and divides by the gcd.
IntVec primitive(const RatVec& v);

// Rank of the rational row span.
int rank(const std::vector<RatVec>& rows);
int rank(const std::vector<IntVec>& rows);

bool in_span(const RatVec& v, const std::vector<IntVec>& rows);

// Exact solution of sum_i x_i * cols[i] = b, free variables set to zero.
std::optional<RatVec> solve_columns(const std::vector<IntVec>& cols, const RatVec& b);

// Basis of { x in Q^r : row . x = 0 for all rows }, scaled to primitive
// integer vectors.
std::vector<IntVec> rational_kernel(const std::vector<IntVec>& rows, int r);

// Z-basis of { x in Z^r : B x = 0 } by unimodular column reduction.
std::vector<IntVec> integer_kernel(const std::vector<IntVec>& rows, int r);

// Basis of span_Q(rows) intersected with Z^r (the saturated lattice).
std::vector<IntVec> saturation_basis(const std::vector<IntVec>& rows, int r);

// Membership x in cone(gens), exact (Caratheodory over independent subsets).
bool in_cone(const RatVec& x, const std::vector<IntVec>& gens);
bool in_cone(const IntVec& x, const std::vector<IntVec>& gens);

// No nonzero nonnegative combination of gens vanishes.
bool cone_pointed(const std::vector<IntVec>& gens);

// Indices of generators not expressible in the cone of the others.
std::vector<int> extreme_generators(const std::vector<IntVec>& gens);

// Generators of cone(us) intersected with cone(ws); the list contains every
// extreme ray of the intersection (and possibly redundant members).
std::vector<IntVec> cone_intersection(const std::vector<IntVec>& us,
                                      const std::vector<IntVec>& ws);

}  // namespace tropmod
