#include "tropmod/complexes.hpp"

#include <algorithm>

namespace tropmod {

std::vector<int> BoundaryComplex::maximal_cells() const {
  std::vector<int> out;
  for (size_t i = 0; i < cells.size(); ++i) {
    bool maximal = true;
    for (size_t j = 0; j < cells.size() && maximal; ++j) {
      if (i == j || cells[j].size() <= cells[i].size()) continue;
      bool contained = true;
      for (MarkSet s : cells[i].members())
        if (!cells[j].contains(s)) {
          contained = false;
          break;
        }
      if (contained) maximal = false;
    }
    if (maximal) out.push_back((int)i);
  }
  return out;
}

long long BoundaryComplex::cell_count(int cardinality) const {
  if (cardinality < 0 || cardinality >= (int)f_vector.size()) return 0;
  return f_vector[cardinality];
}

int BoundaryComplex::divisor_index(MarkSet I) const {
  for (size_t i = 0; i < divisors.size(); ++i)
    if (divisors[i] == I) return (int)i;
  return -1;
}

std::vector<MarkSet> enumerate_divisors(const StabilityGraph& g) {
  const int n = g.n();
  std::vector<MarkSet> out;
  const uint32_t verts = g.vertex_set().bits();
  // iterate subsets of {2..n} via bit tricks over the vertex mask
  for (uint32_t sub = verts; sub; sub = (sub - 1) & verts) {
    MarkSet I(sub);
    if (I.size() < 2 || I.size() > n - 2) continue;
    if (g.spans_edge(I)) out.push_back(I);
  }
  std::sort(out.begin(), out.end(), size_lex_less);
  return out;
}

BoundaryComplex enumerate_complex(const StabilityGraph& g) {
  BoundaryComplex c;
  c.n = g.n();
  c.dimension = g.n() - 3;
  c.divisors = enumerate_divisors(g);

  const int m = (int)c.divisors.size();
  std::vector<std::vector<char>> compatible(m, std::vector<char>(m, 0));
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      compatible[i][j] = compatible[j][i] = c.divisors[i].nested_or_disjoint(c.divisors[j]);

  // Depth-first generation of compatible divisor subsets; these are exactly
  // the stable nested families, so no post-filtering is needed.
  std::vector<int> picked;
  std::vector<MarkSet> sets;
  auto emit = [&] {
    c.cells.push_back(NestedFamily::validate(sets, c.n));
  };
  auto rec = [&](auto&& self, int start) -> void {
    emit();
    if ((int)picked.size() == c.dimension) return;
    for (int k = start; k < m; ++k) {
      bool ok = true;
      for (int p : picked)
        if (!compatible[p][k]) {
          ok = false;
          break;
        }
      if (!ok) continue;
      picked.push_back(k);
      sets.push_back(c.divisors[k]);
      self(self, k + 1);
      picked.pop_back();
      sets.pop_back();
    }
  };
  rec(rec, 0);

  std::sort(c.cells.begin(), c.cells.end());
  c.f_vector.assign(c.dimension + 1, 0);
  for (const NestedFamily& f : c.cells) c.f_vector[f.size()] += 1;
  return c;
}

std::vector<MarkSet> stratum_divisors(const NestedFamily& f) { return f.members(); }

std::string skeleton_dot(const BoundaryComplex& c) {
  std::string out = "graph skeleton {\n";
  for (MarkSet d : c.divisors) out += "  \"" + d.str() + "\";\n";
  for (const NestedFamily& f : c.cells) {
    if (f.size() != 2) continue;
    out += "  \"" + f.members()[0].str() + "\" -- \"" + f.members()[1].str() + "\";\n";
  }
  out += "}\n";
  return out;
}

}  // namespace tropmod
