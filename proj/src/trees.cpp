#include "tropmod/trees.hpp"

#include <algorithm>
#include <map>

namespace tropmod {

NestedFamily NestedFamily::validate(std::vector<MarkSet> sets, int n) {
  if (n < 4) fail(Errc::InvalidFamily, "n must be at least 4");
  const MarkSet universe = MarkSet::range(2, n);
  for (MarkSet s : sets) {
    if (!s.subset_of(universe))
      fail(Errc::InvalidFamily, "member " + s.str() + " not within {2.." + std::to_string(n) + "}");
    if (s.size() < 2 || s.size() > n - 2)
      fail(Errc::InvalidFamily, "member " + s.str() + " has size outside [2, n-2]");
  }
  std::sort(sets.begin(), sets.end(), size_lex_less);
  for (size_t i = 0; i + 1 < sets.size(); ++i)
    if (sets[i] == sets[i + 1]) fail(Errc::InvalidFamily, "duplicate member " + sets[i].str());
  for (size_t i = 0; i < sets.size(); ++i)
    for (size_t j = i + 1; j < sets.size(); ++j)
      if (!sets[i].nested_or_disjoint(sets[j]))
        fail(Errc::InvalidFamily,
             "members " + sets[i].str() + " and " + sets[j].str() + " are not nested or disjoint");
  if ((int)sets.size() > n - 3)
    fail(Errc::InvalidFamily, "family exceeds maximal codimension n-3");
  NestedFamily f;
  f.n_ = n;
  f.sets_ = std::move(sets);
  return f;
}

NestedFamily NestedFamily::parse(std::string_view text, int n) {
  std::vector<MarkSet> sets;
  size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace((unsigned char)text[pos])) ++pos;
  };
  skip_ws();
  while (pos < text.size()) {
    if (text[pos] != '{') fail(Errc::ParseError, "expected '{' in family");
    ++pos;
    MarkSet s;
    while (true) {
      skip_ws();
      int v = 0;
      bool any = false;
      while (pos < text.size() && std::isdigit((unsigned char)text[pos])) {
        v = v * 10 + (text[pos] - '0');
        ++pos;
        any = true;
      }
      if (!any || v < 1 || v > 31) fail(Errc::ParseError, "expected marking label in family");
      s = s.with(v);
      skip_ws();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      break;
    }
    if (pos >= text.size() || text[pos] != '}') fail(Errc::ParseError, "expected '}' in family");
    ++pos;
    sets.push_back(s);
    skip_ws();
    if (pos < text.size()) {
      if (text[pos] != ';') fail(Errc::ParseError, "expected ';' between family members");
      ++pos;
      skip_ws();
    }
  }
  return validate(std::move(sets), n);
}

std::string NestedFamily::serialize() const {
  std::string out;
  for (size_t i = 0; i < sets_.size(); ++i) {
    if (i) out += ";";
    out += sets_[i].str();
  }
  return out;
}

bool NestedFamily::contains(MarkSet I) const {
  return std::find(sets_.begin(), sets_.end(), I) != sets_.end();
}

std::vector<MarkSet> NestedFamily::minimal_members() const {
  std::vector<MarkSet> out;
  for (MarkSet s : sets_) {
    bool minimal = true;
    for (MarkSet t : sets_)
      if (t != s && t.subset_of(s)) {
        minimal = false;
        break;
      }
    if (minimal) out.push_back(s);
  }
  return out;
}

bool NestedFamily::gamma_stable(const StabilityGraph& g) const {
  for (MarkSet s : minimal_members())
    if (!g.spans_edge(s)) return false;
  return true;
}

NestedFamily NestedFamily::with(MarkSet I) const {
  std::vector<MarkSet> sets = sets_;
  sets.push_back(I);
  return validate(std::move(sets), n_);
}

NestedFamily NestedFamily::intersect(const NestedFamily& o) const {
  std::vector<MarkSet> sets;
  for (MarkSet s : sets_)
    if (o.contains(s)) sets.push_back(s);
  return validate(std::move(sets), n_);
}

bool operator<(const NestedFamily& a, const NestedFamily& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (int i = 0; i < a.size(); ++i) {
    if (a.sets_[i] != b.sets_[i]) return size_lex_less(a.sets_[i], b.sets_[i]);
  }
  return false;
}

MarkSet MarkedTree::legs_at(int v) const {
  MarkSet s;
  for (int m = 1; m <= n; ++m)
    if (leg_vertex[m] == v) s = s.with(m);
  return s;
}

int MarkedTree::valence(int v) const {
  int d = legs_at(v).size();
  for (auto [a, b] : edges)
    if (a == v || b == v) ++d;
  return d;
}

bool MarkedTree::is_stable() const {
  if (n < 3 || num_vertices < 1) return false;
  if ((int)edges.size() != num_vertices - 1) return false;
  // connectivity
  std::vector<int> seen(num_vertices, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (auto [a, b] : edges) {
      int w = a == v ? b : (b == v ? a : -1);
      if (w >= 0 && !seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
    }
  }
  for (int v = 0; v < num_vertices; ++v)
    if (!seen[v]) return false;
  for (int m = 1; m <= n; ++m)
    if (leg_vertex[m] < 0 || leg_vertex[m] >= num_vertices) return false;
  for (int v = 0; v < num_vertices; ++v)
    if (valence(v) < 3) return false;
  return true;
}

MarkSet MarkedTree::cut(int edge_index) const {
  auto [a, b] = edges[edge_index];
  // collect vertices reachable from b without crossing the edge
  std::vector<int> side(num_vertices, 0);
  std::vector<int> stack{b};
  side[b] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (size_t k = 0; k < edges.size(); ++k) {
      if ((int)k == edge_index) continue;
      auto [x, y] = edges[k];
      int w = x == v ? y : (y == v ? x : -1);
      if (w >= 0 && !side[w]) {
        side[w] = 1;
        stack.push_back(w);
      }
    }
  }
  MarkSet marks;
  for (int m = 1; m <= n; ++m)
    if (side[leg_vertex[m]]) marks = marks.with(m);
  if (marks.contains(1)) {
    MarkSet all = MarkSet::range(1, n);
    marks = all.setminus(marks);
  }
  return marks;
}

bool operator==(const MarkedTree& a, const MarkedTree& b) {
  if (a.n != b.n) return false;
  return nested_family_from_tree(a) == nested_family_from_tree(b);
}

MarkedTree tree_from_nested_family(const NestedFamily& f, int n) {
  // One vertex per member plus the root block; the parent of a member is the
  // smallest member strictly containing it, or the root block.
  const auto& sets = f.members();
  MarkedTree t;
  t.n = n;
  t.num_vertices = (int)sets.size() + 1;
  t.leg_vertex.assign(n + 1, 0);
  const int root = 0;
  auto vertex_of = [&](int member_index) { return member_index + 1; };

  for (size_t i = 0; i < sets.size(); ++i) {
    int parent = root;
    int best_size = n + 1;
    for (size_t j = 0; j < sets.size(); ++j) {
      if (j == i) continue;
      if (sets[i].subset_of(sets[j]) && sets[i] != sets[j] && sets[j].size() < best_size) {
        best_size = sets[j].size();
        parent = vertex_of((int)j);
      }
    }
    t.edges.emplace_back(parent, vertex_of((int)i));
  }
  for (int m = 1; m <= n; ++m) {
    int host = root;
    int best_size = n + 1;
    for (size_t j = 0; j < sets.size(); ++j)
      if (sets[j].contains(m) && sets[j].size() < best_size) {
        best_size = sets[j].size();
        host = vertex_of((int)j);
      }
    t.leg_vertex[m] = host;
  }
  return t;
}

NestedFamily nested_family_from_tree(const MarkedTree& t) {
  std::vector<MarkSet> sets;
  for (size_t k = 0; k < t.edges.size(); ++k) sets.push_back(t.cut((int)k));
  return NestedFamily::validate(std::move(sets), t.n);
}

bool is_gamma_stable_tree(const MarkedTree& t, const StabilityGraph& g) {
  for (int v = 0; v < t.num_vertices; ++v) {
    if (v == t.root()) continue;
    int bounded = 0;
    for (auto [a, b] : t.edges) bounded += (a == v || b == v);
    if (bounded != 1) continue;
    if (!g.spans_edge(t.legs_at(v))) return false;
  }
  return true;
}

std::vector<MarkSet> extremal_assignment(const MarkedTree& t, const StabilityGraph& g) {
  std::vector<MarkSet> out;
  for (size_t k = 0; k < t.edges.size(); ++k) {
    MarkSet tail = t.cut((int)k);
    if (!g.spans_edge(tail)) out.push_back(tail);
  }
  std::sort(out.begin(), out.end(), size_lex_less);
  return out;
}

MarkedTree contract_tail(const MarkedTree& t, MarkSet tail) {
  // locate the edge whose cut is the tail
  int edge_index = -1;
  for (size_t k = 0; k < t.edges.size(); ++k)
    if (t.cut((int)k) == tail) {
      edge_index = (int)k;
      break;
    }
  if (edge_index < 0) fail(Errc::Internal, "tail " + tail.str() + " is not an edge cut");

  // vertices on the far side of that edge
  auto [a, b] = t.edges[edge_index];
  std::vector<int> far(t.num_vertices, 0);
  // the far endpoint is the one whose side does not hold leg 1
  for (int cand : {a, b}) {
    std::fill(far.begin(), far.end(), 0);
    std::vector<int> stack{cand};
    far[cand] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (size_t k = 0; k < t.edges.size(); ++k) {
        if ((int)k == edge_index) continue;
        auto [x, y] = t.edges[k];
        int w = x == v ? y : (y == v ? x : -1);
        if (w >= 0 && !far[w]) {
          far[w] = 1;
          stack.push_back(w);
        }
      }
    }
    if (!far[t.leg_vertex[1]]) break;
  }
  const int attach = far[a] ? b : a;

  std::vector<int> remap(t.num_vertices, -1);
  int next = 0;
  for (int v = 0; v < t.num_vertices; ++v)
    if (!far[v]) remap[v] = next++;

  MarkedTree out;
  out.n = t.n;
  out.num_vertices = next;
  out.leg_vertex.assign(t.n + 1, 0);
  for (size_t k = 0; k < t.edges.size(); ++k) {
    if ((int)k == edge_index) continue;
    auto [x, y] = t.edges[k];
    if (far[x] || far[y]) continue;
    out.edges.emplace_back(remap[x], remap[y]);
  }
  for (int m = 1; m <= t.n; ++m) {
    int v = t.leg_vertex[m];
    out.leg_vertex[m] = far[v] ? remap[attach] : remap[v];
  }
  return out;
}

MarkedTree stabilize(const MarkedTree& t, const StabilityGraph& g) {
  MarkedTree cur = t;
  while (true) {
    std::vector<MarkSet> assigned = extremal_assignment(cur, g);
    if (assigned.empty()) return cur;
    // the size-lex largest assigned tail is maximal among them
    cur = contract_tail(cur, assigned.back());
  }
}

MetricTree MetricTree::make(MarkedTree t, std::vector<Rat> lengths) {
  if (lengths.size() != t.edges.size())
    fail(Errc::Internal, "length count does not match edge count");
  for (const Rat& l : lengths)
    if (!(l > Rat(0))) fail(Errc::Internal, "edge lengths must be positive");
  return MetricTree{std::move(t), std::move(lengths)};
}

int DistanceVector::pair_index(int i, int j, int n) {
  // lexicographic over 1 <= i < j <= n
  int idx = 0;
  for (int a = 1; a < i; ++a) idx += n - a;
  return idx + (j - i - 1);
}

Rat DistanceVector::at(int i, int j) const {
  if (i > j) std::swap(i, j);
  return entries[pair_index(i, j, n)];
}

DistanceVector distance_vector(const MetricTree& m) {
  const MarkedTree& t = m.tree;
  // vertex-to-vertex distances by BFS over the tree
  std::vector<std::vector<Rat>> d(t.num_vertices, std::vector<Rat>(t.num_vertices, Rat(0)));
  for (int s = 0; s < t.num_vertices; ++s) {
    std::vector<int> seen(t.num_vertices, 0);
    std::vector<int> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (size_t k = 0; k < t.edges.size(); ++k) {
        auto [x, y] = t.edges[k];
        int w = x == v ? y : (y == v ? x : -1);
        if (w >= 0 && !seen[w]) {
          seen[w] = 1;
          d[s][w] = d[s][v] + m.lengths[k];
          stack.push_back(w);
        }
      }
    }
  }
  DistanceVector out;
  out.n = t.n;
  out.entries.assign(t.n * (t.n - 1) / 2, Rat(0));
  for (int i = 1; i <= t.n; ++i)
    for (int j = i + 1; j <= t.n; ++j)
      out.entries[DistanceVector::pair_index(i, j, t.n)] = d[t.leg_vertex[i]][t.leg_vertex[j]];
  return out;
}

bool quotient_equal(const DistanceVector& a, const DistanceVector& b) {
  if (a.n != b.n) return false;
  const int n = a.n;
  // Solve x_i + x_j = delta_ij. With n >= 3 the candidate is forced:
  // x_1 = (d12 + d13 - d23)/2, then x_j = d_1j - x_1.
  auto delta = [&](int i, int j) { return a.at(i, j) - b.at(i, j); };
  std::vector<Rat> x(n + 1, Rat(0));
  x[1] = (delta(1, 2) + delta(1, 3) - delta(2, 3)) / Rat(2);
  for (int j = 2; j <= n; ++j) x[j] = delta(1, j) - x[1];
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (x[i] + x[j] != delta(i, j)) return false;
  return true;
}

}  // namespace tropmod
