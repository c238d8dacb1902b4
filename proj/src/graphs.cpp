#include "tropmod/graphs.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace tropmod {

StabilityGraph StabilityGraph::validate(int n, std::vector<std::pair<int, int>> edges) {
  if (n < 4 || n > 31)
    fail(Errc::BadLabelRange, "marking count n must be in [4,31], got " + std::to_string(n));
  for (auto& [i, j] : edges) {
    if (i > j) std::swap(i, j);
    if (i < 2 || j > n)
      fail(Errc::BadLabelRange,
           "edge " + std::to_string(i) + "-" + std::to_string(j) + " outside {2.." +
               std::to_string(n) + "}");
    if (i == j) fail(Errc::NotSimple, "loop at vertex " + std::to_string(i));
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    fail(Errc::NotSimple, "repeated edge");

  StabilityGraph g;
  g.n_ = n;
  g.edges_ = std::move(edges);
  for (auto [i, j] : g.edges_) {
    g.adj_[i] = g.adj_[i].with(j);
    g.adj_[j] = g.adj_[j].with(i);
  }

  if (!g.has_edge(2, 3)) fail(Errc::MissingEdge23, "graph must contain the edge 2-3");

  // connectivity on {2..n}
  MarkSet seen = MarkSet{}.with(2);
  MarkSet frontier = seen;
  while (!frontier.empty()) {
    MarkSet next;
    for (int v : frontier.elements()) next = next.unite(g.adj_[v]);
    frontier = next.setminus(seen);
    seen = seen.unite(next);
  }
  if (seen != g.vertex_set()) fail(Errc::NotConnected, "graph is not connected on {2..n}");
  return g;
}

StabilityGraph StabilityGraph::complete(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 2; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) edges.emplace_back(i, j);
  return validate(n, std::move(edges));
}

int StabilityGraph::removed_edge_count() const {
  int m = n_ - 1;
  return m * (m - 1) / 2 - (int)edges_.size();
}

bool StabilityGraph::spans_edge(MarkSet I) const {
  for (int v : I.elements())
    if (!adj_[v].intersect(I).empty()) return true;
  return false;
}

namespace {

void skip_ws(std::string_view& s) {
  while (!s.empty() && std::isspace((unsigned char)s.front())) s.remove_prefix(1);
}

bool eat(std::string_view& s, std::string_view tok) {
  skip_ws(s);
  if (s.substr(0, tok.size()) != tok) return false;
  s.remove_prefix(tok.size());
  return true;
}

int parse_int(std::string_view& s) {
  skip_ws(s);
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{}) fail(Errc::ParseError, "expected integer in graph spec");
  s.remove_prefix(ptr - s.data());
  return value;
}

}  // namespace

StabilityGraph StabilityGraph::parse(std::string_view text) {
  std::string_view s = text;
  if (!eat(s, "n")) fail(Errc::ParseError, "graph spec must start with n=<int>");
  if (!eat(s, "=")) fail(Errc::ParseError, "expected '=' after n");
  int n = parse_int(s);
  if (!eat(s, ";")) fail(Errc::ParseError, "expected ';' after marking count");
  if (!eat(s, "edges")) fail(Errc::ParseError, "expected edges=...");
  if (!eat(s, "=")) fail(Errc::ParseError, "expected '=' after edges");
  std::vector<std::pair<int, int>> edges;
  skip_ws(s);
  while (!s.empty()) {
    int i = parse_int(s);
    if (!eat(s, "-")) fail(Errc::ParseError, "expected '-' inside edge");
    int j = parse_int(s);
    edges.emplace_back(i, j);
    skip_ws(s);
    if (s.empty()) break;
    if (!eat(s, ",")) fail(Errc::ParseError, "expected ',' between edges");
  }
  return validate(n, std::move(edges));
}

std::string StabilityGraph::serialize() const {
  std::string out = "n=" + std::to_string(n_) + ";edges=";
  bool first = true;
  for (auto [i, j] : edges_) {
    if (!first) out += ",";
    out += std::to_string(i) + "-" + std::to_string(j);
    first = false;
  }
  return out;
}

std::optional<MultipartitePartition> is_complete_multipartite(const StabilityGraph& g) {
  const MarkSet all = g.vertex_set();
  // components of the complement graph
  std::vector<MarkSet> parts;
  MarkSet left = all;
  while (!left.empty()) {
    int start = left.min();
    MarkSet comp = MarkSet{}.with(start);
    MarkSet frontier = comp;
    while (!frontier.empty()) {
      MarkSet next;
      for (int v : frontier.elements())
        next = next.unite(all.setminus(g.neighbors(v)).without(v));
      frontier = next.setminus(comp);
      comp = comp.unite(next);
    }
    parts.push_back(comp);
    left = left.setminus(comp);
  }
  // each component must be a clique of the complement, i.e. an independent set of g
  for (MarkSet p : parts)
    if (g.spans_edge(p)) return std::nullopt;
  std::sort(parts.begin(), parts.end(), [](MarkSet a, MarkSet b) { return a.min() < b.min(); });
  return MultipartitePartition{std::move(parts)};
}

std::optional<std::array<int, 3>> multipartite_witness(const StabilityGraph& g) {
  for (int i = 2; i <= g.n(); ++i)
    for (int j = i + 1; j <= g.n(); ++j)
      for (int k = j + 1; k <= g.n(); ++k) {
        int count = (int)g.has_edge(i, j) + (int)g.has_edge(i, k) + (int)g.has_edge(j, k);
        if (count == 1) return std::array<int, 3>{i, j, k};
      }
  return std::nullopt;
}

bool neighbor_cover_check(const StabilityGraph& g) {
  for (auto [i, j] : g.edges())
    for (int k = 2; k <= g.n(); ++k) {
      if (k == i || k == j) continue;
      if (!g.has_edge(i, k) && !g.has_edge(j, k)) return false;
    }
  return true;
}

std::vector<StabilityGraph> enumerate_stability_graphs(int n) {
  if (n < 4 || n > 7)
    fail(Errc::BoundExceeded, "graph enumeration supported for 4 <= n <= 7, got " +
                                  std::to_string(n));
  std::vector<std::pair<int, int>> slots;  // free edge slots, excludes {2,3}
  for (int i = 2; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (!(i == 2 && j == 3)) slots.emplace_back(i, j);

  std::vector<StabilityGraph> out;
  for (uint32_t mask = 0; mask < (1u << slots.size()); ++mask) {
    std::vector<std::pair<int, int>> edges{{2, 3}};
    for (size_t b = 0; b < slots.size(); ++b)
      if (mask & (1u << b)) edges.push_back(slots[b]);
    try {
      out.push_back(StabilityGraph::validate(n, std::move(edges)));
    } catch (const Error& e) {
      if (e.code() != Errc::NotConnected) throw;
    }
  }
  return out;
}

}  // namespace tropmod
