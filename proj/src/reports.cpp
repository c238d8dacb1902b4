#include "tropmod/reports.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>

#include "tropmod/pluecker.hpp"

namespace tropmod::cli {

namespace {

Json set_json(MarkSet s) {
  Json a = Json::array();
  for (int v : s.elements()) a.push_back(v);
  return a;
}

Json vec_json(const IntVec& v) {
  Json a = Json::array();
  for (long long x : v) a.push_back(x);
  return a;
}


Json header(const char* command, const StabilityGraph& g) {
  Json j;
  j["schema"] = kSchema;
  j["version"] = kVersion;
  j["command"] = command;
  j["graph"] = g.serialize();
  j["graph_hash"] = graph_hash(g);
  j["n"] = g.n();
  j["removed_edges"] = g.removed_edge_count();
  return j;
}

const char* level_name(VerifyLevel level) {
  return level == VerifyLevel::Full ? "full" : "quick";
}

Json embedding_json(const EmbeddingReport& rep, VerifyLevel level) {
  Json e;
  e["level"] = level_name(level);
  e["vertex_injective"] = rep.vertex_injective;
  e["dim_preserving"] = rep.dim_preserving;
  if (rep.face_compatible.has_value()) e["face_compatible"] = *rep.face_compatible;
  else e["face_compatible"] = nullptr;
  e["is_embedding"] = rep.is_embedding;
  return e;
}

Json injectivity_json(const InjectivityReport& rep) {
  Json i;
  i["injective"] = rep.injective;
  Json coll = Json::array();
  for (const auto& [vec, divs] : rep.collisions) {
    Json c;
    c["vector"] = vec_json(vec);
    Json ds = Json::array();
    for (MarkSet d : divs) ds.push_back(set_json(d));
    c["divisors"] = ds;
    coll.push_back(c);
  }
  i["collisions"] = coll;
  return i;
}

Json fan_json(const WeightedFan& fan) {
  Json f;
  f["ambient_dim"] = fan.ambient_dim;
  Json rays = Json::array();
  for (const IntVec& r : fan.rays) rays.push_back(vec_json(r));
  f["rays"] = rays;
  Json cones = Json::array();
  for (const FanCone& c : fan.cones) {
    Json cj;
    cj["rays"] = c.ray_ids;
    cj["dim"] = c.dim;
    cj["maximal"] = c.maximal;
    if (c.maximal) cj["weight"] = c.weight;
    Json prov = Json::array();
    for (int cell : c.provenance) prov.push_back(fan.complex.cells[cell].serialize());
    cj["provenance"] = prov;
    cones.push_back(cj);
  }
  f["cones"] = cones;
  f["merged"] = fan.merged;
  return f;
}

}  // namespace

std::string graph_hash(const StabilityGraph& g) {
  // FNV-1a over the canonical serialization
  uint64_t h = 1469598103934665603ull;
  for (char c : g.serialize()) {
    h ^= (unsigned char)c;
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

Json classify_report(const StabilityGraph& g, VerifyLevel level) {
  Json j = header("classify", g);

  auto partition = is_complete_multipartite(g);
  auto witness = multipartite_witness(g);
  bool cover = neighbor_cover_check(g);
  Json mp;
  mp["verdict"] = partition.has_value();
  if (partition) {
    Json parts = Json::array();
    for (MarkSet p : partition->parts) parts.push_back(set_json(p));
    mp["partition"] = parts;
  } else {
    mp["partition"] = nullptr;
  }
  if (witness) mp["witness"] = Json::array({(*witness)[0], (*witness)[1], (*witness)[2]});
  else mp["witness"] = nullptr;
  mp["neighbor_cover"] = cover;
  j["multipartite"] = mp;

  InjectivityReport inj = injectivity_report(g);
  j["injectivity"] = injectivity_json(inj);

  EmbeddingReport emb = embedding_report(g, level);
  j["embedding"] = embedding_json(emb, level);

  bool agree = (partition.has_value() == inj.injective) &&
               (partition.has_value() == emb.is_embedding) &&
               (partition.has_value() == cover) && (partition.has_value() == !witness.has_value());
  j["agreement"] = agree;
  if (!agree)
    fail(Errc::Internal, "classification verdicts disagree on " + g.serialize());
  return j;
}

Json fan_report(const StabilityGraph& g) {
  Json j = header("fan", g);
  WeightedFan fan = build_trop_fan(g);

  Json divisors = Json::array();
  for (MarkSet d : fan.complex.divisors) divisors.push_back(set_json(d));
  j["divisors"] = divisors;
  Json cells;
  for (const NestedFamily& cell : fan.complex.cells) {
    if (cell.empty()) continue;
    Json cj = Json::array();
    for (MarkSet s : cell.members()) cj.push_back(set_json(s));
    cells[std::to_string(cell.size())].push_back(cj);
  }
  j["cells"] = cells;
  j["f_vector"] = fan.complex.f_vector;
  j["dimension"] = fan.complex.dimension;

  CoordinateFrame frame = CoordinateFrame::for_graph(g);
  Json fr = Json::array();
  for (auto [a, b] : frame.pairs()) fr.push_back(Json::array({a, b}));
  j["frame"] = fr;
  Json matrix = Json::array();
  for (MarkSet d : fan.complex.divisors) matrix.push_back(vec_json(pi_gamma(d, g)));
  j["valuation_matrix"] = matrix;

  j["fan"] = fan_json(fan);

  BalancingCertificate cert = check_balanced(fan);
  Json bal;
  bal["balanced"] = cert.pass;
  Json entries = Json::array();
  for (const BalancingEntry& e : cert.entries) {
    Json ej;
    ej["tau"] = fan.cones[e.tau_index].ray_ids;
    Json contribs = Json::array();
    for (const auto& [cone, weight, normal] : e.contributions) {
      Json cj;
      cj["cone"] = fan.cones[cone].ray_ids;
      cj["weight"] = weight;
      cj["normal"] = vec_json(normal);
      contribs.push_back(cj);
    }
    ej["contributions"] = contribs;
    ej["residual"] = vec_json(e.residual);
    ej["pass"] = e.pass;
    entries.push_back(ej);
  }
  bal["entries"] = entries;
  j["balancing"] = bal;
  if (!cert.pass) fail(Errc::Internal, "fan is not balanced on " + g.serialize());
  return j;
}

Json tropicalize_report(const StabilityGraph& g, const std::string& family_text) {
  Json j = header("tropicalize", g);
  PointFamily family = PointFamily::parse(family_text);
  if (family.n != g.n())
    fail(Errc::ParseError, "family has " + std::to_string(family.n) + " points but graph has n=" +
                               std::to_string(g.n()));
  PlueckerVector pv = pluecker(family);
  if (!gamma_open_check(pv, g, Fiber::Generic))
    fail(Errc::NotGammaOpen, "generic fiber leaves the graph-open locus");
  j["gamma_open_generic"] = true;
  j["gamma_open_special"] = gamma_open_check(pv, g, Fiber::Special);

  IntVec valuation = trop_family(pv, g);
  j["valuation"] = vec_json(valuation);

  WeightedFan fan = build_trop_fan(g);
  int cone_idx = fan.find_containing_cone(to_rat(valuation));
  if (cone_idx < 0) fail(Errc::Internal, "valuation vector escapes the fan support");
  Json cj;
  cj["index"] = cone_idx;
  cj["rays"] = fan.cones[cone_idx].ray_ids;
  cj["dim"] = fan.cones[cone_idx].dim;
  Json prov = Json::array();
  for (int cell : fan.cones[cone_idx].provenance)
    prov.push_back(fan.complex.cells[cell].serialize());
  cj["provenance"] = prov;
  cj["merged_provenance"] = fan.cones[cone_idx].provenance.size() > 1;
  j["containing_cone"] = cj;

  MetricTree limit = limit_dual_tree(pv);
  NestedFamily limit_family = nested_family_from_tree(limit.tree);
  Json lt;
  lt["family"] = limit_family.serialize();
  lt["vertices"] = limit.tree.num_vertices;
  Json edges = Json::array();
  for (auto [a, b] : limit.tree.edges) edges.push_back(Json::array({a, b}));
  lt["edges"] = edges;
  Json legs;
  for (int m = 1; m <= limit.tree.n; ++m) legs[std::to_string(m)] = limit.tree.leg_vertex[m];
  lt["legs"] = legs;
  Json lengths;
  for (size_t e = 0; e < limit.tree.edges.size(); ++e)
    lengths[limit.tree.cut((int)e).str()] = limit.lengths[e].str();
  lt["lengths"] = lengths;
  j["limit_tree"] = lt;

  MarkedTree stab = stabilize(limit.tree, g);
  NestedFamily stab_family = nested_family_from_tree(stab);
  j["stabilized_tree"] = stab_family.serialize();

  // the stabilized metric tree must reproduce the valuation vector
  std::vector<Rat> stab_lengths;
  for (size_t e = 0; e < stab.edges.size(); ++e) {
    MarkSet cut = stab.cut((int)e);
    for (size_t k = 0; k < limit.tree.edges.size(); ++k)
      if (limit.tree.cut((int)k) == cut) stab_lengths.push_back(limit.lengths[k]);
  }
  RatVec embedded = trop_embed(MetricTree::make(stab, stab_lengths), g);
  bool consistent = true;
  for (size_t k = 0; k < embedded.size(); ++k)
    if (embedded[k] != Rat(valuation[k])) consistent = false;
  j["consistent"] = consistent;
  if (!consistent)
    fail(Errc::Internal, "stabilized limit tree does not reproduce the valuation vector");
  return j;
}

Json survey_report(int n, long long limit, VerifyLevel level, uint64_t seed) {
  if (n < 4 || n > 6) fail(Errc::BoundExceeded, "survey supported for 4 <= n <= 6");
  std::vector<StabilityGraph> graphs = enumerate_stability_graphs(n);
  if (limit > 0 && limit < (long long)graphs.size()) {
    std::mt19937_64 rng(seed);
    std::shuffle(graphs.begin(), graphs.end(), rng);
    graphs.resize(limit);
    std::sort(graphs.begin(), graphs.end(),
              [](const StabilityGraph& a, const StabilityGraph& b) {
                return a.serialize() < b.serialize();
              });
  }

  long long counts[2][2][2] = {};
  long long disagreements = 0;
  Json bad = Json::array();
  for (const StabilityGraph& g : graphs) {
    bool mp = is_complete_multipartite(g).has_value();
    bool inj = injectivity_report(g).injective;
    EmbeddingReport emb = embedding_report(g, level);
    counts[mp][inj][emb.is_embedding]++;
    if (mp != inj || mp != emb.is_embedding) {
      ++disagreements;
      bad.push_back(g.serialize());
    }
  }

  Json j;
  j["schema"] = kSchema;
  j["version"] = kVersion;
  j["command"] = "survey";
  j["n"] = n;
  j["level"] = level_name(level);
  j["graph_count"] = graphs.size();
  j["limit"] = limit;
  j["seed"] = seed;
  Json table = Json::array();
  for (int a = 0; a <= 1; ++a)
    for (int b = 0; b <= 1; ++b)
      for (int c = 0; c <= 1; ++c) {
        if (counts[a][b][c] == 0) continue;
        Json row;
        row["multipartite"] = (bool)a;
        row["injective"] = (bool)b;
        row["embedding"] = (bool)c;
        row["count"] = counts[a][b][c];
        table.push_back(row);
      }
  j["table"] = table;
  j["disagreements"] = disagreements;
  j["disagreeing_graphs"] = bad;
  if (disagreements > 0)
    fail(Errc::Internal, "classification disagreement found in survey at n=" + std::to_string(n));
  return j;
}

std::string render_text(const Json& j) {
  std::ostringstream os;
  const std::string cmd = j.at("command");
  if (cmd == "survey") {
    os << "survey n=" << j.at("n").get<int>() << " graphs=" << j.at("graph_count").get<long long>()
       << " level=" << j.at("level").get<std::string>() << "\n";
    for (const auto& row : j.at("table"))
      os << "  multipartite=" << (row.at("multipartite").get<bool>() ? "yes" : "no ")
         << " injective=" << (row.at("injective").get<bool>() ? "yes" : "no ")
         << " embedding=" << (row.at("embedding").get<bool>() ? "yes" : "no ")
         << " count=" << row.at("count").get<long long>() << "\n";
    os << "disagreements: " << j.at("disagreements").get<long long>() << "\n";
    return os.str();
  }
  os << cmd << " " << j.at("graph").get<std::string>() << "\n";
  if (cmd == "classify") {
    const auto& mp = j.at("multipartite");
    os << "complete multipartite: " << (mp.at("verdict").get<bool>() ? "yes" : "no") << "\n";
    if (!mp.at("partition").is_null()) os << "  partition: " << mp.at("partition").dump() << "\n";
    if (!mp.at("witness").is_null())
      os << "  one-edge triple: " << mp.at("witness").dump() << "\n";
    os << "valuation map injective: "
       << (j.at("injectivity").at("injective").get<bool>() ? "yes" : "no") << "\n";
    for (const auto& c : j.at("injectivity").at("collisions"))
      os << "  collision " << c.at("divisors").dump() << " -> " << c.at("vector").dump() << "\n";
    os << "embedded as a fan: " << (j.at("embedding").at("is_embedding").get<bool>() ? "yes" : "no")
       << "\n";
  } else if (cmd == "fan") {
    os << "divisors: " << j.at("divisors").size() << "\n";
    os << "f_vector: " << j.at("f_vector").dump() << "\n";
    os << "rays: " << j.at("fan").at("rays").size() << "\n";
    long long maximal = 0;
    for (const auto& c : j.at("fan").at("cones"))
      if (c.at("maximal").get<bool>()) ++maximal;
    os << "maximal cones: " << maximal << "\n";
    os << "merged cones: " << (j.at("fan").at("merged").get<bool>() ? "yes" : "no") << "\n";
    os << "balanced: " << (j.at("balancing").at("balanced").get<bool>() ? "yes" : "no") << "\n";
    // golden-file block: one ray per line, then one cone per line
    for (const auto& ray : j.at("fan").at("rays")) {
      os << "ray";
      for (const auto& x : ray) os << " " << x.get<long long>();
      os << "\n";
    }
    for (const auto& c : j.at("fan").at("cones")) {
      os << "cone";
      for (const auto& r : c.at("rays")) os << " " << r.get<int>();
      if (c.at("maximal").get<bool>()) os << " weight " << c.at("weight").get<int>();
      os << "\n";
    }
  } else if (cmd == "tropicalize") {
    os << "valuation: " << j.at("valuation").dump() << "\n";
    os << "containing cone rays: " << j.at("containing_cone").at("rays").dump() << "\n";
    os << "provenance: " << j.at("containing_cone").at("provenance").dump() << "\n";
    os << "merged provenance: "
       << (j.at("containing_cone").at("merged_provenance").get<bool>() ? "yes" : "no") << "\n";
    os << "limit tree: " << j.at("limit_tree").at("family").get<std::string>() << "\n";
    os << "stabilized: " << j.at("stabilized_tree").get<std::string>() << "\n";
  }
  return os.str();
}

std::string render_tsv(const Json& j) {
  std::ostringstream os;
  const std::string cmd = j.at("command");
  if (cmd == "fan" || cmd == "classify") {
    // valuation matrix rows when present; classify falls back to verdict row
    if (j.contains("valuation_matrix")) {
      os << "divisor";
      for (const auto& p : j.at("frame"))
        os << "\tx" << p[0].get<int>() << p[1].get<int>();
      os << "\n";
      const auto& divisors = j.at("divisors");
      const auto& matrix = j.at("valuation_matrix");
      for (size_t i = 0; i < divisors.size(); ++i) {
        std::string name;
        for (const auto& v : divisors[i]) name += (name.empty() ? "" : ",") + v.dump();
        os << "{" << name << "}";
        for (const auto& x : matrix[i]) os << "\t" << x.get<long long>();
        os << "\n";
      }
      return os.str();
    }
    os << "multipartite\tinjective\tembedding\n"
       << (j.at("multipartite").at("verdict").get<bool>() ? 1 : 0) << "\t"
       << (j.at("injectivity").at("injective").get<bool>() ? 1 : 0) << "\t"
       << (j.at("embedding").at("is_embedding").get<bool>() ? 1 : 0) << "\n";
    return os.str();
  }
  if (cmd == "survey") {
    os << "multipartite\tinjective\tembedding\tcount\n";
    for (const auto& row : j.at("table"))
      os << row.at("multipartite").get<bool>() << "\t" << row.at("injective").get<bool>() << "\t"
         << row.at("embedding").get<bool>() << "\t" << row.at("count").get<long long>() << "\n";
    return os.str();
  }
  if (cmd == "tropicalize") {
    os << "coordinate\tvaluation\n";
    const auto& v = j.at("valuation");
    for (size_t i = 0; i < v.size(); ++i) os << i << "\t" << v[i].get<long long>() << "\n";
    return os.str();
  }
  return j.dump(2) + "\n";
}

std::string render_dot(const StabilityGraph& g) { return skeleton_dot(enumerate_complex(g)); }

std::string render_fan_plain(const WeightedFan& f) {
  std::ostringstream os;
  for (const IntVec& r : f.rays) {
    os << "ray";
    for (long long x : r) os << " " << x;
    os << "\n";
  }
  for (const FanCone& c : f.cones) {
    os << "cone";
    for (int r : c.ray_ids) os << " " << r;
    if (c.maximal) os << " weight " << c.weight;
    os << "\n";
  }
  return os.str();
}

}  // namespace tropmod::cli
