#include "cc/io.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace cc {

namespace {

using nlohmann::json;

std::size_t ux(int i) { return static_cast<std::size_t>(i); }

std::string vertex_name(const std::vector<std::string>& names, int v) {
  return ux(v) < names.size() ? names[ux(v)] : "x" + std::to_string(v);
}

json parse_or_throw(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw Error(Errc::Parse, std::string("seed JSON: ") + e.what());
  }
}

std::string pcluster_text(const PSeed& p, std::size_t puncture) {
  auto c = pcluster_at(p, puncture);
  std::sort(c.begin(), c.end());
  return PClusterRow{c, {}}.multiplicative();
}

}  // namespace

std::string pseed_to_json(const PSeed& p, const std::vector<std::string>& names, int indent) {
  json j;
  j["k"] = p.k;
  j["punctures"] = p.punctures;
  json vs = json::array();
  for (int v = 0; v < p.q.n; ++v) {
    json w = json::array();
    for (const auto& x : p.wt[ux(v)]) w.push_back(x.coords());
    vs.push_back({{"name", vertex_name(names, v)}, {"frozen", p.q.is_frozen(v)}, {"weights", w}});
  }
  j["vertices"] = vs;
  json arrows = json::array();
  for (int a = 0; a < p.q.n; ++a)
    for (int b = 0; b < p.q.n; ++b)
      if (p.q.at(a, b) > 0) arrows.push_back({a, b, p.q.at(a, b)});
  j["arrows"] = arrows;
  return j.dump(indent);
}

PSeed pseed_from_json(const std::string& text) {
  const json j = parse_or_throw(text);
  PSeed p;
  try {
    p.k = j.at("k").get<int>();
    p.punctures = j.at("punctures").get<std::vector<std::string>>();
    const auto& vs = j.at("vertices");
    p.q = Quiver(static_cast<int>(vs.size()));
    for (std::size_t v = 0; v < vs.size(); ++v) {
      p.q.frozen[v] = vs[v].value("frozen", false);
      std::vector<WeightVector> w;
      for (const auto& c : vs[v].at("weights")) w.push_back(WeightVector::normalize(c.get<std::vector<int>>(), p.k));
      if (w.size() != p.punctures.size()) throw Error(Errc::Parse, "vertex " + std::to_string(v) + ": one weight per puncture");
      p.wt.push_back(std::move(w));
    }
    for (const auto& a : j.at("arrows")) {
      const int from = a.at(0).get<int>(), to = a.at(1).get<int>();
      const int mult = a.size() > 2 ? a.at(2).get<int>() : 1;
      if (from < 0 || to < 0 || from >= p.q.n || to >= p.q.n || from == to)
        throw Error(Errc::Parse, "arrow endpoints out of range");
      p.q.add_arrows(from, to, mult);
    }
  } catch (const json::exception& e) {
    throw Error(Errc::Parse, std::string("seed JSON: ") + e.what());
  }
  if (!is_balanced(p)) throw Error(Errc::BalancingViolated, "seed JSON is not balanced at every mutable vertex");
  return p;
}

std::vector<std::string> names_from_json(const std::string& text) {
  const json j = parse_or_throw(text);
  std::vector<std::string> names;
  const auto& vs = j.at("vertices");
  for (std::size_t v = 0; v < vs.size(); ++v) names.push_back(vs[v].value("name", "x" + std::to_string(v)));
  return names;
}

std::string quiver_to_dot(const Quiver& q, const std::vector<std::string>& names) {
  std::ostringstream os;
  os << "digraph Q {\n";
  for (int v = 0; v < q.n; ++v)
    os << "  v" << v << " [label=\"" << vertex_name(names, v) << "\"" << (q.is_frozen(v) ? ", shape=box" : "") << "];\n";
  for (int a = 0; a < q.n; ++a)
    for (int b = 0; b < q.n; ++b)
      if (q.at(a, b) > 0)
        os << "  v" << a << " -> v" << b << (q.at(a, b) > 1 ? " [label=\"" + std::to_string(q.at(a, b)) + "\"]" : "") << ";\n";
  os << "}\n";
  return os.str();
}

std::string graph_to_json(const ExchangeGraph& g, int indent) {
  json j;
  j["mode"] = g.mode == ExploreMode::Cluster ? "cluster" : "pseed";
  j["partial"] = g.partial;
  json nodes = json::array();
  for (std::size_t i = 0; i < g.size(); ++i) {
    json n{{"id", i}, {"depth", g.depth[i]}};
    const PSeed& p = g.pseeds[i];
    json pc = json::array();
    for (std::size_t c = 0; c < p.punctures.size(); ++c) pc.push_back(pcluster_text(p, c));
    n["pcluster"] = pc;
    if (g.dosps[i]) {
      json d = json::array();
      for (const auto& x : *g.dosps[i]) d.push_back(x.to_string());
      n["dosps"] = d;
    } else {
      n["dosps"] = nullptr;
    }
    nodes.push_back(n);
  }
  j["nodes"] = nodes;
  json edges = json::array();
  for (const auto& e : g.edges) edges.push_back({e.a, e.b, e.vertex});
  j["edges"] = edges;
  if (g.mode == ExploreMode::Cluster) j["cluster_variables"] = g.cluster_variables();
  json viol = json::array();
  for (const auto& v : g.violations)
    viol.push_back({{"node", v.node}, {"vertex", v.vertex}, {"puncture", v.puncture}, {"what", v.what}});
  j["violations"] = viol;
  return j.dump(indent);
}

std::string graph_to_dot(const ExchangeGraph& g) {
  std::ostringstream os;
  os << "graph E {\n";
  for (std::size_t i = 0; i < g.size(); ++i) {
    std::string label = std::to_string(i);
    if (g.dosps[i]) label += "\\n" + dosp_tuple_text(*g.dosps[i]);
    os << "  n" << i << " [label=\"" << label << "\"];\n";
  }
  for (const auto& e : g.edges) os << "  n" << e.a << " -- n" << e.b << " [label=\"" << e.vertex << "\"];\n";
  os << "}\n";
  return os.str();
}

std::string table_to_csv(const std::vector<PClusterRow>& rows) {
  std::ostringstream os;
  os << "pcluster,dosp\n";
  for (const auto& r : rows) os << '"' << r.multiplicative() << "\",\"" << r.dosp.to_string() << "\"\n";
  return os.str();
}

}  // namespace cc
