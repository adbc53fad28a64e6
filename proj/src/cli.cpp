#include "cc/cli.hpp"

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cc/explorer.hpp"
#include "cc/io.hpp"
#include "cc/oracle.hpp"
#include "cc/weyl.hpp"
#include "json.hpp"

namespace cc {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::string output;  // empty: the subcommand's default format
  std::uint64_t rng_seed = 1;
  int threads = 1;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string format_or(const Globals& g, const std::string& dflt, const std::vector<std::string>& allowed) {
  const std::string f = g.output.empty() ? dflt : g.output;
  if (std::find(allowed.begin(), allowed.end(), f) == allowed.end())
    throw UsageError("--output " + f + " is not supported by this subcommand");
  return f;
}

// digon | ngon:N | torus-s11 | path to a triangulation JSON file.
TriangulationSpec surface_from(const std::string& s) {
  if (s == "digon") return digon();
  if (s == "torus-s11") return torus_s11();
  if (s.rfind("ngon:", 0) == 0) {
    int n = 0;
    try {
      n = std::stoi(s.substr(5));
    } catch (const std::exception&) {
      throw UsageError("bad polygon size in '" + s + "'");
    }
    return punctured_ngon(n);
  }
  return parse_triangulation(read_file(s));
}

Assembled assemble(const std::string& surface, int k, const std::string& version) {
  const TriangulationSpec t = surface_from(surface);
  if (version == "fg") return assemble_fg(t, k);
  if (version == "gr") return assemble_gr(t, k);
  throw UsageError("--version must be fg or gr");
}

std::vector<int> parse_vertex_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ','))
    try {
      out.push_back(std::stoi(tok));
    } catch (const std::exception&) {
      throw UsageError("bad vertex list '" + s + "'");
    }
  return out;
}

json script_json(const Script& s) {
  json j = json::array();
  for (const auto& step : s) {
    if (const auto* m = std::get_if<Mutate>(&step))
      j.push_back({{"mutate", m->v}});
    else
      j.push_back({{"permute", std::get<Permute>(step).perm}});
  }
  return j;
}

int cmd_build(const Globals& g, const std::string& surface, int k, const std::string& version, std::ostream& out) {
  const Assembled a = assemble(surface, k, version);
  const std::string f = format_or(g, "json", {"json", "dot", "text"});
  if (f == "json")
    out << pseed_to_json(a.seed, a.names) << "\n";
  else if (f == "dot")
    out << quiver_to_dot(a.seed.q, a.names);
  else
    out << "vertices=" << a.seed.q.n << " mutable=" << a.seed.q.mutable_vertices().size()
        << " frozen=" << a.seed.q.frozen_vertices().size() << " arrows=" << a.seed.q.arrow_count() << "\n";
  return kExitOk;
}

int cmd_mutate(const Globals& g, const std::string& seed_file, const std::string& at, std::ostream& out) {
  const std::string text = read_file(seed_file);
  PSeed p = pseed_from_json(text);
  const std::vector<std::string> names = names_from_json(text);
  Seed s = Seed::initial(p.q);
  for (int v : parse_vertex_list(at)) {
    if (v < 0 || v >= p.q.n) throw UsageError("vertex " + std::to_string(v) + " out of range");
    p = mutate_pseed(p, v);
    s = mutate_seed(s, v);
  }
  std::vector<std::string> vars;
  for (int v = 0; v < s.q.n; ++v) vars.push_back(s.x[static_cast<std::size_t>(v)].to_string());
  const std::string f = format_or(g, "json", {"json", "dot", "text"});
  if (f == "json") {
    json j{{"pseed", json::parse(pseed_to_json(p, names))}, {"variables", vars}};
    out << j.dump(2) << "\n";
  } else if (f == "dot") {
    out << quiver_to_dot(p.q, names);
  } else {
    for (int v = 0; v < p.q.n; ++v)
      out << (v < static_cast<int>(names.size()) ? names[static_cast<std::size_t>(v)] : "x" + std::to_string(v)) << " = "
          << vars[static_cast<std::size_t>(v)] << "\n";
  }
  return kExitOk;
}

int cmd_weyl(const Globals& g, const std::string& surface, int k, const std::string& version, const std::string& puncture,
             int row, bool sg1, std::ostream& out) {
  const Assembled a = assemble(surface, k, version);
  const Seed s = Seed::initial(a.seed.q);
  const WeylResult r = sg1 ? apply_weyl_sg1(a, a.seed, s, row) : apply_weyl(a, a.seed, s, puncture, row);
  const std::string f = format_or(g, "json", {"json", "text"});
  if (f == "json") {
    json j{{"before", json::parse(pseed_to_json(a.seed, a.names))},
           {"after", json::parse(pseed_to_json(r.pseed, a.names))},
           {"script", script_json(r.report.script)},
           {"W", r.report.w_text},
           {"checks", r.report.checks}};
    out << j.dump(2) << "\n";
  } else {
    out << "W = " << r.report.w_text << "\n";
    for (const auto& c : r.report.checks) out << c << "\n";
  }
  return kExitOk;
}

int cmd_explore(const Globals& g, const std::string& preset, const std::string& mode, bool good, std::size_t max_nodes,
                std::ostream& out) {
  const Preset p = make_preset(preset);
  ExploreOptions o;
  if (mode == "cluster")
    o.mode = ExploreMode::Cluster;
  else if (mode == "pseed")
    o.mode = ExploreMode::PSeed;
  else
    throw UsageError("--mode must be cluster or pseed");
  o.good_filter = good;
  o.max_nodes = max_nodes;
  o.threads = g.threads;
  const ExchangeGraph eg = explore(p.assembled.seed, o);
  const std::string f = format_or(g, "json", {"json", "dot", "text"});
  if (f == "json") {
    out << graph_to_json(eg) << "\n";
  } else if (f == "dot") {
    out << graph_to_dot(eg);
  } else {
    out << "nodes=" << eg.size() << " edges=" << eg.edges.size();
    if (o.mode == ExploreMode::Cluster) out << " variables=" << eg.cluster_variables().size();
    out << " frozen=" << p.assembled.seed.q.frozen_vertices().size() << " partial=" << (eg.partial ? 1 : 0)
        << " violations=" << eg.violations.size() << "\n";
  }
  return eg.violations.empty() ? kExitOk : kExitVerificationFailed;
}

int cmd_tables(const Globals& g, const std::string& name, std::ostream& out, std::ostream& err) {
  const Preset p = make_preset(name);
  ExploreOptions o;
  o.mode = ExploreMode::PSeed;
  o.threads = g.threads;
  const ExchangeGraph eg = explore(p.assembled.seed, o);
  if (eg.partial) throw Error(Errc::LimitExceeded, "exchange graph did not close within the node limit");
  const auto rows = pcluster_table(eg);
  const std::string f = format_or(g, "csv", {"csv", "json", "text"});
  if (f == "csv") {
    out << table_to_csv(rows);
    err << "rows=" << rows.size() << "\n";
  } else if (f == "json") {
    json j = json::array();
    for (const auto& r : rows) j.push_back({{"pcluster", r.multiplicative()}, {"dosp", r.dosp.to_string()}});
    out << json{{"case", name}, {"rows", j}}.dump(2) << "\n";
  } else {
    for (const auto& r : rows) out << r.multiplicative() << "  " << r.dosp.to_string() << "\n";
    out << "rows=" << rows.size() << "\n";
  }
  return kExitOk;
}

int cmd_dosp_graph(const Globals& g, int k, int power, bool quotient, bool counts, std::ostream& out) {
  if (k < 1 || k > 7) throw UsageError("--k must lie in [1,7]");
  if (power < 1) throw UsageError("--power must be positive");
  DospGraph h = build_hdosp(k);
  if (power > 1) h = cartesian_power(h, power);
  if (quotient) h = quotient_by_relabeling(h);
  const std::string f = format_or(g, counts ? "text" : "dot", {"text", "dot", "csv", "json"});
  if (f == "text") {
    out << "vertices=" << h.vertices.size() << " edges=" << h.edges.size() << "\n";
  } else if (f == "dot") {
    out << to_dot(h);
  } else if (f == "csv") {
    out << to_csv(h);
  } else {
    json vs = json::array(), es = json::array();
    for (std::size_t i = 0; i < h.vertices.size(); ++i) vs.push_back(h.label(i));
    for (const auto& [a, b] : h.edges) es.push_back({a, b});
    out << json{{"vertices", vs}, {"edges", es}}.dump(2) << "\n";
  }
  return kExitOk;
}

int cmd_dosp(const Globals& g, int k, const std::string& mutate, const std::string& pcluster, std::ostream& out) {
  format_or(g, "text", {"text"});
  if (mutate.empty() == pcluster.empty()) throw UsageError("give exactly one of --mutate and --pcluster");
  if (!mutate.empty()) {
    for (const auto& d : dosp_mutations(Dosp::parse(mutate, k))) out << d.to_string() << "\n";
    return kExitOk;
  }
  const auto c = parse_multiplicative(pcluster, k);
  if (!is_basic_compatible(c)) {
    out << "not basic\n";
    return kExitVerificationFailed;
  }
  out << pcluster_dosp(c).to_string() << "\n";
  return kExitOk;
}

int cmd_verify(const Globals& g, const std::string& which, int k, int trials, std::ostream& out) {
  format_or(g, "text", {"text"});
  if (trials < 1) throw UsageError("--trials must be positive");
  TrialSummary s;
  if (which == "flattening")
    s = verify_flattening(k, trials, g.rng_seed, g.threads);
  else if (which == "spiral")
    s = verify_spiral(k, trials, g.rng_seed, g.threads);
  else if (which == "killeq")
    s = verify_killeq(k, trials, g.rng_seed, g.threads);
  else
    throw UsageError("unknown identity '" + which + "'");
  out << (s.ok() ? "PASS " : "FAIL ") << s.passed << "/" << s.total << " checks=" << s.checks << "\n";
  if (!s.ok()) out << "first counterexample: " << s.first_failure << "\n";
  return s.ok() ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cluster combinatorics for SL_k and punctured surfaces", "clusterkit"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--output", g.output, "Output format")->check(CLI::IsMember({"json", "dot", "csv", "text"}));
  app.add_option("--rng-seed", g.rng_seed, "Seed for randomized verification (default 1)");
  app.add_option("--threads", g.threads, "Worker threads; results do not depend on it")->check(CLI::PositiveNumber);

  std::string surface = "digon", version = "gr", seed_file, at, puncture = "p", preset, mode = "cluster", which,
              mutate_d, pcluster_s, table_case;
  int k = 3, row = 1, trials = 100, power = 1;
  bool sg1 = false, good = false, counts = false, quotient = false;
  std::size_t max_nodes = 200000;

  auto* build = app.add_subcommand("build", "Assemble an initial P-seed");
  build->add_option("--surface", surface, "digon, ngon:N, torus-s11 or a triangulation JSON file");
  build->add_option("--k", k)->required();
  build->add_option("--version", version, "fg or gr")->check(CLI::IsMember({"fg", "gr"}));

  auto* mut = app.add_subcommand("mutate", "Mutate a P-seed and its cluster variables");
  mut->add_option("--seed", seed_file, "P-seed JSON")->required();
  mut->add_option("--at", at, "Comma separated 0-based vertices, applied left to right")->required();

  auto* weyl = app.add_subcommand("weyl", "Weyl group action at a puncture");
  weyl->add_option("--surface", surface);
  weyl->add_option("--k", k)->required();
  weyl->add_option("--version", version)->check(CLI::IsMember({"fg", "gr"}));
  weyl->add_option("--puncture", puncture);
  weyl->add_option("--row", row)->required();
  weyl->add_flag("--sg1", sg1, "Once-punctured closed surface procedure");

  auto* expl = app.add_subcommand("explore", "Exchange graph of a preset");
  expl->add_option("--preset", preset)->required()->check(CLI::IsMember(preset_names()));
  expl->add_option("--mode", mode)->check(CLI::IsMember({"cluster", "pseed"}));
  expl->add_flag("--good", good, "Prune nodes whose P-cluster is not basic");
  expl->add_option("--max-nodes", max_nodes);

  auto* tables = app.add_subcommand("tables", "P-cluster table up to W");
  tables->add_option("--case", table_case)->required()->check(CLI::IsMember({"sl3-d21", "sl3-d31", "sl4-d21"}));

  auto* dg = app.add_subcommand("dosp-graph", "Dosp mutation graph H_dosp(k)");
  dg->add_option("--k", k)->required();
  dg->add_option("--power", power, "Cartesian power");
  dg->add_flag("--quotient", quotient, "Quotient by simultaneous relabeling");
  dg->add_flag("--counts", counts, "Print vertex and edge counts");

  auto* dosp = app.add_subcommand("dosp", "Dosp of a P-cluster, or dosp mutation");
  dosp->add_option("--k", k)->required();
  dosp->add_option("--mutate", mutate_d, "Print the neighbours of this dosp");
  dosp->add_option("--pcluster", pcluster_s, "Multiplicative P-cluster, e.g. a*2,ab*2");

  auto* ver = app.add_subcommand("verify", "Randomized exact verification of the exterior-algebra identities");
  ver->add_option("identity", which)->required()->check(CLI::IsMember({"flattening", "spiral", "killeq"}));
  ver->add_option("--k", k)->required();
  ver->add_option("--trials", trials);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (build->parsed()) return cmd_build(g, surface, k, version, out);
    if (mut->parsed()) return cmd_mutate(g, seed_file, at, out);
    if (weyl->parsed()) return cmd_weyl(g, surface, k, version, puncture, row, sg1, out);
    if (expl->parsed()) return cmd_explore(g, preset, mode, good, max_nodes, out);
    if (tables->parsed()) return cmd_tables(g, table_case, out, err);
    if (dg->parsed()) return cmd_dosp_graph(g, k, power, quotient, counts, out);
    if (dosp->parsed()) return cmd_dosp(g, k, mutate_d, pcluster_s, out);
    if (ver->parsed()) return cmd_verify(g, which, k, trials, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == Errc::VerificationFailed || e.code() == Errc::QuiverNotRestored ? kExitVerificationFailed
                                                                                          : kExitUsage;
  }
  return kExitUsage;
}

}  // namespace cc
