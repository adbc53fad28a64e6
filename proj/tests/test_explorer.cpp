#include <algorithm>
#include <set>
#include <string>

#include "cc/explorer.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace cc;

namespace {

ExploreOptions opts(ExploreMode m, int threads = 1) {
  ExploreOptions o;
  o.mode = m;
  o.threads = threads;
  return o;
}

// Printed rows, renormalized through the parser, with their dosps.
std::set<std::pair<std::string, std::string>> printed(const std::vector<fixtures::TableRow>& rows, int k) {
  std::set<std::pair<std::string, std::string>> out;
  for (const auto& r : rows) out.insert({PClusterRow{parse_multiplicative(r.pcluster, k), {}}.multiplicative(), r.dosp});
  return out;
}

std::set<std::pair<std::string, std::string>> explored(const std::vector<PClusterRow>& rows) {
  std::set<std::pair<std::string, std::string>> out;
  for (const auto& r : rows) out.insert({r.multiplicative(), r.dosp.to_string()});
  return out;
}

void check_table(const std::string& preset, const std::vector<fixtures::TableRow>& rows) {
  const Preset p = make_preset(preset);
  const int k = p.assembled.seed.k;
  const ExchangeGraph g = explore(p.assembled.seed, opts(ExploreMode::PSeed));
  REQUIRE_FALSE(g.partial);
  CHECK(g.violations.empty());
  const auto table = pcluster_table(g);
  CHECK(table.size() == rows.size());
  CHECK(explored(table) == printed(rows, k));
  for (const auto& r : rows) {
    auto c = parse_multiplicative(r.pcluster, k);
    std::sort(c.begin(), c.end());
    CHECK_MESSAGE(w_orbit_max(c) == c, r.pcluster);
    CHECK_MESSAGE(pcluster_dosp(c).to_string() == r.dosp, r.pcluster);
  }
}

}  // namespace

TEST_CASE("A2 has five clusters") {
  PSeed p;
  p.k = 2;
  p.punctures = {"p"};
  p.q = Quiver(2);
  p.q.add_arrows(0, 1);
  p.wt.assign(2, {WeightVector::zero(2)});
  const ExchangeGraph g = explore(p, opts(ExploreMode::Cluster));
  CHECK(g.size() == 5);
  CHECK(g.edges.size() == 5);
  CHECK(g.cluster_variables().size() == 5);
}

TEST_CASE("D4 exchange graph in cluster mode") {
  const Preset p = make_preset("sl3-d21");
  const ExchangeGraph g = explore(p.assembled.seed, opts(ExploreMode::Cluster));
  CHECK_FALSE(g.partial);
  CHECK(g.size() == 50);
  CHECK(g.edges.size() == 100);
  CHECK(g.cluster_variables().size() == 16);
  CHECK(p.assembled.seed.q.frozen_vertices().size() == 2);
  for (std::size_t i = 0; i < g.size(); ++i) {
    int deg = 0;
    for (const auto& e : g.edges) deg += (e.a == i) + (e.b == i);
    CHECK(deg == 4);
  }
}

TEST_CASE("exploration is independent of the thread count") {
  const Preset p = make_preset("sl3-d21");
  const ExchangeGraph a = explore(p.assembled.seed, opts(ExploreMode::Cluster, 1));
  const ExchangeGraph b = explore(p.assembled.seed, opts(ExploreMode::Cluster, 3));
  CHECK(a.keys == b.keys);
  CHECK(a.edges == b.edges);
  const ExchangeGraph c = explore(p.assembled.seed, opts(ExploreMode::PSeed, 1));
  const ExchangeGraph d = explore(p.assembled.seed, opts(ExploreMode::PSeed, 4));
  CHECK(c.keys == d.keys);
  CHECK(c.edges == d.edges);
}

TEST_CASE("node limit flags a partial graph") {
  ExploreOptions o = opts(ExploreMode::Cluster);
  o.max_nodes = 10;
  const ExchangeGraph g = explore(make_preset("sl3-d21").assembled.seed, o);
  CHECK(g.partial);
  CHECK(g.size() <= 10 + 8);
}

TEST_CASE("P-cluster tables match the printed rows") {
  SUBCASE("sl3-d21") { check_table("sl3-d21", fixtures::kTableSl3D21); }
  SUBCASE("sl3-d31") { check_table("sl3-d31", fixtures::kTableSl3D31); }
  SUBCASE("sl4-d21") { check_table("sl4-d21", fixtures::kTableSl4D21); }
}

TEST_CASE("P-seed mode graph sizes") {
  CHECK(explore(make_preset("sl3-d21").assembled.seed, opts(ExploreMode::PSeed)).size() == 28);
  CHECK(explore(make_preset("sl3-d31").assembled.seed, opts(ExploreMode::PSeed)).size() == 88);
}

TEST_CASE("dosp labeling and edge contraction onto H_dosp(3)") {
  const ExchangeGraph g = explore(make_preset("sl3-d21").assembled.seed, opts(ExploreMode::Cluster));
  const Report lab = dosp_labeling_check(g);
  CHECK_MESSAGE(lab.pass, (lab.failures.empty() ? "" : lab.failures.front()));
  const Report con = edge_contraction_check(g, build_hdosp(3));
  CHECK_MESSAGE(con.pass, (con.failures.empty() ? "" : con.failures.front()));
  // The contraction does not land in H_dosp(2).
  CHECK_FALSE(edge_contraction_check(g, build_hdosp(2)).pass);
}

TEST_CASE("good seeds satisfy the symmetry, region and twice-broken properties") {
  for (const std::string name : {"sl3-d21", "sl3-d31", "sl4-d21"}) {
    ExploreOptions o = opts(ExploreMode::PSeed);
    o.good_filter = true;
    const ExchangeGraph g = explore(make_preset(name).assembled.seed, o);
    CHECK_MESSAGE(g.violations.empty(), name);
    const Report r = good_graph_properties(g);
    CHECK_MESSAGE(r.pass, name << ": " << (r.failures.empty() ? "" : r.failures.front()));
    CHECK(r.checked > 0);
  }
}

TEST_CASE("w_orbit_min and multiplicative parsing") {
  const auto c = parse_multiplicative("b*2,bc,1", 3);
  REQUIRE(c.size() == 4);
  CHECK(c[0] == WeightVector::e(3, 2));
  CHECK(c[1] == WeightVector::e(3, 2));
  CHECK(c[2] == WeightVector::indicator(3, {2, 3}));
  CHECK(c[3].is_zero());
  const auto m = w_orbit_min(c);
  CHECK(w_orbit_min(parse_multiplicative("c*2,ac,1", 3)) == m);
  CHECK(w_orbit_min(parse_multiplicative("a*2,ab,1", 3)) == m);
  CHECK(w_orbit_min(parse_multiplicative("a*2,ab,ab", 3)) != m);
  CHECK(w_orbit_max(c) == w_orbit_max(parse_multiplicative("a*2,ab,1", 3)));
  CHECK(PClusterRow{w_orbit_max(c), {}}.multiplicative() == "a*2,ab,1");
  CHECK(PClusterRow{parse_multiplicative("1,abc,a,ab,a", 4), {}}.multiplicative() == "a*2,ab,abc,1");
  CHECK_THROWS(parse_multiplicative("az", 3));
}

TEST_CASE("ladder walk reaches every printed dosp") {
  const PSeed ladder = ladder_pseed(7);
  CHECK(isomorphic(ladder, assemble_gr(digon(), 7).seed));
  CHECK(dosp_tuple_text(*dosps_of(ladder)) == "1|2|3|4|5|6|7");
  const auto walk = dosp_walk(ladder, {{3}, {5, 4}, {7, 6, 5}, {9, 8, 7, 6}, {6}, {5}, {4}, {3}, {2}});
  REQUIRE(walk.size() == fixtures::kEverydosp.size() - 1);
  for (std::size_t i = 0; i < walk.size(); ++i) CHECK(walk[i].dosp == fixtures::kEverydosp[i + 1]);
}

TEST_CASE("FG digon leads to the Grassmannian polygon") {
  for (int k = 2; k <= 5; ++k) {
    const LeadstoReport r = leadsto_fg_to_gr(k);
    CHECK_MESSAGE(r.pass, "k=" << k << ": " << (r.failures.empty() ? "" : r.failures.front()));
    CHECK(isomorphic(r.result, r.target));
  }
  CHECK(leadsto_fg_to_gr(5).sequence.size() == 10);
  CHECK_THROWS(leadsto_fg_to_gr(6));
}

TEST_CASE("Sigma^s leads to Sigma^(s-1) down columns") {
  for (int s = 7; s >= 2; --s) {
    const LeadstoReport r = leadsto_sigma(8, s);
    CHECK_MESSAGE(r.pass, "s=" << s << ": " << (r.failures.empty() ? "" : r.failures.front()));
    CHECK(r.sequence.size() == static_cast<std::size_t>((8 - s) * (8 - s + 1) / 2));
  }
  for (int k = 3; k <= 6; ++k)
    for (int s = k - 1; s >= 2; --s) CHECK_MESSAGE(leadsto_sigma(k, s).pass, "k=" << k << " s=" << s);
  CHECK(leadsto_sigma(8, 1).sequence.empty());
}

TEST_CASE("tabulated scripts are quasi-automorphisms") {
  for (const std::string name : {"sl3-d31", "sl4-d21"}) {
    const Preset p = make_preset(name);
    const auto scripts = preset_scripts(p);
    REQUIRE(scripts.front().name == "sigma");
    for (const auto& s : scripts) {
      const Report r = check_script_automorphism(p.assembled.seed, s.script);
      CHECK_MESSAGE(r.pass, name << " " << s.name);
    }
  }
}

TEST_CASE("sigma with its cycle reversed does not restore the quiver") {
  const Preset p = make_preset("sl4-d21");
  const auto l = preset_labels(p);
  const int n = p.assembled.seed.q.n;
  CHECK(check_script_automorphism(p.assembled.seed, labeled_script(l, n, {3, 5, 6, 3}, {{1, 6, 5}, {3, 4}})).pass);
  CHECK_FALSE(check_script_automorphism(p.assembled.seed, labeled_script(l, n, {3, 5, 6, 3}, {{5, 6, 1}, {3, 4}})).pass);
  CHECK_FALSE(check_script_automorphism(p.assembled.seed, labeled_script(l, n, {3, 6, 5, 3}, {{1, 6, 5}, {3, 4}})).pass);
}

TEST_CASE("script weights are compared when a map is given") {
  const Preset p = make_preset("sl4-d21");
  const Script rho = preset_scripts(p)[3].script;
  auto moved = [&](const PSeed& x) { return apply_sequence(x, rho); };
  CHECK(check_script_automorphism(p.assembled.seed, rho, moved).pass);
  auto wrong = [&](const PSeed& x) {
    PSeed y = x;
    for (int v : y.q.mutable_vertices()) y.wt[static_cast<std::size_t>(v)][0] = WeightVector::zero(x.k);
    return y;
  };
  CHECK_FALSE(check_script_automorphism(p.assembled.seed, rho, wrong).pass);
}

TEST_CASE("unknown presets and labels are rejected") {
  CHECK_THROWS(make_preset("sl9"));
  CHECK_THROWS(preset_labels(make_preset("sl3-d21")));
  CHECK(preset_names().size() == 4);
}
