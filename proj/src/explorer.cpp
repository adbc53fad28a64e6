#include "cc/explorer.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>

namespace cc {

namespace {

std::size_t ux(int i) { return static_cast<std::size_t>(i); }

struct Child {
  int vertex = 0;
  PSeed p;
  std::optional<Seed> s;
  std::string key;
  std::optional<std::vector<Dosp>> dosps;
  std::string bad_puncture;  // first puncture whose P-cluster is not basic
};

std::string first_non_basic(const PSeed& p) {
  for (std::size_t c = 0; c < p.punctures.size(); ++c)
    if (!is_basic_compatible(pcluster_at(p, c))) return p.punctures[c];
  return {};
}

// Frozen vertices of weight zero never change any mutable weight, so P-seed mode forgets them.
std::string pseed_mode_key(const PSeed& p) {
  std::vector<int> keep;
  for (int v = 0; v < p.q.n; ++v) {
    const auto& w = p.wt[ux(v)];
    if (!p.q.is_frozen(v) || std::any_of(w.begin(), w.end(), [](const WeightVector& x) { return !x.is_zero(); }))
      keep.push_back(v);
  }
  return canonical_pseed_key(induced_pseed(p, keep));
}

Child make_child(const PSeed& p, const std::optional<Seed>& s, int v, ExploreMode mode) {
  Child c;
  c.vertex = v;
  c.p = mutate_pseed(p, v);
  if (s) c.s = mutate_seed(*s, v);
  c.key = mode == ExploreMode::Cluster ? canonical_cluster_key(*c.s) : pseed_mode_key(c.p);
  c.bad_puncture = first_non_basic(c.p);
  if (c.bad_puncture.empty()) c.dosps = dosps_of(c.p);
  return c;
}

// Children of every frontier node, computed in contiguous chunks; the result order ignores thread count.
std::vector<std::vector<Child>> expand(const ExchangeGraph& g, const std::vector<std::size_t>& frontier, int threads) {
  std::vector<std::vector<Child>> out(frontier.size());
  auto work = [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) {
      const std::size_t n = frontier[i];
      const PSeed& p = g.pseeds[n];
      std::optional<Seed> s;
      if (g.mode == ExploreMode::Cluster) s = g.seeds[n];
      for (int v : p.q.mutable_vertices()) out[i].push_back(make_child(p, s, v, g.mode));
    }
  };
  const std::size_t t = static_cast<std::size_t>(std::max(1, threads));
  if (t == 1 || frontier.size() < 2) {
    work(0, frontier.size());
    return out;
  }
  std::vector<std::future<void>> jobs;
  const std::size_t chunk = (frontier.size() + t - 1) / t;
  for (std::size_t lo = 0; lo < frontier.size(); lo += chunk)
    jobs.push_back(std::async(std::launch::async, work, lo, std::min(frontier.size(), lo + chunk)));
  for (auto& j : jobs) j.get();
  return out;
}

}  // namespace

std::string dosp_tuple_text(const std::vector<Dosp>& d) {
  std::string s;
  for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + d[i].to_string();
  return s;
}

std::vector<std::string> ExchangeGraph::cluster_variables() const {
  std::set<std::string> vars;
  for (const auto& s : seeds)
    for (int v : s.q.mutable_vertices()) vars.insert(s.x[ux(v)].to_string());
  return {vars.begin(), vars.end()};
}

std::vector<WeightVector> pcluster_at(const PSeed& p, std::size_t puncture) {
  std::vector<WeightVector> c;
  for (int v : p.q.mutable_vertices()) c.push_back(p.wt[ux(v)][puncture]);
  return c;
}

std::optional<std::vector<Dosp>> dosps_of(const PSeed& p) {
  std::vector<Dosp> d;
  for (std::size_t c = 0; c < p.punctures.size(); ++c) {
    const auto pc = pcluster_at(p, c);
    if (!is_basic_compatible(pc)) return std::nullopt;
    d.push_back(pcluster_dosp(pc));
  }
  return d;
}

ExchangeGraph explore(const PSeed& root, const ExploreOptions& opt) {
  ExchangeGraph g;
  g.mode = opt.mode;
  std::unordered_map<std::string, std::size_t> index;
  auto add_node = [&](const std::string& key, PSeed p, std::optional<Seed> s, int depth,
                      std::optional<std::vector<Dosp>> d) {
    index.emplace(key, g.keys.size());
    g.keys.push_back(key);
    g.pseeds.push_back(std::move(p));
    if (s) g.seeds.push_back(std::move(*s));
    g.depth.push_back(depth);
    g.dosps.push_back(std::move(d));
    return g.keys.size() - 1;
  };
  std::optional<Seed> root_seed;
  if (opt.mode == ExploreMode::Cluster) root_seed = Seed::initial(root.q);
  const std::string root_key = opt.mode == ExploreMode::Cluster ? canonical_cluster_key(*root_seed) : pseed_mode_key(root);
  add_node(root_key, root, root_seed, 0, dosps_of(root));
  if (const auto bad = first_non_basic(root); !bad.empty())
    g.violations.push_back({0, -1, bad, "initial P-cluster is not basic compatible"});

  std::set<std::pair<std::size_t, std::size_t>> seen_edges;
  std::vector<std::size_t> frontier{0};
  for (int depth = 0; !frontier.empty() && (opt.max_depth < 0 || depth < opt.max_depth); ++depth) {
    const auto children = expand(g, frontier, opt.threads);
    std::vector<std::size_t> next;
    for (std::size_t i = 0; i < frontier.size(); ++i) {
      const std::size_t parent = frontier[i];
      for (const Child& c : children[i]) {
        if (opt.good_filter && !c.bad_puncture.empty()) {
          g.violations.push_back({parent, c.vertex, c.bad_puncture, "mutation leaves the basic compatible P-clusters"});
          continue;
        }
        auto it = index.find(c.key);
        std::size_t node;
        if (it != index.end()) {
          node = it->second;
        } else if (g.keys.size() >= opt.max_nodes) {
          g.partial = true;
          continue;
        } else {
          node = add_node(c.key, c.p, c.s, depth + 1, c.dosps);
          next.push_back(node);
        }
        if (node == parent) continue;
        const auto e = std::minmax(parent, node);
        if (seen_edges.insert(e).second) g.edges.push_back({e.first, e.second, c.vertex});
      }
    }
    frontier = std::move(next);
  }
  if (!frontier.empty()) g.partial = true;
  std::sort(g.edges.begin(), g.edges.end(), [](const ExchangeEdge& x, const ExchangeEdge& y) {
    return std::tie(x.a, x.b) < std::tie(y.a, y.b);
  });
  return g;
}

namespace {

template <class Better>
std::vector<WeightVector> w_orbit_extreme(const std::vector<WeightVector>& c, Better better) {
  if (c.empty()) return c;
  const int k = c.front().k();
  std::vector<int> perm(ux(k));
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<WeightVector> best;
  do {
    std::vector<WeightVector> img;
    img.reserve(c.size());
    for (const auto& w : c) img.push_back(w_act(perm, w));
    std::sort(img.begin(), img.end());
    if (best.empty() || better(img, best)) best = std::move(img);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// Fewer letters first, then alphabetical; the zero weight last.
bool display_less(const WeightVector& x, const WeightVector& y) {
  const std::string a = x.to_multiplicative(), b = y.to_multiplicative();
  const bool za = x.is_zero(), zb = y.is_zero();
  if (za != zb) return zb;
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

}  // namespace

std::vector<WeightVector> w_orbit_min(const std::vector<WeightVector>& c) {
  return w_orbit_extreme(c, [](const auto& a, const auto& b) { return a < b; });
}

std::vector<WeightVector> w_orbit_max(const std::vector<WeightVector>& c) {
  return w_orbit_extreme(c, [](const auto& a, const auto& b) { return a > b; });
}

std::string PClusterRow::multiplicative() const {
  std::vector<WeightVector> c = pcluster;
  std::stable_sort(c.begin(), c.end(), display_less);
  std::string out;
  for (std::size_t i = 0; i < c.size();) {
    std::size_t j = i;
    while (j < c.size() && c[j] == c[i]) ++j;
    if (!out.empty()) out += ",";
    out += c[i].to_multiplicative();
    if (j - i > 1) out += "*" + std::to_string(j - i);
    i = j;
  }
  return out;
}

std::vector<PClusterRow> pcluster_table(const ExchangeGraph& g, std::size_t puncture) {
  std::set<std::vector<WeightVector>> reps;
  for (const auto& p : g.pseeds) reps.insert(w_orbit_min(pcluster_at(p, puncture)));
  std::vector<PClusterRow> rows;
  for (const auto& r : reps) {
    if (!is_basic_compatible(r)) continue;
    const auto shown = w_orbit_max(r);
    rows.push_back({shown, pcluster_dosp(shown)});
  }
  std::sort(rows.begin(), rows.end(), [](const PClusterRow& a, const PClusterRow& b) {
    return std::pair(a.dosp.to_string(), a.multiplicative()) < std::pair(b.dosp.to_string(), b.multiplicative());
  });
  return rows;
}

std::vector<WeightVector> parse_multiplicative(const std::string& s, int k) {
  std::vector<WeightVector> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    tok.erase(std::remove(tok.begin(), tok.end(), ' '), tok.end());
    if (tok.empty()) throw Error(Errc::Parse, "empty weight in '" + s + "'");
    int mult = 1;
    if (const auto star = tok.find('*'); star != std::string::npos) {
      mult = std::stoi(tok.substr(star + 1));
      tok = tok.substr(0, star);
    }
    std::vector<int> coords(ux(k), 0);
    if (tok != "1")
      for (char ch : tok) {
        const int a = ch - 'a';
        if (a < 0 || a >= k) throw Error(Errc::Parse, "bad letter in '" + tok + "'");
        ++coords[ux(a)];
      }
    for (int i = 0; i < mult; ++i) out.push_back(WeightVector::normalize(coords, k));
  }
  return out;
}

Report dosp_labeling_check(const ExchangeGraph& g) {
  Report r;
  for (const auto& e : g.edges) {
    ++r.checked;
    const auto& x = g.dosps[e.a];
    const auto& y = g.dosps[e.b];
    if (!x || !y) {
      r.fail("edge " + std::to_string(e.a) + "-" + std::to_string(e.b) + " touches a P-cluster that is not basic");
      continue;
    }
    int changed = 0;
    for (std::size_t c = 0; c < x->size(); ++c) {
      if ((*x)[c] == (*y)[c]) continue;
      ++changed;
      if (!are_dosp_adjacent((*x)[c], (*y)[c]))
        r.fail("edge " + std::to_string(e.a) + "-" + std::to_string(e.b) + ": " + (*x)[c].to_string() + " and " +
               (*y)[c].to_string() + " are not one dosp mutation apart");
    }
    if (changed > 1) r.fail("edge " + std::to_string(e.a) + "-" + std::to_string(e.b) + " changes several punctures");
  }
  return r;
}

Report edge_contraction_check(const ExchangeGraph& g, const DospGraph& h) {
  Report r;
  std::vector<std::size_t> image(g.size());
  std::vector<bool> hit_vertex(h.vertices.size(), false);
  for (std::size_t n = 0; n < g.size(); ++n) {
    if (!g.dosps[n]) {
      r.fail("node " + std::to_string(n) + " has no dosp");
      return r;
    }
    try {
      image[n] = h.index_of(*g.dosps[n]);
    } catch (const Error&) {
      r.fail("node " + std::to_string(n) + " maps to " + dosp_tuple_text(*g.dosps[n]) + ", not a vertex of H");
      return r;
    }
    hit_vertex[image[n]] = true;
  }
  std::set<std::pair<std::size_t, std::size_t>> hit_edges;
  for (const auto& e : g.edges) {
    ++r.checked;
    const std::size_t a = image[e.a], b = image[e.b];
    if (a == b) continue;
    if (!h.has_edge(a, b)) {
      r.fail("edge " + std::to_string(e.a) + "-" + std::to_string(e.b) + " maps to a non-edge " + h.label(a) + " / " + h.label(b));
      continue;
    }
    hit_edges.insert(std::minmax(a, b));
  }
  if (g.partial) return r;
  for (std::size_t v = 0; v < h.vertices.size(); ++v)
    if (!hit_vertex[v]) r.fail("vertex " + h.label(v) + " is not reached");
  for (const auto& e : h.edges)
    if (!hit_edges.count(e)) r.fail("edge " + h.label(e.first) + " / " + h.label(e.second) + " is not covered");
  return r;
}

Report good_seed_properties(const PSeed& p) {
  Report r;
  const auto mv = p.q.mutable_vertices();
  for (std::size_t c = 0; c < p.punctures.size(); ++c) {
    const auto pc = pcluster_at(p, c);
    const std::string at = " at " + p.punctures[c];
    if (!is_basic_compatible(pc)) {
      r.fail("P-cluster not basic compatible" + at);
      continue;
    }
    const int k = pc.front().k();
    std::set<std::pair<int, int>> directions;
    for (std::size_t i = 0; i < mv.size(); ++i)
      for (std::size_t j = i + 1; j < mv.size(); ++j) {
        const auto rc = root_conjugacy(pc[i], pc[j]);
        if (!rc) continue;
        directions.insert(std::minmax(rc->first, rc->second));
        ++r.checked;
        if (!symmetrical_vertices(p.q, mv[i], mv[j]))
          r.fail("root-conjugate vertices " + std::to_string(mv[i]) + "," + std::to_string(mv[j]) + " are not symmetrical" + at);
        for (std::size_t o = 0; o < p.punctures.size(); ++o)
          if (o != c && p.wt[ux(mv[i])][o] != p.wt[ux(mv[j])][o])
            r.fail("root-conjugate vertices " + std::to_string(mv[i]) + "," + std::to_string(mv[j]) + " differ at " + p.punctures[o]);
      }
    const Osp osp = pcluster_osp(pc);
    for (int v : mv) {
      ++r.checked;
      const auto kv = kappa(p, v).at[c];
      if (!in_closed_region(kv, osp))
        r.fail("kappa(" + std::to_string(v) + ") = " + kv.to_string() + " outside the region of " + osp.to_string() + at);
    }
    for (int a = 0; a < k; ++a)
      for (int b = a + 1; b < k; ++b) {
        ++r.checked;
        if (directions.count({a + 1, b + 1})) continue;
        int above = 0, below = 0;
        for (const auto& w : pc) {
          above += w[a] > w[b] ? 1 : 0;
          below += w[a] < w[b] ? 1 : 0;
        }
        const bool ok = (below == 0 && above >= 2) || (above == 0 && below >= 2);
        if (!ok)
          r.fail("coordinates " + std::to_string(a + 1) + "," + std::to_string(b + 1) + " strictly ordered " +
                 std::to_string(above) + "/" + std::to_string(below) + " times" + at);
      }
  }
  return r;
}

Report good_graph_properties(const ExchangeGraph& g) {
  Report r;
  for (std::size_t n = 0; n < g.size(); ++n) {
    const Report one = good_seed_properties(g.pseeds[n]);
    r.checked += one.checked;
    for (const auto& f : one.failures) r.fail("node " + std::to_string(n) + ": " + f);
  }
  return r;
}

Report check_script_automorphism(const PSeed& p, const Script& script, const std::function<PSeed(const PSeed&)>& expected) {
  Report r;
  const PSeed out = apply_sequence(p, script);
  const std::vector<int> mv = p.q.mutable_vertices();
  r.checked = 1;
  if (out.q.mutable_vertices() != mv || induced_pseed(out, mv).q != induced_pseed(p, mv).q)
    r.fail(std::string(errc_name(Errc::QuiverNotRestored)) + ": script does not restore the mutable quiver");
  if (expected) {
    const PSeed want = expected(p);
    for (int v : mv)
      if (out.wt[ux(v)] != want.wt[ux(v)]) {
        r.fail(std::string(errc_name(Errc::WeightMismatch)) + ": weight at vertex " + std::to_string(v) +
               " differs from the expected map");
        break;
      }
  }
  return r;
}

Script labeled_script(const std::vector<int>& labels, int n, const std::vector<int>& mutation_labels,
                      const std::vector<std::vector<int>>& cycles) {
  auto vertex = [&](int label) {
    if (label < 1 || label > static_cast<int>(labels.size()))
      throw Error(Errc::BadParameter, "script label " + std::to_string(label) + " out of range");
    return labels[ux(label - 1)];
  };
  Script s;
  for (int l : mutation_labels) s.emplace_back(Mutate{vertex(l)});
  if (!cycles.empty()) {
    std::vector<int> perm(ux(n));
    std::iota(perm.begin(), perm.end(), 0);
    for (const auto& c : cycles)
      for (std::size_t i = 0; i < c.size(); ++i) perm[ux(vertex(c[i]))] = vertex(c[(i + 1) % c.size()]);
    s.emplace_back(Permute{perm});
  }
  return s;
}

std::vector<int> preset_labels(const Preset& p) {
  const Assembled& g = p.assembled;
  const int k = g.seed.k;
  auto arc = [&](int t, int a) {
    const auto v = g.vertex_at(t, {a, 0, k - a});
    if (!v) throw Error(Errc::BadParameter, "missing arc vertex");
    return *v;
  };
  std::vector<int> l;
  if (p.name == "sl3-d31") {
    // rho walks the boundary points against the assembly order
    for (int j = 0; j < 3; ++j)
      for (int a = 1; a <= 2; ++a) l.push_back(arc((3 - j) % 3, a));
  } else if (p.name == "sl4-d21") {
    for (int a = 1; a <= 3; ++a) l.push_back(arc(0, a));
    for (int a = 3; a >= 1; --a) l.push_back(arc(1, a));
  } else {
    throw Error(Errc::Unsupported, "no arc labels for preset '" + p.name + "'");
  }
  return l;
}

std::vector<NamedScript> preset_scripts(const Preset& p) {
  const std::vector<int> l = preset_labels(p);
  const int n = p.assembled.seed.q.n;
  auto mk = [&](std::string name, std::vector<int> mu, std::vector<std::vector<int>> cyc) {
    return NamedScript{std::move(name), labeled_script(l, n, mu, cyc)};
  };
  if (p.name == "sl3-d31")
    return {mk("sigma", {2, 3}, {{2, 5, 3, 4}}), mk("rho", {}, {{1, 3, 5}, {2, 4, 6}}),
            mk("s1", {1, 3, 5, 1}, {{3, 5}})};
  return {mk("sigma", {3, 5, 6, 3}, {{1, 6, 5}, {3, 4}}), mk("sigma-rho", {4, 2, 1, 4}, {{1, 5, 2}}),
          mk("rho-sigma", {3, 5, 6, 3}, {{6, 2, 5}}), mk("rho", {}, {{1, 6}, {3, 4}, {2, 5}}),
          mk("s2", {2, 5}, {{2, 5}}), mk("star", {}, {{1, 4}, {3, 6}})};
}

PSeed induced_pseed(const PSeed& p, const std::vector<int>& keep) {
  PSeed r;
  r.k = p.k;
  r.punctures = p.punctures;
  r.q = Quiver(static_cast<int>(keep.size()));
  for (std::size_t i = 0; i < keep.size(); ++i) {
    r.q.frozen[i] = p.q.is_frozen(keep[i]);
    for (std::size_t j = 0; j < keep.size(); ++j) r.q.b[i][j] = p.q.at(keep[i], keep[j]);
    r.wt.push_back(p.wt[ux(keep[i])]);
  }
  return r;
}

PSeed drop_zero_weight(const PSeed& p) {
  std::vector<int> keep;
  for (int v = 0; v < p.q.n; ++v) {
    const auto& w = p.wt[ux(v)];
    if (std::any_of(w.begin(), w.end(), [](const WeightVector& x) { return !x.is_zero(); })) keep.push_back(v);
  }
  return induced_pseed(p, keep);
}

PSeed ladder_pseed(int k) {
  if (k < 2) throw Error(Errc::BadParameter, "ladder needs k >= 2");
  const int rows = k - 1, n = 2 * rows + 2;
  const int fl = 2 * rows, fr = fl + 1;
  PSeed p;
  p.k = k;
  p.punctures = {"p"};
  p.q = Quiver(n);
  p.q.frozen[ux(fl)] = p.q.frozen[ux(fr)] = true;
  auto at = [](int row, int col) { return 2 * (row - 1) + col; };
  for (int i = 1; i < rows; ++i) {
    p.q.add_arrows(at(i, 0), at(i + 1, 0));
    p.q.add_arrows(at(i, 1), at(i + 1, 1));
    p.q.add_arrows(at(i + 1, 0), at(i, 1));
    p.q.add_arrows(at(i + 1, 1), at(i, 0));
  }
  p.q.add_arrows(at(1, 0), fr);
  p.q.add_arrows(fr, at(1, 1));
  p.q.add_arrows(at(1, 1), fl);
  p.q.add_arrows(fl, at(1, 0));
  for (int v = 0; v < n; ++v) p.wt.push_back({WeightVector::omega(k, v < fl ? v / 2 + 1 : 0)});
  return p;
}

std::vector<WalkStep> dosp_walk(const PSeed& start, const std::vector<std::vector<int>>& steps) {
  std::vector<WalkStep> out;
  PSeed p = start;
  for (const auto& step : steps) {
    for (int v : step) p = mutate_pseed(p, v);
    const auto d = dosps_of(p);
    out.push_back({step, d ? dosp_tuple_text(*d) : std::string("not basic")});
    if (!d) break;
  }
  return out;
}

PSeed fg_digon_k5_drawn() {
  static const std::vector<std::pair<int, int>> arrows{
      {3, 0},   {0, 5},   {1, 3},   {5, 1},   {2, 3},   {5, 2},   {7, 2},   {2, 11},  {3, 4},   {3, 7},   {8, 3},   {4, 5},
      {4, 8},   {10, 4},  {5, 10},  {11, 5},  {6, 7},   {11, 6},  {13, 6},  {6, 19},  {7, 8},   {7, 13},  {14, 7},  {8, 9},
      {8, 14},  {15, 8},  {9, 10},  {9, 15},  {17, 9},  {10, 11}, {10, 17}, {18, 10}, {11, 18}, {19, 11}, {12, 13}, {19, 12},
      {13, 14}, {14, 15}, {15, 16}, {16, 17}, {17, 18}, {18, 19}};
  PSeed p;
  p.k = 5;
  p.punctures = {"p"};
  p.q = Quiver(20);
  for (auto [a, b] : arrows) p.q.add_arrows(a, b);
  // Drawn colors: labels 1-2, 3-6, 7-12, 13-20 carry omega_4, omega_3, omega_2, omega_1.
  for (int v = 0; v < 20; ++v) p.wt.push_back({WeightVector::omega(5, v < 2 ? 4 : v < 6 ? 3 : v < 12 ? 2 : 1)});
  return p;
}

namespace {

// Breadth-first search through good mutations, deleting zero weights after each, for a copy of target.
std::optional<std::vector<int>> search_leadsto(const PSeed& start, const PSeed& target, std::size_t cap, PSeed& found) {
  const std::string goal = canonical_pseed_key(target);
  struct Entry {
    PSeed p;
    std::size_t parent;
    int vertex;
  };
  std::vector<Entry> nodes{{start, 0, -1}};
  std::unordered_map<std::string, std::size_t> seen{{canonical_pseed_key(start), 0}};
  auto path = [&](std::size_t n) {
    std::vector<int> seq;
    for (; n != 0; n = nodes[n].parent) seq.push_back(nodes[n].vertex);
    std::reverse(seq.begin(), seq.end());
    return seq;
  };
  if (seen.begin()->first == goal) {
    found = start;
    return std::vector<int>{};
  }
  for (std::size_t i = 0; i < nodes.size() && nodes.size() < cap; ++i) {
    const PSeed cur = nodes[i].p;
    for (int v : cur.q.mutable_vertices()) {
      PSeed next = drop_zero_weight(mutate_pseed(cur, v));
      if (!first_non_basic(next).empty()) continue;
      const std::string key = canonical_pseed_key(next);
      if (seen.count(key)) continue;
      seen.emplace(key, nodes.size());
      nodes.push_back({next, i, v});
      if (key == goal) {
        found = next;
        return path(nodes.size() - 1);
      }
    }
  }
  return std::nullopt;
}

}  // namespace

LeadstoReport leadsto_fg_to_gr(int k) {
  if (k < 2 || k > 5) throw Error(Errc::Unsupported, "FG-to-Grassmannian relation is implemented for 2 <= k <= 5");
  LeadstoReport rep;
  rep.target = drop_zero_weight(assemble_gr(punctured_ngon(k), k).seed);
  const PSeed start = drop_zero_weight(assemble_fg(digon(), k).seed);
  if (k == 5) {
    PSeed p = fg_digon_k5_drawn();
    ++rep.checked;
    if (!isomorphic(p, start)) rep.fail("drawn quiver differs from the assembled digon");
    for (int v : {19, 12, 11, 6, 14, 16, 9, 4, 8, 9}) {
      p = mutate_pseed(p, v - 1);
      rep.sequence.push_back(v - 1);
      ++rep.checked;
      if (const auto bad = first_non_basic(p); !bad.empty()) rep.fail("P-cluster not basic after mutating at " + std::to_string(v));
    }
    rep.result = drop_zero_weight(p);
  } else {
    PSeed found;
    const auto seq = search_leadsto(start, rep.target, 50000, found);
    if (!seq) {
      rep.fail("no sequence found within the search bound");
      rep.result = start;
      return rep;
    }
    rep.sequence = *seq;
    rep.result = found;
  }
  ++rep.checked;
  if (!isomorphic(rep.result, rep.target)) rep.fail("result is not isomorphic to the target P-seed");
  return rep;
}

namespace {

// a with w == omega_a, or -1.
int omega_level(const WeightVector& w) {
  for (int a = 0; a < w.k(); ++a)
    if (w == WeightVector::omega(w.k(), a)) return a;
  return -1;
}

}  // namespace

LeadstoReport leadsto_sigma(int k, int s) {
  if (k < 2 || s < 1 || s >= k) throw Error(Errc::BadParameter, "leadsto_sigma needs 1 <= s < k");
  LeadstoReport rep;
  const Assembled g = glue_sigma(k, s, 1);
  rep.target = drop_zero_weight(glue_sigma(k, s == 1 ? 1 : s - 1, 1).seed);
  std::map<int, Triple> coord;
  for (std::size_t v = 0; v < g.fragments[0].coord.size(); ++v) coord[g.global[0][v]] = g.fragments[0].coord[v];
  PSeed p = g.seed;
  auto level = [&](int v) { return omega_level(p.wt[ux(v)][0]); };
  auto lowers = [&](int v) {
    const int a = level(v);
    return !p.q.is_frozen(v) && a > 0 && omega_level(mutate_pseed(p, v).wt[ux(v)][0]) == a - 1;
  };
  // Column j starts at level k-s-j on a vertex with no arrow to the level above and descends to level 1,
  // each mutation lowering omega_a to omega_{a-1}.
  for (int top = (s == 1 ? 0 : k - s); top >= 1; --top) {
    int cur = -1;
    for (int v = 0; v < p.q.n && cur < 0; ++v) {
      if (level(v) != top || !lowers(v)) continue;
      bool free = true;
      for (int w = 0; w < p.q.n; ++w)
        if (p.q.at(v, w) != 0 && level(w) == top + 1) free = false;
      if (free) cur = v;
    }
    if (cur < 0) {
      rep.fail("no column start at level " + std::to_string(top));
      break;
    }
    for (;;) {
      const int a = level(cur);
      p = mutate_pseed(p, cur);
      rep.sequence.push_back(cur);
      ++rep.checked;
      if (a == 1) break;
      // prefer the lattice neighbour (a-1,b,c+1) or (a-1,b+1,c)
      int next = -1;
      for (int w = 0; w < p.q.n; ++w) {
        if (p.q.at(cur, w) == 0 || level(w) != a - 1 || !lowers(w)) continue;
        const Triple& c = coord[w];
        const Triple& d = coord[cur];
        const bool lattice = c[0] == d[0] - 1 && ((c[1] == d[1] && c[2] == d[2] + 1) || (c[1] == d[1] + 1 && c[2] == d[2]));
        if (next < 0 || lattice) next = w;
        if (lattice) break;
      }
      if (next < 0) {
        rep.fail("column stalls at level " + std::to_string(a - 1));
        break;
      }
      cur = next;
    }
    if (!rep.pass) break;
  }
  rep.result = drop_zero_weight(p);
  ++rep.checked;
  if (!isomorphic(rep.result, rep.target)) rep.fail("result is not isomorphic to the target P-seed");
  return rep;
}

Preset make_preset(const std::string& name) {
  if (name == "sl3-d21") return {name, assemble_gr(digon(), 3)};
  if (name == "sl3-d31") return {name, assemble_gr(punctured_ngon(3), 3)};
  if (name == "sl4-d21") return {name, assemble_gr(digon(), 4)};
  if (name == "torus-s11-k4") return {name, assemble_fg(torus_s11(), 4)};
  throw Error(Errc::BadParameter, "unknown preset '" + name + "'");
}

std::vector<std::string> preset_names() { return {"sl3-d21", "sl3-d31", "sl4-d21", "torus-s11-k4"}; }

}  // namespace cc
