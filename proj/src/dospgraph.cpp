#include "cc/dospgraph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "cc/coxeter.hpp"

namespace cc {

std::string DospGraph::label(std::size_t v) const {
  std::string s;
  for (std::size_t i = 0; i < vertices[v].size(); ++i) {
    if (i) s += ',';
    s += vertices[v][i].to_string();
  }
  return s;
}

std::vector<std::size_t> DospGraph::degrees() const {
  std::vector<std::size_t> d(vertices.size(), 0);
  for (const auto& [a, b] : edges) {
    ++d[a];
    ++d[b];
  }
  return d;
}

std::size_t DospGraph::index_of(const std::vector<Dosp>& v) const {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    if (vertices[i] == v) return i;
  throw Error(Errc::OutOfRange, "dosp tuple is not a vertex");
}

bool DospGraph::has_edge(std::size_t a, std::size_t b) const {
  const auto e = std::minmax(a, b);
  return std::binary_search(edges.begin(), edges.end(), std::make_pair(e.first, e.second));
}

std::vector<Osp> enumerate_osps(int k) {
  if (k < 1) throw Error(Errc::BadParameter, "k must be positive");
  // Assign each element a block index in [0, m) using every index; iterate over surjections.
  std::vector<Osp> out;
  std::vector<int> f(static_cast<std::size_t>(k), 0);
  auto rec = [&](auto&& self, int pos) -> void {
    if (pos == k) {
      const int m = *std::max_element(f.begin(), f.end()) + 1;
      std::vector<std::vector<int>> blocks(static_cast<std::size_t>(m));
      for (int i = 0; i < k; ++i) blocks[static_cast<std::size_t>(f[static_cast<std::size_t>(i)])].push_back(i + 1);
      for (const auto& b : blocks)
        if (b.empty()) return;
      out.emplace_back(blocks);
      return;
    }
    for (int v = 0; v < k; ++v) {
      f[static_cast<std::size_t>(pos)] = v;
      self(self, pos + 1);
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end(), [](const Osp& a, const Osp& b) { return a.to_string() < b.to_string(); });
  return out;
}

std::vector<Dosp> enumerate_dosps(int k) {
  std::vector<Dosp> out;
  for (const auto& o : enumerate_osps(k)) {
    std::vector<std::size_t> big;
    for (std::size_t i = 0; i < o.size(); ++i)
      if (o.blocks()[i].size() >= 3) big.push_back(i);
    for (unsigned m = 0; m < (1u << big.size()); ++m) {
      std::vector<int> signs(o.size(), 0);
      for (std::size_t j = 0; j < big.size(); ++j) signs[big[j]] = (m >> j) & 1u ? -1 : 1;
      out.emplace_back(o, signs);
    }
  }
  std::sort(out.begin(), out.end(), [](const Dosp& a, const Dosp& b) { return a.to_string() < b.to_string(); });
  return out;
}

namespace {

struct Block {
  std::vector<int> elems;
  int sign = 0;
};

bool matches(const Block& b, int want) { return b.elems.size() < 3 || b.sign == want; }

int sign_for(std::size_t size, int want) { return size >= 3 ? want : 0; }

Dosp assemble(const std::vector<Block>& blocks) {
  std::vector<std::vector<int>> bl;
  std::vector<int> signs;
  for (const auto& b : blocks) {
    if (b.elems.empty()) continue;
    bl.push_back(b.elems);
    signs.push_back(sign_for(b.elems.size(), b.sign));
  }
  return Dosp(Osp(bl), signs);
}

}  // namespace

std::vector<Dosp> dosp_mutations(const Dosp& d) {
  // Pad with empty blocks between and around the real ones so that L or R may be empty.
  std::vector<Block> padded{{}};
  for (std::size_t i = 0; i < d.osp().size(); ++i) {
    padded.push_back({d.osp().blocks()[i], d.signs()[i]});
    padded.push_back({});
  }
  std::set<Dosp> out;
  // Odd indices hold real blocks; a pair is either real|empty, empty|real or two consecutive real blocks.
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i + 1 < padded.size(); ++i) pairs.emplace_back(i, i + 1);
  for (std::size_t i = 1; i + 2 < padded.size(); i += 2) pairs.emplace_back(i, i + 2);
  for (const auto& [i, j] : pairs) {
    const Block& x = padded[i];
    const Block& y = padded[j];
    if (!matches(x, 1) || !matches(y, -1)) continue;
    // a moves rightward out of x into y
    for (int a : x.elems) {
      auto nb = padded;
      nb[i].elems.erase(std::find(nb[i].elems.begin(), nb[i].elems.end(), a));
      nb[j].elems.push_back(a);
      std::sort(nb[j].elems.begin(), nb[j].elems.end());
      nb[i].sign = 1;
      nb[j].sign = -1;
      out.insert(assemble(nb));
    }
    // a moves leftward out of y into x
    for (int a : y.elems) {
      auto nb = padded;
      nb[j].elems.erase(std::find(nb[j].elems.begin(), nb[j].elems.end(), a));
      nb[i].elems.push_back(a);
      std::sort(nb[i].elems.begin(), nb[i].elems.end());
      nb[i].sign = 1;
      nb[j].sign = -1;
      out.insert(assemble(nb));
    }
  }
  out.erase(d);
  std::vector<Dosp> v(out.begin(), out.end());
  std::sort(v.begin(), v.end(), [](const Dosp& a, const Dosp& b) { return a.to_string() < b.to_string(); });
  return v;
}

bool are_dosp_adjacent(const Dosp& x, const Dosp& y) {
  const auto n = dosp_mutations(x);
  return std::find(n.begin(), n.end(), y) != n.end();
}

namespace {

void finish(DospGraph& g) {
  std::sort(g.edges.begin(), g.edges.end());
  g.edges.erase(std::unique(g.edges.begin(), g.edges.end()), g.edges.end());
}

}  // namespace

DospGraph build_hdosp(int k) {
  DospGraph g;
  const auto ds = enumerate_dosps(k);
  std::map<Dosp, std::size_t> idx;
  for (const auto& d : ds) {
    idx[d] = g.vertices.size();
    g.vertices.push_back({d});
  }
  for (std::size_t i = 0; i < ds.size(); ++i)
    for (const auto& n : dosp_mutations(ds[i])) {
      const std::size_t j = idx.at(n);
      if (i < j) g.edges.emplace_back(i, j);
    }
  finish(g);
  return g;
}

DospGraph cartesian_power(const DospGraph& g, int h) {
  if (h < 1) throw Error(Errc::BadParameter, "power must be positive");
  const std::size_t n = g.vertices.size();
  std::vector<std::vector<std::size_t>> adj(n);
  for (const auto& [a, b] : g.edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::size_t total = 1;
  for (int i = 0; i < h; ++i) total *= n;
  DospGraph out;
  out.vertices.reserve(total);
  // Mixed-radix index, most significant digit first, so vertex order is lexicographic in coordinates.
  auto digits = [&](std::size_t x) {
    std::vector<std::size_t> d(static_cast<std::size_t>(h));
    for (int i = h - 1; i >= 0; --i) {
      d[static_cast<std::size_t>(i)] = x % n;
      x /= n;
    }
    return d;
  };
  auto encode = [&](const std::vector<std::size_t>& d) {
    std::size_t x = 0;
    for (auto v : d) x = x * n + v;
    return x;
  };
  for (std::size_t x = 0; x < total; ++x) {
    std::vector<Dosp> t;
    for (auto v : digits(x))
      for (const auto& dd : g.vertices[v]) t.push_back(dd);
    out.vertices.push_back(std::move(t));
  }
  for (std::size_t x = 0; x < total; ++x) {
    const auto d = digits(x);
    for (std::size_t c = 0; c < d.size(); ++c)
      for (auto nb : adj[d[c]]) {
        auto e = d;
        e[c] = nb;
        const std::size_t y = encode(e);
        if (x < y) out.edges.emplace_back(x, y);
      }
  }
  finish(out);
  return out;
}

Dosp relabel(const Dosp& d, const std::vector<int>& perm) {
  std::vector<std::vector<int>> blocks;
  for (const auto& b : d.osp().blocks()) {
    std::vector<int> nb;
    for (int x : b) nb.push_back(perm[static_cast<std::size_t>(x - 1)]);
    blocks.push_back(nb);
  }
  return Dosp(Osp(blocks), d.signs());
}

namespace {

std::string tuple_label(const std::vector<Dosp>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].to_string();
  return s;
}

}  // namespace

std::vector<Dosp> relabel_orbit_rep(const std::vector<Dosp>& v, bool diagonal) {
  if (v.empty()) return v;
  const int k = v.front().k();
  if (diagonal) {
    std::vector<int> p = identity_perm(k);
    std::vector<Dosp> best = v;
    std::string best_label = tuple_label(v);
    do {
      std::vector<Dosp> t;
      for (const auto& d : v) t.push_back(relabel(d, p));
      const auto l = tuple_label(t);
      if (l < best_label) {
        best_label = l;
        best = t;
      }
    } while (std::next_permutation(p.begin(), p.end()));
    return best;
  }
  // Independent relabelings: the least label of each coordinate is the orbit invariant.
  std::vector<Dosp> out;
  for (const auto& d : v) {
    std::vector<int> p = identity_perm(d.k());
    Dosp best = d;
    do {
      const Dosp t = relabel(d, p);
      if (t.to_string() < best.to_string()) best = t;
    } while (std::next_permutation(p.begin(), p.end()));
    out.push_back(best);
  }
  return out;
}

DospGraph quotient_by_relabeling(const DospGraph& g) {
  std::map<std::string, std::size_t> rep_index;
  std::vector<std::vector<Dosp>> reps;
  std::vector<std::string> rep_of(g.vertices.size());
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    const auto r = relabel_orbit_rep(g.vertices[i]);
    rep_of[i] = tuple_label(r);
    if (!rep_index.count(rep_of[i])) {
      rep_index[rep_of[i]] = 0;
      reps.push_back(r);
    }
  }
  std::sort(reps.begin(), reps.end(), [](const auto& a, const auto& b) { return tuple_label(a) < tuple_label(b); });
  DospGraph q;
  for (std::size_t i = 0; i < reps.size(); ++i) {
    rep_index[tuple_label(reps[i])] = i;
    q.vertices.push_back(reps[i]);
  }
  for (const auto& [a, b] : g.edges) {
    const auto x = rep_index[rep_of[a]], y = rep_index[rep_of[b]];
    if (x != y) q.edges.emplace_back(std::min(x, y), std::max(x, y));
  }
  finish(q);
  return q;
}

std::string to_dot(const DospGraph& g, const std::string& name) {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  for (std::size_t i = 0; i < g.vertices.size(); ++i) os << "  v" << i << " [label=\"" << g.label(i) << "\"];\n";
  for (const auto& [a, b] : g.edges) os << "  v" << a << " -- v" << b << ";\n";
  os << "}\n";
  return os.str();
}

std::string to_csv(const DospGraph& g) {
  std::ostringstream os;
  os << "vertex,degree\n";
  const auto d = g.degrees();
  for (std::size_t i = 0; i < g.vertices.size(); ++i) os << '"' << g.label(i) << "\"," << d[i] << '\n';
  return os.str();
}

}  // namespace cc
