#include "cc/cluster.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <set>

namespace cc {

namespace {

std::size_t ix(int i) { return static_cast<std::size_t>(i); }

void check_vertex(const Quiver& q, int v) {
  if (v < 0 || v >= q.n) throw Error(Errc::OutOfRange, "vertex " + std::to_string(v));
}

}  // namespace

Quiver::Quiver(int n_) : n(n_), frozen(ix(n_), false), b(ix(n_), std::vector<int>(ix(n_), 0)) {}

void Quiver::add_arrows(int from, int to, int mult) {
  check_vertex(*this, from);
  check_vertex(*this, to);
  if (from == to) throw Error(Errc::BadParameter, "loop at vertex " + std::to_string(from));
  b[ix(from)][ix(to)] += mult;
  b[ix(to)][ix(from)] -= mult;
}

std::vector<int> Quiver::mutable_vertices() const {
  std::vector<int> out;
  for (int v = 0; v < n; ++v)
    if (!frozen[ix(v)]) out.push_back(v);
  return out;
}

std::vector<int> Quiver::frozen_vertices() const {
  std::vector<int> out;
  for (int v = 0; v < n; ++v)
    if (frozen[ix(v)]) out.push_back(v);
  return out;
}

int Quiver::arrow_count() const {
  int c = 0;
  for (const auto& row : b)
    for (int x : row)
      if (x > 0) c += x;
  return c;
}

void Quiver::drop_frozen_arrows() {
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (frozen[ix(i)] && frozen[ix(j)]) b[ix(i)][ix(j)] = 0;
}

MultiWeight PSeed::weight(int v) const { return MultiWeight{punctures, wt[ix(v)]}; }

Seed Seed::initial(const Quiver& q, std::vector<std::string> names) {
  if (static_cast<int>(names.size()) != q.n) throw Error(Errc::LengthMismatch, "one variable name per vertex");
  Seed s;
  s.q = q;
  s.ctx = make_context(std::move(names));
  for (int v = 0; v < q.n; ++v) s.x.push_back(LaurentPoly::var(s.ctx, ix(v)));
  return s;
}

Seed Seed::initial(const Quiver& q) {
  std::vector<std::string> names;
  for (int v = 0; v < q.n; ++v) names.push_back("x" + std::to_string(v));
  return initial(q, names);
}

Quiver mutate_quiver(const Quiver& q, int v) {
  check_vertex(q, v);
  if (q.is_frozen(v)) throw Error(Errc::FrozenVertex, "cannot mutate frozen vertex " + std::to_string(v));
  Quiver r = q;
  const auto& b = q.b;
  for (int i = 0; i < q.n; ++i) {
    for (int j = 0; j < q.n; ++j) {
      if (i == v || j == v) {
        r.b[ix(i)][ix(j)] = -b[ix(i)][ix(j)];
        continue;
      }
      const long long biv = b[ix(i)][ix(v)], bvj = b[ix(v)][ix(j)];
      const long long s = (biv > 0) - (biv < 0);
      const long long e = b[ix(i)][ix(j)] + s * std::max(biv * bvj, 0LL);
      if (e > std::numeric_limits<int>::max() || e < -std::numeric_limits<int>::max())
        throw Error(Errc::LimitExceeded, "arrow multiplicity overflows at mutation of vertex " + std::to_string(v));
      r.b[ix(i)][ix(j)] = static_cast<int>(e);
    }
  }
  r.drop_frozen_arrows();
  return r;
}

std::vector<WeightVector> weight_flow(const PSeed& p, int v, int sign) {
  const std::size_t k = ix(p.k);
  std::vector<std::vector<long long>> acc(p.punctures.size(), std::vector<long long>(k, 0));
  for (int u = 0; u < p.q.n; ++u) {
    const long long m = static_cast<long long>(p.q.at(v, u)) * sign;
    if (m <= 0) continue;
    for (std::size_t c = 0; c < acc.size(); ++c)
      for (std::size_t i = 0; i < k; ++i) acc[c][i] += p.wt[ix(u)][c].coords()[i] * m;
  }
  // Normalized (min 0) coordinates must fit in int; widening keeps the comparison exact.
  std::vector<WeightVector> out;
  for (auto& a : acc) {
    const long long lo = a.empty() ? 0 : *std::min_element(a.begin(), a.end());
    std::vector<int> w;
    for (long long x : a) {
      if (x - lo > std::numeric_limits<int>::max())
        throw Error(Errc::LimitExceeded, "weight coordinate overflows at vertex " + std::to_string(v));
      w.push_back(static_cast<int>(x - lo));
    }
    out.emplace_back(w);
  }
  return out;
}

bool balanced_at(const PSeed& p, int v) { return weight_flow(p, v, -1) == weight_flow(p, v, 1); }

bool is_balanced(const PSeed& p) {
  for (int v : p.q.mutable_vertices())
    if (!balanced_at(p, v)) return false;
  return true;
}

MultiWeight kappa(const PSeed& p, int v) { return MultiWeight{p.punctures, weight_flow(p, v, -1)}; }

PSeed mutate_pseed(const PSeed& p, int v) {
  check_vertex(p.q, v);
  if (p.q.is_frozen(v)) throw Error(Errc::FrozenVertex, "cannot mutate frozen vertex " + std::to_string(v));
  const auto in = weight_flow(p, v, -1);
  if (in != weight_flow(p, v, 1)) throw Error(Errc::BalancingViolated, "vertex " + std::to_string(v));
  PSeed r = p;
  r.q = mutate_quiver(p.q, v);
  for (std::size_t c = 0; c < in.size(); ++c) r.wt[ix(v)][c] = in[c] - p.wt[ix(v)][c];
  return r;
}

std::pair<LaurentPoly, LaurentPoly> exchange_monomials(const Seed& s, int v) {
  LaurentPoly in = LaurentPoly::constant(s.ctx, 1), out = LaurentPoly::constant(s.ctx, 1);
  for (int u = 0; u < s.q.n; ++u) {
    const int m = s.q.at(u, v);
    if (m > 0) in *= s.x[ix(u)].pow(m);
    if (m < 0) out *= s.x[ix(u)].pow(-m);
  }
  return {in, out};
}

Seed mutate_seed(const Seed& s, int v) {
  check_vertex(s.q, v);
  if (s.q.is_frozen(v)) throw Error(Errc::FrozenVertex, "cannot mutate frozen vertex " + std::to_string(v));
  auto [in, out] = exchange_monomials(s, v);
  Seed r = s;
  r.x[ix(v)] = (in + out).exact_div(s.x[ix(v)]);
  r.q = mutate_quiver(s.q, v);
  return r;
}

Script mutations(const std::vector<int>& vs) {
  Script s;
  for (int v : vs) s.emplace_back(Mutate{v});
  return s;
}

Script concat(const Script& a, const Script& b) {
  Script s = a;
  s.insert(s.end(), b.begin(), b.end());
  return s;
}

namespace {

void check_perm(const std::vector<int>& perm, int n) {
  if (static_cast<int>(perm.size()) != n) throw Error(Errc::LengthMismatch, "vertex permutation size");
  std::vector<int> s = perm;
  std::sort(s.begin(), s.end());
  for (int i = 0; i < n; ++i)
    if (s[ix(i)] != i) throw Error(Errc::BadParameter, "not a permutation of the vertices");
}

}  // namespace

Quiver permute_quiver(const Quiver& q, const std::vector<int>& perm) {
  check_perm(perm, q.n);
  Quiver r(q.n);
  for (int i = 0; i < q.n; ++i) {
    r.frozen[ix(perm[ix(i)])] = q.frozen[ix(i)];
    for (int j = 0; j < q.n; ++j) r.b[ix(perm[ix(i)])][ix(perm[ix(j)])] = q.b[ix(i)][ix(j)];
  }
  return r;
}

PSeed permute_pseed(const PSeed& p, const std::vector<int>& perm) {
  PSeed r = p;
  r.q = permute_quiver(p.q, perm);
  for (int i = 0; i < p.q.n; ++i) r.wt[ix(perm[ix(i)])] = p.wt[ix(i)];
  return r;
}

Seed permute_seed(const Seed& s, const std::vector<int>& perm) {
  Seed r = s;
  r.q = permute_quiver(s.q, perm);
  for (int i = 0; i < s.q.n; ++i) r.x[ix(perm[ix(i)])] = s.x[ix(i)];
  return r;
}

namespace {

template <class T, class M, class P>
T run(const T& init, const Script& script, M mut, P perm) {
  T cur = init;
  for (const auto& step : script) {
    if (const auto* m = std::get_if<Mutate>(&step)) cur = mut(cur, m->v);
    else cur = perm(cur, std::get<Permute>(step).perm);
  }
  return cur;
}

}  // namespace

Quiver apply_sequence(const Quiver& q, const Script& s) { return run(q, s, mutate_quiver, permute_quiver); }
PSeed apply_sequence(const PSeed& p, const Script& s) { return run(p, s, mutate_pseed, permute_pseed); }
Seed apply_sequence(const Seed& x, const Script& s) { return run(x, s, mutate_seed, permute_seed); }

std::string canonical_cluster_key(const Seed& s) {
  std::vector<std::string> t;
  for (int v : s.q.mutable_vertices()) t.push_back(s.x[ix(v)].to_string());
  std::sort(t.begin(), t.end());
  std::string key;
  for (const auto& x : t) key += x + "\n";
  return key;
}

namespace {

using Cells = std::vector<int>;

// Refine until stable. Cell ids are ranks of sorted signatures, hence labeling independent.
Cells refine(const Quiver& q, Cells cells) {
  std::size_t ncells = std::set<int>(cells.begin(), cells.end()).size();
  for (;;) {
    std::vector<std::vector<int>> sig(ix(q.n));
    for (int v = 0; v < q.n; ++v) {
      auto& s = sig[ix(v)];
      s.push_back(cells[ix(v)]);
      std::vector<std::pair<int, int>> nb;
      for (int u = 0; u < q.n; ++u)
        if (q.b[ix(v)][ix(u)] != 0) nb.emplace_back(cells[ix(u)], q.b[ix(v)][ix(u)]);
      std::sort(nb.begin(), nb.end());
      for (auto [c, m] : nb) {
        s.push_back(c);
        s.push_back(m);
      }
    }
    std::map<std::vector<int>, int> rank;
    for (const auto& s : sig) rank[s] = 0;
    int r = 0;
    for (auto& [s, id] : rank) id = r++;
    Cells next(ix(q.n));
    for (int v = 0; v < q.n; ++v) next[ix(v)] = rank[sig[ix(v)]];
    const std::size_t nn = rank.size();
    cells = std::move(next);
    if (nn == ncells) return cells;
    ncells = nn;
  }
}

std::string encode(const Quiver& q, const std::vector<std::string>& colors, const std::vector<int>& order) {
  std::string s;
  for (int v : order) s += colors[ix(v)] + ";";
  s += "|";
  for (int i : order)
    for (int j : order) s += std::to_string(q.b[ix(i)][ix(j)]) + ",";
  return s;
}

void search(const Quiver& q, const std::vector<std::string>& colors, const Cells& cells, CanonicalForm& best,
            bool& have) {
  std::map<int, std::vector<int>> members;
  for (int v = 0; v < q.n; ++v) members[cells[ix(v)]].push_back(v);
  const std::vector<int>* target = nullptr;
  for (const auto& [c, vs] : members)
    if (vs.size() > 1 && (!target || vs.size() < target->size())) target = &vs;
  if (!target) {
    std::vector<int> order(ix(q.n));
    for (int v = 0; v < q.n; ++v) order[ix(cells[ix(v)])] = v;
    std::string key = encode(q, colors, order);
    if (!have || key < best.key) {
      best.key = std::move(key);
      best.order = std::move(order);
      have = true;
    }
    return;
  }
  for (int v : *target) {
    Cells c = cells;
    // Place v ahead of its cell-mates.
    for (int& x : c) x *= 2;
    for (int u = 0; u < q.n; ++u)
      if (cells[ix(u)] == cells[ix(v)] && u != v) c[ix(u)] += 1;
    search(q, colors, refine(q, c), best, have);
  }
}

}  // namespace

CanonicalForm canonical_form(const Quiver& q, const std::vector<std::string>& colors) {
  if (static_cast<int>(colors.size()) != q.n) throw Error(Errc::LengthMismatch, "one color per vertex");
  std::map<std::string, int> rank;
  for (const auto& c : colors) rank[c] = 0;
  int r = 0;
  for (auto& [c, id] : rank) id = r++;
  Cells cells(ix(q.n));
  for (int v = 0; v < q.n; ++v) cells[ix(v)] = rank[colors[ix(v)]];
  CanonicalForm best;
  bool have = false;
  search(q, colors, refine(q, cells), best, have);
  return best;
}

namespace {

std::vector<std::string> pseed_colors(const PSeed& p) {
  std::vector<std::string> colors;
  for (int v = 0; v < p.q.n; ++v) {
    std::string c = p.q.is_frozen(v) ? "F" : "M";
    for (const auto& w : p.wt[ix(v)]) c += w.to_string();
    colors.push_back(c);
  }
  return colors;
}

std::vector<std::string> quiver_colors(const Quiver& q) {
  std::vector<std::string> colors;
  for (int v = 0; v < q.n; ++v) colors.push_back(q.is_frozen(v) ? "F" : "M");
  return colors;
}

}  // namespace

std::string canonical_pseed_key(const PSeed& p) { return canonical_form(p.q, pseed_colors(p)).key; }

std::string canonical_quiver_key(const Quiver& q) { return canonical_form(q, quiver_colors(q)).key; }

bool isomorphic(const PSeed& a, const PSeed& b) {
  return a.q.n == b.q.n && a.punctures.size() == b.punctures.size() && canonical_pseed_key(a) == canonical_pseed_key(b);
}

bool isomorphic(const Quiver& a, const Quiver& b) {
  return a.n == b.n && canonical_quiver_key(a) == canonical_quiver_key(b);
}

bool symmetrical_vertices(const Quiver& q, int v, int w) {
  if (v == w) return true;
  if (q.is_frozen(v) != q.is_frozen(w)) return false;
  std::vector<int> perm(ix(q.n));
  std::iota(perm.begin(), perm.end(), 0);
  std::swap(perm[ix(v)], perm[ix(w)]);
  return permute_quiver(q, perm) == q;
}

}  // namespace cc
