#include "cc/weyl.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace cc {

namespace {

std::size_t ux(int i) { return static_cast<std::size_t>(i); }

int puncture_index(const PSeed& p, const std::string& name) {
  const auto it = std::find(p.punctures.begin(), p.punctures.end(), name);
  if (it == p.punctures.end()) throw Error(Errc::BadParameter, "no puncture named '" + name + "'");
  return static_cast<int>(it - p.punctures.begin());
}

// Coordinates relative to corner r: first entry at corner r, second at corner r+2, third at corner r+1.
Triple to_abc(int r, int first, int second, int third) {
  Triple t{};
  t[ux(kCornerCoord[ux(r)])] = first;
  t[ux(kCornerCoord[ux((r + 1) % 3)])] = third;
  t[ux(kCornerCoord[ux((r + 2) % 3)])] = second;
  return t;
}

LaurentPoly value_at(const Assembled& a, const Seed& s, int t, const Triple& abc) {
  const auto v = a.vertex_at(t, abc);
  return v ? s.x[ux(*v)] : LaurentPoly::constant(s.ctx, 1);
}

LaurentPoly sum_fractions(const std::vector<Fraction>& fs, const VarContext& ctx) {
  const bool monomial = std::all_of(fs.begin(), fs.end(), [](const Fraction& f) { return f.den.is_monomial(); });
  LaurentPoly total = LaurentPoly::constant(ctx, 0);
  if (monomial) {
    for (const auto& f : fs) total += f.num * f.den.pow(-1);
    return total;
  }
  LaurentPoly den = LaurentPoly::constant(ctx, 1);
  for (const auto& f : fs) den *= f.den;
  for (const auto& f : fs) total += f.num * den.exact_div(f.den);
  return total.exact_div(den);
}

void check_row(const PSeed& p, int i) {
  if (i < 1 || i > p.k - 1) throw Error(Errc::BadParameter, "row must lie in [1, k-1]");
}

std::vector<int> vertices_with_multiplicity(const PSeed& p, int pi, int i, int mult) {
  std::vector<int> out;
  for (int v : p.q.mutable_vertices())
    if (omega_multiplicity(p.wt[ux(v)][ux(pi)], i) == mult) out.push_back(v);
  return out;
}

Seed fresh_copy(const Seed& s) {
  if (s.ctx) return Seed::initial(s.q, *s.ctx);
  return Seed::initial(s.q);
}

void fail(const std::string& what) { throw Error(Errc::VerificationFailed, what); }

// Checks the rescaling identity on fresh variables and the weight action on the P-seed.
WeylReport verify(const Assembled& a, const PSeed& p, const Seed& s, const std::string& puncture, int i, const Script& script,
                  const std::vector<int>& mids, const std::vector<int>& cycle) {
  WeylReport rep;
  rep.script = script;
  const int pi = puncture_index(p, puncture);
  const Seed f = fresh_copy(s);
  const LaurentPoly w = script_w(a, f, puncture, i);
  rep.w_text = w.to_string();
  const Seed start = apply_sequence(f, mutations(mids));
  const LaurentPoly wc = cycle_potential(start, cycle);
  if (wc != w) fail("rhombus sum differs from the cycle potential");
  rep.checks.push_back("rhombus sum (" + std::to_string(row_edges(a, puncture, i).size()) + " rhombi) equals cycle potential (" +
                       std::to_string(cycle.size()) + " edges)");
  const Seed g = apply_sequence(f, script);
  if (g.q != f.q) fail("quiver not restored");
  rep.checks.push_back("quiver restored");
  int rescaled = 0;
  for (int v = 0; v < f.q.n; ++v) {
    const int m = f.q.is_frozen(v) ? 0 : omega_multiplicity(a.seed.wt[ux(v)][ux(pi)], i);
    if (g.x[ux(v)] != w.pow(m) * f.x[ux(v)]) fail("vertex " + std::to_string(v) + " not rescaled by W^" + std::to_string(m));
    rescaled += m > 0 ? 1 : 0;
  }
  rep.checks.push_back(std::to_string(rescaled) + " variables rescaled, others fixed");
  const PSeed q = apply_sequence(p, script);
  if (q != reflect_weights(p, puncture, i)) fail("weights not transformed by s_" + std::to_string(i));
  rep.checks.push_back("weights transformed by s_" + std::to_string(i));
  return rep;
}

void check_same_quiver(const Assembled& a, const PSeed& p, const Seed& s) {
  if (p.q != a.seed.q || s.q != a.seed.q) throw Error(Errc::BadParameter, "seed quiver differs from the assembled quiver");
}

}  // namespace

int omega_multiplicity(const WeightVector& w, int i) { return w[i - 1] - w[i]; }

std::vector<int> row_vertices(const Assembled& a, const std::string& puncture, int i) {
  check_row(a.seed, i);
  const int pi = puncture_index(a.seed, puncture);
  std::vector<int> out;
  for (int v : a.seed.q.mutable_vertices())
    if (omega_multiplicity(a.seed.wt[ux(v)][ux(pi)], i) > 0) out.push_back(v);
  return out;
}

std::vector<RowEdge> row_edges(const Assembled& a, const std::string& puncture, int i) {
  check_row(a.seed, i);
  const int k = a.seed.k;
  std::vector<RowEdge> out;
  for (int t = 0; t < static_cast<int>(a.fragments.size()); ++t)
    for (int r = 0; r < 3; ++r) {
      if (a.corners[ux(t)][ux(r)] != puncture) continue;
      const auto& f = a.fragments[ux(t)];
      for (int b = 0; b < k - i; ++b) {
        const int c = k - i - b;
        if (f.find(to_abc(r, i, b, c)) >= 0 && f.find(to_abc(r, i, b + 1, c - 1)) >= 0) out.push_back({t, r, b});
      }
    }
  return out;
}

std::vector<int> oriented_cycle(const Quiver& q, const std::vector<int>& verts) {
  const int m = static_cast<int>(verts.size());
  if (m < 2) throw Error(Errc::RowNotCycle, "a row needs at least two vertices");
  if (m == 2) {
    if (q.at(verts[0], verts[1]) != 0) throw Error(Errc::RowNotCycle, "two-vertex row joined by an arrow");
    return verts;
  }
  std::vector<int> next(ux(q.n), -1);
  for (int v : verts) {
    int outs = 0, ins = 0;
    for (int w : verts) {
      const int b = q.at(v, w);
      if (b > 1 || b < -1) throw Error(Errc::RowNotCycle, "multiple arrows inside the row");
      if (b == 1) ++outs, next[ux(v)] = w;
      if (b == -1) ++ins;
    }
    if (outs != 1 || ins != 1) throw Error(Errc::RowNotCycle, "vertex " + std::to_string(v) + " is not on an oriented cycle");
  }
  std::vector<int> cycle{verts.front()};
  while (static_cast<int>(cycle.size()) < m) {
    const int w = next[ux(cycle.back())];
    if (w == verts.front()) throw Error(Errc::RowNotCycle, "row splits into several cycles");
    cycle.push_back(w);
  }
  if (next[ux(cycle.back())] != cycle.front()) throw Error(Errc::RowNotCycle, "row does not close up");
  return cycle;
}

RowSelector select_row(const Assembled& a, const std::string& puncture, int i) {
  return {puncture, i, oriented_cycle(a.seed.q, row_vertices(a, puncture, i))};
}

Fraction rhombus_monomial(const Assembled& a, const Seed& s, const std::string& puncture, int i, const RowEdge& e) {
  const int k = a.seed.k;
  const int t = e.triangle, r = e.corner, b = e.b, c = k - i - b;
  if (a.corners.at(ux(t)).at(ux(r)) != puncture || b < 0 || c < 1) throw Error(Errc::BadParameter, "malformed row edge");
  return {value_at(a, s, t, to_abc(r, i + 1, b, c - 1)) * value_at(a, s, t, to_abc(r, i - 1, b + 1, c)),
          value_at(a, s, t, to_abc(r, i, b, c)) * value_at(a, s, t, to_abc(r, i, b + 1, c - 1))};
}

LaurentPoly script_w(const Assembled& a, const Seed& s, const std::string& puncture, int i) {
  std::vector<Fraction> fs;
  for (const auto& e : row_edges(a, puncture, i)) fs.push_back(rhombus_monomial(a, s, puncture, i, e));
  return sum_fractions(fs, s.ctx);
}

LaurentPoly cycle_potential(const Seed& s, const std::vector<int>& cycle) {
  const int m = static_cast<int>(cycle.size());
  const std::set<int> on(cycle.begin(), cycle.end());
  std::vector<Fraction> fs;
  for (int j = 0; j < m; ++j) {
    const int u = cycle[ux(j)], v = cycle[ux((j + 1) % m)];
    LaurentPoly num = LaurentPoly::constant(s.ctx, 1);
    for (int w = 0; w < s.q.n; ++w) {
      if (on.count(w)) continue;
      const int mult = std::min(s.q.at(v, w), s.q.at(w, u));
      if (mult > 0) num *= s.x[ux(w)].pow(mult);
    }
    fs.push_back({num, s.x[ux(u)] * s.x[ux(v)]});
  }
  return sum_fractions(fs, s.ctx);
}

Script weyl_cycle_script(const std::vector<int>& cycle, int n, int basepoint) {
  const int m = static_cast<int>(cycle.size());
  if (m < 2) throw Error(Errc::BadParameter, "cycle script needs m >= 2");
  std::vector<int> c(ux(m));
  for (int j = 0; j < m; ++j) c[ux(j)] = cycle[ux((basepoint + j) % m)];
  Script s;
  for (int j = 0; j < m - 1; ++j) s.push_back(Mutate{c[ux(j)]});
  std::vector<int> perm(ux(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::swap(perm[ux(c[ux(m - 2)])], perm[ux(c[ux(m - 1)])]);
  s.push_back(Permute{perm});
  for (int j = m - 2; j >= 0; --j) s.push_back(Mutate{c[ux(j)]});
  return s;
}

Seed cycle_model_seed(int m) {
  if (m < 2) throw Error(Errc::BadParameter, "cycle model needs m >= 2");
  Quiver q(3 * m);
  std::vector<std::string> names;
  for (int j = 0; j < m; ++j) names.push_back("x" + std::to_string(j + 1));
  for (int j = 0; j < m; ++j) {
    names.push_back("p" + std::to_string(j + 1));
    names.push_back("n" + std::to_string(j + 1));
  }
  for (int j = 0; j < m; ++j) {
    const int nx = (j + 1) % m;
    q.add_arrows(j, nx);
    for (int f : {m + 2 * j, m + 2 * j + 1}) {
      q.frozen[ux(f)] = true;
      q.add_arrows(nx, f);
      q.add_arrows(f, j);
    }
  }
  return Seed::initial(q, names);
}

PSeed reflect_weights(const PSeed& p, const std::string& puncture, int i) {
  check_row(p, i);
  const int pi = puncture_index(p, puncture);
  std::vector<int> perm(ux(p.k));
  std::iota(perm.begin(), perm.end(), 1);
  std::swap(perm[ux(i - 1)], perm[ux(i)]);
  PSeed r = p;
  for (auto& w : r.wt) w[ux(pi)] = w_act(perm, w[ux(pi)]);
  return r;
}

WeylResult apply_weyl(const Assembled& a, const PSeed& p, const Seed& s, const std::string& puncture, int i) {
  check_same_quiver(a, p, s);
  check_row(p, i);
  const int pi = puncture_index(p, puncture);
  const auto rows = row_vertices(a, puncture, i);
  for (int v : rows)
    if (omega_multiplicity(a.seed.wt[ux(v)][ux(pi)], i) != 1)
      throw Error(Errc::Unsupported, "row vertex with repeated omega_i needs the midpoint procedure");
  const auto cycle = oriented_cycle(p.q, rows);
  const Script script = weyl_cycle_script(cycle, p.q.n);
  WeylResult res{apply_sequence(p, script), apply_sequence(s, script), verify(a, p, s, puncture, i, script, {}, cycle)};
  return res;
}

WeylResult apply_weyl_sg1(const Assembled& a, const PSeed& p, const Seed& s, int i) {
  check_same_quiver(a, p, s);
  check_row(p, i);
  if (p.punctures.size() != 1 || !p.q.frozen_vertices().empty() || p.k <= 2)
    throw Error(Errc::Unsupported, "midpoint procedure needs a once-punctured closed surface and k > 2");
  const std::string& puncture = p.punctures.front();
  if (2 * i > p.k) return apply_weyl(a, p, s, puncture, i);
  if (2 * i < p.k) throw Error(Errc::Unsupported, "rows below k/2 are reached through the duality map");
  const auto mids = vertices_with_multiplicity(a.seed, 0, i, 2);
  const auto rest = vertices_with_multiplicity(a.seed, 0, i, 1);
  for (int u : mids)
    for (int v : mids)
      if (p.q.at(u, v) != 0) fail("midpoint vertices are joined by an arrow");
  const Quiver q1 = apply_sequence(p.q, mutations(mids));
  const auto cycle = oriented_cycle(q1, rest);
  const Script script = concat(concat(mutations(mids), weyl_cycle_script(cycle, p.q.n)), mutations(mids));
  WeylResult res{apply_sequence(p, script), apply_sequence(s, script), verify(a, p, s, puncture, i, script, mids, cycle)};
  return res;
}

}  // namespace cc
